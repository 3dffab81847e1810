#pragma once

// Everything in one include.

#include "artin/error.hpp"
#include "artin/field.hpp"
#include "artin/matrix.hpp"
#include "artin/polynomial.hpp"
#include "artin/random.hpp"
#include "artin/algebra.hpp"
#include "artin/presentation.hpp"
#include "artin/algebra_io.hpp"
#include "artin/module.hpp"
#include "artin/hom.hpp"
#include "artin/isomorphism.hpp"
#include "artin/decompose.hpp"
#include "artin/homological.hpp"
#include "artin/reflexivity.hpp"
#include "artin/classification.hpp"
#include "artin/claims.hpp"
#include "artin/corpus.hpp"
#include "artin/harness.hpp"
