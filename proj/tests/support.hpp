#pragma once

// Shared fixtures and generators for the test binaries.

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "artin/corpus.hpp"
#include "artin/homological.hpp"

namespace artin::testing {

inline const FieldSpec F101{101};

inline AlgebraPtr noncommutative_example() {
    return compile_free_monomial({{"x", "y"}, {{0, 0, 0}, {1, 1}, {0, 1, 0}}}, F101, "kxy-x3-y2-xyx");
}

inline AlgebraPtr builtin(const std::string& id) {
    for (const auto& e : builtin_corpus())
        if (e.id == id)
            return e.build();
    FAIL("no builtin " << id);
    return nullptr;
}

inline std::size_t label_index(const Algebra& a, const std::string& label) {
    const auto& ls = a.labels();
    auto it = std::find(ls.begin(), ls.end(), label);
    REQUIRE(it != ls.end());
    return static_cast<std::size_t>(it - ls.begin());
}

inline Matrix random_rows(const RightModule& m, std::size_t k, SeedState& s) {
    return seeded_random_matrix(m.field(), k, m.dim(), s);
}

// Small modules of several shapes: cyclic right ideals, quotients of projectives,
// duals of left ideals and sums of two of these.
inline RightModule random_module(const AlgebraPtr& a, SeedState& s, bool allow_sum = true) {
    const std::size_t v = s.below(a->vertex_count());
    switch (s.below(allow_sum ? 4 : 3)) {
    case 0: {
        RightModule p = indecomposable_projective(a, v);
        return submodule_generated(p, random_rows(p, 1, s)).src;
    }
    case 1: {
        RightModule p = indecomposable_projective(a, v);
        // keep the quotient nonzero by generating inside the radical
        Matrix inside = p.radical_space().basis().rows() == 0
                            ? Matrix(p.field(), 0, p.dim())
                            : seeded_random_matrix(p.field(), 1, p.radical_space().dim(), s) * p.radical_space().basis();
        return cokernel(submodule_generated(p, inside)).tgt;
    }
    case 2: {
        RightModule q = indecomposable_projective(opposite(a), v);
        return duality_D(submodule_generated(q, random_rows(q, 1, s)).src);
    }
    default:
        return direct_sum({random_module(a, s, false), random_module(a, s, false)});
    }
}

inline std::vector<AlgebraPtr> property_algebras() {
    std::vector<AlgebraPtr> out;
    for (const auto& e : builtin_corpus())
        out.push_back(e.build());
    for (const auto& e : enumerate_nakayama(3, 3))
        out.push_back(e.build());
    return out;
}

inline std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

inline RightModule ideal(const AlgebraPtr& a, const std::string& label) {
    return submodule_generated(regular_module(a), Matrix::unit_row(a->field(), a->dim(), label_index(*a, label))).src;
}

// Same module, rewritten in the basis given by the rows of g.
inline RightModule change_basis(const RightModule& m, const Matrix& g) {
    Matrix gi = *invert(g);
    std::vector<Matrix> act;
    for (const auto& r : m.actions())
        act.push_back(g * r * gi);
    return RightModule(m.algebra(), m.dim(), act);
}

inline Matrix random_invertible(FieldSpec f, std::size_t n, SeedState& s) {
    for (;;) {
        Matrix g = seeded_random_matrix(f, n, n, s);
        if (rank(g) == n)
            return g;
    }
}

} // namespace artin::testing
