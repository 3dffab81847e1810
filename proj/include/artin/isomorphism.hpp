#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "artin/hom.hpp"
#include "artin/random.hpp"

namespace artin {

enum class IsoVerdict { yes, no, inconclusive };

inline std::string_view to_string(IsoVerdict v) {
    switch (v) {
    case IsoVerdict::yes: return "yes";
    case IsoVerdict::no: return "no";
    case IsoVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

struct IsoResult {
    IsoVerdict verdict = IsoVerdict::inconclusive;
    std::optional<Matrix> map;  // verified invertible intertwiner when verdict is yes
    std::string reason;
};

struct SearchOptions {
    std::size_t trials = 64;
    std::uint64_t exhaustive_limit = 1'000'000;
};

namespace detail {

/// p^h when it does not exceed the limit.
inline std::optional<std::uint64_t> bounded_power(std::uint64_t p, std::size_t h, std::uint64_t limit) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < h; ++i) {
        if (v > limit / p)
            return std::nullopt;
        v *= p;
    }
    return v;
}

inline bool invertible_intertwiner(const RightModule& m, const RightModule& n, const Matrix& f) {
    return rank(f) == m.dim() && ModuleMap(m, n, f).intertwines();
}

} // namespace detail

/// Decides M = N. "no" carries the invariant that differs; "yes" carries a checked isomorphism.
inline IsoResult is_isomorphic(const RightModule& m, const RightModule& n, SeedState& seed,
                               const SearchOptions& opt = {}) {
    require(same_algebra(m.algebra(), n.algebra()), "is_isomorphic needs modules over the same algebra");
    const FieldSpec f = m.field();
    if (m.dim() != n.dim())
        return {IsoVerdict::no, std::nullopt, "dimensions differ"};
    if (m.is_zero())
        return {IsoVerdict::yes, Matrix(f, 0, 0), "zero modules"};
    if (m.dimension_vector() != n.dimension_vector())
        return {IsoVerdict::no, std::nullopt, "dimension vectors differ"};
    HomSpace mn = hom_space(m, n);
    HomSpace nm = hom_space(n, m);
    if (mn.dim() != nm.dim())
        return {IsoVerdict::no, std::nullopt, "dim Hom(M,N) != dim Hom(N,M)"};
    if (mn.dim() == 0)
        return {IsoVerdict::no, std::nullopt, "Hom(M,N) = 0"};
    if (top_multiplicities(m) != top_multiplicities(n))
        return {IsoVerdict::no, std::nullopt, "tops differ"};
    if (socle_multiplicities(m) != socle_multiplicities(n))
        return {IsoVerdict::no, std::nullopt, "socles differ"};
    if (radical_layers(m) != radical_layers(n))
        return {IsoVerdict::no, std::nullopt, "radical layers differ"};
    if (hom_dim(m, m) != mn.dim() || hom_dim(n, n) != mn.dim())
        return {IsoVerdict::no, std::nullopt, "endomorphism dimensions differ from dim Hom(M,N)"};

    const std::size_t h = mn.dim();
    if (h == 1) {
        // every nonzero map is a scalar multiple of the basis map
        if (detail::invertible_intertwiner(m, n, mn.basis[0]))
            return {IsoVerdict::yes, mn.basis[0], "Hom(M,N) is one-dimensional"};
        return {IsoVerdict::no, std::nullopt, "the unique map up to scalars is not invertible"};
    }
    std::vector<Residue> c(h);
    for (std::size_t t = 0; t < opt.trials; ++t) {
        for (auto& x : c)
            x = seed.uniform(f);
        Matrix cand = mn.combination(c);
        if (detail::invertible_intertwiner(m, n, cand))
            return {IsoVerdict::yes, cand, "random element of Hom(M,N) is invertible"};
    }
    // Invertibility is invariant under scaling, so one representative per line suffices.
    if (auto count = detail::bounded_power(f.prime(), h, opt.exhaustive_limit)) {
        for (std::size_t lead = 0; lead < h; ++lead) {
            std::fill(c.begin(), c.end(), 0);
            c[lead] = 1;
            const std::size_t free = h - lead - 1;
            while (true) {
                Matrix cand = mn.combination(c);
                if (detail::invertible_intertwiner(m, n, cand))
                    return {IsoVerdict::yes, cand, "exhaustive search found an isomorphism"};
                std::size_t i = 0;
                while (i < free && ++c[lead + 1 + i] == f.prime())
                    c[lead + 1 + i++] = 0;
                if (i == free)
                    break;
            }
        }
        return {IsoVerdict::no, std::nullopt, "exhaustive search over Hom(M,N) found no isomorphism"};
    }
    return {IsoVerdict::inconclusive, std::nullopt,
            "no invertible map in " + std::to_string(opt.trials) + " random trials"};
}

} // namespace artin
