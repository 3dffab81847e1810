#pragma once

#include <map>
#include <optional>
#include <string>

#include "artin/homological.hpp"

namespace artin {

struct DoubleDual {
    DualModule first;   // M* over the opposite algebra
    DualModule second;  // M** over the algebra
};

inline DoubleDual double_dual(const RightModule& m) {
    DualModule first = star_with_basis(m);
    DualModule second = star_with_basis(first.module);
    return {std::move(first), std::move(second)};
}

inline RightModule double_star(const RightModule& m) { return double_dual(m).second.module; }

/// m -> (g -> g(m)). Row k: the map M* -> A sending the t-th basis map G_t to row k of G_t,
/// written in the basis of M**.
inline ModuleMap evaluation_map(const RightModule& m, const DoubleDual& dd) {
    const FieldSpec f = m.field();
    const std::size_t n = m.algebra()->dim();
    const HomSpace& g = dd.first.hom;
    Matrix ev(f, m.dim(), dd.second.hom.dim());
    for (std::size_t k = 0; k < m.dim(); ++k) {
        Matrix phi(f, g.dim(), n);
        for (std::size_t t = 0; t < g.dim(); ++t)
            std::copy_n(g.basis[t].row(k).begin(), n, phi.row(t).begin());
        auto c = dd.second.hom.coordinates(phi);
        std::copy(c.begin(), c.end(), ev.row(k).begin());
    }
    return ModuleMap(m, dd.second.module, std::move(ev));
}

inline ModuleMap evaluation_map(const RightModule& m) { return evaluation_map(m, double_dual(m)); }

/// M -> A^t assembled from the basis of M*: [G_1 | ... | G_t].
inline ModuleMap assembled_embedding(const RightModule& m, const DualModule& first) {
    const AlgebraPtr& a = m.algebra();
    const std::size_t t = first.hom.dim();
    RightModule target = direct_power(regular_module(a), t);
    Matrix mat = Matrix::hstack(first.hom.basis, m.field(), m.dim());
    return ModuleMap(m, target, std::move(mat));
}

inline bool is_torsionless_eval(const RightModule& m) { return evaluation_map(m).is_injective(); }

inline bool is_reflexive_eval(const RightModule& m) { return evaluation_map(m).is_isomorphism(); }

/// Ext^1 and Ext^2 of D(A) against tau M.
inline std::pair<std::size_t, std::size_t> ext_route_dims(const RightModule& m) {
    RightModule tau = ar_translate(m);
    if (tau.is_zero())
        return {0, 0};
    auto dims = injective_cogenerator_ext(tau);
    return {dims[0], dims[1]};
}

inline bool is_torsionless_ext(const RightModule& m) { return ext_route_dims(m).first == 0; }

inline bool is_reflexive_ext(const RightModule& m) {
    auto [e1, e2] = ext_route_dims(m);
    return e1 == 0 && e2 == 0;
}

struct ReflexivityVerdict {
    std::string module_id;
    bool torsionless_eval = false, reflexive_eval = false;
    bool torsionless_ext = false, reflexive_ext = false;
    std::size_t dim = 0, dim_star = 0, dim_double_star = 0;
    std::size_t eval_rank = 0;
    std::size_t ext1 = 0, ext2 = 0;

    bool agreement() const { return torsionless_eval == torsionless_ext && reflexive_eval == reflexive_ext; }
};

/// Both routes, always computed.
inline ReflexivityVerdict reflexivity_verdict(const RightModule& m, std::string id = {}) {
    ReflexivityVerdict v;
    v.module_id = std::move(id);
    DoubleDual dd = double_dual(m);
    ModuleMap ev = evaluation_map(m, dd);
    v.dim = m.dim();
    v.dim_star = dd.first.module.dim();
    v.dim_double_star = dd.second.module.dim();
    v.eval_rank = ev.rank();
    v.torsionless_eval = v.eval_rank == m.dim();
    v.reflexive_eval = v.torsionless_eval && v.dim_double_star == m.dim();
    std::tie(v.ext1, v.ext2) = ext_route_dims(m);
    v.torsionless_ext = v.ext1 == 0;
    v.reflexive_ext = v.ext1 == 0 && v.ext2 == 0;
    return v;
}

/// One verdict per simple module; the two routes must agree.
inline std::vector<ReflexivityVerdict> reflexive_simples(const AlgebraPtr& a) {
    std::vector<ReflexivityVerdict> out;
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        out.push_back(reflexivity_verdict(simple_module(a, v), "S" + std::to_string(v + 1)));
        if (!out.back().agreement())
            throw Error(ErrorCode::route_disagreement,
                        "evaluation and Ext routes disagree on simple " + out.back().module_id + " of " + a->name());
    }
    return out;
}

/// Evidence that the algebra is Gorenstein of the given dimension, obtained at a bound.
struct GorensteinCertificate {
    std::size_t dimension;
    std::size_t bound;
};

/// sup{ i <= bound : Ext^i(M, A) != 0 }, only meaningful over a Gorenstein algebra.
inline BoundedDim gorenstein_pd_bounded(const RightModule& m, std::size_t bound,
                                        const std::optional<GorensteinCertificate>& cert) {
    if (!cert)
        throw Error(ErrorCode::missing_certificate, "Gorenstein projective dimension needs a Gorenstein certificate");
    if (m.is_zero() || is_projective(m))
        return {0, true};
    // Ext^i(M, A) = Ext^1(Omega^{i-1} M, A), summand by summand.
    SyzygyGraph g;
    const RightModule a = regular_module(m.algebra());
    auto layers = g.layers(m, bound);
    std::map<std::size_t, bool> ext1_nonzero;
    std::size_t best = 0;
    for (std::size_t i = 1; i <= bound && i - 1 < layers.size(); ++i)
        for (auto id : layers[i - 1]) {
            auto it = ext1_nonzero.find(id);
            if (it == ext1_nonzero.end())
                it = ext1_nonzero.emplace(id, ext_dim(g.module(id), a, 1) != 0).first;
            if (it->second)
                best = i;
        }
    return {best, true};
}

} // namespace artin
