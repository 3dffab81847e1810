#pragma once

#include <algorithm>
#include <optional>
#include <string>

#include "artin/reflexivity.hpp"

namespace artin {

enum class GorensteinVerdict { yes, no_evidence, inconclusive };
enum class GscVerdict { consistent, inconsistent, inconclusive };

inline std::string_view to_string(GorensteinVerdict v) {
    switch (v) {
    case GorensteinVerdict::yes: return "yes";
    case GorensteinVerdict::no_evidence: return "no_evidence";
    case GorensteinVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

inline std::string_view to_string(GscVerdict v) {
    switch (v) {
    case GscVerdict::consistent: return "consistent";
    case GscVerdict::inconsistent: return "inconsistent";
    case GscVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

/// Every indecomposable projective is injective; cross-checked against D(A) being projective.
inline bool is_selfinjective(const AlgebraPtr& a) {
    bool by_projectives = true;
    for (const auto& p : indecomposable_projectives(a))
        by_projectives = by_projectives && is_injective(p);
    const bool by_cogenerator = is_projective(injective_cogenerator(a));
    if (by_projectives != by_cogenerator)
        throw Error(ErrorCode::internal_disagreement,
                    "selfinjectivity tests disagree for " + a->name());
    return by_projectives;
}

/// Every indecomposable projective has a simple socle.
inline bool is_qf2(const AlgebraPtr& a) {
    for (const auto& p : indecomposable_projectives(a))
        if (socle(p).src.dim() != 1)
            return false;
    return true;
}

/// The injective envelope of the regular module is projective.
inline bool is_qf3_one_sided(const AlgebraPtr& a) {
    return is_projective(injective_envelope(regular_module(a)).envelope);
}

struct Qf3Result {
    bool right;
    bool left;  // computed on the opposite algebra
};

inline Qf3Result qf3_both_sides(const AlgebraPtr& a) { return {is_qf3_one_sided(a), is_qf3_one_sided(opposite(a))}; }

inline bool is_qf3(const AlgebraPtr& a) { return is_qf3_one_sided(a); }

namespace detail {

inline BoundedDim max_dim(BoundedDim a, BoundedDim b) {
    if (a.exact != b.exact)
        return a.exact ? b : a;
    return a.value >= b.value ? a : b;
}

} // namespace detail

/// id A_A as the largest injective dimension of an indecomposable projective.
inline BoundedDim regular_inj_dim(const AlgebraPtr& a, std::size_t bound = default_bound) {
    BoundedDim out{0, true};
    for (const auto& p : indecomposable_projectives(a))
        out = detail::max_dim(out, inj_dim_bounded(p, bound));
    return out;
}

/// pd of the injective envelope of A_A, one indecomposable injective per vertex in its top.
inline BoundedDim injective_envelope_proj_dim(const AlgebraPtr& a, std::size_t bound = default_bound) {
    auto vertices = projective_cover(duality_D(regular_module(a))).vertices;
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    const AlgebraPtr op = opposite(a);
    BoundedDim out{0, true};
    for (auto v : vertices)
        out = detail::max_dim(out, proj_dim_bounded(duality_D(indecomposable_projective(op, v)), bound));
    return out;
}

struct GorensteinProbe {
    BoundedDim inj_dim_right;  // injective dimension of A_A
    BoundedDim inj_dim_left;   // injective dimension of the regular module of the opposite algebra
    GorensteinVerdict verdict = GorensteinVerdict::inconclusive;
    std::optional<GorensteinCertificate> certificate;
    std::size_t bound = default_bound;
};

inline GorensteinProbe gorenstein_probe(const AlgebraPtr& a, std::size_t bound = default_bound) {
    GorensteinProbe g;
    g.bound = bound;
    g.inj_dim_right = regular_inj_dim(a, bound);
    g.inj_dim_left = regular_inj_dim(opposite(a), bound);
    if (!g.inj_dim_right.exact || !g.inj_dim_left.exact) {
        g.verdict = GorensteinVerdict::inconclusive;
    } else if (g.inj_dim_right.value == g.inj_dim_left.value) {
        g.verdict = GorensteinVerdict::yes;
        g.certificate = GorensteinCertificate{g.inj_dim_right.value, bound};
    } else {
        g.verdict = GorensteinVerdict::no_evidence;
    }
    return g;
}

inline GscVerdict gsc_verdict(const GorensteinProbe& g) {
    if (g.inj_dim_right.exact && g.inj_dim_left.exact)
        return g.inj_dim_right.value == g.inj_dim_left.value ? GscVerdict::consistent : GscVerdict::inconsistent;
    if (!g.inj_dim_right.exact && !g.inj_dim_left.exact)
        return GscVerdict::consistent;
    return GscVerdict::inconclusive;
}

inline GscVerdict gsc_probe(const AlgebraPtr& a, std::size_t bound = default_bound) {
    return gsc_verdict(gorenstein_probe(a, bound));
}

/// Largest Gorenstein projective dimension of a simple module; needs a Gorenstein certificate.
inline BoundedDim max_simple_gpd(const AlgebraPtr& a, std::size_t bound,
                                 const std::optional<GorensteinCertificate>& cert) {
    if (!cert)
        throw Error(ErrorCode::missing_certificate, "max_simple_gpd needs a Gorenstein certificate");
    BoundedDim best{0, true};
    for (const auto& s : simple_modules(a)) {
        BoundedDim g = gorenstein_pd_bounded(s, bound, cert);
        if (g.value > best.value)
            best = g;
    }
    return best;
}

inline BoundedDim max_simple_gpd(const AlgebraPtr& a, std::size_t bound = default_bound) {
    return max_simple_gpd(a, bound, gorenstein_probe(a, bound).certificate);
}

struct ClassificationReport {
    std::string algebra;
    std::size_t dim = 0;
    std::size_t vertices = 0;
    bool local = false;
    bool commutative = false;
    bool selfinjective = false;
    bool qf2 = false;
    bool qf3 = false;
    bool qf3_opposite = false;
    BoundedDim inj_dim_right, inj_dim_left;
    BoundedDim pd_injective_envelope;
    GorensteinVerdict gorenstein = GorensteinVerdict::inconclusive;
    std::optional<GorensteinCertificate> certificate;
    GscVerdict gsc = GscVerdict::inconclusive;
    std::size_t bound = default_bound;
};

inline ClassificationReport classify(const AlgebraPtr& a, std::size_t bound = default_bound) {
    ClassificationReport r;
    r.algebra = a->name();
    r.dim = a->dim();
    r.vertices = a->vertex_count();
    r.local = a->is_local();
    r.commutative = a->is_commutative();
    r.selfinjective = is_selfinjective(a);
    r.qf2 = is_qf2(a);
    auto q = qf3_both_sides(a);
    r.qf3 = q.right;
    r.qf3_opposite = q.left;
    GorensteinProbe g = gorenstein_probe(a, bound);
    r.inj_dim_right = g.inj_dim_right;
    r.inj_dim_left = g.inj_dim_left;
    r.gorenstein = g.verdict;
    r.certificate = g.certificate;
    r.gsc = gsc_verdict(g);
    r.pd_injective_envelope = injective_envelope_proj_dim(a, bound);
    r.bound = bound;
    return r;
}

} // namespace artin
