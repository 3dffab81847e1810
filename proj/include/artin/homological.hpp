#pragma once

#include <array>
#include <map>
#include <string>

#include "artin/decompose.hpp"
#include "artin/hom.hpp"

namespace artin {

/// A bounded dimension: exact, or at least `value` when the search bound was exhausted.
struct BoundedDim {
    std::size_t value = 0;
    bool exact = true;

    static BoundedDim at_least(std::size_t v) { return {v, false}; }
    friend bool operator==(const BoundedDim&, const BoundedDim&) = default;
    std::string str() const { return exact ? std::to_string(value) : ">= " + std::to_string(value); }
};

inline constexpr std::size_t default_bound = 12;

struct ProjectiveCover {
    RightModule cover;
    ModuleMap epi;
    std::vector<std::size_t> vertices;  // vertex of each indecomposable summand, in order
};

/// Minimal projective cover: one summand e_vA per top generator at vertex v.
inline ProjectiveCover projective_cover(const RightModule& m) {
    const AlgebraPtr& a = m.algebra();
    const TopData& t = m.top_data();
    std::vector<RightModule> parts;
    for (auto v : t.vertices)
        parts.push_back(indecomposable_projective(a, v));
    RightModule p = parts.empty() ? zero_module(a) : direct_sum(parts);
    return {p, ModuleMap(p, m, t.epi), t.vertices};
}

inline bool is_projective(const RightModule& m) { return m.top_data().epi.rows() == m.dim(); }

inline bool is_injective(const RightModule& m) { return is_projective(duality_D(m)); }

/// Minimal projective resolution data that holds no module handles: generator vertices of each
/// term, and for degree i >= 1 the component a[k][j] in e_{s_j} A e_{t_k} of the image of the
/// k-th generator of P_i in the j-th summand of P_{i-1}.
struct ResolutionData {
    std::vector<std::vector<std::size_t>> vertices;
    std::vector<std::vector<std::vector<std::vector<Residue>>>> components;
    bool complete = false;  // the last syzygy computed was zero
};

struct Resolution {
    RightModule module;
    std::vector<RightModule> terms;        // P_0, P_1, ...
    std::vector<RightModule> syzygies;     // Omega^0 = module, Omega^1, ...
    std::vector<ModuleMap> epis;           // P_i -> Omega^i
    std::vector<ModuleMap> inclusions;     // Omega^{i+1} -> P_i
    std::vector<ModuleMap> boundaries;     // d_i: P_i -> P_{i-1}, stored at index i - 1
    ResolutionData data;
};

namespace detail {

/// Splits coordinates on a direct sum of indecomposable projectives into algebra elements.
inline std::vector<std::vector<Residue>> summand_elements(const Algebra& a, const std::vector<std::size_t>& vertices,
                                                          std::span<const Residue> coords) {
    std::vector<std::vector<Residue>> out;
    std::size_t off = 0;
    for (auto v : vertices) {
        const Matrix& u = a.projective_basis(v).basis();
        std::vector<Residue> el(a.dim(), 0);
        for (std::size_t r = 0; r < u.rows(); ++r) {
            const Residue c = coords[off + r];
            if (c == 0)
                continue;
            for (std::size_t k = 0; k < a.dim(); ++k)
                el[k] = a.field().fma(c, u(r, k), el[k]);
        }
        out.push_back(std::move(el));
        off += u.rows();
    }
    return out;
}

} // namespace detail

/// Minimal resolution through P_{max_degree}; stops early at a zero syzygy.
inline Resolution resolve(const RightModule& m, std::size_t max_degree) {
    const Algebra& a = *m.algebra();
    Resolution r{m, {}, {m}, {}, {}, {}, {}};
    for (std::size_t i = 0; i <= max_degree; ++i) {
        const RightModule& cur = r.syzygies.back();
        if (cur.is_zero()) {
            r.data.complete = true;
            break;
        }
        ProjectiveCover pc = projective_cover(cur);
        if (i > 0) {
            // images of the new generators inside P_{i-1}
            const TopData& t = cur.top_data();
            const Matrix img = t.generators * r.inclusions.back().matrix;
            std::vector<std::vector<std::vector<Residue>>> comp;
            for (std::size_t k = 0; k < img.rows(); ++k)
                comp.push_back(detail::summand_elements(a, r.data.vertices.back(), img.row(k)));
            r.data.components.push_back(std::move(comp));
            r.boundaries.push_back(compose(pc.epi, r.inclusions.back()));
        } else {
            r.data.components.emplace_back();
        }
        r.data.vertices.push_back(pc.vertices);
        r.terms.push_back(pc.cover);
        r.epis.push_back(pc.epi);
        ModuleMap inc = kernel(pc.epi);
        r.syzygies.push_back(inc.src);
        r.inclusions.push_back(std::move(inc));
    }
    if (!r.data.complete && r.syzygies.back().is_zero())
        r.data.complete = true;
    return r;
}

inline RightModule syzygy(const RightModule& m, std::size_t i) {
    RightModule cur = m;
    for (std::size_t k = 0; k < i && !cur.is_zero(); ++k)
        cur = kernel(projective_cover(cur).epi).src;
    return cur;
}

/// Dimensions of Ext^i(M, N) for i = 0..max_degree from resolution data of M.
inline std::vector<std::size_t> ext_dims(const ResolutionData& res, const RightModule& n, std::size_t max_degree) {
    const Algebra& a = *n.algebra();
    std::vector<Subspace> corner;  // N e_v
    for (auto e : a.idempotents())
        corner.push_back(Subspace::span(n.action(e)));
    auto hom_dim_of = [&](const std::vector<std::size_t>& verts) {
        std::size_t d = 0;
        for (auto v : verts)
            d += corner[v].dim();
        return d;
    };
    // delta_i: Hom(P_i, N) -> Hom(P_{i+1}, N)
    auto delta_rank = [&](std::size_t i) -> std::size_t {
        if (i + 1 >= res.vertices.size())
            return 0;
        const auto& src = res.vertices[i];
        const auto& tgt = res.vertices[i + 1];
        const auto& comp = res.components[i + 1];
        std::vector<std::size_t> col_off{0};
        for (auto v : tgt)
            col_off.push_back(col_off.back() + corner[v].dim());
        std::size_t rows = hom_dim_of(src);
        Matrix d(n.field(), rows, col_off.back());
        std::size_t row = 0;
        for (std::size_t j = 0; j < src.size(); ++j) {
            const Subspace& b = corner[src[j]];
            for (std::size_t k = 0; k < tgt.size(); ++k) {
                const auto& el = comp[k][j];
                if (std::all_of(el.begin(), el.end(), [](Residue x) { return x == 0; }))
                    continue;
                Matrix img = corner[tgt[k]].coordinates(n.act(b.basis(), el));
                d.set_block(row, col_off[k], img);
            }
            row += b.dim();
        }
        return rank(d);
    };
    const bool enough = res.complete || res.vertices.size() >= max_degree + 2;
    require(enough, "resolution too short for the requested Ext degree");
    std::vector<std::size_t> out;
    std::size_t prev_rank = 0;
    for (std::size_t i = 0; i <= max_degree; ++i) {
        if (i >= res.vertices.size()) {
            out.push_back(0);
            prev_rank = 0;
            continue;
        }
        const std::size_t r = delta_rank(i);
        out.push_back(hom_dim_of(res.vertices[i]) - r - prev_rank);
        prev_rank = r;
    }
    return out;
}

inline std::size_t ext_dim(const RightModule& m, const RightModule& n, std::size_t i) {
    require(same_algebra(m.algebra(), n.algebra()), "ext_dim needs modules over the same algebra");
    return ext_dims(resolve(m, i + 1).data, n, i)[i];
}

/// Indecomposable non-projective modules reached from a module by taking syzygies, one node per
/// isomorphism class found. Syzygies commute with direct sums, so layer k of a module, the
/// classes of the non-projective summands of Omega^k M, determines pd M and Ext^k(M, -) vanishing.
/// Summands are expanded once, which keeps exponentially growing syzygies cheap.
class SyzygyGraph {
public:
    explicit SyzygyGraph(SearchOptions opt = {}, std::uint64_t seed = 0) : opt_(opt), seed_(seed) {}

    const RightModule& module(std::size_t id) const { return nodes_[id]; }
    std::size_t size() const { return nodes_.size(); }

    /// Classes of the non-projective indecomposable summands of m with their multiplicities.
    std::map<std::size_t, std::size_t> summands_of(const RightModule& m) {
        std::map<std::size_t, std::size_t> out;
        if (m.is_zero() || is_projective(m))
            return out;
        for (auto& s : decompose(m, seed_, opt_).summands)
            if (!is_projective(s.module))
                ++out[intern(s.module)];
        return out;
    }

    std::vector<std::size_t> classes_of(const RightModule& m) {
        std::vector<std::size_t> out;
        for (const auto& [id, mult] : summands_of(m))
            out.push_back(id);
        return out;
    }

    /// Summands of Omega of a class, with multiplicities.
    const std::map<std::size_t, std::size_t>& children(std::size_t id) {
        if (!children_[id]) {
            RightModule omega = kernel(projective_cover(nodes_[id]).epi).src;
            children_[id] = summands_of(omega);
        }
        return *children_[id];
    }

    /// Layers 0..max_layer of m; stops after the first empty layer.
    std::vector<std::vector<std::size_t>> layers(const RightModule& m, std::size_t max_layer) {
        std::vector<std::vector<std::size_t>> out{classes_of(m)};
        while (!out.back().empty() && out.size() <= max_layer) {
            std::vector<std::size_t> next;
            for (auto id : out.back())
                for (const auto& [c, mult] : children(id))
                    next.push_back(c);
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            out.push_back(std::move(next));
        }
        return out;
    }

private:
    std::size_t intern(const RightModule& m) {
        const auto dv = m.dimension_vector();
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            if (nodes_[i].dim() != m.dim() || nodes_[i].dimension_vector() != dv)
                continue;
            if (is_isomorphic(nodes_[i], m, seed_, opt_).verdict == IsoVerdict::yes)
                return i;
        }
        nodes_.push_back(m);
        children_.emplace_back();
        return nodes_.size() - 1;
    }

    SearchOptions opt_;
    SeedState seed_;
    std::vector<RightModule> nodes_;
    std::vector<std::optional<std::map<std::size_t, std::size_t>>> children_;
};

/// Omega^{i-1} D(A) for i = 1, 2 as sums of copies of indecomposables X, each kept as resolution
/// data through degree 2, so Ext^i(D(A), N) = sum of m_X Ext^1(X, N) never resolves D(A) itself.
struct CogeneratorExtData {
    std::vector<std::vector<std::pair<ResolutionData, std::size_t>>> degree;
};

inline std::shared_ptr<const CogeneratorExtData> injective_cogenerator_ext_data(const AlgebraPtr& a) {
    return a->cached<CogeneratorExtData>("ext-data:D(A):2", [&] {
        SyzygyGraph g;
        CogeneratorExtData out;
        std::map<std::size_t, std::size_t> layer = g.summands_of(injective_cogenerator(a));
        for (std::size_t i = 1; i <= 2; ++i) {
            auto& row = out.degree.emplace_back();
            std::map<std::size_t, std::size_t> next;
            for (const auto& [id, mult] : layer) {
                row.emplace_back(resolve(g.module(id), 2).data, mult);
                if (i < 2)
                    for (const auto& [c, k] : g.children(id))
                        next[c] += mult * k;
            }
            layer = std::move(next);
        }
        return out;
    });
}

/// dim Ext^1(D(A), N) and dim Ext^2(D(A), N).
inline std::array<std::size_t, 2> injective_cogenerator_ext(const RightModule& n) {
    auto data = injective_cogenerator_ext_data(n.algebra());
    std::array<std::size_t, 2> out{0, 0};
    for (std::size_t i = 0; i < 2; ++i)
        for (const auto& [res, mult] : data->degree[i])
            out[i] += mult * ext_dims(res, n, 1)[1];
    return out;
}

struct MinimalPresentation {
    RightModule module;
    RightModule p0, p1;
    ModuleMap d;  // P1 -> P0
    ModuleMap p;  // P0 -> M
};

inline MinimalPresentation minimal_presentation(const RightModule& m) {
    ProjectiveCover c0 = projective_cover(m);
    ModuleMap inc = kernel(c0.epi);
    ProjectiveCover c1 = projective_cover(inc.src);
    return {m, c0.cover, c1.cover, compose(c1.epi, inc), c0.epi};
}

/// Tr M = coker(P0* -> P1*) over the opposite algebra, from a minimal presentation.
inline RightModule transpose(const RightModule& m) {
    MinimalPresentation pres = minimal_presentation(m);
    if (pres.p1.is_zero())
        return zero_module(opposite(m.algebra()));
    DualModule d0 = star_with_basis(pres.p0);
    DualModule d1 = star_with_basis(pres.p1);
    return cokernel(star_map(pres.d, d1, d0)).tgt;
}

/// tau = D Tr.
inline RightModule ar_translate(const RightModule& m) { return duality_D(transpose(m)); }

/// tau^{-1} = Tr D.
inline RightModule ar_inverse(const RightModule& m) { return transpose(duality_D(m)); }

struct InjectiveEnvelope {
    RightModule envelope;
    ModuleMap mono;
};

/// I = D(P(D M)); the mono is the transpose of the cover epi of D M.
inline InjectiveEnvelope injective_envelope(const RightModule& m) {
    ProjectiveCover pc = projective_cover(duality_D(m));
    RightModule env = duality_D(pc.cover);
    return {env, ModuleMap(m, env, pc.epi.matrix.transpose())};
}

inline RightModule cosyzygy(const RightModule& m, std::size_t i) {
    RightModule cur = m;
    for (std::size_t k = 0; k < i && !cur.is_zero(); ++k)
        cur = cokernel(injective_envelope(cur).mono).tgt;
    return cur;
}

/// Projective dimension, exact when Omega^k M is projective for some k <= bound. The zero module gets 0.
inline BoundedDim proj_dim_bounded(const RightModule& m, std::size_t bound = default_bound) {
    SyzygyGraph g;
    auto layers = g.layers(m, bound);
    if (!layers.back().empty())
        return BoundedDim::at_least(bound + 1);
    return {layers.size() - 1, true};
}

/// Injective dimension, as the projective dimension of D M over the opposite algebra.
inline BoundedDim inj_dim_bounded(const RightModule& m, std::size_t bound = default_bound) {
    return proj_dim_bounded(duality_D(m), bound);
}

} // namespace artin
