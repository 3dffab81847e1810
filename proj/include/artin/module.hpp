#pragma once

#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "artin/algebra.hpp"
#include "artin/matrix.hpp"

namespace artin {

/// Top generators of a module and the induced free presentation data. Holds no module
/// handles so it can live inside a module's cache.
struct TopData {
    std::vector<std::size_t> vertices;  // vertex of each generator
    Matrix generators;                  // rows m_j with m_j = m_j e_{vertex}
    std::vector<std::size_t> offsets;   // start of each summand e_vA inside the cover
    Matrix epi;                         // cover -> module, rows (j, u) = m_j * u
    Matrix kernel;                      // basis of ker(epi) in cover coordinates
    Matrix section;                     // rows: a preimage in the cover of each module basis vector
};

/// Right module given by one action matrix per algebra basis element (v * b = v * action(b)).
/// Copies share the representation and its caches.
class RightModule {
public:
    RightModule(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action)
        : rep_(std::make_shared<Rep>(std::move(algebra), dim, std::move(action))) {
        require(rep_->algebra != nullptr, "module needs an algebra");
        require(rep_->action.size() == rep_->algebra->dim(), "one action matrix per algebra basis element");
        for (const auto& m : rep_->action)
            require(m.rows() == dim && m.cols() == dim, "action matrices must be dim x dim");
#ifndef NDEBUG
        if (auto failure = law_failure())
            throw Error(ErrorCode::contract_violation, "module law: " + *failure);
#endif
    }

    const AlgebraPtr& algebra() const noexcept { return rep_->algebra; }
    FieldSpec field() const noexcept { return rep_->algebra->field(); }
    std::size_t dim() const noexcept { return rep_->dim; }
    bool is_zero() const noexcept { return rep_->dim == 0; }
    const Matrix& action(std::size_t basis_index) const { return rep_->action[basis_index]; }
    const std::vector<Matrix>& actions() const noexcept { return rep_->action; }

    /// Matrix of the action of an arbitrary algebra element (basis coordinates).
    Matrix element_action(std::span<const Residue> element) const {
        Matrix out(field(), dim(), dim());
        for (std::size_t k = 0; k < element.size(); ++k)
            if (element[k] != 0)
                out.add_scaled(rep_->action[k], element[k]);
        return out;
    }

    /// rows * a for an algebra element a.
    Matrix act(const Matrix& rows, std::span<const Residue> element) const {
        Matrix out(field(), rows.rows(), dim());
        for (std::size_t k = 0; k < element.size(); ++k)
            if (element[k] != 0)
                out.add_scaled(rows * rep_->action[k], element[k]);
        return out;
    }

    /// First violated module law, if any.
    std::optional<std::string> law_failure() const {
        const Algebra& a = *rep_->algebra;
        const FieldSpec f = a.field();
        const std::size_t n = a.dim();
        if (element_action(a.one()) != Matrix::identity(f, dim()))
            return "the unit does not act as the identity";
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Matrix lhs = rep_->action[i] * rep_->action[j];
                Matrix rhs(f, dim(), dim());
                for (const Term& t : a.product(i, j))
                    rhs.add_scaled(rep_->action[t.index], t.coeff);
                if (lhs != rhs)
                    return "rho(b_" + std::to_string(i) + ") rho(b_" + std::to_string(j) + ") != rho(b_" +
                           std::to_string(i) + " b_" + std::to_string(j) + ")";
            }
        return std::nullopt;
    }

    /// M J as a subspace of M.
    const Subspace& radical_space() const {
        std::call_once(rep_->rad_once, [this] {
            std::vector<Matrix> parts;
            for (auto r : algebra()->radical())
                parts.push_back(rep_->action[r]);
            rep_->rad = Subspace::span(Matrix::vstack(parts, field(), dim()));
        });
        return rep_->rad;
    }

    /// Generators of the top and the presentation data of the projective cover.
    const TopData& top_data() const {
        std::call_once(rep_->top_once, [this] { rep_->top = compute_top(); });
        return rep_->top;
    }

    /// dim M e_v for every vertex.
    std::vector<std::size_t> dimension_vector() const {
        std::vector<std::size_t> out;
        for (auto e : algebra()->idempotents())
            out.push_back(rank(rep_->action[e]));
        return out;
    }

    friend bool operator==(const RightModule& a, const RightModule& b) {
        return a.rep_ == b.rep_ ||
               (same_algebra(a.algebra(), b.algebra()) && a.dim() == b.dim() && a.actions() == b.actions());
    }

    friend std::ostream& operator<<(std::ostream& os, const RightModule& m) {
        os << "right module of dim " << m.dim() << " over " << m.algebra()->name() << "\n";
        const auto& labels = m.algebra()->labels();
        for (std::size_t k = 0; k < labels.size(); ++k) {
            if (m.action(k).is_zero())
                continue;
            os << "  " << labels[k] << ":\n" << m.action(k);
        }
        return os;
    }

private:
    struct Rep {
        Rep(AlgebraPtr a, std::size_t d, std::vector<Matrix> act) : algebra(std::move(a)), dim(d), action(std::move(act)) {}
        AlgebraPtr algebra;
        std::size_t dim;
        std::vector<Matrix> action;
        mutable std::once_flag rad_once, top_once;
        mutable Subspace rad;
        mutable TopData top;
    };

    TopData compute_top() const {
        const Algebra& a = *algebra();
        const FieldSpec f = field();
        TopData t;
        Subspace seen = radical_space();
        std::vector<Matrix> gens;
        for (std::size_t v = 0; v < a.vertex_count(); ++v) {
            Subspace mev = Subspace::span(rep_->action[a.idempotents()[v]]);
            for (std::size_t r = 0; r < mev.dim(); ++r)
                if (seen.insert(mev.basis().row(r))) {
                    t.vertices.push_back(v);
                    gens.push_back(mev.basis().select_rows(std::vector<std::size_t>{r}));
                }
        }
        t.generators = Matrix::vstack(gens, f, dim());
        std::vector<Matrix> blocks;
        std::size_t off = 0;
        for (std::size_t j = 0; j < t.vertices.size(); ++j) {
            t.offsets.push_back(off);
            const Matrix& u = a.projective_basis(t.vertices[j]).basis();
            Matrix block(f, u.rows(), dim());
            Matrix g = gens[j];
            for (std::size_t r = 0; r < u.rows(); ++r) {
                Matrix img = act(g, u.row(r));
                std::copy_n(img.row(0).begin(), dim(), block.row(r).begin());
            }
            blocks.push_back(std::move(block));
            off += u.rows();
        }
        t.offsets.push_back(off);
        t.epi = Matrix::vstack(blocks, f, dim());
        t.kernel = kernel_basis(t.epi);
        auto sec = solve(t.epi, Matrix::identity(f, dim()));
        require(sec.has_value(), "top generators do not generate the module");
        t.section = std::move(*sec);
        return t;
    }

    std::shared_ptr<const Rep> rep_;
};

/// Module homomorphism src -> tgt, acting on row vectors from the right.
struct ModuleMap {
    RightModule src;
    RightModule tgt;
    Matrix matrix;

    ModuleMap(RightModule s, RightModule t, Matrix m) : src(std::move(s)), tgt(std::move(t)), matrix(std::move(m)) {
        require(same_algebra(src.algebra(), tgt.algebra()), "module map between modules over different algebras");
        require(matrix.rows() == src.dim() && matrix.cols() == tgt.dim(), "module map matrix has the wrong shape");
#ifndef NDEBUG
        require(intertwines(), "module map does not commute with the action");
#endif
    }

    bool intertwines() const {
        for (std::size_t k = 0; k < src.algebra()->dim(); ++k)
            if (src.action(k) * matrix != matrix * tgt.action(k))
                return false;
        return true;
    }

    std::size_t rank() const { return artin::rank(matrix); }
    bool is_injective() const { return rank() == src.dim(); }
    bool is_surjective() const { return rank() == tgt.dim(); }
    bool is_isomorphism() const { return src.dim() == tgt.dim() && is_injective(); }
};

/// f followed by g.
inline ModuleMap compose(const ModuleMap& f, const ModuleMap& g) {
    require(f.tgt.dim() == g.src.dim(), "composition of incompatible maps");
    return ModuleMap(f.src, g.tgt, f.matrix * g.matrix);
}

inline ModuleMap identity_map(const RightModule& m) { return ModuleMap(m, m, Matrix::identity(m.field(), m.dim())); }

inline RightModule zero_module(const AlgebraPtr& a) {
    return RightModule(a, 0, std::vector<Matrix>(a->dim(), Matrix(a->field(), 0, 0)));
}

inline RightModule regular_module(const AlgebraPtr& a) {
    std::vector<Matrix> act;
    for (std::size_t j = 0; j < a->dim(); ++j)
        act.push_back(a->right_mult(j));
    return RightModule(a, a->dim(), std::move(act));
}

/// One-dimensional simple module at a vertex (index into idempotents()).
inline RightModule simple_module(const AlgebraPtr& a, std::size_t vertex) {
    require(vertex < a->vertex_count(), "vertex out of range");
    std::vector<Matrix> act(a->dim(), Matrix(a->field(), 1, 1));
    act[a->idempotents()[vertex]](0, 0) = 1;
    return RightModule(a, 1, std::move(act));
}

inline std::vector<RightModule> simple_modules(const AlgebraPtr& a) {
    std::vector<RightModule> out;
    for (std::size_t v = 0; v < a->vertex_count(); ++v)
        out.push_back(simple_module(a, v));
    return out;
}

/// The submodule on an action-invariant subspace, with its inclusion.
inline ModuleMap restrict_to(const RightModule& m, const Subspace& w) {
    std::vector<Matrix> act;
    for (const auto& r : m.actions())
        act.push_back(w.coordinates(w.basis() * r));
    RightModule sub(m.algebra(), w.dim(), std::move(act));
    return ModuleMap(sub, m, w.basis());
}

/// The quotient by an action-invariant subspace, with its projection. The quotient basis is
/// the image of the unit vectors at the non-pivot columns of w.
inline ModuleMap quotient_by(const RightModule& m, const Subspace& w) {
    const FieldSpec f = m.field();
    const auto cols = w.complement_columns();
    const std::size_t q = cols.size();
    auto reduce_row = [&](std::span<const Residue> v, Matrix& out, std::size_t r) {
        auto red = w.reduce(v);
        for (std::size_t c = 0; c < q; ++c)
            out(r, c) = red[cols[c]];
    };
    std::vector<Matrix> act;
    for (const auto& rho : m.actions()) {
        Matrix a(f, q, q);
        for (std::size_t c = 0; c < q; ++c)
            reduce_row(rho.row(cols[c]), a, c);
        act.push_back(std::move(a));
    }
    RightModule quot(m.algebra(), q, std::move(act));
    Matrix proj(f, m.dim(), q);
    Matrix id = Matrix::identity(f, m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        reduce_row(id.row(i), proj, i);
    return ModuleMap(m, quot, std::move(proj));
}

/// e_v A as the submodule of the regular module, basis = canonical basis of e_v A.
inline RightModule indecomposable_projective(const AlgebraPtr& a, std::size_t vertex) {
    return restrict_to(regular_module(a), a->projective_basis(vertex)).src;
}

inline std::vector<RightModule> indecomposable_projectives(const AlgebraPtr& a) {
    std::vector<RightModule> out;
    for (std::size_t v = 0; v < a->vertex_count(); ++v)
        out.push_back(indecomposable_projective(a, v));
    return out;
}

/// Vector-space dual as a right module over the opposite algebra: action by transposes.
inline RightModule duality_D(const RightModule& m) {
    std::vector<Matrix> act;
    for (const auto& r : m.actions())
        act.push_back(r.transpose());
    return RightModule(opposite(m.algebra()), m.dim(), std::move(act));
}

/// D(f): D(tgt) -> D(src).
inline ModuleMap duality_D(const ModuleMap& f, const RightModule& dsrc, const RightModule& dtgt) {
    return ModuleMap(dtgt, dsrc, f.matrix.transpose());
}

inline ModuleMap duality_D(const ModuleMap& f) { return duality_D(f, duality_D(f.src), duality_D(f.tgt)); }

/// D(A) as a right A-module: the dual of the regular module of the opposite algebra.
inline RightModule injective_cogenerator(const AlgebraPtr& a) { return duality_D(regular_module(opposite(a))); }

struct DirectSum {
    RightModule module;
    std::vector<Matrix> injections;   // summand -> sum
    std::vector<Matrix> projections;  // sum -> summand
};

inline DirectSum direct_sum_with_maps(const AlgebraPtr& a, const std::vector<RightModule>& parts) {
    const FieldSpec f = a->field();
    std::size_t total = 0;
    for (const auto& p : parts) {
        require(same_algebra(p.algebra(), a), "direct sum of modules over different algebras");
        total += p.dim();
    }
    std::vector<Matrix> act;
    for (std::size_t k = 0; k < a->dim(); ++k) {
        std::vector<Matrix> blocks;
        for (const auto& p : parts)
            blocks.push_back(p.action(k));
        act.push_back(Matrix::block_diagonal(blocks, f));
    }
    DirectSum out{RightModule(a, total, std::move(act)), {}, {}};
    std::size_t off = 0;
    for (const auto& p : parts) {
        Matrix inj(f, p.dim(), total), proj(f, total, p.dim());
        for (std::size_t i = 0; i < p.dim(); ++i) {
            inj(i, off + i) = 1;
            proj(off + i, i) = 1;
        }
        out.injections.push_back(std::move(inj));
        out.projections.push_back(std::move(proj));
        off += p.dim();
    }
    return out;
}

inline RightModule direct_sum(const std::vector<RightModule>& parts) {
    require(!parts.empty(), "direct sum of an empty list needs an algebra");
    return direct_sum_with_maps(parts.front().algebra(), parts).module;
}

inline RightModule direct_power(const RightModule& m, std::size_t k) {
    if (k == 0)
        return zero_module(m.algebra());
    return direct_sum(std::vector<RightModule>(k, m));
}

/// Kernel with its inclusion into f.src.
inline ModuleMap kernel(const ModuleMap& f) { return restrict_to(f.src, Subspace::span(kernel_basis(f.matrix))); }

/// Cokernel with its projection from f.tgt.
inline ModuleMap cokernel(const ModuleMap& f) { return quotient_by(f.tgt, Subspace::span(f.matrix)); }

struct Image {
    RightModule module;
    ModuleMap onto;       // src -> image
    ModuleMap inclusion;  // image -> tgt
};

inline Image image(const ModuleMap& f) {
    Subspace w = Subspace::span(f.matrix);
    ModuleMap inc = restrict_to(f.tgt, w);
    ModuleMap onto(f.src, inc.src, w.coordinates(f.matrix));
    return {inc.src, std::move(onto), std::move(inc)};
}

/// Smallest submodule containing the given rows; returns the inclusion.
inline ModuleMap submodule_generated(const RightModule& m, const Matrix& vectors) {
    const FieldSpec f = m.field();
    Subspace w(f, m.dim());
    std::deque<std::vector<Residue>> pending;
    for (std::size_t i = 0; i < vectors.rows(); ++i)
        pending.emplace_back(vectors.row(i).begin(), vectors.row(i).end());
    while (!pending.empty()) {
        auto v = std::move(pending.front());
        pending.pop_front();
        if (!w.insert(v))
            continue;
        Matrix row = Matrix::row_vector(f, v);
        for (const auto& rho : m.actions()) {
            Matrix img = row * rho;
            if (!w.contains(img.row(0)))
                pending.emplace_back(img.row(0).begin(), img.row(0).end());
        }
    }
    return restrict_to(m, w);
}

/// M J with its inclusion.
inline ModuleMap radical(const RightModule& m) { return restrict_to(m, m.radical_space()); }

/// M / M J with its projection.
inline ModuleMap top(const RightModule& m) { return quotient_by(m, m.radical_space()); }

/// Elements killed by the radical, with the inclusion.
inline ModuleMap socle(const RightModule& m) {
    const auto& rad = m.algebra()->radical();
    std::vector<Matrix> parts;
    for (auto r : rad)
        parts.push_back(m.action(r));
    Matrix h = Matrix::hstack(parts, m.field(), m.dim());
    return restrict_to(m, Subspace::span(kernel_basis(h)));
}

/// Number of copies of each simple in the top (equal to the number of top generators per vertex).
inline std::vector<std::size_t> top_multiplicities(const RightModule& m) {
    std::vector<std::size_t> out(m.algebra()->vertex_count(), 0);
    for (auto v : m.top_data().vertices)
        ++out[v];
    return out;
}

/// Number of copies of each simple in the socle.
inline std::vector<std::size_t> socle_multiplicities(const RightModule& m) {
    return socle(m).src.dimension_vector();
}

/// Dimension vectors of the radical layers M J^k / M J^{k+1}, k = 0, 1, ... until zero.
inline std::vector<std::vector<std::size_t>> radical_layers(const RightModule& m) {
    std::vector<std::vector<std::size_t>> out;
    RightModule cur = m;
    while (!cur.is_zero()) {
        RightModule next = radical(cur).src;
        auto layer = cur.dimension_vector();
        const auto below = next.dimension_vector();
        for (std::size_t v = 0; v < layer.size(); ++v)
            layer[v] -= below[v];
        out.push_back(std::move(layer));
        cur = std::move(next);
    }
    return out;
}

inline bool is_semisimple(const RightModule& m) { return m.radical_space().dim() == 0; }

} // namespace artin
