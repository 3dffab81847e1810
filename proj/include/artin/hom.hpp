#pragma once

#include "artin/module.hpp"

namespace artin {

/// Basis of Hom_A(src, tgt). The flattened maps form a canonical RREF basis, so coordinates
/// of a homomorphism are its entries at the pivot positions.
struct HomSpace {
    RightModule src;
    RightModule tgt;
    std::vector<Matrix> basis;
    Matrix flat;
    std::vector<std::size_t> pivots;

    std::size_t dim() const noexcept { return basis.size(); }

    /// Coordinates of a homomorphism in this basis.
    std::vector<Residue> coordinates(const Matrix& f) const {
        std::vector<Residue> c(pivots.size());
        for (std::size_t i = 0; i < pivots.size(); ++i)
            c[i] = f.data()[pivots[i]];
        return c;
    }

    Matrix combination(std::span<const Residue> coeffs) const {
        const FieldSpec f = src.field();
        Matrix out(f, src.dim(), tgt.dim());
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (coeffs[i] != 0)
                out.add_scaled(basis[i], coeffs[i]);
        return out;
    }

    ModuleMap map(std::size_t i) const { return ModuleMap(src, tgt, basis[i]); }
};

namespace detail {

inline HomSpace hom_from_flat(const RightModule& m, const RightModule& n, const Matrix& rows) {
    Echelon e = rref(rows);
    HomSpace h{m, n, {}, std::move(e.basis), std::move(e.pivots)};
    for (std::size_t i = 0; i < h.flat.rows(); ++i)
        h.basis.push_back(Matrix::unflatten(m.field(), h.flat.row(i), m.dim(), n.dim()));
    return h;
}

} // namespace detail

/// Hom_A(m, n). A homomorphism is fixed by the images n_j in N e_{s_j} of the top generators
/// m_j of m; the admissible tuples are those killing the kernel of the free cover of m.
inline HomSpace hom_space(const RightModule& m, const RightModule& n) {
    require(same_algebra(m.algebra(), n.algebra()), "hom_space needs modules over the same algebra");
    const FieldSpec f = m.field();
    const Algebra& a = *m.algebra();
    if (m.is_zero() || n.is_zero())
        return detail::hom_from_flat(m, n, Matrix(f, 0, m.dim() * n.dim()));

    const TopData& top = m.top_data();
    const std::size_t t = top.vertices.size();

    // Unknowns: coordinates of each n_j in the canonical basis of N e_{s_j}.
    std::vector<Subspace> targets;
    std::vector<std::size_t> unknown_off{0};
    for (std::size_t j = 0; j < t; ++j) {
        targets.push_back(Subspace::span(n.action(a.idempotents()[top.vertices[j]])));
        unknown_off.push_back(unknown_off.back() + targets.back().dim());
    }
    const std::size_t unknowns = unknown_off.back();
    if (unknowns == 0)
        return detail::hom_from_flat(m, n, Matrix(f, 0, m.dim() * n.dim()));

    // images[j][u] = B_j * rho_N(u) for each basis element u of e_{s_j}A.
    std::vector<std::vector<Matrix>> images(t);
    for (std::size_t j = 0; j < t; ++j) {
        const Matrix& u = a.projective_basis(top.vertices[j]).basis();
        for (std::size_t r = 0; r < u.rows(); ++r)
            images[j].push_back(n.act(targets[j].basis(), u.row(r)));
    }

    Matrix solutions;
    const std::size_t kdim = top.kernel.rows();
    if (kdim == 0) {
        solutions = Matrix::identity(f, unknowns);
    } else {
        Matrix phi(f, unknowns, kdim * n.dim());
        for (std::size_t l = 0; l < kdim; ++l)
            for (std::size_t j = 0; j < t; ++j) {
                Matrix acc(f, targets[j].dim(), n.dim());
                for (std::size_t u = 0; u < images[j].size(); ++u) {
                    const Residue c = top.kernel(l, top.offsets[j] + u);
                    if (c != 0)
                        acc.add_scaled(images[j][u], c);
                }
                phi.set_block(unknown_off[j], l * n.dim(), acc);
            }
        solutions = kernel_basis(phi);
    }

    // Each solution defines P0 -> N; precompose with the section of the cover.
    const std::size_t p0 = top.offsets.back();
    Matrix rows(f, solutions.rows(), m.dim() * n.dim());
    for (std::size_t s = 0; s < solutions.rows(); ++s) {
        Matrix g(f, p0, n.dim());
        for (std::size_t j = 0; j < t; ++j) {
            Matrix y = solutions.block(s, unknown_off[j], 1, targets[j].dim());
            for (std::size_t u = 0; u < images[j].size(); ++u)
                g.set_block(top.offsets[j] + u, 0, y * images[j][u]);
        }
        Matrix fmap = top.section * g;
        std::copy(fmap.data().begin(), fmap.data().end(), rows.row(s).begin());
    }
    return detail::hom_from_flat(m, n, rows);
}

/// Hom space of m into the regular module, with the induced right action of the opposite
/// algebra: (F . b^op) = F * L_b, L_b being left multiplication by b.
struct DualModule {
    HomSpace hom;
    RightModule module;
};

inline DualModule star_with_basis(const RightModule& m) {
    const AlgebraPtr& a = m.algebra();
    HomSpace h = hom_space(m, regular_module(a));
    const FieldSpec f = m.field();
    std::vector<Matrix> act;
    for (std::size_t k = 0; k < a->dim(); ++k) {
        Matrix rho(f, h.dim(), h.dim());
        for (std::size_t i = 0; i < h.dim(); ++i) {
            auto c = h.coordinates(h.basis[i] * a->left_mult(k));
            std::copy(c.begin(), c.end(), rho.row(i).begin());
        }
        act.push_back(std::move(rho));
    }
    RightModule mod(opposite(a), h.dim(), std::move(act));
    return {std::move(h), std::move(mod)};
}

/// The functor Hom_A(-, A) on objects.
inline RightModule star(const RightModule& m) { return star_with_basis(m).module; }

/// Hom_A(g, A): Y* -> X* for g: X -> Y, given the dual bases of X* and Y*.
inline ModuleMap star_map(const ModuleMap& g, const DualModule& src_dual, const DualModule& tgt_dual) {
    const FieldSpec f = g.src.field();
    Matrix mat(f, tgt_dual.hom.dim(), src_dual.hom.dim());
    for (std::size_t i = 0; i < tgt_dual.hom.dim(); ++i) {
        auto c = src_dual.hom.coordinates(g.matrix * tgt_dual.hom.basis[i]);
        std::copy(c.begin(), c.end(), mat.row(i).begin());
    }
    return ModuleMap(tgt_dual.module, src_dual.module, std::move(mat));
}

inline ModuleMap star_map(const ModuleMap& g) { return star_map(g, star_with_basis(g.src), star_with_basis(g.tgt)); }

inline std::size_t hom_dim(const RightModule& m, const RightModule& n) { return hom_space(m, n).dim(); }

} // namespace artin
