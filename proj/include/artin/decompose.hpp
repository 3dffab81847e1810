#pragma once

#include <algorithm>
#include <string>

#include "artin/hom.hpp"
#include "artin/isomorphism.hpp"
#include "artin/polynomial.hpp"

namespace artin {

enum class Locality { local, not_local, unknown };

/// What is known about End(M): local (M indecomposable), not local, or undecided, plus an
/// endomorphism whose characteristic polynomial is known to split when one is available.
struct EndomorphismAnalysis {
    HomSpace end;
    Locality locality = Locality::unknown;
    std::string reason;
    std::optional<Matrix> splitter;
};

namespace detail {

inline Matrix matrix_power(Matrix base, std::uint64_t e) {
    Matrix result = Matrix::identity(base.field(), base.rows());
    while (e > 0) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

inline Residue trace_of_product(const Matrix& a, const Matrix& b) {
    const FieldSpec f = a.field();
    Residue t = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0)
                t = f.fma(a(i, j), b(j, i), t);
    return t;
}

} // namespace detail

/// Locality of End(M). Cheap sufficient criteria first (End = k, simple top, simple socle).
/// When p > dim M the trace form gives rad End(M) exactly; End/rad is then a field iff it is
/// commutative with a one-dimensional Frobenius-fixed subalgebra.
inline EndomorphismAnalysis analyze_endomorphisms(const RightModule& m, HomSpace end) {
    EndomorphismAnalysis out{std::move(end), Locality::unknown, {}, std::nullopt};
    const HomSpace& e = out.end;
    const FieldSpec f = m.field();
    const std::size_t h = e.dim();
    if (m.is_zero()) {
        out.locality = Locality::not_local;
        out.reason = "zero module";
        return out;
    }
    if (h == 1) {
        out.locality = Locality::local;
        out.reason = "End(M) is the ground field";
        return out;
    }
    if (m.top_data().vertices.size() == 1) {
        out.locality = Locality::local;
        out.reason = "simple top";
        return out;
    }
    if (socle(m).src.dim() == 1) {
        out.locality = Locality::local;
        out.reason = "simple socle";
        return out;
    }
    if (f.prime() <= m.dim())
        return out;

    Matrix gram(f, h, h);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = i; j < h; ++j)
            gram(i, j) = gram(j, i) = detail::trace_of_product(e.basis[i], e.basis[j]);
    const Subspace rad = Subspace::span(kernel_basis(gram));
    const auto cols = rad.complement_columns();
    const std::size_t q = cols.size();
    if (q == 1) {
        out.locality = Locality::local;
        out.reason = "End(M)/rad End(M) is the ground field";
        return out;
    }
    auto residue_class = [&](const Matrix& endo) {
        auto red = rad.reduce(e.coordinates(endo));
        std::vector<Residue> c(q);
        for (std::size_t i = 0; i < q; ++i)
            c[i] = red[cols[i]];
        return c;
    };
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = a + 1; b < q; ++b) {
            const Matrix& x = e.basis[cols[a]];
            const Matrix& y = e.basis[cols[b]];
            auto c = residue_class(x * y - y * x);
            if (std::any_of(c.begin(), c.end(), [](Residue r) { return r != 0; })) {
                out.locality = Locality::not_local;
                out.reason = "End(M)/rad End(M) is not commutative";
                return out;
            }
        }
    // Frobenius x -> x^p is linear on the commutative semisimple quotient; its fixed points
    // form a product of copies of F_p, one per simple factor.
    Matrix frob(f, q, q);
    for (std::size_t a = 0; a < q; ++a) {
        auto c = residue_class(detail::matrix_power(e.basis[cols[a]], f.prime()));
        std::copy(c.begin(), c.end(), frob.row(a).begin());
    }
    Matrix fixed = kernel_basis(frob - Matrix::identity(f, q));
    if (fixed.rows() == 1) {
        out.locality = Locality::local;
        out.reason = "End(M)/rad End(M) is a field";
        return out;
    }
    out.locality = Locality::not_local;
    out.reason = "End(M)/rad End(M) is a product of several fields";
    auto unit = residue_class(Matrix::identity(f, m.dim()));
    for (std::size_t r = 0; r < fixed.rows(); ++r) {
        Matrix pair = Matrix::vstack({Matrix::row_vector(f, unit), fixed.select_rows(std::vector<std::size_t>{r})}, f, q);
        if (rank(pair) == 2) {
            Matrix lift(f, m.dim(), m.dim());
            for (std::size_t i = 0; i < q; ++i)
                if (fixed(r, i) != 0)
                    lift.add_scaled(e.basis[cols[i]], fixed(r, i));
            out.splitter = std::move(lift);
            break;
        }
    }
    return out;
}

inline EndomorphismAnalysis analyze_endomorphisms(const RightModule& m) {
    return analyze_endomorphisms(m, hom_space(m, m));
}

struct Summand {
    RightModule module;
    Matrix inclusion;  // summand basis -> coordinates in the decomposed module
    bool certified = false;
    std::string certificate;
};

struct Decomposition {
    std::vector<Summand> summands;
    /// True when the stacked inclusions form a verified isomorphism from the sum of summands.
    bool sum_certified = false;

    bool all_certified() const {
        return std::all_of(summands.begin(), summands.end(), [](const Summand& s) { return s.certified; });
    }
    std::vector<std::size_t> dims() const {
        std::vector<std::size_t> d;
        for (const auto& s : summands)
            d.push_back(s.module.dim());
        return d;
    }
};

namespace detail {

struct Splitter {
    SeedState& seed;
    const SearchOptions& opt;
    std::vector<Summand> leaves;

    /// Fitting splitting along psi: M = ker psi + im psi.
    void split_along(const RightModule& m, const Matrix& incl, const Matrix& psi) {
        for (const Subspace& part : {Subspace::span(kernel_basis(psi)), Subspace::span(psi)}) {
            ModuleMap inc = restrict_to(m, part);
            run(inc.src, inc.matrix * incl);
        }
    }

    bool try_split(const RightModule& m, const Matrix& incl, const Matrix& phi) {
        Polynomial chi = characteristic_polynomial(phi);
        auto u = coprime_split_factor(chi, seed, opt.trials);
        if (!u)
            return false;
        Matrix psi = matrix_power(u->evaluate(phi), m.dim());
        split_along(m, incl, psi);
        return true;
    }

    void run(const RightModule& m, const Matrix& incl) {
        if (m.is_zero())
            return;
        if (m.dim() == 1) {
            leaves.push_back({m, incl, true, "one-dimensional"});
            return;
        }
        if (m.top_data().vertices.size() == 1) {
            leaves.push_back({m, incl, true, "simple top"});
            return;
        }
        if (socle(m).src.dim() == 1) {
            leaves.push_back({m, incl, true, "simple socle"});
            return;
        }
        // A few random endomorphisms usually split a decomposable module long before the
        // radical of End(M) is worth computing.
        const FieldSpec f = m.field();
        const HomSpace end = hom_space(m, m);
        std::vector<Residue> c(end.dim());
        const std::size_t quick = std::min<std::size_t>(opt.trials, 4);
        if (end.dim() > 1)
            for (std::size_t t = 0; t < quick; ++t) {
                for (auto& x : c)
                    x = seed.uniform(f);
                if (try_split(m, incl, end.combination(c)))
                    return;
            }
        EndomorphismAnalysis an = analyze_endomorphisms(m, end);
        if (an.locality == Locality::local) {
            leaves.push_back({m, incl, true, an.reason});
            return;
        }
        if (an.splitter && try_split(m, incl, *an.splitter))
            return;
        for (std::size_t t = quick; t < opt.trials; ++t) {
            for (auto& x : c)
                x = seed.uniform(f);
            if (try_split(m, incl, an.end.combination(c)))
                return;
        }
        // Exhaustive idempotent search in End(M) when it is small enough.
        if (detail::bounded_power(f.prime(), an.end.dim(), opt.exhaustive_limit)) {
            std::fill(c.begin(), c.end(), 0);
            const Matrix id = Matrix::identity(f, m.dim());
            while (true) {
                Matrix e = an.end.combination(c);
                if (e * e == e && !e.is_zero() && e != id) {
                    split_along(m, incl, e);
                    return;
                }
                std::size_t i = 0;
                while (i < c.size() && ++c[i] == f.prime())
                    c[i++] = 0;
                if (i == c.size())
                    break;
            }
            leaves.push_back({m, incl, true, "no idempotents besides 0 and 1 in End(M) (exhaustive)"});
            return;
        }
        leaves.push_back({m, incl, false,
                          an.locality == Locality::not_local ? "End(M) not local but no splitting found"
                                                             : "indecomposable with high probability"});
    }
};

} // namespace detail

/// Krull-Schmidt decomposition by Fitting splitting along endomorphisms with coprimely
/// factoring characteristic polynomials.
inline Decomposition decompose(const RightModule& m, SeedState& seed, const SearchOptions& opt = {}) {
    detail::Splitter s{seed, opt, {}};
    s.run(m, Matrix::identity(m.field(), m.dim()));
    Decomposition out{std::move(s.leaves), false};
    std::stable_sort(out.summands.begin(), out.summands.end(), [](const Summand& a, const Summand& b) {
        if (a.module.dim() != b.module.dim())
            return a.module.dim() < b.module.dim();
        return a.module.dimension_vector() < b.module.dimension_vector();
    });
    std::vector<Matrix> incl;
    std::vector<RightModule> mods;
    for (const auto& sm : out.summands) {
        incl.push_back(sm.inclusion);
        mods.push_back(sm.module);
    }
    if (m.is_zero()) {
        out.sum_certified = true;
        return out;
    }
    Matrix stacked = Matrix::vstack(incl, m.field(), m.dim());
    RightModule sum = direct_sum(mods);
    out.sum_certified = stacked.rows() == m.dim() && rank(stacked) == m.dim() && ModuleMap(sum, m, stacked).intertwines();
    return out;
}

} // namespace artin
