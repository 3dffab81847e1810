#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "artin/field.hpp"
#include "artin/matrix.hpp"
#include "artin/random.hpp"

namespace artin {

/// Univariate polynomial over F_p, coefficients low degree first, no trailing zeros.
class Polynomial {
public:
    explicit Polynomial(FieldSpec field) : field_(field) {}
    Polynomial(FieldSpec field, std::vector<Residue> coeffs) : field_(field), c_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(FieldSpec f, std::size_t degree, Residue coeff = 1) {
        std::vector<Residue> c(degree + 1, 0);
        c[degree] = coeff;
        return Polynomial(f, std::move(c));
    }
    static Polynomial x_minus(FieldSpec f, Residue root) { return Polynomial(f, {f.neg(root), 1}); }

    FieldSpec field() const noexcept { return field_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    Residue coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    Residue lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    const std::vector<Residue>& coeffs() const noexcept { return c_; }

    Residue operator()(Residue x) const {
        Residue acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = field_.fma(acc, x, c_[i]);
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Residue> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = a.field_.add(a.coeff(i), b.coeff(i));
        return Polynomial(a.field_, std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Residue> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = a.field_.sub(a.coeff(i), b.coeff(i));
        return Polynomial(a.field_, std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero())
            return Polynomial(a.field_);
        std::vector<Residue> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = a.field_.fma(a.c_[i], b.c_[j], c[i + j]);
        return Polynomial(a.field_, std::move(c));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.field_ == b.field_ && a.c_ == b.c_;
    }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        require(!d.is_zero(), "polynomial division by zero");
        const FieldSpec f = field_;
        if (degree() < d.degree())
            return {Polynomial(f), *this};
        std::vector<Residue> r = c_;
        std::vector<Residue> q(c_.size() - d.c_.size() + 1, 0);
        const Residue inv = f.inv(d.lead());
        for (std::size_t i = q.size(); i-- > 0;) {
            const Residue coef = f.mul(r[i + d.c_.size() - 1], inv);
            q[i] = coef;
            if (coef == 0)
                continue;
            for (std::size_t j = 0; j < d.c_.size(); ++j)
                r[i + j] = f.sub(r[i + j], f.mul(coef, d.c_[j]));
        }
        return {Polynomial(f, std::move(q)), Polynomial(f, std::move(r))};
    }
    Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }
    Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }

    Polynomial monic() const {
        if (is_zero())
            return *this;
        const Residue inv = field_.inv(lead());
        std::vector<Residue> c = c_;
        for (auto& x : c)
            x = field_.mul(x, inv);
        return Polynomial(field_, std::move(c));
    }

    Polynomial derivative() const {
        if (c_.size() <= 1)
            return Polynomial(field_);
        std::vector<Residue> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            c[i - 1] = field_.mul(c_[i], field_.from_int(static_cast<std::int64_t>(i)));
        return Polynomial(field_, std::move(c));
    }

    /// base^e mod m by repeated squaring.
    static Polynomial powmod(Polynomial base, std::uint64_t e, const Polynomial& m) {
        Polynomial result(m.field(), {1});
        result = result % m;
        base = base % m;
        while (e > 0) {
            if (e & 1)
                result = (result * base) % m;
            base = (base * base) % m;
            e >>= 1;
        }
        return result;
    }

    /// Evaluates the polynomial at a square matrix (Horner).
    Matrix evaluate(const Matrix& a) const {
        require(a.rows() == a.cols(), "polynomial evaluation needs a square matrix");
        const FieldSpec f = a.field();
        const std::size_t n = a.rows();
        Matrix acc(f, n, n);
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * a;
            for (std::size_t k = 0; k < n; ++k)
                acc(k, k) = f.add(acc(k, k), c_[i]);
        }
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    FieldSpec field_;
    std::vector<Residue> c_;
};

inline Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Characteristic polynomial det(xI - A) by reduction to upper Hessenberg form.
inline Polynomial characteristic_polynomial(const Matrix& a) {
    require(a.rows() == a.cols(), "characteristic polynomial needs a square matrix");
    const FieldSpec f = a.field();
    const std::size_t n = a.rows();
    Matrix h = a;
    for (std::size_t m = 1; m + 1 <= n; ++m) {
        std::size_t i = m;
        while (i < n && h(i, m - 1) == 0)
            ++i;
        if (i == n)
            continue;
        if (i != m) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(h(i, j), h(m, j));
            for (std::size_t j = 0; j < n; ++j)
                std::swap(h(j, i), h(j, m));
        }
        const Residue tinv = f.inv(h(m, m - 1));
        for (std::size_t r = m + 1; r < n; ++r) {
            const Residue u = f.mul(h(r, m - 1), tinv);
            if (u == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                h(r, j) = f.sub(h(r, j), f.mul(u, h(m, j)));
            for (std::size_t j = 0; j < n; ++j)
                h(j, m) = f.add(h(j, m), f.mul(u, h(j, r)));
        }
    }
    std::vector<Polynomial> p;
    p.emplace_back(f, std::vector<Residue>{1});
    for (std::size_t m = 0; m < n; ++m) {
        Polynomial next = Polynomial::x_minus(f, h(m, m)) * p[m];
        Residue prod = 1;
        for (std::size_t i = m; i-- > 0;) {
            prod = f.mul(prod, h(i + 1, i));
            const Residue coef = f.mul(h(i, m), prod);
            if (coef != 0)
                next = next - Polynomial(f, {coef}) * p[i];
        }
        p.push_back(std::move(next));
    }
    return p[n];
}

namespace detail {

inline Polynomial random_polynomial(FieldSpec f, std::size_t below_degree, SeedState& seed) {
    std::vector<Residue> c(below_degree);
    for (auto& x : c)
        x = seed.uniform(f);
    return Polynomial(f, std::move(c));
}

/// Equal-degree splitting of a squarefree product of irreducibles of degree k (Cantor-Zassenhaus).
inline std::optional<Polynomial> equal_degree_split(const Polynomial& g, std::size_t k, SeedState& seed,
                                                    std::size_t attempts) {
    const FieldSpec f = g.field();
    const std::uint64_t p = f.prime();
    const auto n = static_cast<std::size_t>(g.degree());
    for (std::size_t t = 0; t < attempts; ++t) {
        Polynomial a = random_polynomial(f, n, seed) % g;
        if (a.degree() < 1)
            continue;
        if (Polynomial d = gcd(a, g); d.degree() > 0 && d.degree() < g.degree())
            return d;
        Polynomial b(f);
        if (p == 2) {
            // trace map a + a^2 + ... + a^(2^(k-1))
            Polynomial term = a;
            b = a;
            for (std::size_t i = 1; i < k; ++i) {
                term = (term * term) % g;
                b = b + term;
            }
        } else {
            // a^((p^k - 1)/2) = (a^(1 + p + ... + p^(k-1)))^((p-1)/2)
            Polynomial norm(f, {1}), frob = a;
            for (std::size_t i = 0; i < k; ++i) {
                norm = (norm * frob) % g;
                frob = Polynomial::powmod(frob, p, g);
            }
            b = Polynomial::powmod(norm, (p - 1) / 2, g) - Polynomial(f, {1});
        }
        Polynomial d = gcd(b, g);
        if (d.degree() > 0 && d.degree() < g.degree())
            return d;
    }
    return std::nullopt;
}

} // namespace detail

/// A monic factor u of chi containing some, but not all, of the distinct irreducible factors of
/// chi. Absent when chi is a power of one irreducible (or the randomized splitting gives up).
inline std::optional<Polynomial> coprime_split_factor(const Polynomial& chi, SeedState& seed,
                                                      std::size_t attempts = 64) {
    const FieldSpec f = chi.field();
    if (chi.degree() < 2)
        return std::nullopt;
    const Polynomial x = Polynomial::monomial(f, 1);
    // u contains every irreducible factor of chi iff chi divides u^deg(chi)
    auto covers_all = [&](const Polynomial& u) {
        return Polynomial::powmod(u, static_cast<std::uint64_t>(chi.degree()), chi).is_zero();
    };
    Polynomial h = x % chi;
    for (int k = 1; k <= chi.degree(); ++k) {
        h = Polynomial::powmod(h, f.prime(), chi);
        Polynomial d = gcd(h - x, chi);
        if (d.degree() <= 0)
            continue;
        if (!covers_all(d))
            return d;
        // every irreducible factor of chi has degree k
        if (d.degree() == k)
            return std::nullopt;
        return detail::equal_degree_split(d, static_cast<std::size_t>(k), seed, attempts);
    }
    return std::nullopt;
}

} // namespace artin
