#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "artin/error.hpp"
#include "artin/field.hpp"
#include "artin/matrix.hpp"

namespace artin {

struct Term {
    std::size_t index;
    Residue coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse coefficient vector, sorted by index, no zero coefficients.
using SparseVector = std::vector<Term>;

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Finite-dimensional algebra with a distinguished basis b_0..b_{n-1}:
/// b_i * b_j = sum_k table[i][j][k] b_k. Basis elements listed in `idempotents` are the
/// primitive orthogonal idempotents; the ones listed in `radical` span the Jacobson radical.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    Algebra(FieldSpec field, std::string name, std::vector<std::string> labels,
            std::vector<SparseVector> table, std::vector<Residue> one,
            std::vector<std::size_t> idempotents, std::vector<std::size_t> radical)
        : field_(field), name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)),
          one_(std::move(one)), idempotents_(std::move(idempotents)), radical_(std::move(radical)) {
        const std::size_t n = labels_.size();
        require(n > 0, "algebra dimension must be positive");
        require(table_.size() == n * n, "structure table must have dim^2 entries");
        require(one_.size() == n, "unit vector must have dim entries");
        for (auto& entry : table_) {
            std::sort(entry.begin(), entry.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
            SparseVector merged;
            for (const Term& t : entry) {
                require(t.index < n, "structure constant index out of range");
                if (!merged.empty() && merged.back().index == t.index)
                    merged.back().coeff = field_.add(merged.back().coeff, t.coeff);
                else
                    merged.push_back({t.index, t.coeff % field_.prime()});
            }
            std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
            entry = std::move(merged);
        }
        for (auto& c : one_)
            c %= field_.prime();
        for (auto i : idempotents_)
            require(i < n, "idempotent index out of range");
        for (auto i : radical_)
            require(i < n, "radical index out of range");
    }

    Algebra(const Algebra&) = delete;
    Algebra& operator=(const Algebra&) = delete;

    FieldSpec field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return labels_.size(); }
    const std::string& name() const noexcept { return name_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const SparseVector& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    const std::vector<SparseVector>& table() const noexcept { return table_; }
    const std::vector<Residue>& one() const noexcept { return one_; }
    const std::vector<std::size_t>& idempotents() const noexcept { return idempotents_; }
    const std::vector<std::size_t>& radical() const noexcept { return radical_; }
    std::size_t vertex_count() const noexcept { return idempotents_.size(); }

    /// Product of two elements given in basis coordinates.
    std::vector<Residue> multiply(std::span<const Residue> a, std::span<const Residue> b) const {
        const std::size_t n = dim();
        std::vector<Residue> out(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b[j] == 0)
                    continue;
                const Residue ab = field_.mul(a[i], b[j]);
                for (const Term& t : product(i, j))
                    out[t.index] = field_.fma(ab, t.coeff, out[t.index]);
            }
        }
        return out;
    }

    std::vector<Residue> basis_vector(std::size_t i) const {
        std::vector<Residue> v(dim(), 0);
        v[i] = 1;
        return v;
    }

    /// Matrix of y -> y * b_j (rows: b_i * b_j). This is the regular right action.
    const Matrix& right_mult(std::size_t j) const {
        build_mult_cache();
        return right_[j];
    }

    /// Matrix of y -> b_j * y in the row convention (row i: b_j * b_i).
    const Matrix& left_mult(std::size_t j) const {
        build_mult_cache();
        return left_[j];
    }

    /// Basis of the indecomposable projective e_v A (v indexes idempotents()) inside A.
    const Subspace& projective_basis(std::size_t v) const {
        build_mult_cache();
        return projective_[v];
    }

    /// Position of a basis index among the idempotents, if it is one.
    std::optional<std::size_t> vertex_of(std::size_t basis_index) const {
        auto it = std::find(idempotents_.begin(), idempotents_.end(), basis_index);
        if (it == idempotents_.end())
            return std::nullopt;
        return static_cast<std::size_t>(it - idempotents_.begin());
    }

    /// The opposite algebra: same basis, b_i *op b_j = b_j * b_i. Cached; opposite of the
    /// opposite returns this algebra when it is owned by a shared_ptr.
    AlgebraPtr opposite() const {
        std::lock_guard lock(op_mutex_);
        if (op_strong_)
            return op_strong_;
        if (auto back = op_weak_.lock())
            return back;
        const std::size_t n = dim();
        std::vector<SparseVector> t(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                t[i * n + j] = product(j, i);
        auto op = std::make_shared<Algebra>(field_, opposite_name(name_), labels_, std::move(t), one_,
                                            idempotents_, radical_);
        op->op_weak_ = weak_from_this();
        op_strong_ = op;
        return op;
    }

    /// Per-algebra memo for derived data. Values must not hold AlgebraPtr (that would form a cycle).
    template <class T, class Build>
    std::shared_ptr<const T> cached(const std::string& key, Build&& build) const {
        {
            std::lock_guard lock(memo_mutex_);
            if (auto it = memo_.find(key); it != memo_.end())
                return std::static_pointer_cast<const T>(it->second);
        }
        auto value = std::make_shared<const T>(build());
        std::lock_guard lock(memo_mutex_);
        return std::static_pointer_cast<const T>(memo_.emplace(key, value).first->second);
    }

    bool is_local() const noexcept { return idempotents_.size() == 1; }

    bool is_commutative() const {
        const std::size_t n = dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (product(i, j) != product(j, i))
                    return false;
        return true;
    }

    /// Structural equality (the name is not part of the structure).
    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.field_ == b.field_ && a.labels_ == b.labels_ && a.table_ == b.table_ && a.one_ == b.one_ &&
               a.idempotents_ == b.idempotents_ && a.radical_ == b.radical_;
    }

private:
    static std::string opposite_name(const std::string& name) {
        const std::string suffix = "^op";
        if (name.size() >= suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
            return name.substr(0, name.size() - suffix.size());
        return name + suffix;
    }

    void build_mult_cache() const {
        std::call_once(mult_once_, [this] {
            const std::size_t n = dim();
            right_.assign(n, Matrix(field_, n, n));
            left_.assign(n, Matrix(field_, n, n));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (const Term& t : product(i, j)) {
                        right_[j](i, t.index) = t.coeff;
                        left_[i](j, t.index) = t.coeff;
                    }
            for (std::size_t e : idempotents_)
                projective_.push_back(Subspace::span(left_[e]));
        });
    }

    FieldSpec field_;
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<SparseVector> table_;
    std::vector<Residue> one_;
    std::vector<std::size_t> idempotents_;
    std::vector<std::size_t> radical_;

    mutable std::once_flag mult_once_;
    mutable std::vector<Matrix> right_, left_;
    mutable std::vector<Subspace> projective_;

    mutable std::mutex memo_mutex_;
    mutable std::map<std::string, std::shared_ptr<const void>> memo_;

    mutable std::mutex op_mutex_;
    mutable AlgebraPtr op_strong_;
    mutable std::weak_ptr<const Algebra> op_weak_;
};

inline AlgebraPtr opposite(const AlgebraPtr& a) { return a->opposite(); }

inline bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) { return a == b || *a == *b; }

struct ValidationReport {
    std::vector<std::string> failures;
    bool ok() const noexcept { return failures.empty(); }
    std::string first_failure() const { return failures.empty() ? std::string{} : failures.front(); }
};

namespace detail {

inline std::vector<Residue> dense(const SparseVector& s, std::size_t n) {
    std::vector<Residue> v(n, 0);
    for (const Term& t : s)
        v[t.index] = t.coeff;
    return v;
}

} // namespace detail

/// Checks every structural invariant of a based algebra. Each category reports its first failure.
inline ValidationReport validate(const Algebra& a) {
    ValidationReport rep;
    const std::size_t n = a.dim();
    const FieldSpec f = a.field();
    auto fail = [&](std::string s) { rep.failures.push_back(std::move(s)); };

    {
        std::vector<int> seen(n, 0);
        bool ok = true;
        for (auto i : a.idempotents())
            ++seen[i];
        for (auto i : a.radical())
            ++seen[i];
        for (std::size_t i = 0; i < n && ok; ++i)
            if (seen[i] != 1) {
                fail("partition: basis index " + std::to_string(i) + " appears " + std::to_string(seen[i]) +
                     " times among idempotents and radical");
                ok = false;
            }
        if (a.idempotents().empty())
            fail("partition: no idempotents");
    }
    if (!rep.ok())
        return rep;

    const auto& one = a.one();
    for (std::size_t i = 0; i < n; ++i) {
        auto bi = a.basis_vector(i);
        if (a.multiply(one, bi) != bi || a.multiply(bi, one) != bi) {
            fail("unit: 1 * b_" + std::to_string(i) + " or b_" + std::to_string(i) + " * 1 differs from b_" +
                 std::to_string(i));
            break;
        }
    }

    {
        std::vector<Residue> sum(n, 0);
        bool ok = true;
        for (auto e1 : a.idempotents()) {
            sum[e1] = f.add(sum[e1], 1);
            for (auto e2 : a.idempotents()) {
                SparseVector expect;
                if (e1 == e2)
                    expect.push_back({e1, 1});
                if (ok && a.product(e1, e2) != expect) {
                    fail("idempotents: b_" + std::to_string(e1) + " * b_" + std::to_string(e2) +
                         " is not the expected orthogonal idempotent product");
                    ok = false;
                }
            }
        }
        if (sum != one)
            fail("idempotents: sum of idempotents is not the unit");
    }

    for (std::size_t i = 0; i < n && rep.failures.size() < 8; ++i) {
        bool broke = false;
        for (std::size_t j = 0; j < n && !broke; ++j) {
            for (std::size_t k = 0; k < n && !broke; ++k) {
                std::vector<Residue> lhs(n, 0), rhs(n, 0);
                for (const Term& t : a.product(i, j))
                    for (const Term& u : a.product(t.index, k))
                        lhs[u.index] = f.fma(t.coeff, u.coeff, lhs[u.index]);
                for (const Term& t : a.product(j, k))
                    for (const Term& u : a.product(i, t.index))
                        rhs[u.index] = f.fma(t.coeff, u.coeff, rhs[u.index]);
                if (lhs != rhs) {
                    fail("associativity: (b_" + std::to_string(i) + " b_" + std::to_string(j) + ") b_" +
                         std::to_string(k) + " != b_" + std::to_string(i) + " (b_" + std::to_string(j) + " b_" +
                         std::to_string(k) + ")");
                    broke = true;
                }
            }
        }
        if (broke)
            break;
    }

    std::vector<bool> in_rad(n, false);
    for (auto r : a.radical())
        in_rad[r] = true;
    bool ideal_ok = true;
    for (auto r : a.radical()) {
        for (std::size_t i = 0; i < n && ideal_ok; ++i) {
            for (const SparseVector* s : {&a.product(r, i), &a.product(i, r)})
                for (const Term& t : *s)
                    if (!in_rad[t.index] && ideal_ok) {
                        fail("radical: product of b_" + std::to_string(r) + " and b_" + std::to_string(i) +
                             " leaves the radical span");
                        ideal_ok = false;
                    }
        }
        if (!ideal_ok)
            break;
    }

    if (ideal_ok) {
        // J^k spanned by products of k radical basis elements; must vanish for some k <= n.
        Matrix power(f, a.radical().size(), n);
        for (std::size_t r = 0; r < a.radical().size(); ++r)
            power(r, a.radical()[r]) = 1;
        Subspace current = Subspace::span(power);
        std::size_t k = 1;
        while (current.dim() > 0 && k <= n) {
            std::vector<Matrix> parts;
            for (auto r : a.radical())
                parts.push_back(current.basis() * a.right_mult(r));
            current = Subspace::span(Matrix::vstack(parts, f, n));
            ++k;
        }
        if (current.dim() > 0)
            fail("radical: span of the radical basis is not nilpotent");
    }

    if (rep.ok()) {
        for (auto e : a.idempotents()) {
            // e A e and e J e as row spaces of left/right multiplications.
            Matrix eae = a.left_mult(e) * a.right_mult(e);
            Matrix rows(f, a.radical().size(), n);
            for (std::size_t r = 0; r < a.radical().size(); ++r)
                rows(r, a.radical()[r]) = 1;
            Matrix eje = rows * eae;
            if (rank(eae) != rank(eje) + 1) {
                fail("split basic: dim(e A e / e J e) != 1 for idempotent b_" + std::to_string(e));
                break;
            }
        }
    }
    return rep;
}

inline AlgebraPtr make_algebra(FieldSpec field, std::string name, std::vector<std::string> labels,
                               std::vector<SparseVector> table, std::vector<Residue> one,
                               std::vector<std::size_t> idempotents, std::vector<std::size_t> radical) {
    return std::make_shared<Algebra>(field, std::move(name), std::move(labels), std::move(table), std::move(one),
                                     std::move(idempotents), std::move(radical));
}

} // namespace artin
