#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "artin/error.hpp"
#include "artin/field.hpp"
#include "artin/random.hpp"

namespace artin {

/// Dense row-major matrix over F_p. Vectors are rows and maps act on the right: v -> v * M.
class Matrix {
public:
    Matrix() = default;

    Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    Matrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Residue> data)
        : field_(field), rows_(rows), cols_(cols), data_(std::move(data)) {
        require(data_.size() == rows * cols, "matrix data length must equal rows * cols");
        for (auto& x : data_)
            require(x < field.prime(), "matrix entry out of range");
    }

    /// Builds from signed integer rows, reducing mod p.
    static Matrix from_rows(FieldSpec field, std::initializer_list<std::initializer_list<long long>> rows) {
        std::size_t r = rows.size();
        std::size_t c = r ? rows.begin()->size() : 0;
        Matrix m(field, r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            require(row.size() == c, "ragged matrix literal");
            std::size_t j = 0;
            for (long long v : row)
                m(i, j++) = field.from_int(v);
            ++i;
        }
        return m;
    }

    static Matrix identity(FieldSpec field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1 % field.prime();
        return m;
    }

    static Matrix row_vector(FieldSpec field, std::span<const Residue> v) {
        return Matrix(field, 1, v.size(), std::vector<Residue>(v.begin(), v.end()));
    }

    static Matrix unit_row(FieldSpec field, std::size_t n, std::size_t k) {
        Matrix m(field, 1, n);
        m(0, k) = 1;
        return m;
    }

    FieldSpec field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    const std::vector<Residue>& data() const noexcept { return data_; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](Residue x) { return x == 0; });
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix select_rows(std::span<const std::size_t> idx) const {
        Matrix m(field_, idx.size(), cols_);
        for (std::size_t i = 0; i < idx.size(); ++i)
            std::copy_n(row(idx[i]).begin(), cols_, m.row(i).begin());
        return m;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        require(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
        Matrix m(field_, nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j)
                m(i, j) = (*this)(r0 + i, c0 + j);
        return m;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        require(r0 + b.rows() <= rows_ && c0 + b.cols() <= cols_, "block out of range");
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                (*this)(r0 + i, c0 + j) = b(i, j);
    }

    /// Reinterprets the entries as a single row (row-major flattening).
    Matrix flattened() const { return Matrix(field_, 1, rows_ * cols_, data_); }

    static Matrix unflatten(FieldSpec field, std::span<const Residue> v, std::size_t rows, std::size_t cols) {
        require(v.size() == rows * cols, "unflatten size mismatch");
        return Matrix(field, rows, cols, std::vector<Residue>(v.begin(), v.end()));
    }

    static Matrix vstack(const std::vector<Matrix>& parts, FieldSpec field, std::size_t cols) {
        std::size_t total = 0;
        for (const auto& p : parts) {
            require(p.cols() == cols, "vstack column mismatch");
            total += p.rows();
        }
        Matrix m(field, total, cols);
        std::size_t r = 0;
        for (const auto& p : parts) {
            std::copy(p.data_.begin(), p.data_.end(), m.data_.begin() + r * cols);
            r += p.rows();
        }
        return m;
    }

    static Matrix hstack(const std::vector<Matrix>& parts, FieldSpec field, std::size_t rows) {
        std::size_t total = 0;
        for (const auto& p : parts) {
            require(p.rows() == rows, "hstack row mismatch");
            total += p.cols();
        }
        Matrix m(field, rows, total);
        std::size_t c = 0;
        for (const auto& p : parts) {
            m.set_block(0, c, p);
            c += p.cols();
        }
        return m;
    }

    static Matrix block_diagonal(const std::vector<Matrix>& parts, FieldSpec field) {
        std::size_t r = 0, c = 0;
        for (const auto& p : parts) {
            r += p.rows();
            c += p.cols();
        }
        Matrix m(field, r, c);
        r = c = 0;
        for (const auto& p : parts) {
            m.set_block(r, c, p);
            r += p.rows();
            c += p.cols();
        }
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        require(a.cols_ == b.rows_, "matrix product dimension mismatch");
        const FieldSpec f = a.field_;
        const std::uint64_t p = f.prime();
        Matrix c(f, a.rows_, b.cols_);
        // Accumulate in 64 bits; each term is < p^2 < 2^62, so reduce every few steps.
        std::vector<std::uint64_t> acc(b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            unsigned pending = 0;
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const std::uint64_t aik = a(i, k);
                if (aik == 0)
                    continue;
                const Residue* brow = b.data_.data() + k * b.cols_;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    acc[j] += aik * brow[j];
                if (++pending == 3) {
                    for (auto& x : acc)
                        x %= p;
                    pending = 0;
                }
            }
            for (std::size_t j = 0; j < b.cols_; ++j)
                c(i, j) = static_cast<Residue>(acc[j] % p);
        }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum dimension mismatch");
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i)
            c.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference dimension mismatch");
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i)
            c.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
        return c;
    }

    Matrix scaled(Residue s) const {
        Matrix c = *this;
        for (auto& x : c.data_)
            x = field_.mul(x, s);
        return c;
    }

    /// this += s * other
    void add_scaled(const Matrix& other, Residue s) {
        require(rows_ == other.rows_ && cols_ == other.cols_, "add_scaled dimension mismatch");
        if (s == 0)
            return;
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] = field_.fma(other.data_[i], s, data_[i]);
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << '[';
            for (std::size_t j = 0; j < m.cols_; ++j)
                os << (j ? " " : "") << m(i, j);
            os << "]\n";
        }
        return os;
    }

private:
    FieldSpec field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Residue> data_;
};

/// Reduced row echelon form with the pivot column of each nonzero row. Zero rows are dropped.
struct Echelon {
    Matrix basis;
    std::vector<std::size_t> pivots;
};

inline Echelon rref(const Matrix& m) {
    const FieldSpec f = m.field();
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t pr = r;
        while (pr < a.rows() && a(pr, c) == 0)
            ++pr;
        if (pr == a.rows())
            continue;
        if (pr != r)
            std::swap_ranges(a.row(pr).begin(), a.row(pr).end(), a.row(r).begin());
        const Residue inv = f.inv(a(r, c));
        for (auto& x : a.row(r))
            x = f.mul(x, inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0)
                continue;
            const Residue factor = f.neg(a(i, c));
            auto dst = a.row(i);
            auto src = a.row(r);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (src[j] != 0)
                    dst[j] = f.fma(src[j], factor, dst[j]);
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<std::size_t> keep(r);
    for (std::size_t i = 0; i < r; ++i)
        keep[i] = i;
    return {a.select_rows(keep), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// Basis of the left kernel {v : v * m = 0}, in canonical reduced row echelon form.
inline Matrix kernel_basis(const Matrix& m) {
    const FieldSpec f = m.field();
    const std::size_t n = m.rows();
    Echelon e = rref(m.transpose());
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivots)
        is_pivot[c] = true;
    std::vector<Matrix> rows;
    Matrix k(f, n - e.pivots.size(), n);
    std::size_t out = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        k(out, free) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            k(out, e.pivots[r]) = f.neg(e.basis(r, free));
        ++out;
    }
    return rref(k).basis;
}

/// One solution x of x * a = b (row by row), with free variables set to zero; nullopt if inconsistent.
inline std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.cols(), "solve: a and b must have the same number of columns");
    const FieldSpec f = a.field();
    const std::size_t k = a.rows();
    // a^T x^T = b^T, eliminate on the augmented matrix [a^T | b^T].
    Matrix aug = Matrix::hstack({a.transpose(), b.transpose()}, f, a.cols());
    Echelon e = rref(aug);
    Matrix x(f, b.rows(), k);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        const std::size_t c = e.pivots[r];
        if (c >= k)
            return std::nullopt;
        for (std::size_t j = 0; j < b.rows(); ++j)
            x(j, c) = e.basis(r, k + j);
    }
    return x;
}

inline std::optional<Matrix> invert(const Matrix& m) {
    require(m.rows() == m.cols(), "invert: matrix must be square");
    const std::size_t n = m.rows();
    const FieldSpec f = m.field();
    Echelon e = rref(Matrix::hstack({m, Matrix::identity(f, n)}, f, n));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] >= n))
        return std::nullopt;
    return e.basis.block(0, n, n, n);
}

inline Matrix seeded_random_matrix(FieldSpec field, std::size_t rows, std::size_t cols, SeedState& seed) {
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = seed.uniform(field);
    return m;
}

/// A subspace of F_p^n held as a canonical RREF basis. Coordinates of a member are read off
/// at the pivot columns.
class Subspace {
public:
    Subspace() = default;
    Subspace(FieldSpec field, std::size_t ambient) : basis_(field, 0, ambient), ambient_(ambient) {}

    static Subspace span(const Matrix& rows) {
        Subspace s;
        Echelon e = rref(rows);
        s.basis_ = std::move(e.basis);
        s.pivots_ = std::move(e.pivots);
        s.ambient_ = rows.cols();
        return s;
    }

    static Subspace whole(FieldSpec field, std::size_t n) { return span(Matrix::identity(field, n)); }

    std::size_t dim() const noexcept { return pivots_.size(); }
    std::size_t ambient() const noexcept { return ambient_; }
    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    FieldSpec field() const noexcept { return basis_.field(); }

    /// v minus its projection along the pivot columns; zero iff v lies in the subspace.
    std::vector<Residue> reduce(std::span<const Residue> v) const {
        const FieldSpec f = field();
        std::vector<Residue> w(v.begin(), v.end());
        for (std::size_t r = 0; r < pivots_.size(); ++r) {
            const Residue c = w[pivots_[r]];
            if (c == 0)
                continue;
            const Residue nc = f.neg(c);
            auto brow = basis_.row(r);
            for (std::size_t j = 0; j < ambient_; ++j)
                if (brow[j] != 0)
                    w[j] = f.fma(brow[j], nc, w[j]);
        }
        return w;
    }

    bool contains(std::span<const Residue> v) const {
        auto w = reduce(v);
        return std::all_of(w.begin(), w.end(), [](Residue x) { return x == 0; });
    }

    /// Coordinates of each row of m (rows assumed to lie in the subspace).
    Matrix coordinates(const Matrix& m) const {
        Matrix c(field(), m.rows(), dim());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t r = 0; r < dim(); ++r)
                c(i, r) = m(i, pivots_[r]);
        return c;
    }

    /// Inserts v, keeping the basis reduced. Returns false if v was already in the span.
    bool insert(std::span<const Residue> v) {
        const FieldSpec f = field();
        auto w = reduce(v);
        auto lead = std::find_if(w.begin(), w.end(), [](Residue x) { return x != 0; });
        if (lead == w.end())
            return false;
        const std::size_t pc = static_cast<std::size_t>(lead - w.begin());
        const Residue inv = f.inv(*lead);
        for (auto& x : w)
            x = f.mul(x, inv);
        // Clear the new pivot column from existing rows.
        for (std::size_t r = 0; r < pivots_.size(); ++r) {
            const Residue c = basis_(r, pc);
            if (c == 0)
                continue;
            const Residue nc = f.neg(c);
            for (std::size_t j = 0; j < ambient_; ++j)
                if (w[j] != 0)
                    basis_(r, j) = f.fma(w[j], nc, basis_(r, j));
        }
        std::size_t pos = static_cast<std::size_t>(
            std::lower_bound(pivots_.begin(), pivots_.end(), pc) - pivots_.begin());
        std::vector<Matrix> parts;
        Matrix nb(f, basis_.rows() + 1, ambient_);
        for (std::size_t r = 0, o = 0; r < nb.rows(); ++r) {
            if (r == pos) {
                std::copy(w.begin(), w.end(), nb.row(r).begin());
            } else {
                std::copy_n(basis_.row(o).begin(), ambient_, nb.row(r).begin());
                ++o;
            }
        }
        basis_ = std::move(nb);
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), pc);
        return true;
    }

    /// Non-pivot columns, i.e. the standard complement used for quotients.
    std::vector<std::size_t> complement_columns() const {
        std::vector<std::size_t> out;
        std::size_t r = 0;
        for (std::size_t c = 0; c < ambient_; ++c) {
            if (r < pivots_.size() && pivots_[r] == c)
                ++r;
            else
                out.push_back(c);
        }
        return out;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    Matrix basis_;
    std::vector<std::size_t> pivots_;
    std::size_t ambient_ = 0;
};

} // namespace artin
