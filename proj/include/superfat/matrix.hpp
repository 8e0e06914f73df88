#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fields.hpp"

namespace superfat::exactcore {

// ===== Dense exact matrices =================================================

/// Dense matrix over an exact field.  Vectors are rows throughout the
/// library: a span is a matrix whose rows generate the subspace, and
/// kernel_basis returns right-kernel vectors as rows.
template <FieldType K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, K(0)) {}

    /// Convenience for literal integer matrices in tests and fixtures.
    Matrix(std::initializer_list<std::initializer_list<long long>> rows)
        : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
        a_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            for (long long v : row) a_.emplace_back(v);
        }
    }

    [[nodiscard]] static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }

    [[nodiscard]] static Matrix from_rows(const std::vector<std::vector<K>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged row list");
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    [[nodiscard]] K& at(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return a_[i * cols_ + j];
    }
    [[nodiscard]] const K& at(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return a_[i * cols_ + j];
    }

    [[nodiscard]] std::vector<K> row(std::size_t i) const {
        return {a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }

    /// Appends a row; fixes the column count on the first row of an empty
    /// matrix.
    void push_row(const std::vector<K>& r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
        a_.insert(a_.end(), r.begin(), r.end());
        ++rows_;
    }

    [[nodiscard]] Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    [[nodiscard]] Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in product");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const K& f = at(i, k);
                if (f.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += f * o.at(k, j);
            }
        return r;
    }

    /// Matrix-vector product M * v with v of length cols().
    [[nodiscard]] std::vector<K> apply(const std::vector<K>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in apply");
        std::vector<K> r(rows_, K(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
        return r;
    }

    [[nodiscard]] bool is_zero() const {
        for (const K& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

    [[nodiscard]] bool operator==(const Matrix& o) const = default;

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }
    void scale_row(std::size_t i, const K& f) {
        for (std::size_t c = 0; c < cols_; ++c) at(i, c) *= f;
    }
    /// row i += f * row j
    void add_multiple(std::size_t i, std::size_t j, const K& f) {
        if (f.is_zero()) return;
        for (std::size_t c = 0; c < cols_; ++c) at(i, c) += f * at(j, c);
    }

private:
    std::size_t rows_, cols_;
    std::vector<K> a_;
};

// ===== Gaussian elimination =================================================

template <FieldType K>
struct RowEchelon {
    Matrix<K> reduced;                      ///< reduced row echelon form
    Matrix<K> transform;                    ///< T with T * input == reduced (when tracked)
    std::vector<std::size_t> pivot_columns; ///< ascending
    [[nodiscard]] std::size_t rank() const { return pivot_columns.size(); }
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.  Within each
/// column the pivot is the remaining entry of smallest bit size, which keeps
/// rational coefficient growth in check.  With track set, an invertible
/// transform T accumulating the row operations is returned alongside.
template <FieldType K>
[[nodiscard]] RowEchelon<K> row_reduce(Matrix<K> m, bool track = false) {
    RowEchelon<K> out;
    Matrix<K> t = track ? Matrix<K>::identity(m.rows()) : Matrix<K>();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
        std::size_t best = m.rows();
        std::size_t best_bits = 0;
        for (std::size_t r = lead; r < m.rows(); ++r) {
            if (m.at(r, col).is_zero()) continue;
            const std::size_t bits = m.at(r, col).bit_size();
            if (best == m.rows() || bits < best_bits) {
                best = r;
                best_bits = bits;
            }
        }
        if (best == m.rows()) continue;
        m.swap_rows(lead, best);
        if (track) t.swap_rows(lead, best);
        const K inv = K(1) / m.at(lead, col);
        if (!inv.is_one()) {
            m.scale_row(lead, inv);
            if (track) t.scale_row(lead, inv);
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || m.at(r, col).is_zero()) continue;
            const K f = -m.at(r, col);
            m.add_multiple(r, lead, f);
            if (track) t.add_multiple(r, lead, f);
        }
        out.pivot_columns.push_back(col);
        ++lead;
    }
    out.reduced = std::move(m);
    out.transform = std::move(t);
    return out;
}

template <FieldType K>
[[nodiscard]] std::size_t rank(const Matrix<K>& m) {
    return row_reduce(m).rank();
}

/// Basis of the right kernel {v : M v = 0}, one vector per row, ordered by
/// ascending free column.
template <FieldType K>
[[nodiscard]] Matrix<K> kernel_basis(const Matrix<K>& m) {
    const RowEchelon<K> e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivot_columns) is_pivot[c] = true;
    Matrix<K> out(0, m.cols());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<K> v(m.cols(), K(0));
        v[f] = K(1);
        for (std::size_t r = 0; r < e.pivot_columns.size(); ++r)
            v[e.pivot_columns[r]] = -e.reduced.at(r, f);
        out.push_row(v);
    }
    return out;
}

/// Canonical basis of the row space: the nonzero rows of the RREF.
template <FieldType K>
[[nodiscard]] Matrix<K> row_space(const Matrix<K>& m) {
    const RowEchelon<K> e = row_reduce(m);
    Matrix<K> out(0, m.cols());
    for (std::size_t r = 0; r < e.rank(); ++r) out.push_row(e.reduced.row(r));
    return out;
}

template <FieldType K>
[[nodiscard]] Matrix<K> stack(const Matrix<K>& top, const Matrix<K>& bottom) {
    if (top.rows() == 0) return bottom;
    if (bottom.rows() == 0) return top;
    if (top.cols() != bottom.cols()) throw std::invalid_argument("column count mismatch in stack");
    Matrix<K> out = top;
    for (std::size_t r = 0; r < bottom.rows(); ++r) out.push_row(bottom.row(r));
    return out;
}

template <FieldType K>
[[nodiscard]] Matrix<K> subspace_sum(const Matrix<K>& a, const Matrix<K>& b) {
    return row_space(stack(a, b));
}

/// Zassenhaus intersection of two row spans inside K^n: row-reduce the block
/// matrix [A A; B 0]; rows whose left half vanished carry a basis of the
/// intersection in their right half.
template <FieldType K>
[[nodiscard]] Matrix<K> subspace_intersection(const Matrix<K>& a, const Matrix<K>& b) {
    const std::size_t n = std::max(a.cols(), b.cols());
    if (a.rows() == 0 || b.rows() == 0) return Matrix<K>(0, n);
    if (a.cols() != b.cols()) throw std::invalid_argument("ambient dimension mismatch");
    Matrix<K> z(a.rows() + b.rows(), 2 * n);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            z.at(i, j) = a.at(i, j);
            z.at(i, n + j) = a.at(i, j);
        }
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) z.at(a.rows() + i, j) = b.at(i, j);
    const RowEchelon<K> e = row_reduce(z);
    Matrix<K> out(0, n);
    for (std::size_t r = 0; r < e.rank(); ++r) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = e.reduced.at(r, j).is_zero();
        if (!left_zero) continue;
        std::vector<K> v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = e.reduced.at(r, n + j);
        out.push_row(v);
    }
    return out;
}

template <FieldType K>
[[nodiscard]] bool in_row_space(const Matrix<K>& span, const std::vector<K>& v) {
    bool zero = true;
    for (const K& x : v) zero = zero && x.is_zero();
    if (zero) return true;
    Matrix<K> ext = span;
    if (ext.rows() == 0) ext = Matrix<K>(0, v.size());
    ext.push_row(v);
    return rank(ext) == rank(span);
}

template <FieldType K>
[[nodiscard]] K determinant(Matrix<K> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    K det(1);
    for (std::size_t col = 0; col < m.cols(); ++col) {
        std::size_t piv = m.rows();
        for (std::size_t r = col; r < m.rows(); ++r)
            if (!m.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv == m.rows()) return K(0);
        if (piv != col) {
            m.swap_rows(piv, col);
            det = -det;
        }
        det = det * m.at(col, col);
        for (std::size_t r = col + 1; r < m.rows(); ++r) {
            if (m.at(r, col).is_zero()) continue;
            m.add_multiple(r, col, -(m.at(r, col) / m.at(col, col)));
        }
    }
    return det;
}

} // namespace superfat::exactcore
