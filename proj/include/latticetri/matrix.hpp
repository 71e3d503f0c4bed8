#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latticetri/errors.hpp"
#include "latticetri/rational.hpp"

namespace latticetri {

using VecR = std::vector<Rational>;

/// Dense matrix over Rational, row-major. Operator-level entry points work
/// on square matrices; rectangular shapes appear only as extracted blocks.
/// Nonnegativity is a checked property (is_nonnegative), never an assumption.
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<Rational>> grid) {
        rows_ = grid.size();
        cols_ = rows_ == 0 ? 0 : grid.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : grid) {
            if (row.size() != cols_) throw DomainError("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    /// Dimension of a square matrix.
    std::size_t dim() const {
        assert(is_square());
        return rows_;
    }

    Rational& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const Rational& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    Matrix operator+(const Matrix& other) const {
        require_same_shape(other);
        Matrix out(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] + other.data_[k];
        return out;
    }

    Matrix operator-(const Matrix& other) const {
        require_same_shape(other);
        Matrix out(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - other.data_[k];
        return out;
    }

    Matrix operator*(const Matrix& other) const {
        if (cols_ != other.rows_) throw DomainError("matrix product: inner dimensions differ");
        Matrix out(rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& aik = (*this)(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < other.cols_; ++j) {
                    const Rational& bkj = other(k, j);
                    if (bkj != 0) out(i, j) += aik * bkj;
                }
            }
        }
        return out;
    }

    friend Matrix operator*(const Rational& scalar, const Matrix& m) {
        Matrix out(m.rows_, m.cols_);
        for (std::size_t k = 0; k < m.data_.size(); ++k) out.data_[k] = scalar * m.data_[k];
        return out;
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    Matrix entrywise_abs() const {
        Matrix out(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = rational_abs(data_[k]);
        return out;
    }

    Rational trace() const {
        assert(is_square());
        Rational t = 0;
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        for (const Rational& v : data_)
            if (v != 0) return false;
        return true;
    }

    bool is_nonnegative() const {
        for (const Rational& v : data_)
            if (v < 0) return false;
        return true;
    }

    /// Zeros strictly below the diagonal.
    bool is_upper_triangular() const {
        for (std::size_t i = 1; i < rows_; ++i)
            for (std::size_t j = 0; j < i && j < cols_; ++j)
                if ((*this)(i, j) != 0) return false;
        return true;
    }

    /// Entrywise `this <= other`.
    bool dominated_by(const Matrix& other) const {
        require_same_shape(other);
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (data_[k] > other.data_[k]) return false;
        return true;
    }

    /// max_i sum_j |m(i,j)| -- the operator norm for the sup-norm lattice.
    Rational max_row_sum_norm() const {
        Rational best = 0;
        for (std::size_t i = 0; i < rows_; ++i) {
            Rational row = 0;
            for (std::size_t j = 0; j < cols_; ++j) row += rational_abs((*this)(i, j));
            if (row > best) best = row;
        }
        return best;
    }

    Matrix submatrix(std::span<const std::size_t> row_idx,
                     std::span<const std::size_t> col_idx) const {
        Matrix out(row_idx.size(), col_idx.size());
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j)
                out(i, j) = (*this)(row_idx[i], col_idx[j]);
        return out;
    }

    /// Strict weak order: shape first, then entries row-major. Used for
    /// exact deduplication in ordered containers.
    friend bool lex_less(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
        return a.data_ < b.data_;
    }

private:
    void require_same_shape(const Matrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw DomainError("matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    VecR data_;
};

struct MatrixLess {
    bool operator()(const Matrix& a, const Matrix& b) const { return lex_less(a, b); }
};

inline void require_square(const Matrix& m, const char* what) {
    if (!m.is_square() || m.rows() == 0)
        throw DomainError(std::string(what) + ": matrix must be square and nonempty");
}

inline void require_nonnegative(const Matrix& m, const char* what) {
    if (!m.is_nonnegative())
        throw DomainError(std::string(what) + ": negative entry present");
}

inline void require_same_dim(const Matrix& a, const Matrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DomainError(std::string(what) + ": dimension mismatch");
}

inline Matrix pow(const Matrix& base, std::size_t exponent) {
    assert(base.is_square());
    Matrix result = Matrix::identity(base.dim());
    Matrix square = base;
    std::size_t e = exponent;
    while (e > 0) {
        if (e & 1) result = result * square;
        e >>= 1;
        if (e > 0) square = square * square;
    }
    return result;
}

inline VecR mat_vec(const Matrix& m, std::span<const Rational> v) {
    if (v.size() != m.cols()) throw DomainError("mat_vec: vector length mismatch");
    VecR out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0 && v[j] != 0) out[i] += m(i, j) * v[j];
    return out;
}

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw DomainError("dot: vector length mismatch");
    Rational s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

inline Matrix outer_product(std::span<const Rational> column, std::span<const Rational> functional) {
    Matrix out(column.size(), functional.size());
    for (std::size_t i = 0; i < column.size(); ++i)
        for (std::size_t j = 0; j < functional.size(); ++j)
            out(i, j) = column[i] * functional[j];
    return out;
}

/// Exact rank by fraction-free (Bareiss) elimination on a denominator-cleared
/// integer copy. No tolerances anywhere.
inline std::size_t exact_rank(const Matrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    // Clearing denominators row by row leaves the rank unchanged.
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Int scale = 1;
        for (std::size_t j = 0; j < cols; ++j) scale = lcm(scale, denominator(m(i, j)));
        for (std::size_t j = 0; j < cols; ++j) {
            const Rational v = m(i, j) * scale;
            assert(denominator(v) == 1);
            a[i][j] = numerator(v);
        }
    }

    std::size_t rank = 0;
    Int prev_pivot = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                Int num = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                Int q, r;
                divide_qr(num, prev_pivot, q, r);
                if (r != 0) throw InternalError("exact_rank: fraction-free division not exact");
                a[i][j] = q;
            }
            a[i][col] = 0;
        }
        prev_pivot = a[rank][col];
        ++rank;
    }
    return rank;
}

}  // namespace latticetri
