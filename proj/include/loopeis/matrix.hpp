#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "error.hpp"

namespace loopeis {

using Rational = boost::rational<std::int64_t>;

/// Dense row-major matrix. Indices are zero-based.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionError("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw DimensionError("ragged matrix rows");
            std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * m.cols_);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    std::vector<std::vector<T>> to_rows() const {
        std::vector<std::vector<T>> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i].assign(row(i).begin(), row(i).end());
        return out;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Principal submatrix on the given (zero-based) indices, in the given order.
    Matrix principal(std::span<const std::size_t> idx) const {
        Matrix m(idx.size(), idx.size());
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b) m(a, b) = (*this)(idx[a], idx[b]);
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T aik = a(i, k);
                if (aik == T{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend std::vector<T> operator*(const Matrix& a, std::span<const T> v) {
        if (a.cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
        std::vector<T> out(a.rows_, T{});
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
        return out;
    }

    bool operator==(const Matrix&) const = default;

    const std::vector<T>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;

namespace detail {

inline Matrix<Rational> to_rational(const IntMatrix& m) {
    Matrix<Rational> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

// Row echelon form over the rationals; returns rank and accumulates the
// determinant (meaningful for square input only).
inline std::size_t eliminate(Matrix<Rational>& m, Rational& det) {
    det = Rational(1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m(pivot, col) == Rational(0)) ++pivot;
        if (pivot == m.rows()) {
            det = Rational(0);
            continue;
        }
        if (pivot != rank) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
            det = -det;
        }
        det *= m(rank, col);
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (m(i, col) == Rational(0)) continue;
            const Rational f = m(i, col) / m(rank, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    if (rank < m.rows()) det = Rational(0);
    return rank;
}

} // namespace detail

inline Rational determinant(const Matrix<Rational>& m) {
    if (!m.square()) throw DimensionError("determinant of non-square matrix");
    if (m.rows() == 0) return Rational(1);
    auto work = m;
    Rational det;
    detail::eliminate(work, det);
    return det;
}

inline std::int64_t determinant(const IntMatrix& m) {
    const Rational d = determinant(detail::to_rational(m));
    return d.numerator();
}

inline std::size_t matrix_rank(const IntMatrix& m) {
    auto work = detail::to_rational(m);
    Rational det;
    return detail::eliminate(work, det);
}

/// Basis of the rational right kernel {x : m x = 0}, one vector per free column.
inline std::vector<std::vector<Rational>> right_kernel(const IntMatrix& m) {
    auto a = detail::to_rational(m);
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c) == Rational(0)) ++p;
        if (p == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
        const Rational inv = Rational(1) / a(r, c);
        for (std::size_t j = 0; j < cols; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == Rational(0)) continue;
            const Rational f = a(i, c);
            for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = Rational(1);
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace loopeis
