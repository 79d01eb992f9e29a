#pragma once

#include "csl/arith.hpp"

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace csl {

/// Dense row-major matrix over an exact ring. Dimensions here never exceed a
/// handful of rows, so storage is a flat vector.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows);

    static Matrix identity(std::size_t n);
    /// Matrix whose columns are the given vectors.
    static Matrix from_columns(const std::vector<std::vector<T>>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> column(std::size_t j) const;
    void set_column(std::size_t j, const std::vector<T>& v);
    std::vector<std::vector<T>> columns() const;

    Matrix transposed() const;

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;
using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw DomainError("ragged matrix literal");
        for (const auto& v : r)
            data_.push_back(v);
    }
}

template <typename T>
Matrix<T> Matrix<T>::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

template <typename T>
Matrix<T> Matrix<T>::from_columns(const std::vector<std::vector<T>>& columns)
{
    if (columns.empty())
        return {};
    Matrix m(columns.front().size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        m.set_column(j, columns[j]);
    return m;
}

template <typename T>
std::vector<T> Matrix<T>::column(std::size_t j) const
{
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

template <typename T>
void Matrix<T>::set_column(std::size_t j, const std::vector<T>& v)
{
    if (v.size() != rows_)
        throw DomainError("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, j) = v[i];
}

template <typename T>
std::vector<std::vector<T>> Matrix<T>::columns() const
{
    std::vector<std::vector<T>> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        out.push_back(column(j));
    return out;
}

template <typename T>
Matrix<T> Matrix<T>::transposed() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.cols() != b.rows())
        throw DomainError("matrix product dimension mismatch");
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v)
{
    if (a.cols() != v.size())
        throw DomainError("matrix-vector dimension mismatch");
    std::vector<T> out(a.rows(), T(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            out[i] += a(i, k) * v[k];
    return out;
}

RationalMatrix to_rational(const IntMatrix& m);
RationalVector to_rational(const IntVector& v);

RationalVector add(const RationalVector& a, const RationalVector& b);
RationalVector subtract(const RationalVector& a, const RationalVector& b);
RationalVector scale(const Rational& s, const RationalVector& v);
Rational dot(const RationalVector& a, const RationalVector& b);
RationalMatrix scale(const Rational& s, const RationalMatrix& m);

/// Least common multiple of all denominators (1 for an integral input).
Integer common_denominator(const RationalMatrix& m);
Integer common_denominator(const RationalVector& v);

/// Exact determinant by fraction-free elimination over Q.
Rational determinant(const RationalMatrix& m);
/// Exact inverse; throws DomainError when singular.
RationalMatrix inverse(const RationalMatrix& m);
/// Solves m x = b for square nonsingular m.
RationalVector solve(const RationalMatrix& m, const RationalVector& b);

bool is_orthogonal(const RationalMatrix& m);

/// Concatenates the columns of `a` and `b` (same number of rows).
RationalMatrix hconcat(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace csl
