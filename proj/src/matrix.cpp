#include "csl/matrix.hpp"

namespace csl {

RationalMatrix to_rational(const IntMatrix& m)
{
    RationalMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = Rational(m(i, j));
    return r;
}

RationalVector to_rational(const IntVector& v)
{
    RationalVector r;
    r.reserve(v.size());
    for (const auto& x : v)
        r.emplace_back(x);
    return r;
}

RationalVector add(const RationalVector& a, const RationalVector& b)
{
    if (a.size() != b.size())
        throw DomainError("vector length mismatch");
    RationalVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

RationalVector subtract(const RationalVector& a, const RationalVector& b)
{
    if (a.size() != b.size())
        throw DomainError("vector length mismatch");
    RationalVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

RationalVector scale(const Rational& s, const RationalVector& v)
{
    RationalVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = s * v[i];
    return r;
}

Rational dot(const RationalVector& a, const RationalVector& b)
{
    if (a.size() != b.size())
        throw DomainError("vector length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

RationalMatrix scale(const Rational& s, const RationalMatrix& m)
{
    RationalMatrix r = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) *= s;
    return r;
}

Integer common_denominator(const RationalMatrix& m)
{
    Integer d = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            d = lcm_of(d, m(i, j).get_den());
    return d;
}

Integer common_denominator(const RationalVector& v)
{
    Integer d = 1;
    for (const auto& x : v)
        d = lcm_of(d, x.get_den());
    return d;
}

namespace {

// Gauss-Jordan on [m | rhs]; returns false when m is singular.
bool gauss_jordan(RationalMatrix& m, RationalMatrix& rhs)
{
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            return false;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(pivot, j), m(col, j));
            for (std::size_t j = 0; j < rhs.cols(); ++j)
                std::swap(rhs(pivot, j), rhs(col, j));
        }
        Rational inv = 1 / m(col, col);
        for (std::size_t j = 0; j < n; ++j)
            m(col, j) *= inv;
        for (std::size_t j = 0; j < rhs.cols(); ++j)
            rhs(col, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m(i, col) == 0)
                continue;
            Rational f = m(i, col);
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) -= f * m(col, j);
            for (std::size_t j = 0; j < rhs.cols(); ++j)
                rhs(i, j) -= f * rhs(col, j);
        }
    }
    return true;
}

}  // namespace

Rational determinant(const RationalMatrix& input)
{
    if (!input.is_square())
        throw DomainError("determinant of a non-square matrix");
    RationalMatrix m = input;
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(pivot, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0)
                continue;
            Rational f = m(i, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j)
                m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

RationalMatrix inverse(const RationalMatrix& input)
{
    if (!input.is_square())
        throw DomainError("inverse of a non-square matrix");
    RationalMatrix m = input;
    RationalMatrix inv = RationalMatrix::identity(m.rows());
    if (!gauss_jordan(m, inv))
        throw DomainError("singular matrix");
    return inv;
}

RationalVector solve(const RationalMatrix& input, const RationalVector& b)
{
    if (!input.is_square() || b.size() != input.rows())
        throw DomainError("solve dimension mismatch");
    RationalMatrix m = input;
    RationalMatrix rhs(b.size(), 1);
    rhs.set_column(0, b);
    if (!gauss_jordan(m, rhs))
        throw DomainError("singular matrix");
    return rhs.column(0);
}

bool is_orthogonal(const RationalMatrix& m)
{
    if (!m.is_square())
        return false;
    return m.transposed() * m == RationalMatrix::identity(m.rows());
}

RationalMatrix hconcat(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.rows() != b.rows())
        throw DomainError("hconcat row mismatch");
    RationalMatrix r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

}  // namespace csl
