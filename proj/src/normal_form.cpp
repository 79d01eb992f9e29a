#include "csl/normal_form.hpp"

#include <algorithm>

namespace csl {

namespace {

// col_i <- x col_i + y col_j ; col_j <- u col_i + v col_j  (applied to a and t)
void combine_columns(IntMatrix& a, std::size_t i, std::size_t j, const Integer& x, const Integer& y,
                     const Integer& u, const Integer& v)
{
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Integer ai = a(r, i), aj = a(r, j);
        a(r, i) = x * ai + y * aj;
        a(r, j) = u * ai + v * aj;
    }
}

void axpy_column(IntMatrix& a, std::size_t target, const Integer& k, std::size_t source)
{
    for (std::size_t r = 0; r < a.rows(); ++r)
        a(r, target) -= k * a(r, source);
}

void negate_column(IntMatrix& a, std::size_t j)
{
    for (std::size_t r = 0; r < a.rows(); ++r)
        a(r, j) = -a(r, j);
}

}  // namespace

HermiteDecomposition hermite_decomposition(const IntMatrix& generators)
{
    const std::size_t d = generators.rows(), n = generators.cols();
    if (n < d)
        throw DomainError("hermite normal form: fewer generators than dimension");
    IntMatrix a = generators;
    IntMatrix u = IntMatrix::identity(n);

    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a(i, j) == 0)
                continue;
            auto [g, x, y] = extended_gcd(a(i, i), a(i, j));
            Integer p = -a(i, j) / g, q = a(i, i) / g;
            combine_columns(a, i, j, x, y, p, q);
            combine_columns(u, i, j, x, y, p, q);
        }
        if (a(i, i) == 0)
            throw DomainError("hermite normal form: generators are rank deficient");
        if (a(i, i) < 0) {
            negate_column(a, i);
            negate_column(u, i);
        }
        for (std::size_t j = 0; j < i; ++j) {
            Integer k = floor_div(a(i, j), a(i, i));
            if (k == 0)
                continue;
            axpy_column(a, j, k, i);
            axpy_column(u, j, k, i);
        }
    }

    IntMatrix h(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            h(i, j) = a(i, j);
    return {std::move(h), std::move(u)};
}

IntMatrix hermite_normal_form(const IntMatrix& generators)
{
    return hermite_decomposition(generators).hermite;
}

RationalMatrix hermite_normal_form(const RationalMatrix& generators)
{
    Integer den = common_denominator(generators);
    IntMatrix scaled(generators.rows(), generators.cols());
    for (std::size_t i = 0; i < generators.rows(); ++i)
        for (std::size_t j = 0; j < generators.cols(); ++j) {
            Rational v = generators(i, j) * den;
            scaled(i, j) = v.get_num();
        }
    IntMatrix h = hermite_normal_form(scaled);
    RationalMatrix out(h.rows(), h.cols());
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j)
            out(i, j) = make_rational(h(i, j), den);
    return out;
}

std::vector<Integer> SmithDecomposition::invariant_factors() const
{
    std::vector<Integer> f;
    for (std::size_t k = 0; k < std::min(diagonal.rows(), diagonal.cols()); ++k)
        f.push_back(diagonal(k, k));
    return f;
}

namespace {

void combine_rows(IntMatrix& a, std::size_t i, std::size_t j, const Integer& x, const Integer& y,
                  const Integer& u, const Integer& v)
{
    for (std::size_t c = 0; c < a.cols(); ++c) {
        Integer ai = a(i, c), aj = a(j, c);
        a(i, c) = x * ai + y * aj;
        a(j, c) = u * ai + v * aj;
    }
}

}  // namespace

SmithDecomposition smith_decomposition(const IntMatrix& input)
{
    const std::size_t m = input.rows(), n = input.cols();
    IntMatrix a = input;
    IntMatrix left = IntMatrix::identity(m);
    IntMatrix right = IntMatrix::identity(n);
    const std::size_t steps = std::min(m, n);

    for (std::size_t t = 0; t < steps; ++t) {
        // Pivot: smallest nonzero entry of the trailing block.
        bool found = false;
        std::size_t pr = t, pc = t;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (a(i, j) != 0 && (!found || abs_of(a(i, j)) < abs_of(a(pr, pc)))) {
                    found = true;
                    pr = i;
                    pc = j;
                }
        if (!found)
            break;
        if (pr != t) {
            combine_rows(a, t, pr, 0, 1, 1, 0);
            combine_rows(left, t, pr, 0, 1, 1, 0);
        }
        if (pc != t) {
            combine_columns(a, t, pc, 0, 1, 1, 0);
            combine_columns(right, t, pc, 0, 1, 1, 0);
        }

        for (;;) {
            bool changed = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a(i, t) == 0)
                    continue;
                if (a(i, t) % a(t, t) == 0) {
                    Integer k = -(a(i, t) / a(t, t));
                    combine_rows(a, t, i, 1, 0, k, 1);
                    combine_rows(left, t, i, 1, 0, k, 1);
                    continue;
                }
                auto [g, x, y] = extended_gcd(a(t, t), a(i, t));
                Integer p = -a(i, t) / g, q = a(t, t) / g;
                combine_rows(a, t, i, x, y, p, q);
                combine_rows(left, t, i, x, y, p, q);
                changed = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0)
                    continue;
                if (a(t, j) % a(t, t) == 0) {
                    Integer k = -(a(t, j) / a(t, t));
                    combine_columns(a, t, j, 1, 0, k, 1);
                    combine_columns(right, t, j, 1, 0, k, 1);
                    continue;
                }
                auto [g, x, y] = extended_gcd(a(t, t), a(t, j));
                Integer p = -a(t, j) / g, q = a(t, t) / g;
                combine_columns(a, t, j, x, y, p, q);
                combine_columns(right, t, j, x, y, p, q);
                changed = true;
            }
            if (changed)
                continue;
            // Divisibility: fold any offending row into row t and repeat.
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == m)
                break;
            combine_rows(a, t, bad, 1, 1, 0, 1);
            combine_rows(left, t, bad, 1, 1, 0, 1);
        }
        if (a(t, t) < 0) {
            for (std::size_t c = 0; c < n; ++c)
                a(t, c) = -a(t, c);
            for (std::size_t c = 0; c < m; ++c)
                left(t, c) = -left(t, c);
        }
    }
    return {std::move(left), std::move(a), std::move(right)};
}

}  // namespace csl
