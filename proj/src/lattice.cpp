#include "csl/lattice.hpp"

#include "csl/normal_form.hpp"

#include <algorithm>

namespace csl {

RationalLattice::RationalLattice(const RationalMatrix& generators)
    : basis_(hermite_normal_form(generators))
{
}

RationalLattice RationalLattice::integer(std::size_t dim)
{
    return RationalLattice(RationalMatrix::identity(dim));
}

Rational RationalLattice::covolume() const
{
    Rational v = 1;
    for (std::size_t i = 0; i < dim(); ++i)
        v *= basis_(i, i);
    return v;
}

std::optional<IntVector> RationalLattice::coordinates(const RationalVector& v) const
{
    if (v.size() != dim())
        throw DomainError("vector dimension does not match lattice");
    IntVector c(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        Rational r = v[i];
        for (std::size_t j = 0; j < i; ++j)
            r -= basis_(i, j) * c[j];
        r /= basis_(i, i);
        if (!is_integral(r))
            return std::nullopt;
        c[i] = r.get_num();
    }
    return c;
}

bool RationalLattice::contains(const RationalLattice& sub) const
{
    for (std::size_t j = 0; j < sub.dim(); ++j)
        if (!contains(sub.basis_.column(j)))
            return false;
    return true;
}

RationalVector RationalLattice::reduce(const RationalVector& v) const
{
    if (v.size() != dim())
        throw DomainError("vector dimension does not match lattice");
    RationalVector r = v;
    for (std::size_t i = 0; i < dim(); ++i) {
        Integer k = floor_of(r[i] / basis_(i, i));
        if (k == 0)
            continue;
        for (std::size_t row = i; row < dim(); ++row)
            r[row] -= k * basis_(row, i);
    }
    return r;
}

RationalLattice RationalLattice::dual() const
{
    return RationalLattice(inverse(basis_).transposed());
}

RationalLattice RationalLattice::transformed(const RationalMatrix& m) const
{
    return RationalLattice(m * basis_);
}

RationalLattice RationalLattice::scaled(const Rational& s) const
{
    return RationalLattice(scale(s, basis_));
}

RationalLattice lattice_sum(const RationalLattice& a, const RationalLattice& b)
{
    if (a.dim() != b.dim())
        throw DomainError("lattice dimensions differ");
    return RationalLattice(hconcat(a.basis(), b.basis()));
}

RationalLattice lattice_intersect(const RationalLattice& a, const RationalLattice& b)
{
    return lattice_sum(a.dual(), b.dual()).dual();
}

Rational sublattice_index(const RationalLattice& super, const RationalLattice& sub)
{
    if (!super.contains(sub))
        throw DomainError("not a sublattice");
    return sub.covolume() / super.covolume();
}

CosetLattice::CosetLattice(RationalVector representative, RationalLattice sublattice)
    : representative_(sublattice.reduce(representative)), sublattice_(std::move(sublattice))
{
}

bool CosetLattice::contains(const RationalVector& v) const
{
    return sublattice_.contains(subtract(v, representative_));
}

bool operator<(const CosetLattice& a, const CosetLattice& b)
{
    const auto& ha = a.sublattice().basis();
    const auto& hb = b.sublattice().basis();
    if (ha.rows() != hb.rows())
        return ha.rows() < hb.rows();
    for (std::size_t i = 0; i < ha.rows(); ++i)
        for (std::size_t j = 0; j < ha.cols(); ++j)
            if (ha(i, j) != hb(i, j))
                return ha(i, j) < hb(i, j);
    return std::lexicographical_compare(a.representative().begin(), a.representative().end(),
                                        b.representative().begin(), b.representative().end());
}

std::optional<SumDecomposition> decompose_in_sum(const RationalMatrix& a, const RationalMatrix& b,
                                                 const RationalVector& v)
{
    RationalMatrix ab = hconcat(a, b);
    Integer den = lcm_of(common_denominator(ab), common_denominator(v));
    const std::size_t d = ab.rows(), n = ab.cols();
    IntMatrix m(d, n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = Rational(ab(i, j) * den).get_num();
    HermiteDecomposition hd = hermite_decomposition(m);

    IntVector y(n, Integer(0));
    for (std::size_t i = 0; i < d; ++i) {
        Rational r = v[i] * den;
        for (std::size_t j = 0; j < i; ++j)
            r -= Rational(hd.hermite(i, j) * y[j]);
        r /= Rational(hd.hermite(i, i));
        if (!is_integral(r))
            return std::nullopt;
        y[i] = r.get_num();
    }
    IntVector c = hd.transform * y;
    SumDecomposition out;
    out.first.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(a.cols()));
    out.second.assign(c.begin() + static_cast<std::ptrdiff_t>(a.cols()), c.end());
    return out;
}

}  // namespace csl
