#include "csl/oracle.hpp"

#include <algorithm>
#include <functional>

namespace csl::oracle {

IntMatrix hnf(const IntMatrix& generators)
{
    return hermite_normal_form(generators);
}

RationalMatrix hnf(const RationalMatrix& generators)
{
    return hermite_normal_form(generators);
}

SmithDecomposition snf(const IntMatrix& a)
{
    return smith_decomposition(a);
}

namespace {

IntMatrix to_integer(const RationalMatrix& m)
{
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!is_integral(m(i, j)))
                throw DomainError("matrix is not integral");
            out(i, j) = m(i, j).get_num();
        }
    return out;
}

Integer common_denominator_of(const RationalMatrix& m, const RationalVector& v)
{
    Integer d = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            d = lcm_of(d, m(i, j).get_den());
    for (const auto& x : v)
        d = lcm_of(d, x.get_den());
    return d;
}

}  // namespace

Integer index_by_snf(const RationalLattice& super, const RationalLattice& sub)
{
    RationalMatrix coords = inverse(super.basis()) * sub.basis();
    IntMatrix c = to_integer(coords);
    Integer index = 1;
    for (const auto& f : snf(c).invariant_factors()) {
        if (f == 0)
            throw DomainError("sublattice has lower rank");
        index *= f;
    }
    return index;
}

std::optional<CosetLattice> coset_intersect(const CosetLattice& a, const CosetLattice& b)
{
    const RationalMatrix& b1 = a.sublattice().basis();
    const RationalMatrix& b2 = b.sublattice().basis();
    const std::size_t d = b1.rows();
    if (b2.rows() != d)
        throw DomainError("dimension mismatch");
    RationalMatrix m = hconcat(b1, scale(Rational(-1), b2));
    RationalVector rhs = subtract(b.representative(), a.representative());
    Integer den = common_denominator_of(m, rhs);
    IntMatrix mi = to_integer(scale(Rational(den), m));
    SmithDecomposition s = snf(mi);

    IntVector r(d);
    for (std::size_t i = 0; i < d; ++i) {
        Rational v = rhs[i] * den;
        r[i] = v.get_num();
    }
    IntVector y = s.left * r;
    IntVector w(2 * d, Integer(0));
    for (std::size_t i = 0; i < d; ++i) {
        const Integer& f = s.diagonal(i, i);
        if (f == 0)
            throw DomainError("coset lattices are not commensurate");
        if (y[i] % f != 0)
            return std::nullopt;
        w[i] = y[i] / f;
    }
    IntVector u = s.right * w;

    RationalVector point = a.representative();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            point[i] += b1(i, j) * u[j];

    std::vector<RationalVector> gens;
    for (std::size_t k = d; k < 2 * d; ++k) {
        RationalVector g(d, Rational(0));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                g[i] += b1(i, j) * s.right(j, k);
        gens.push_back(std::move(g));
    }
    return CosetLattice(point, RationalLattice(RationalMatrix::from_columns(gens)));
}

Box Box::cube(std::size_t dim, const Rational& lower, const Rational& upper)
{
    return {RationalVector(dim, lower), RationalVector(dim, upper)};
}

bool Box::contains(const RationalVector& v) const
{
    if (v.size() != lower.size())
        return false;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] < lower[i] || v[i] >= upper[i])
            return false;
    return true;
}

bool PointSet::contains(const RationalVector& v) const
{
    return std::binary_search(points.begin(), points.end(), v);
}

namespace {

void require_window(const Box& w, std::size_t dim)
{
    if (w.lower.size() != dim || w.upper.size() != dim)
        throw DomainError("window dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i)
        if (!(w.lower[i] < w.upper[i]))
            throw DomainError("degenerate window");
}

Integer ceil_of(const Rational& r)
{
    return -floor_of(Rational(-r));
}

// Points shift + B a inside the window, using the lower-triangular basis.
void collect(const RationalMatrix& basis, const RationalVector& shift, const Box& window,
             std::vector<RationalVector>& out)
{
    const std::size_t d = basis.rows();
    IntVector a(d);
    RationalVector x(d);
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (i == d) {
            out.push_back(x);
            return;
        }
        Rational c = shift[i];
        for (std::size_t j = 0; j < i; ++j)
            c += basis(i, j) * a[j];
        const Rational& step = basis(i, i);
        Integer first = ceil_of((window.lower[i] - c) / step);
        Integer last = ceil_of((window.upper[i] - c) / step) - 1;
        for (Integer k = first; k <= last; ++k) {
            a[i] = k;
            x[i] = c + step * k;
            walk(i + 1);
        }
    };
    walk(0);
}

PointSet finish(std::vector<RationalVector> points, const Box& window)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return {std::move(points), window};
}

}  // namespace

PointSet enumerate_points(const CosetLattice& coset, const Box& window)
{
    require_window(window, coset.sublattice().dim());
    std::vector<RationalVector> pts;
    collect(coset.sublattice().basis(), coset.representative(), window, pts);
    return finish(std::move(pts), window);
}

PointSet enumerate_points(const ShiftedLattice& s, const Box& window)
{
    return enumerate_points(CosetLattice(s.shift(), s.lattice()), window);
}

PointSet enumerate_points(const Multilattice& ml, const Box& window)
{
    require_window(window, ml.lattice().dim());
    std::vector<RationalVector> pts;
    for (const auto& x : ml.shifts())
        collect(ml.lattice().basis(), x, window, pts);
    return finish(std::move(pts), window);
}

PointSet intersect(const PointSet& a, const PointSet& b)
{
    if (!(a.window == b.window))
        throw DomainError("point sets over different windows");
    std::vector<RationalVector> common;
    std::set_intersection(a.points.begin(), a.points.end(), b.points.begin(), b.points.end(),
                          std::back_inserter(common));
    return {std::move(common), a.window};
}

Rational empirical_index(const PointSet& a, const PointSet& b)
{
    std::size_t common = intersect(a, b).size();
    if (common == 0)
        throw DomainError("empty intersection in window");
    return Rational(static_cast<unsigned long>(a.size())) / Rational(static_cast<unsigned long>(common));
}

Rational empirical_index(const Multilattice& ml, const AffineIsometry& iso, const Box& window)
{
    PointSet a = enumerate_points(ml, window);
    AffineIsometry back = iso.inverse();
    std::size_t common = 0;
    for (const auto& p : a.points)
        if (ml.contains(back.apply(p)))
            ++common;
    if (common == 0)
        throw DomainError("empty intersection in window");
    return Rational(static_cast<unsigned long>(a.size())) / Rational(static_cast<unsigned long>(common));
}

Multilattice transformed(const Multilattice& ml, const RationalMatrix& r)
{
    std::vector<RationalVector> shifts;
    for (const auto& x : ml.shifts())
        shifts.push_back(r * x);
    return Multilattice(ml.lattice().transformed(r), std::move(shifts));
}

}  // namespace csl::oracle
