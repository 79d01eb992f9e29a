#include "csl/square_csl.hpp"

#include <algorithm>
#include <functional>

namespace csl {

bool is_numerator(const GaussianInt& z)
{
    if (z.is_zero())
        return false;
    return gcd(z, z.conj()) == GaussianInt(1);
}

GaussianInt canonical_numerator(const GaussianInt& z)
{
    if (!is_numerator(z))
        throw DomainError("not a coincidence numerator: " + to_string(z));
    for (Unit u : Unit::all()) {
        GaussianInt w = u * z;
        if (w.re > 0 && w.re % 2 != 0)
            return w;
    }
    throw DomainError("unreachable: numerator without odd real part");
}

PlanarCoincidence make_coincidence(const GaussianInt& z, Unit unit, bool reflection)
{
    GaussianInt c = canonical_numerator(z);
    // z = u c gives unit * z / conj(z) = unit * u^2 * c / conj(c).
    Unit u = *associate_unit(z, c);
    return {c, unit * u * u, reflection};
}

PlanarCoincidence from_multiplier(const GaussianRational& c, bool reflection)
{
    const GaussianInt& a = c.num();
    const GaussianInt& b = c.den();
    if (a.norm() != b.norm())
        throw DomainError("multiplier does not lie on the unit circle");
    // b is an associate of conj(a): conj(a) = w b, so c = w a / conj(a).
    auto w = associate_unit(a.conj(), b);
    if (!w)
        throw DomainError("multiplier is not of the form unit * z / conj(z)");
    return make_coincidence(a, *w, reflection);
}

GaussianRational multiplier(const PlanarCoincidence& c)
{
    return {c.unit * c.numerator, c.numerator.conj()};
}

RationalMatrix isometry_matrix(const PlanarCoincidence& c)
{
    GaussianInt w = c.unit * (c.numerator * c.numerator);
    Integer n = c.numerator.norm();
    Rational a = make_rational(w.re, n), b = make_rational(w.im, n);
    if (c.reflection)
        return {{a, b}, {b, Rational(-a)}};
    return {{a, Rational(-b)}, {b, a}};
}

Integer coincidence_index(const PlanarCoincidence& c)
{
    return c.numerator.norm();
}

RationalLattice csl_basis(const PlanarCoincidence& c)
{
    const GaussianInt& z = c.numerator;
    return RationalLattice(RationalMatrix{{Rational(z.re), Rational(-z.im)}, {Rational(z.im), Rational(z.re)}});
}

RationalLattice dsc_basis(const PlanarCoincidence& c)
{
    const GaussianInt& z = c.numerator;
    Integer n = z.norm();
    Rational a = make_rational(z.re, n), b = make_rational(z.im, n);
    return RationalLattice(RationalMatrix{{a, Rational(-b)}, {b, a}});
}

GaussianRational apply(const PlanarCoincidence& c, const GaussianRational& x)
{
    return multiplier(c) * (c.reflection ? x.conj() : x);
}

PlanarCoincidence compose(const PlanarCoincidence& a, const PlanarCoincidence& b)
{
    GaussianRational mb = multiplier(b);
    GaussianRational m = multiplier(a) * (a.reflection ? mb.conj() : mb);
    return from_multiplier(m, a.reflection != b.reflection);
}

PlanarCoincidence inverse(const PlanarCoincidence& c)
{
    if (c.reflection)
        return c;
    return from_multiplier(multiplier(c).conj(), false);
}

std::vector<GaussianInt> enumerate_numerators(std::uint32_t max_norm)
{
    std::vector<GaussianInt> out;
    if (max_norm == 0)
        return out;
    auto spf = smallest_prime_factors(max_norm);
    std::vector<std::pair<std::uint64_t, GaussianInt>> primes;
    for (std::uint32_t p = 5; p <= max_norm; p += 4)
        if (spf[p] == p)
            primes.emplace_back(p, split_prime(Integer(static_cast<unsigned long>(p))));

    std::function<void(std::size_t, std::uint64_t, const GaussianInt&)> walk =
        [&](std::size_t first, std::uint64_t norm, const GaussianInt& z) {
            out.push_back(z);
            for (std::size_t k = first; k < primes.size(); ++k) {
                const auto& [p, w] = primes[k];
                if (norm * p > max_norm)
                    break;
                GaussianInt wc = w.conj();
                GaussianInt a = z, b = z;
                for (std::uint64_t n = norm * p; n <= max_norm; n *= p) {
                    a = a * w;
                    b = b * wc;
                    walk(k + 1, n, a);
                    walk(k + 1, n, b);
                }
            }
        };
    walk(0, 1, GaussianInt(1));

    for (auto& z : out)
        z = canonical_numerator(z);
    std::sort(out.begin(), out.end(), [](const GaussianInt& a, const GaussianInt& b) {
        Integer na = a.norm(), nb = b.norm();
        if (na != nb)
            return na < nb;
        if (a.re != b.re)
            return a.re < b.re;
        return a.im > b.im;
    });
    return out;
}

std::vector<PlanarCoincidence> enumerate_coincidences(std::uint32_t max_index, bool with_reflections)
{
    std::vector<PlanarCoincidence> out;
    for (const auto& z : enumerate_numerators(max_index)) {
        for (Unit u : Unit::all())
            out.push_back({z, u, false});
        if (with_reflections)
            for (Unit u : Unit::all())
                out.push_back({z, u, true});
    }
    return out;
}

std::string to_string(const PlanarCoincidence& c)
{
    return std::string(c.reflection ? "T" : "R") + "[" + to_string(c.numerator) + "," + to_string(c.unit) + "]";
}

RationalVector to_vector(const GaussianRational& x)
{
    return {x.re(), x.im()};
}

GaussianRational from_vector(const RationalVector& v)
{
    if (v.size() != 2)
        throw DomainError("planar vector expected");
    return GaussianRational::from_parts(v[0], v[1]);
}

}  // namespace csl
