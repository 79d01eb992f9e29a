#include "csl/shifted_square.hpp"

#include <cmath>
#include <numeric>
#include <set>

namespace csl {

Dependent::Dependent(Integer p1_, Integer q1_, Integer p2_, Integer q2_)
{
    if (q1_ == 0 || q2_ == 0)
        throw DomainError("dependent shift with zero denominator");
    if (p2_ == 0)
        throw DomainError("dependent shift needs a nonzero coefficient of b");
    Rational c = make_rational(p1_, q1_), d = make_rational(p2_, q2_);
    p1 = c.get_num();
    q1 = c.get_den();
    p2 = d.get_num();
    q2 = d.get_den();
}

namespace {

// c0 + c1 t1 + c2 t2 with t1, t2 irrational and 1, t1, t2 independent.
struct Affine {
    Rational c0 = 0, c1 = 0, c2 = 0;

    bool is_integer() const { return c1 == 0 && c2 == 0 && is_integral(c0); }
};

Affine operator+(const Affine& a, const Affine& b)
{
    return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
}

Affine operator-(const Affine& a)
{
    return {-a.c0, -a.c1, -a.c2};
}

Affine operator-(const Affine& a, const Affine& b)
{
    return a + (-b);
}

Affine operator*(const Integer& k, const Affine& a)
{
    Rational r(k);
    return {r * a.c0, r * a.c1, r * a.c2};
}

// (unit w - conj w) for w = re + im i, by cases on the unit.
template <typename T>
std::pair<T, T> twist(Unit unit, const T& re, const T& im)
{
    switch (unit.exponent()) {
    case 0: return {T(0 * re), T(im + im)};
    case 2: return {T(-(re + re)), T(0 * im)};
    case 1: return {T(-(re + im)), T(re + im)};
    default: return {T(im - re), T(im - re)};
    }
}

template <>
std::pair<Affine, Affine> twist(Unit unit, const Affine& re, const Affine& im)
{
    switch (unit.exponent()) {
    case 0: return {Affine{}, im + im};
    case 2: return {-(re + re), Affine{}};
    case 1: return {-(re + im), re + im};
    default: return {im - re, im - re};
    }
}

std::pair<Affine, Affine> components(const ShiftClass& x)
{
    struct Visitor {
        std::pair<Affine, Affine> operator()(const RationalShift& s) const
        {
            return {Affine{s.x.re()}, Affine{s.x.im()}};
        }
        std::pair<Affine, Affine> operator()(const IrrationalRe& s) const { return {Affine{0, 1, 0}, Affine{s.b}}; }
        std::pair<Affine, Affine> operator()(const IrrationalIm& s) const { return {Affine{s.a}, Affine{0, 1, 0}}; }
        std::pair<Affine, Affine> operator()(const Independent&) const
        {
            return {Affine{0, 1, 0}, Affine{0, 0, 1}};
        }
        std::pair<Affine, Affine> operator()(const Dependent& s) const
        {
            return {Affine{make_rational(s.p1, s.q1), make_rational(s.p2, s.q2), 0}, Affine{0, 1, 0}};
        }
    };
    return std::visit(Visitor{}, x);
}

}  // namespace

GaussianInt unit_twist(Unit unit, const GaussianInt& w)
{
    auto [re, im] = twist<Integer>(unit, w.re, w.im);
    return {re, im};
}

GaussianRational unit_twist(Unit unit, const GaussianRational& w)
{
    auto [re, im] = twist<Rational>(unit, w.re(), w.im());
    return GaussianRational::from_parts(re, im);
}

bool is_member(const PlanarCoincidence& c, const GaussianRational& x)
{
    if (!c.reflection)
        return (GaussianRational(unit_twist(c.unit, c.numerator)) * x).is_gaussian_integer();
    return unit_twist(c.unit, GaussianRational(c.numerator) * x.conj()).is_gaussian_integer();
}

bool is_member(const PlanarCoincidence& c, const ShiftClass& x)
{
    if (auto r = std::get_if<RationalShift>(&x))
        return is_member(c, r->x);
    auto [a, b] = components(x);
    const Integer& zr = c.numerator.re;
    const Integer& zi = c.numerator.im;
    if (!c.reflection) {
        GaussianInt d = unit_twist(c.unit, c.numerator);
        Affine re = d.re * a - d.im * b;
        Affine im = d.re * b + d.im * a;
        return re.is_integer() && im.is_integer();
    }
    // w = z conj(x)
    Affine wr = zr * a + zi * b;
    Affine wi = zi * a - zr * b;
    auto [re, im] = twist<Affine>(c.unit, wr, wi);
    return re.is_integer() && im.is_integer();
}

namespace {

ShiftedOcDescription single_reflection(std::string branch, const GaussianInt& z, Unit unit)
{
    ShiftedOcDescription d;
    d.kind = OcKind::SingleReflection;
    d.branch = std::move(branch);
    d.literal_generator = std::make_pair(z, unit);
    d.generator = make_coincidence(z, unit, true);
    d.is_group = true;
    return d;
}

ShiftedOcDescription trivial(std::string branch)
{
    ShiftedOcDescription d;
    d.kind = OcKind::Trivial;
    d.branch = std::move(branch);
    d.is_group = true;
    return d;
}

}  // namespace

ShiftedOcDescription classify_irrational(const ShiftClass& x)
{
    if (std::holds_alternative<RationalShift>(x))
        throw DomainError("classify_irrational needs an irrational shift");
    if (auto s = std::get_if<IrrationalRe>(&x)) {
        if (is_integral(2 * s->b))
            return single_reflection("re-irrational", GaussianInt(1), Unit::one());
        return trivial("re-irrational");
    }
    if (auto s = std::get_if<IrrationalIm>(&x)) {
        if (is_integral(2 * s->a))
            return single_reflection("im-irrational", GaussianInt(1), Unit::minus_one());
        return trivial("im-irrational");
    }
    if (std::holds_alternative<Independent>(x))
        return trivial("independent");
    const auto& d = std::get<Dependent>(x);
    if ((d.p2 * d.q2) % 2 == 0) {
        if ((2 * d.q2) % d.q1 == 0)
            return single_reflection("dependent-even", GaussianInt(d.p2, d.q2), Unit::one());
        return trivial("dependent-even");
    }
    if (d.q2 % d.q1 == 0) {
        Integer re = (d.p2 + d.q2) / 2, im = -(d.p2 - d.q2) / 2;
        return single_reflection("dependent-odd", GaussianInt(re, im), Unit::i());
    }
    return trivial("dependent-odd");
}

std::optional<Unit> reflection_symmetry_generator(const GaussianRational& x)
{
    Rational a = x.re(), b = x.im();
    if (is_integral(2 * b))
        return Unit::one();
    if (is_integral(2 * a))
        return Unit::minus_one();
    if (is_integral(a - b))
        return Unit::i();
    if (is_integral(a + b))
        return Unit::minus_i();
    return std::nullopt;
}

ShiftedOcDescription describe(const ShiftClass& x)
{
    auto r = std::get_if<RationalShift>(&x);
    if (!r)
        return classify_irrational(x);
    ShiftedOcDescription d;
    d.kind = OcKind::FullCharacterization;
    d.branch = "rational";
    if (auto eps = reflection_symmetry_generator(r->x)) {
        d.literal_generator = std::make_pair(GaussianInt(1), *eps);
        d.generator = PlanarCoincidence{GaussianInt(1), *eps, true};
        d.is_group = true;
        return d;
    }
    bool splits = false;
    for (const auto& [prime, e] : factor(r->x.den()).factors) {
        (void)e;
        Integer n = prime.norm();
        if (n % 4 == 1)
            splits = true;
    }
    if (!splits)
        d.is_group = true;
    return d;
}

bool soc_membership_rational(const PlanarCoincidence& c, const GaussianInt& q)
{
    if (c.reflection)
        throw DomainError("rotation expected");
    if (q.is_zero())
        throw DomainError("zero denominator");
    return divides(q, unit_twist(c.unit, c.numerator));
}

bool soc_membership_euclid(const PlanarCoincidence& c, const Integer& q)
{
    if (c.reflection)
        throw DomainError("rotation expected");
    if (q <= 1 || q % 2 == 0)
        throw DomainError("odd rational denominator greater than one expected");
    GaussianInt r = euclid_divide(c.numerator, GaussianInt(q)).remainder;
    return r.conj() == c.unit * r;
}

std::optional<GaussianRational> shifted_csl_representative(const PlanarCoincidence& c, const GaussianRational& x)
{
    const GaussianInt& z = c.numerator;
    GaussianRational y = apply(c, x) - x;
    GaussianRational w = GaussianRational(z.conj()) * y;
    if (!w.is_gaussian_integer())
        return std::nullopt;
    // s conj(z) + t z = 1, so conj(z) (s w) = w modulo z.
    GaussianBezout b = bezout(z.conj(), z);
    GaussianRational rep = x + GaussianRational(b.s * w.num());
    return from_vector(csl_basis(c).reduce(to_vector(rep)));
}

std::vector<ShiftedMember> enumerate_shifted(const GaussianRational& x, std::uint32_t max_index)
{
    std::vector<ShiftedMember> out;
    for (const auto& c : enumerate_coincidences(max_index, true))
        if (auto rep = shifted_csl_representative(c, x))
            out.push_back({c, *rep});
    return out;
}

std::vector<ShiftedMember> distinct_csls(const std::vector<ShiftedMember>& members)
{
    std::set<std::pair<std::string, std::string>> seen;
    std::vector<ShiftedMember> out;
    for (const auto& m : members)
        if (seen.emplace(to_string(m.coincidence.numerator), to_string(m.representative)).second)
            out.push_back(m);
    return out;
}

ClosureResult group_closure_check(const GaussianRational& x, std::uint32_t max_index, bool rotations_only)
{
    std::vector<PlanarCoincidence> members;
    for (const auto& m : enumerate_shifted(x, max_index))
        if (!rotations_only || !m.coincidence.reflection)
            members.push_back(m.coincidence);
    for (const auto& first : members)
        for (const auto& second : members)
            if (!is_member(compose(second, first), x))
                return {false, std::make_pair(first, second)};
    return {};
}

std::vector<std::uint64_t> visible_grid_counts(std::uint32_t q, std::uint32_t max_index)
{
    if (q < 3 || q % 2 == 0)
        throw DomainError("odd rational denominator greater than one expected");
    auto mod = [q](long v) { return static_cast<std::uint32_t>(((v % static_cast<long>(q)) + q) % q); };
    std::set<std::pair<std::uint32_t, std::uint32_t>> residues;
    for (std::uint32_t r = 1; 2 * r < q; ++r) {
        if (std::gcd(r, q) != 1)
            continue;
        residues.emplace(r, 0);
        residues.emplace(r, r);
    }
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_index) + 1, 0);
    long bound = static_cast<long>(std::sqrt(static_cast<double>(max_index))) + 1;
    for (long a = -bound; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b) {
            long n = a * a + b * b;
            if (n == 0 || n > static_cast<long>(max_index))
                continue;
            if (std::gcd(a, b) != 1 || (a + b) % 2 == 0)
                continue;
            if (residues.count({mod(a), mod(b)}))
                ++counts[static_cast<std::size_t>(n)];
        }
    return counts;
}

ShiftClass parse_shift_class(std::string_view text)
{
    auto starts = [&](std::string_view prefix) { return text.substr(0, prefix.size()) == prefix; };
    if (text == "independent")
        return Independent{};
    if (starts("re-irrational:b="))
        return IrrationalRe{parse_rational(text.substr(16))};
    if (starts("im-irrational:a="))
        return IrrationalIm{parse_rational(text.substr(16))};
    if (starts("dependent:")) {
        std::string_view rest = text.substr(10);
        std::size_t comma = rest.find(',');
        if (comma == std::string_view::npos)
            throw ParseError("dependent shift needs two fractions", 10);
        Rational c = parse_rational(rest.substr(0, comma));
        Rational d = parse_rational(rest.substr(comma + 1));
        return Dependent(c.get_num(), c.get_den(), d.get_num(), d.get_den());
    }
    return RationalShift{parse_gaussian_rational(text)};
}

std::string to_string(const ShiftClass& s)
{
    struct Visitor {
        std::string operator()(const RationalShift& r) const { return to_string(r.x); }
        std::string operator()(const IrrationalRe& r) const { return "re-irrational:b=" + to_string(r.b); }
        std::string operator()(const IrrationalIm& r) const { return "im-irrational:a=" + to_string(r.a); }
        std::string operator()(const Independent&) const { return "independent"; }
        std::string operator()(const Dependent& d) const
        {
            return "dependent:" + to_string(make_rational(d.p1, d.q1)) + "," + to_string(make_rational(d.p2, d.q2));
        }
    };
    return std::visit(Visitor{}, s);
}

}  // namespace csl
