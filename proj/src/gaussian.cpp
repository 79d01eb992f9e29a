#include "csl/gaussian.hpp"

#include <algorithm>
#include <cctype>

namespace csl {

GaussianInt operator+(const GaussianInt& a, const GaussianInt& b)
{
    return {Integer(a.re + b.re), Integer(a.im + b.im)};
}

GaussianInt operator-(const GaussianInt& a, const GaussianInt& b)
{
    return {Integer(a.re - b.re), Integer(a.im - b.im)};
}

GaussianInt operator-(const GaussianInt& a)
{
    return {Integer(-a.re), Integer(-a.im)};
}

GaussianInt operator*(const GaussianInt& a, const GaussianInt& b)
{
    return {Integer(a.re * b.re - a.im * b.im), Integer(a.re * b.im + a.im * b.re)};
}

bool norm_order(const GaussianInt& a, const GaussianInt& b)
{
    Integer na = a.norm(), nb = b.norm();
    if (na != nb)
        return na < nb;
    if (a.re != b.re)
        return a.re < b.re;
    return a.im < b.im;
}

namespace {

// Exact quotient a / b if it exists.
std::optional<GaussianInt> try_divide(const GaussianInt& a, const GaussianInt& b)
{
    if (b.is_zero())
        return a.is_zero() ? std::optional<GaussianInt>(GaussianInt(0)) : std::nullopt;
    GaussianInt p = a * b.conj();
    Integer n = b.norm();
    if (p.re % n != 0 || p.im % n != 0)
        return std::nullopt;
    return GaussianInt(Integer(p.re / n), Integer(p.im / n));
}

// Nearest integer to p/n (n > 0), ties toward minus infinity.
Integer round_half_down(const Integer& p, const Integer& n)
{
    return -floor_div(Integer(n - 2 * p), Integer(2 * n));
}

}  // namespace

bool divides(const GaussianInt& b, const GaussianInt& a)
{
    return try_divide(a, b).has_value();
}

GaussianInt exact_quotient(const GaussianInt& a, const GaussianInt& b)
{
    if (b.is_zero())
        throw DomainError("division by zero Gaussian integer");
    auto q = try_divide(a, b);
    if (!q)
        throw DomainError("inexact Gaussian division");
    return *q;
}

GaussianInt Unit::value() const
{
    switch (k_) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
    }
}

GaussianInt operator*(Unit u, const GaussianInt& z)
{
    switch (u.exponent()) {
    case 0: return z;
    case 1: return {Integer(-z.im), z.re};
    case 2: return -z;
    default: return {z.im, Integer(-z.re)};
    }
}

std::optional<Unit> associate_unit(const GaussianInt& z, const GaussianInt& w)
{
    for (Unit u : Unit::all())
        if (u * w == z)
            return u;
    return std::nullopt;
}

GaussianInt canonical_associate(const GaussianInt& z)
{
    if (z.is_zero())
        return z;
    for (Unit u : Unit::all()) {
        GaussianInt w = u * z;
        if (w.re > 0 && w.im >= 0)
            return w;
    }
    throw DomainError("unreachable: no canonical associate");
}

Unit canonical_unit(const GaussianInt& z)
{
    if (z.is_zero())
        throw DomainError("unit of zero");
    return *associate_unit(z, canonical_associate(z));
}

EuclidDivision euclid_divide(const GaussianInt& a, const GaussianInt& b)
{
    if (b.is_zero())
        throw DomainError("Euclidean division by zero");
    GaussianInt p = a * b.conj();
    Integer n = b.norm();
    GaussianInt k(round_half_down(p.re, n), round_half_down(p.im, n));
    return {k, a - k * b};
}

GaussianInt gcd(const GaussianInt& a, const GaussianInt& b)
{
    if (a.is_zero() && b.is_zero())
        throw DomainError("gcd of two zeros");
    GaussianInt x = a, y = b;
    while (!y.is_zero()) {
        GaussianInt r = euclid_divide(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return canonical_associate(x);
}

GaussianBezout bezout(const GaussianInt& a, const GaussianInt& b)
{
    if (a.is_zero() && b.is_zero())
        throw DomainError("gcd of two zeros");
    // Invariant: x = sx a + tx b, y = sy a + ty b.
    GaussianInt x = a, sx(1), tx(0);
    GaussianInt y = b, sy(0), ty(1);
    while (!y.is_zero()) {
        EuclidDivision d = euclid_divide(x, y);
        GaussianInt s = sx - d.quotient * sy, t = tx - d.quotient * ty;
        x = std::move(y);
        sx = std::move(sy);
        tx = std::move(ty);
        y = std::move(d.remainder);
        sy = std::move(s);
        ty = std::move(t);
    }
    Unit u = canonical_unit(x).inverse();
    return {u * x, u * sx, u * tx};
}

GaussianInt GaussianFactorization::product() const
{
    GaussianInt p = unit.value();
    for (const auto& [prime, e] : factors)
        for (unsigned k = 0; k < e; ++k)
            p = p * prime;
    return p;
}

GaussianInt split_prime(const Integer& p)
{
    if (p % 4 != 1)
        throw DomainError("split_prime needs p = 1 mod 4");
    Integer e = (p - 1) / 4, t;
    for (Integer c = 2; c < p; ++c) {
        mpz_powm(t.get_mpz_t(), c.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        if ((t * t) % p == p - 1)
            break;
    }
    GaussianInt w = gcd(GaussianInt(p), GaussianInt(t, 1));
    if (w.norm() != p)
        throw DomainError("split_prime: argument is not prime");
    return w;
}

GaussianFactorization factor(const GaussianInt& z)
{
    if (z.is_zero())
        throw DomainError("factorization of zero");
    GaussianFactorization out;
    GaussianInt rest = z;
    Integer n = z.norm();

    auto strip = [&](const GaussianInt& prime) {
        unsigned e = 0;
        while (auto q = try_divide(rest, prime)) {
            rest = *q;
            ++e;
        }
        if (e > 0)
            out.factors.emplace_back(prime, e);
    };

    auto handle_prime = [&](const Integer& p) {
        if (p == 2)
            strip(GaussianInt(1, 1));
        else if (p % 4 == 3)
            strip(GaussianInt(p));
        else {
            GaussianInt w = split_prime(p);
            strip(w);
            strip(canonical_associate(w.conj()));
        }
    };

    for (Integer d = 2; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        while (n % d == 0)
            n /= d;
        handle_prime(d);
    }
    if (n > 1)
        handle_prime(n);

    out.unit = *associate_unit(rest, GaussianInt(1));
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return norm_order(a.first, b.first); });
    return out;
}

bool is_visible(const GaussianInt& z)
{
    return gcd_of(z.re, z.im) == 1;
}

bool is_odd_visible(const GaussianInt& z)
{
    return is_visible(z) && (z.re + z.im) % 2 != 0;
}

GaussianRational::GaussianRational(GaussianInt num, GaussianInt den)
{
    if (den.is_zero())
        throw DomainError("Gaussian rational with zero denominator");
    if (num.is_zero()) {
        num_ = GaussianInt(0);
        den_ = GaussianInt(1);
        return;
    }
    GaussianInt g = gcd(num, den);
    num = exact_quotient(num, g);
    den = exact_quotient(den, g);
    Unit u = canonical_unit(den);
    num_ = u.inverse() * num;
    den_ = u.inverse() * den;
}

GaussianRational GaussianRational::from_parts(const Rational& re, const Rational& im)
{
    Integer d = lcm_of(re.get_den(), im.get_den());
    Rational a = re * d, b = im * d;
    return {GaussianInt(a.get_num(), b.get_num()), GaussianInt(d)};
}

Rational GaussianRational::re() const
{
    GaussianInt p = num_ * den_.conj();
    return make_rational(p.re, den_.norm());
}

Rational GaussianRational::im() const
{
    GaussianInt p = num_ * den_.conj();
    return make_rational(p.im, den_.norm());
}

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b)
{
    return {a.num() * b.den() + b.num() * a.den(), a.den() * b.den()};
}

GaussianRational operator-(const GaussianRational& a, const GaussianRational& b)
{
    return {a.num() * b.den() - b.num() * a.den(), a.den() * b.den()};
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b)
{
    return {a.num() * b.num(), a.den() * b.den()};
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b)
{
    if (b.num().is_zero())
        throw DomainError("division by zero");
    return {a.num() * b.den(), a.den() * b.num()};
}

std::string to_string(const GaussianInt& z)
{
    std::string s = z.re.get_str();
    if (z.im == 0)
        return s;
    s += z.im < 0 ? "-" : "+";
    s += abs_of(z.im).get_str();
    s += "i";
    return s;
}

std::string to_string(Unit u)
{
    static const char* names[] = {"1", "i", "-1", "-i"};
    return names[u.exponent()];
}

std::string to_string(const GaussianRational& x)
{
    if (x.is_gaussian_integer())
        return to_string(x.num());
    Rational re = x.re(), im = x.im();
    Integer n = lcm_of(re.get_den(), im.get_den());
    Rational a = re * n, b = im * n;
    GaussianInt z(a.get_num(), b.get_num());
    std::string s = to_string(z);
    return (z.im == 0 ? s : "(" + s + ")") + "/" + n.get_str();
}

std::ostream& operator<<(std::ostream& os, const GaussianInt& z)
{
    return os << to_string(z);
}

std::ostream& operator<<(std::ostream& os, Unit u)
{
    return os << to_string(u);
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x)
{
    return os << to_string(x);
}

namespace {

class GaussianParser {
public:
    GaussianParser(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

    GaussianInt parse()
    {
        if (peek() == '(') {
            ++pos_;
            GaussianInt z = parse_sum();
            expect(')');
            return z;
        }
        return parse_sum();
    }

    bool at_end() const { return pos_ == text_.size(); }
    std::size_t position() const { return offset_ + pos_; }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, offset_ + pos_); }

    void expect(char c)
    {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    GaussianInt parse_sum()
    {
        bool have_re = false, have_im = false;
        GaussianInt z;
        for (int term = 0; term < 2; ++term) {
            char c = peek();
            if (term > 0 && c != '+' && c != '-')
                break;
            bool negative = false;
            if (c == '+' || c == '-') {
                negative = c == '-';
                ++pos_;
            }
            std::size_t digits = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek())))
                ++pos_;
            Integer value = digits == pos_ ? Integer(1) : Integer(std::string(text_.substr(digits, pos_ - digits)));
            bool imaginary = peek() == 'i';
            if (imaginary)
                ++pos_;
            else if (digits == pos_)
                fail("expected a Gaussian integer term");
            if (negative)
                value = -value;
            if (imaginary) {
                if (have_im)
                    fail("duplicate imaginary part");
                have_im = true;
                z.im = value;
            }
            else {
                if (have_re || have_im)
                    fail("real part must come first");
                have_re = true;
                z.re = value;
            }
        }
        return z;
    }

    std::string_view text_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

}  // namespace

GaussianInt parse_gaussian(std::string_view text)
{
    GaussianParser p(text, 0);
    GaussianInt z = p.parse();
    if (!p.at_end())
        throw ParseError("unexpected character in Gaussian literal", p.position());
    return z;
}

Unit parse_unit(std::string_view text)
{
    for (Unit u : Unit::all())
        if (text == to_string(u))
            return u;
    throw ParseError("expected one of 1, i, -1, -i", 0);
}

GaussianRational parse_gaussian_rational(std::string_view text)
{
    int depth = 0;
    std::size_t slash = std::string_view::npos;
    for (std::size_t k = 0; k < text.size(); ++k) {
        if (text[k] == '(')
            ++depth;
        else if (text[k] == ')')
            --depth;
        else if (text[k] == '/' && depth == 0) {
            slash = k;
            break;
        }
    }
    auto parse_part = [&](std::size_t begin, std::size_t end) {
        GaussianParser p(text.substr(begin, end - begin), begin);
        GaussianInt z = p.parse();
        if (!p.at_end())
            throw ParseError("unexpected character in Gaussian literal", p.position());
        return z;
    };
    if (slash == std::string_view::npos)
        return GaussianRational(parse_part(0, text.size()));
    GaussianInt num = parse_part(0, slash);
    GaussianInt den = parse_part(slash + 1, text.size());
    if (den.is_zero())
        throw ParseError("zero denominator", slash + 1);
    return {num, den};
}

}  // namespace csl
