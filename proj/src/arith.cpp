#include "csl/arith.hpp"

#include <cctype>

namespace csl {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(long num, long den)
{
    return make_rational(Integer(num), Integer(den));
}

Integer floor_div(const Integer& a, const Integer& b)
{
    if (b == 0)
        throw DomainError("division by zero");
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer floor_of(const Rational& r)
{
    return floor_div(r.get_num(), r.get_den());
}

bool is_integral(const Rational& r)
{
    return r.get_den() == 1;
}

Integer abs_of(const Integer& a)
{
    return a < 0 ? Integer(-a) : a;
}

Integer gcd_of(const Integer& a, const Integer& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm_of(const Integer& a, const Integer& b)
{
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b)
{
    ExtendedGcd r;
    mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer odd_part(Integer n)
{
    if (n == 0)
        throw DomainError("odd part of zero");
    n = abs_of(n);
    mp_bitcnt_t twos = mpz_scan1(n.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(n.get_mpz_t(), n.get_mpz_t(), twos);
    return n;
}

std::string to_string(const Rational& r)
{
    return r.get_str();
}

std::string to_string(const Integer& n)
{
    return n.get_str();
}

namespace {

Integer parse_integer_at(std::string_view text, std::size_t& pos, std::size_t offset)
{
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (digits == pos)
        throw ParseError("expected an integer", offset + pos);
    Integer value(std::string(text.substr(digits, pos - digits)));
    return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::size_t pos = 0;
    Integer num = parse_integer_at(text, pos, 0);
    Integer den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = parse_integer_at(text, pos, 0);
        if (den == 0)
            throw ParseError("zero denominator", pos - 1);
    }
    if (pos != text.size())
        throw ParseError("unexpected character in rational literal", pos);
    return make_rational(num, den);
}

std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t n)
{
    std::vector<std::uint32_t> spf(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (spf[i] != 0)
            continue;
        for (std::uint64_t j = i; j <= n; j += i)
            if (spf[j] == 0)
                spf[j] = static_cast<std::uint32_t>(i);
    }
    return spf;
}

}  // namespace csl
