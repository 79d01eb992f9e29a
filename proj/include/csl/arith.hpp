#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace csl {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an operation is applied outside its mathematical domain
/// (zero divisor, singular basis, non-orthogonal isometry, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised on malformed textual input. `position` is the 0-based offset of
/// the offending character in the parsed string.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

Integer floor_div(const Integer& a, const Integer& b);
Integer floor_of(const Rational& r);
bool is_integral(const Rational& r);
Integer abs_of(const Integer& a);
Integer gcd_of(const Integer& a, const Integer& b);
Integer lcm_of(const Integer& a, const Integer& b);

/// Extended Euclid: returns g = gcd(a, b) >= 0 together with x, y such that
/// a*x + b*y = g.
struct ExtendedGcd {
    Integer g, x, y;
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

/// Odd part of a positive integer (all factors of two removed).
Integer odd_part(Integer n);

/// "p/q" for non-integers, "p" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

/// Parses "p", "-p" or "p/q" with decimal integers. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Sieve of smallest prime factors for 0..n (spf[0] = spf[1] = 0).
std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t n);

}  // namespace csl
