#pragma once

#include "csl/arith.hpp"

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace csl {

/// Element re + im*i of Z[i].
struct GaussianInt {
    Integer re = 0, im = 0;

    GaussianInt() = default;
    GaussianInt(long r, long i = 0) : re(r), im(i) {}
    GaussianInt(Integer r, Integer i = 0) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    Integer norm() const { return re * re + im * im; }
    GaussianInt conj() const { return {re, Integer(-im)}; }

    friend bool operator==(const GaussianInt& a, const GaussianInt& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussianInt& a, const GaussianInt& b) { return !(a == b); }
};

GaussianInt operator+(const GaussianInt& a, const GaussianInt& b);
GaussianInt operator-(const GaussianInt& a, const GaussianInt& b);
GaussianInt operator-(const GaussianInt& a);
GaussianInt operator*(const GaussianInt& a, const GaussianInt& b);

/// Ordering by (norm, re, im); used for deterministic sorting.
bool norm_order(const GaussianInt& a, const GaussianInt& b);

/// True when b divides a exactly (0 divides only 0).
bool divides(const GaussianInt& b, const GaussianInt& a);
/// a / b; throws DomainError unless the division is exact.
GaussianInt exact_quotient(const GaussianInt& a, const GaussianInt& b);

/// One of 1, i, -1, -i, stored as the exponent k of i^k.
class Unit {
public:
    constexpr Unit() = default;
    static constexpr Unit power(int k) { return Unit(((k % 4) + 4) % 4); }
    static constexpr Unit one() { return Unit(0); }
    static constexpr Unit i() { return Unit(1); }
    static constexpr Unit minus_one() { return Unit(2); }
    static constexpr Unit minus_i() { return Unit(3); }
    static constexpr std::array<Unit, 4> all() { return {Unit(0), Unit(1), Unit(2), Unit(3)}; }

    constexpr int exponent() const { return k_; }
    GaussianInt value() const;
    constexpr Unit conj() const { return power(-k_); }
    constexpr Unit inverse() const { return power(-k_); }

    friend constexpr Unit operator*(Unit a, Unit b) { return power(a.k_ + b.k_); }
    friend constexpr bool operator==(Unit a, Unit b) { return a.k_ == b.k_; }
    friend constexpr bool operator!=(Unit a, Unit b) { return a.k_ != b.k_; }

private:
    constexpr explicit Unit(int k) : k_(k) {}
    int k_ = 0;
};

GaussianInt operator*(Unit u, const GaussianInt& z);

/// Returns the unit u with z = u * w when z and w are associates.
std::optional<Unit> associate_unit(const GaussianInt& z, const GaussianInt& w);

/// The associate of z with re > 0 and im >= 0 (0 maps to 0).
GaussianInt canonical_associate(const GaussianInt& z);
/// Unit u with z = u * canonical_associate(z); z must be nonzero.
Unit canonical_unit(const GaussianInt& z);

/// Canonical-associate gcd; throws DomainError when both inputs are zero.
GaussianInt gcd(const GaussianInt& a, const GaussianInt& b);

/// s a + t b = g with g the canonical gcd.
struct GaussianBezout {
    GaussianInt g, s, t;
};
GaussianBezout bezout(const GaussianInt& a, const GaussianInt& b);

/// a = quotient * b + remainder, with each coordinate of a/b rounded to the
/// nearest integer (ties toward minus infinity), so N(r) <= N(b)/2.
struct EuclidDivision {
    GaussianInt quotient, remainder;
};
EuclidDivision euclid_divide(const GaussianInt& a, const GaussianInt& b);

struct GaussianFactorization {
    Unit unit;
    std::vector<std::pair<GaussianInt, unsigned>> factors;  // canonical primes, sorted by norm_order

    GaussianInt product() const;
};

/// Factorization into canonical Gaussian primes; throws DomainError for 0.
GaussianFactorization factor(const GaussianInt& z);

/// Canonical Gaussian prime of norm p for a rational prime p = 1 (mod 4).
GaussianInt split_prime(const Integer& p);

bool is_visible(const GaussianInt& z);
bool is_odd_visible(const GaussianInt& z);

/// Element num/den of Q(i), reduced, with den in canonical-associate form.
class GaussianRational {
public:
    GaussianRational() : num_(0), den_(1) {}
    GaussianRational(GaussianInt num, GaussianInt den = GaussianInt(1));

    static GaussianRational from_parts(const Rational& re, const Rational& im);

    const GaussianInt& num() const { return num_; }
    const GaussianInt& den() const { return den_; }
    Rational re() const;
    Rational im() const;
    bool is_gaussian_integer() const { return den_ == GaussianInt(1); }
    GaussianRational conj() const { return {num_.conj(), den_.conj()}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

private:
    GaussianInt num_, den_;
};

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);

std::string to_string(const GaussianInt& z);
std::string to_string(Unit u);
std::string to_string(const GaussianRational& x);
std::ostream& operator<<(std::ostream& os, const GaussianInt& z);
std::ostream& operator<<(std::ostream& os, Unit u);
std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

/// Accepts "3", "-2i", "i", "1+2i", "1-i", "(2+1i)" and the like.
GaussianInt parse_gaussian(std::string_view text);
/// Accepts "1", "-1", "i", "-i".
Unit parse_unit(std::string_view text);
/// Accepts "p" or "p/q" with p, q Gaussian literals, e.g. "(2+1i)/5".
GaussianRational parse_gaussian_rational(std::string_view text);

}  // namespace csl
