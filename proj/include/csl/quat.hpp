#pragma once

#include "csl/matrix.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace csl {

/// Hurwitz quaternion q0 + q1 i + q2 j + q3 k, stored as doubled coordinates
/// (all even for Lipschitz values, all odd for half-integer ones).
class Quaternion {
public:
    Quaternion() : Quaternion(0, 0, 0, 0) {}
    Quaternion(long q0, long q1, long q2, long q3);
    Quaternion(const Integer& q0, const Integer& q1, const Integer& q2, const Integer& q3);
    /// Throws DomainError unless the parities agree.
    static Quaternion from_doubled(std::array<Integer, 4> doubled);

    const std::array<Integer, 4>& doubled() const { return d_; }
    Rational component(std::size_t k) const;
    /// Integer component; throws DomainError for a half-integer quaternion.
    Integer lipschitz(std::size_t k) const;

    bool is_lipschitz() const { return d_[0] % 2 == 0; }
    bool is_zero() const;
    /// Lipschitz with coprime components.
    bool is_primitive() const;

    Quaternion conj() const;
    /// |q|^2, an integer for Hurwitz quaternions.
    Integer norm() const;

    friend bool operator==(const Quaternion& a, const Quaternion& b) { return a.d_ == b.d_; }
    friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

private:
    explicit Quaternion(std::array<Integer, 4> doubled) : d_(std::move(doubled)) {}
    std::array<Integer, 4> d_;
};

Quaternion operator*(const Quaternion& a, const Quaternion& b);
Quaternion operator+(const Quaternion& a, const Quaternion& b);
Quaternion operator-(const Quaternion& a);
Rational inner_product(const Quaternion& a, const Quaternion& b);

/// Matrix of x -> q x q^{-1} on the imaginary part; throws for q = 0.
RationalMatrix cayley_matrix(const Quaternion& q);
/// Odd part of |q|^2.
Integer cubic_index(const Quaternion& q);

/// q or -q, whichever has its first nonzero component positive.
Quaternion canonical_sign(const Quaternion& q);

/// One primitive quaternion per +-pair with |q|^2 <= max_norm, sorted by
/// norm and then by components in decreasing lexicographic order.
std::vector<Quaternion> enumerate_primitive(std::uint32_t max_norm);

/// "a,b,c,d" with integer or half-integer components.
Quaternion parse_quaternion(std::string_view text);
std::string to_string(const Quaternion& q);

}  // namespace csl
