#include "csl/quat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace csl {

Quaternion::Quaternion(long q0, long q1, long q2, long q3)
    : d_{Integer(2 * q0), Integer(2 * q1), Integer(2 * q2), Integer(2 * q3)}
{
}

Quaternion::Quaternion(const Integer& q0, const Integer& q1, const Integer& q2, const Integer& q3)
    : d_{Integer(2 * q0), Integer(2 * q1), Integer(2 * q2), Integer(2 * q3)}
{
}

Quaternion Quaternion::from_doubled(std::array<Integer, 4> doubled)
{
    auto parity = [](const Integer& v) { return v % 2 != 0; };
    for (const auto& v : doubled)
        if (parity(v) != parity(doubled[0]))
            throw DomainError("components must be all integers or all half-integers");
    return Quaternion(std::move(doubled));
}

Rational Quaternion::component(std::size_t k) const
{
    return make_rational(d_.at(k), Integer(2));
}

Integer Quaternion::lipschitz(std::size_t k) const
{
    if (!is_lipschitz())
        throw DomainError("half-integer quaternion " + to_string(*this));
    return d_.at(k) / 2;
}

bool Quaternion::is_zero() const
{
    return std::all_of(d_.begin(), d_.end(), [](const Integer& v) { return v == 0; });
}

bool Quaternion::is_primitive() const
{
    if (!is_lipschitz())
        return false;
    Integer g = 0;
    for (const auto& v : d_)
        g = gcd_of(g, v / 2);
    return g == 1;
}

Quaternion Quaternion::conj() const
{
    return Quaternion(std::array<Integer, 4>{d_[0], -d_[1], -d_[2], -d_[3]});
}

Integer Quaternion::norm() const
{
    Integer s = 0;
    for (const auto& v : d_)
        s += v * v;
    return s / 4;
}

Quaternion operator*(const Quaternion& a, const Quaternion& b)
{
    const auto& x = a.doubled();
    const auto& y = b.doubled();
    std::array<Integer, 4> p{
        x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
        x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
        x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
        x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0],
    };
    for (auto& v : p)
        v /= 2;
    return Quaternion::from_doubled(p);
}

Quaternion operator+(const Quaternion& a, const Quaternion& b)
{
    std::array<Integer, 4> s;
    for (std::size_t k = 0; k < 4; ++k)
        s[k] = a.doubled()[k] + b.doubled()[k];
    return Quaternion::from_doubled(s);
}

Quaternion operator-(const Quaternion& a)
{
    std::array<Integer, 4> s;
    for (std::size_t k = 0; k < 4; ++k)
        s[k] = -a.doubled()[k];
    return Quaternion::from_doubled(s);
}

Rational inner_product(const Quaternion& a, const Quaternion& b)
{
    Integer s = 0;
    for (std::size_t k = 0; k < 4; ++k)
        s += a.doubled()[k] * b.doubled()[k];
    return make_rational(s, Integer(4));
}

RationalMatrix cayley_matrix(const Quaternion& q)
{
    if (q.is_zero())
        throw DomainError("zero quaternion has no rotation");
    const auto& d = q.doubled();
    const Integer &a = d[0], &b = d[1], &c = d[2], &e = d[3];
    Integer n = a * a + b * b + c * c + e * e;
    auto r = [&](const Integer& v) { return make_rational(v, n); };
    Integer aa = a * a, bb = b * b, cc = c * c, ee = e * e;
    return {
        {r(aa + bb - cc - ee), r(2 * (b * c - a * e)), r(2 * (b * e + a * c))},
        {r(2 * (b * c + a * e)), r(aa - bb + cc - ee), r(2 * (c * e - a * b))},
        {r(2 * (b * e - a * c)), r(2 * (c * e + a * b)), r(aa - bb - cc + ee)},
    };
}

Integer cubic_index(const Quaternion& q)
{
    if (q.is_zero())
        throw DomainError("zero quaternion has no rotation");
    return odd_part(q.norm());
}

Quaternion canonical_sign(const Quaternion& q)
{
    for (const auto& v : q.doubled()) {
        if (v > 0)
            return q;
        if (v < 0)
            return -q;
    }
    return q;
}

std::vector<Quaternion> enumerate_primitive(std::uint32_t max_norm)
{
    using Entry = std::array<long, 4>;
    std::vector<Entry> found;
    long bound = static_cast<long>(std::sqrt(static_cast<double>(max_norm))) + 1;
    long limit = static_cast<long>(max_norm);
    for (long a = 0; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b) {
            if (a == 0 && b < 0)
                continue;
            long nb = a * a + b * b;
            if (nb > limit)
                continue;
            for (long c = -bound; c <= bound; ++c) {
                if (a == 0 && b == 0 && c < 0)
                    continue;
                long nc = nb + c * c;
                if (nc > limit)
                    continue;
                for (long e = -bound; e <= bound; ++e) {
                    if (a == 0 && b == 0 && c == 0 && e <= 0)
                        continue;
                    if (nc + e * e > limit)
                        continue;
                    if (std::gcd(std::gcd(a, b), std::gcd(c, e)) != 1)
                        continue;
                    found.push_back({a, b, c, e});
                }
            }
        }
    auto norm = [](const Entry& q) { return q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]; };
    std::sort(found.begin(), found.end(), [&](const Entry& x, const Entry& y) {
        long nx = norm(x), ny = norm(y);
        if (nx != ny)
            return nx < ny;
        return x > y;
    });
    std::vector<Quaternion> out;
    out.reserve(found.size());
    for (const auto& q : found)
        out.emplace_back(q[0], q[1], q[2], q[3]);
    return out;
}

Quaternion parse_quaternion(std::string_view text)
{
    std::array<Integer, 4> d;
    std::size_t start = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        std::size_t comma = text.find(',', start);
        if ((comma == std::string_view::npos) != (k == 3))
            throw ParseError("quaternion needs exactly four comma-separated components", start);
        std::string_view part = text.substr(start, k == 3 ? std::string_view::npos : comma - start);
        Rational twice;
        try {
            twice = 2 * parse_rational(part);
        } catch (const ParseError& e) {
            throw ParseError("malformed quaternion component", start + e.position());
        }
        if (!is_integral(twice))
            throw ParseError("quaternion components must be integers or half-integers", start);
        d[k] = twice.get_num();
        start = comma + 1;
    }
    try {
        return Quaternion::from_doubled(d);
    } catch (const DomainError&) {
        throw ParseError("components must be all integers or all half-integers", 0);
    }
}

std::string to_string(const Quaternion& q)
{
    std::string s;
    for (std::size_t k = 0; k < 4; ++k) {
        if (k)
            s += ',';
        s += to_string(q.component(k));
    }
    return s;
}

}  // namespace csl
