#include "csl/cubic_csl.hpp"

#include "csl/multilattice.hpp"

#include <set>

namespace csl {

RationalLattice cubic_lattice(CubicKind kind)
{
    Rational h(1, 2);
    switch (kind) {
    case CubicKind::Primitive:
        return RationalLattice::integer(3);
    case CubicKind::BodyCentered:
        return RationalLattice(RationalMatrix{{1, 0, h}, {0, 1, h}, {0, 0, h}});
    case CubicKind::FaceCentered:
        return RationalLattice(RationalMatrix{{1, 0, 1}, {1, 1, 0}, {0, 1, 1}});
    }
    throw DomainError("unknown cubic lattice");
}

CubicKind parse_cubic_kind(std::string_view text)
{
    if (text == "P" || text == "primitive" || text == "sc")
        return CubicKind::Primitive;
    if (text == "B" || text == "bcc" || text == "body-centered")
        return CubicKind::BodyCentered;
    if (text == "F" || text == "fcc" || text == "face-centered")
        return CubicKind::FaceCentered;
    throw ParseError("unknown cubic lattice kind '" + std::string(text) + "'", 0);
}

std::string to_string(CubicKind kind)
{
    switch (kind) {
    case CubicKind::Primitive: return "primitive";
    case CubicKind::BodyCentered: return "bcc";
    case CubicKind::FaceCentered: return "fcc";
    }
    return "?";
}

std::array<IntVector, 4> spanset_vectors(const Quaternion& q)
{
    if (!q.is_primitive())
        throw DomainError("primitive quaternion expected: " + to_string(q));
    Integer q0 = q.lipschitz(0), q1 = q.lipschitz(1), q2 = q.lipschitz(2), q3 = q.lipschitz(3);
    return {IntVector{q1, q2, q3}, IntVector{q0, q3, Integer(-q2)}, IntVector{Integer(-q3), q0, q1},
            IntVector{q2, Integer(-q1), q0}};
}

RationalLattice csl_bcc_basis(const Quaternion& q)
{
    auto r = spanset_vectors(q);
    auto half = [](const IntVector& v) {
        RationalVector out(3);
        for (std::size_t k = 0; k < 3; ++k)
            out[k] = make_rational(v[k], Integer(2));
        return out;
    };
    auto sum = [](const IntVector& a, const IntVector& b) {
        IntVector out(3);
        for (std::size_t k = 0; k < 3; ++k)
            out[k] = a[k] + b[k];
        return out;
    };
    std::vector<RationalVector> gens;
    Integer n = q.norm();
    if (n % 2 != 0) {
        IntVector total = sum(sum(r[0], r[1]), sum(r[2], r[3]));
        for (const auto& v : r)
            gens.push_back(to_rational(v));
        gens.push_back(half(total));
    } else if (n % 4 == 2) {
        gens.push_back(to_rational(r[0]));
        for (std::size_t k = 1; k < 4; ++k)
            gens.push_back(half(sum(r[0], r[k])));
    } else {
        for (const auto& v : r)
            gens.push_back(half(v));
    }
    return RationalLattice(RationalMatrix::from_columns(gens));
}

RationalLattice csl_cubic(CubicKind kind, const Quaternion& q)
{
    return csl(cubic_lattice(kind), cayley_matrix(q));
}

RationalLattice dsc_cubic(CubicKind kind, const Quaternion& q)
{
    return dsc(cubic_lattice(kind), cayley_matrix(q));
}

std::vector<std::uint64_t> cubic_csl_counts(std::uint32_t max_m)
{
    std::vector<std::set<CosetLattice>> seen(static_cast<std::size_t>(max_m) + 1);
    RationalVector origin(3, Rational(0));
    for (const auto& q : enumerate_primitive(4 * max_m)) {
        Integer m = cubic_index(q);
        if (m > max_m)
            continue;
        seen[m.get_ui()].insert(CosetLattice(origin, csl_cubic(CubicKind::Primitive, q)));
    }
    std::vector<std::uint64_t> counts(seen.size(), 0);
    for (std::size_t m = 1; m < seen.size(); ++m)
        counts[m] = seen[m].size();
    return counts;
}

std::vector<std::uint64_t> cubic_rotation_counts(std::uint32_t max_m)
{
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_m) + 1, 0);
    for (const auto& q : enumerate_primitive(4 * max_m)) {
        Integer m = cubic_index(q);
        if (m <= max_m)
            ++counts[m.get_ui()];
    }
    return counts;
}

}  // namespace csl
