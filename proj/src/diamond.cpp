#include "csl/diamond.hpp"

#include <set>

namespace csl {

RationalLattice diamond_fcc()
{
    return RationalLattice(RationalMatrix{{1, 0, 1}, {1, 1, 0}, {0, 1, 1}});
}

RationalVector diamond_shift()
{
    return RationalVector(3, Rational(1, 2));
}

Multilattice diamond_packing()
{
    return Multilattice(diamond_fcc(), {RationalVector(3, Rational(0)), diamond_shift()});
}

RationalMatrix diamond_matrix(const DiamondIsometry& iso)
{
    RationalMatrix r = cayley_matrix(iso.q);
    return iso.improper ? scale(Rational(-1), r) : r;
}

NormClass norm_class(const Quaternion& q)
{
    Integer n = q.norm();
    if (n % 2 != 0)
        return NormClass::Odd;
    return n % 4 == 2 ? NormClass::TwoMod4 : NormClass::ZeroMod4;
}

std::string to_string(NormClass c)
{
    switch (c) {
    case NormClass::Odd: return "odd";
    case NormClass::TwoMod4: return "2mod4";
    case NormClass::ZeroMod4: return "0mod4";
    }
    return "?";
}

bool shifted_fcc_member(const DiamondIsometry& iso)
{
    bool two_mod_four = norm_class(iso.q) == NormClass::TwoMod4;
    return iso.improper == two_mod_four;
}

bool shifted_fcc_member_engine(const DiamondIsometry& iso)
{
    ShiftedLattice s(diamond_fcc(), diamond_shift());
    return shifted_coincidence(s, diamond_matrix(iso)).has_value();
}

DiamondResult diamond_coincidence(const DiamondIsometry& iso)
{
    if (!iso.q.is_primitive())
        throw DomainError("primitive quaternion expected: " + to_string(iso.q));
    DiamondResult r;
    r.norm_class = norm_class(iso.q);
    Rational n(iso.q.norm());
    switch (r.norm_class) {
    case NormClass::Odd:
        r.index = iso.improper ? 2 * n : n;
        r.coset_count = iso.improper ? 1 : 2;
        break;
    case NormClass::TwoMod4:
        r.index = iso.improper ? n / 2 : n;
        r.coset_count = iso.improper ? 2 : 1;
        break;
    case NormClass::ZeroMod4:
        r.index = iso.improper ? n / 2 : n / 4;
        r.coset_count = iso.improper ? 1 : 2;
        break;
    }
    r.csml = multilattice_coincidence(diamond_packing(), diamond_matrix(iso));
    return r;
}

std::uint64_t f_diamond(std::uint64_t m)
{
    if (m == 0)
        throw DomainError("index must be positive");
    std::uint64_t f = 1;
    auto prime_power = [&](std::uint64_t p, unsigned r, std::uint64_t pk) {
        if (p == 2)
            f *= r == 1 ? 1 : 0;
        else
            f *= (p + 1) * (pk / p);
    };
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0)
            continue;
        unsigned r = 0;
        std::uint64_t pk = 1;
        for (; m % p == 0; m /= p, pk *= p)
            ++r;
        prime_power(p, r, pk);
    }
    if (m > 1)
        prime_power(m, 1, m);
    return f;
}

std::vector<std::uint64_t> diamond_csml_counts(std::uint32_t max_m)
{
    std::vector<std::set<std::vector<CosetLattice>>> seen(static_cast<std::size_t>(max_m) + 1);
    Multilattice d = diamond_packing();
    for (const auto& q : enumerate_primitive(4 * max_m)) {
        // The index is at least half the lattice index.
        if (cubic_index(q) > 2 * max_m)
            continue;
        for (bool improper : {false, true}) {
            DiamondIsometry iso{q, improper};
            CsmlDescription c = multilattice_coincidence(d, diamond_matrix(iso));
            if (c.index > max_m)
                continue;
            if (!is_integral(c.index))
                throw DomainError("non-integral diamond index for " + to_string(q));
            seen[c.index.get_num().get_ui()].insert(c.cosets);
        }
    }
    std::vector<std::uint64_t> counts(seen.size(), 0);
    for (std::size_t m = 1; m < seen.size(); ++m)
        counts[m] = seen[m].size();
    return counts;
}

ShiftedFccCounts shifted_fcc_counts(std::uint32_t max_m)
{
    std::size_t size = static_cast<std::size_t>(max_m) + 1;
    ShiftedFccCounts out{std::vector<std::uint64_t>(size, 0), std::vector<std::uint64_t>(size, 0),
                         std::vector<std::uint64_t>(size, 0)};
    std::vector<std::set<CosetLattice>> seen(size);
    ShiftedLattice s(diamond_fcc(), diamond_shift());
    for (const auto& q : enumerate_primitive(4 * max_m)) {
        Integer m = cubic_index(q);
        if (m > max_m)
            continue;
        std::size_t k = m.get_ui();
        for (bool improper : {false, true}) {
            auto coset = shifted_coincidence(s, diamond_matrix({q, improper}));
            if (!coset)
                continue;
            seen[k].insert(*coset);
            ++out.isometries[k];
            if (!improper)
                ++out.rotations[k];
        }
    }
    for (std::size_t m = 1; m < size; ++m)
        out.csls[m] = seen[m].size();
    return out;
}

}  // namespace csl
