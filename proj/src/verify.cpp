#include "csl/verify.hpp"

#include "csl/cubic_csl.hpp"
#include "csl/diamond.hpp"
#include "csl/oracle.hpp"
#include "csl/series.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace csl {

bool VerifyReport::passed() const
{
    return failures() == 0;
}

std::size_t VerifyReport::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const VerifyCheck& c) { return !c.passed; }));
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"square", "shifted", "cubic", "diamond", "multilattice"};
    return names;
}

namespace {

class Tally {
public:
    explicit Tally(std::string name) : name_(std::move(name)) {}

    void record(bool ok, const std::function<std::string()>& describe)
    {
        ++cases_;
        if (!ok && failures_++ == 0)
            first_ = describe();
    }

    VerifyCheck finish() const
    {
        VerifyCheck c{name_, failures_ == 0, std::to_string(cases_) + " cases"};
        if (failures_)
            c.detail += ", " + std::to_string(failures_) + " failed; first: " + first_;
        return c;
    }

private:
    std::string name_;
    std::size_t cases_ = 0, failures_ = 0;
    std::string first_;
};

RationalVector zero(std::size_t d)
{
    return RationalVector(d, Rational(0));
}

CosetLattice image(const RationalMatrix& r, const RationalVector& x, const RationalLattice& l)
{
    return CosetLattice(r * x, l.transformed(r));
}

void square_suite(std::uint32_t bound, VerifyReport& report)
{
    RationalLattice z2 = RationalLattice::integer(2);
    Tally oracle_csl("square: zZ[i] equals the oracle intersection of Z^2 and R Z^2");
    Tally snf_index("square: Smith index of zZ[i] equals N(z)");
    Tally orthogonal("square: isometry matrix is orthogonal with denominators dividing N(z)");
    Tally dsc_dual("square: DSC equals the dual of the CSL of the dual lattice");
    for (const auto& c : enumerate_coincidences(bound, true)) {
        RationalMatrix r = isometry_matrix(c);
        RationalLattice l = csl_basis(c);
        auto meet = oracle::coset_intersect(CosetLattice(zero(2), z2), image(r, zero(2), z2));
        oracle_csl.record(meet && *meet == CosetLattice(zero(2), l), [&] { return to_string(c); });
        snf_index.record(oracle::index_by_snf(z2, l) == coincidence_index(c), [&] { return to_string(c); });
        bool denominators = true;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                denominators = denominators && coincidence_index(c) % r(i, j).get_den() == 0;
        orthogonal.record(is_orthogonal(r) && denominators, [&] { return to_string(c); });
        dsc_dual.record(dsc_basis(c) == csl(z2.dual(), r).dual(), [&] { return to_string(c); });
    }

    std::vector<std::uint64_t> counted(static_cast<std::size_t>(bound) + 1, 0);
    for (const auto& z : enumerate_numerators(bound))
        ++counted[z.norm().get_ui()];
    Tally closed("square: enumerated CSL counts match the prime-power rule");
    Tally multiplicative("square: enumerated counts are multiplicative");
    for (std::uint32_t m = 1; m <= bound; ++m)
        closed.record(counted[m] == closed_form(CountingId::SquareCSL, m), [&] { return std::to_string(m); });
    for (std::uint32_t a = 1; a <= bound; ++a)
        for (std::uint32_t b = a + 1; std::uint64_t(a) * b <= bound; ++b)
            if (std::gcd(a, b) == 1)
                multiplicative.record(counted[a * b] == counted[a] * counted[b],
                                      [&] { return std::to_string(a) + "*" + std::to_string(b); });
    for (const auto* t : {&oracle_csl, &snf_index, &orthogonal, &dsc_dual, &closed, &multiplicative})
        report.checks.push_back(t->finish());
}

const std::vector<std::string>& sample_shifts()
{
    static const std::vector<std::string> shifts{"1/2",     "(1+i)/2", "1/3",     "(1+i)/3",
                                                 "1/5",     "(2+i)/5", "(2+i)/6", "(3+2i)/7"};
    return shifts;
}

void shifted_suite(std::uint32_t bound, VerifyReport& report)
{
    RationalLattice z2 = RationalLattice::integer(2);
    Tally engine_member("shifted: membership agrees with the generic engine");
    Tally oracle_coset("shifted: CSL coset equals the oracle coset intersection");
    Tally engine_coset("shifted: CSL coset equals the engine coset");
    Tally inverse_closed("shifted: members are closed under inverses");
    for (const auto& text : sample_shifts()) {
        GaussianRational x = parse_gaussian_rational(text);
        RationalVector xv = to_vector(x);
        ShiftedLattice s(z2, xv);
        for (const auto& c : enumerate_coincidences(bound, true)) {
            RationalMatrix r = isometry_matrix(c);
            auto label = [&] { return text + " " + to_string(c); };
            bool member = is_member(c, x);
            auto engine = shifted_coincidence(s, r);
            engine_member.record(member == engine.has_value(), label);
            inverse_closed.record(!member || is_member(inverse(c), x), label);
            auto meet = oracle::coset_intersect(CosetLattice(xv, z2), image(r, xv, z2));
            if (!member) {
                oracle_coset.record(!meet.has_value(), label);
                continue;
            }
            auto rep = shifted_csl_representative(c, x);
            CosetLattice mine(to_vector(*rep), csl_basis(c));
            oracle_coset.record(meet && *meet == mine, label);
            engine_coset.record(engine && *engine == mine, label);
        }
    }

    Tally euclid("shifted: Euclidean remainder test agrees with divisibility for odd q");
    for (long q : {3L, 5L, 7L, 9L, 15L, 21L})
        for (const auto& c : enumerate_coincidences(bound, false))
            euclid.record(soc_membership_euclid(c, Integer(q)) == soc_membership_rational(c, GaussianInt(q)),
                          [&] { return std::to_string(q) + " " + to_string(c); });

    Tally series("shifted: enumerated coefficients match the closed forms");
    auto fifth = coefficients(parse_counting_function("shift:1/5"), bound);
    auto nongroup = coefficients(parse_counting_function("shift:(2+i)/5"), bound);
    auto sixth = rotation_counts(parse_counting_function("shift:(2+i)/6"), bound);
    for (std::uint32_t m = 1; m <= bound; ++m)
        series.record(fifth[m] == fifth_shift_coefficient(m) && nongroup[m] == nongroup_shift_coefficient(m) &&
                          sixth[m] == sixth_shift_rotation_count(m),
                      [&] { return std::to_string(m); });
    for (const auto* t : {&engine_member, &oracle_coset, &engine_coset, &inverse_closed, &euclid, &series})
        report.checks.push_back(t->finish());
}

void cubic_suite(std::uint32_t bound, VerifyReport& report)
{
    RationalLattice bcc = cubic_lattice(CubicKind::BodyCentered);
    Tally spanset("cubic: span-set basis equals the oracle intersection in the bcc lattice");
    Tally index("cubic: Smith index equals the odd part of |q|^2 for every cubic lattice");
    Tally duality("cubic: DSC equals the dual of the CSL of the dual lattice");
    Tally improper("cubic: rotoreflection -R_q has the CSL of R_q");
    for (const auto& q : enumerate_primitive(bound)) {
        RationalMatrix r = cayley_matrix(q);
        auto label = [&] { return to_string(q); };
        RationalLattice span = csl_bcc_basis(q);
        auto meet = oracle::coset_intersect(CosetLattice(zero(3), bcc), image(r, zero(3), bcc));
        spanset.record(meet && meet->sublattice() == span, label);
        bool same = true;
        for (CubicKind k : {CubicKind::Primitive, CubicKind::BodyCentered, CubicKind::FaceCentered}) {
            RationalLattice l = cubic_lattice(k);
            RationalLattice c = csl_cubic(k, q);
            same = same && oracle::index_by_snf(l, c) == cubic_index(q);
            duality.record(dsc_cubic(k, q) == csl(l.dual(), r).dual(), label);
            improper.record(csl(l, scale(Rational(-1), r)) == c, label);
        }
        index.record(same, label);
    }
    Tally counts("cubic: enumerated CSL counts match the prime-power rule");
    std::uint32_t max_m = std::max<std::uint32_t>(1, bound / 4);
    auto counted = cubic_csl_counts(max_m);
    for (std::uint32_t m = 1; m <= max_m; ++m)
        counts.record(counted[m] == closed_form(CountingId::CubicCSL, m), [&] { return std::to_string(m); });
    for (const auto* t : {&spanset, &index, &duality, &improper, &counts})
        report.checks.push_back(t->finish());
}

void diamond_suite(std::uint32_t bound, VerifyReport& report)
{
    Multilattice d = diamond_packing();
    const RationalLattice& fcc = d.lattice();
    RationalVector x = diamond_shift();
    Tally membership("diamond: mod-4 membership rule agrees with the engine");
    Tally table("diamond: index and coset count agree with the engine CSML");
    Tally oracle_cosets("diamond: CSML cosets equal the oracle pairwise intersections");
    Tally outside("diamond: x and R x lie outside fcc + R fcc");
    for (const auto& q : enumerate_primitive(bound))
        for (bool imp : {false, true}) {
            DiamondIsometry iso{q, imp};
            auto label = [&] { return to_string(q) + (imp ? " improper" : ""); };
            membership.record(shifted_fcc_member(iso) == shifted_fcc_member_engine(iso), label);
            DiamondResult res = diamond_coincidence(iso);
            table.record(res.index == res.csml.index && res.coset_count == res.csml.cosets.size(), label);
            RationalMatrix r = diamond_matrix(iso);
            std::vector<CosetLattice> expected;
            for (const auto& xj : d.shifts())
                for (const auto& xk : d.shifts())
                    if (auto c = oracle::coset_intersect(CosetLattice(xk, fcc), image(r, xj, fcc)))
                        expected.push_back(*c);
            std::sort(expected.begin(), expected.end());
            oracle_cosets.record(expected == res.csml.cosets, label);
            if (!imp) {
                RationalLattice sum = dsc(fcc, r);
                outside.record(!sum.contains(x) && !sum.contains(r * x), label);
            }
        }
    Tally counts("diamond: enumerated CSML counts match the closed form");
    std::uint32_t max_m = std::max<std::uint32_t>(1, bound / 4);
    auto counted = diamond_csml_counts(max_m);
    for (std::uint32_t m = 1; m <= max_m; ++m)
        counts.record(counted[m] == f_diamond(m), [&] { return std::to_string(m); });
    for (const auto* t : {&membership, &table, &oracle_cosets, &outside, &counts})
        report.checks.push_back(t->finish());
}

void multilattice_suite(std::uint32_t bound, VerifyReport& report)
{
    RationalLattice z2 = RationalLattice::integer(2);
    Tally duality("multilattice: intersection equals the dual of the sum of duals");
    Tally acsl_oracle("multilattice: affine CSL equals the oracle coset intersection");
    Tally inverse_closed("multilattice: affine coincidences are closed under inverses");
    Tally index("multilattice: engine index equals the Smith index");
    const std::vector<RationalVector> translations{
        {Rational(1), Rational(0)}, {Rational(1, 5), Rational(2, 5)}, {Rational(1, 2), Rational(0)}};
    for (const auto& c : enumerate_coincidences(bound, true)) {
        RationalMatrix r = isometry_matrix(c);
        RationalLattice rl = z2.transformed(r);
        auto label = [&] { return to_string(c); };
        duality.record(lattice_intersect(z2, rl) == lattice_sum(z2.dual(), rl.dual()).dual(), label);
        index.record(Rational(oracle::index_by_snf(z2, csl(z2, r))) == coincidence_index(z2, r), label);
        for (const auto& v : translations) {
            AffineIsometry iso(r, v);
            bool is_coincidence = is_affine_coincidence(z2, iso);
            inverse_closed.record(!is_coincidence || is_affine_coincidence(z2, iso.inverse()), label);
            auto meet = oracle::coset_intersect(CosetLattice(zero(2), z2), CosetLattice(v, rl));
            if (!is_coincidence) {
                acsl_oracle.record(!meet.has_value(), label);
                continue;
            }
            acsl_oracle.record(meet && *meet == acsl(z2, iso), label);
        }
    }
    for (const auto* t : {&duality, &acsl_oracle, &inverse_closed, &index})
        report.checks.push_back(t->finish());
}

}  // namespace

VerifyReport run_suite(std::string_view suite, std::uint32_t bound)
{
    if (bound == 0)
        throw DomainError("bound must be positive");
    VerifyReport report{std::string(suite), bound, {}};
    if (suite == "square")
        square_suite(bound, report);
    else if (suite == "shifted")
        shifted_suite(bound, report);
    else if (suite == "cubic")
        cubic_suite(bound, report);
    else if (suite == "diamond")
        diamond_suite(bound, report);
    else if (suite == "multilattice")
        multilattice_suite(bound, report);
    else
        throw DomainError("unknown verification suite '" + std::string(suite) + "'");
    return report;
}

}  // namespace csl
