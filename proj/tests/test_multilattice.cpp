#include "csl/multilattice.hpp"
#include "csl/oracle.hpp"
#include "csl/square_csl.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace csl;

namespace {

RationalVector v2(Rational a, Rational b) { return {a, b}; }

RationalMatrix sigma5() { return isometry_matrix(make_coincidence(GaussianInt(1, 2), Unit::one())); }

RationalLattice random_lattice(std::mt19937& rng, std::size_t d)
{
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    for (;;) {
        RationalMatrix m(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                m(i, j) = make_rational(num(rng), den(rng));
        if (determinant(m) != 0)
            return RationalLattice(m);
    }
}

}  // namespace

TEST(Multilattice, SumAndIntersectExamples)
{
    RationalLattice z2 = RationalLattice::integer(2);
    EXPECT_EQ(lattice_intersect(z2, z2), z2);
    RationalLattice rz2 = z2.transformed(sigma5());
    RationalLattice meet = lattice_intersect(z2, rz2);
    EXPECT_EQ(meet, RationalLattice(RationalMatrix{{1, -2}, {2, 1}}));
    EXPECT_EQ(sublattice_index(z2, meet), 5);
    RationalLattice sum = lattice_sum(z2, rz2);
    EXPECT_EQ(sum, RationalLattice(RationalMatrix{{Rational(1, 5), Rational(-2, 5)}, {Rational(2, 5), Rational(1, 5)}}));
    EXPECT_EQ(sublattice_index(sum, z2), 5);
    EXPECT_EQ(csl::csl(z2, sigma5()), meet);
    EXPECT_EQ(dsc(z2, sigma5()), sum);
}

TEST(Multilattice, IntersectionIsDualOfSumOfDuals)
{
    std::mt19937 rng(17);
    for (std::size_t d : {2u, 3u, 4u})
        for (int k = 0; k < 30; ++k) {
            RationalLattice a = random_lattice(rng, d), b = random_lattice(rng, d);
            EXPECT_EQ(lattice_intersect(a, b), lattice_sum(a.dual(), b.dual()).dual());
            EXPECT_EQ(oracle::coset_intersect(CosetLattice(RationalVector(d, Rational(0)), a),
                                              CosetLattice(RationalVector(d, Rational(0)), b))
                          ->sublattice(),
                      lattice_intersect(a, b));
        }
}

TEST(Multilattice, NonOrthogonalRejected)
{
    EXPECT_THROW(AffineIsometry(RationalMatrix{{1, 1}, {0, 1}}), DomainError);
    EXPECT_THROW(csl::csl(RationalLattice::integer(2), RationalMatrix{{2, 0}, {0, 1}}), DomainError);
}

TEST(Multilattice, AffineCoincidenceExamples)
{
    RationalLattice z2 = RationalLattice::integer(2);
    EXPECT_TRUE(is_affine_coincidence(z2, AffineIsometry(RationalMatrix::identity(2), v2(3, -7))));
    EXPECT_TRUE(is_affine_coincidence(z2, AffineIsometry(sigma5(), v2(Rational(1, 5), Rational(2, 5)))));
    EXPECT_FALSE(is_affine_coincidence(z2, AffineIsometry(sigma5(), v2(Rational(1, 5), 0))));
    EXPECT_FALSE(is_affine_coincidence(z2, AffineIsometry(RationalMatrix::identity(2), v2(Rational(1, 2), 0))));
}

TEST(Multilattice, AcslExamples)
{
    RationalLattice z2 = RationalLattice::integer(2);
    CosetLattice linear = acsl(z2, AffineIsometry(sigma5()));
    EXPECT_EQ(linear, CosetLattice(v2(0, 0), RationalLattice(RationalMatrix{{1, -2}, {2, 1}})));
    EXPECT_EQ(acsl(z2, AffineIsometry(RationalMatrix::identity(2), v2(4, 1))), CosetLattice(v2(0, 0), z2));

    AffineIsometry shifted(sigma5(), v2(1, 0));
    auto meet = oracle::coset_intersect(CosetLattice(v2(0, 0), z2), CosetLattice(v2(1, 0), z2.transformed(sigma5())));
    ASSERT_TRUE(meet.has_value());
    EXPECT_EQ(acsl(z2, shifted), *meet);
    EXPECT_THROW(acsl(z2, AffineIsometry(sigma5(), v2(Rational(1, 5), 0))), DomainError);
}

TEST(Multilattice, AcslMatchesOracle)
{
    RationalLattice z2 = RationalLattice::integer(2);
    for (const auto& c : enumerate_coincidences(50, true)) {
        RationalMatrix r = isometry_matrix(c);
        Integer n = coincidence_index(c);
        for (long a = 0; a < 3; ++a)
            for (long b = 0; b < 3; ++b) {
                RationalVector v = v2(make_rational(a, n.get_si()), make_rational(b, n.get_si()));
                AffineIsometry iso(r, v);
                auto meet = oracle::coset_intersect(CosetLattice(v2(0, 0), z2), CosetLattice(v, z2.transformed(r)));
                ASSERT_EQ(is_affine_coincidence(z2, iso), meet.has_value());
                if (meet) {
                    EXPECT_EQ(acsl(z2, iso), *meet);
                    EXPECT_TRUE(is_affine_coincidence(z2, iso.inverse()));
                }
            }
    }
}

TEST(Multilattice, AffineCoincidencesAreNotClosed)
{
    RationalLattice z2 = RationalLattice::integer(2);
    std::vector<AffineIsometry> members;
    for (const auto& c : enumerate_coincidences(13, false))
        for (long a = 0; a < 5; ++a) {
            AffineIsometry iso(isometry_matrix(c), v2(make_rational(a, 5), make_rational(2 * a, 5)));
            if (is_affine_coincidence(z2, iso))
                members.push_back(iso);
        }
    bool witness = false;
    for (const auto& f : members)
        for (const auto& g : members)
            witness = witness || !is_affine_coincidence(z2, g.after(f));
    EXPECT_TRUE(witness);
}

TEST(Multilattice, ShiftedExamples)
{
    RationalLattice z2 = RationalLattice::integer(2);
    ShiftedLattice diag(z2, v2(Rational(1, 2), Rational(1, 2)));
    for (const auto& c : enumerate_coincidences(100, true))
        EXPECT_TRUE(shifted_coincidence(diag, isometry_matrix(c)).has_value());

    auto half = shifted_coincidence(ShiftedLattice(z2, v2(Rational(1, 2), 0)), sigma5());
    ASSERT_TRUE(half.has_value());
    EXPECT_EQ(*half, CosetLattice(v2(Rational(1, 2), 1), RationalLattice(RationalMatrix{{1, -2}, {2, 1}})));

    EXPECT_FALSE(shifted_coincidence(ShiftedLattice(z2, v2(Rational(1, 5), 0)), sigma5()).has_value());
}

TEST(Multilattice, PlainLatticeCsml)
{
    Multilattice ml(RationalLattice::integer(2), {v2(0, 0)});
    CsmlDescription d = multilattice_coincidence(ml, sigma5());
    ASSERT_EQ(d.cosets.size(), 1u);
    EXPECT_EQ(d.index, 5);
    EXPECT_EQ(d.cosets[0].sublattice(), csl::csl(RationalLattice::integer(2), sigma5()));
}

TEST(Multilattice, RejectsCoincidingShifts)
{
    EXPECT_THROW(Multilattice(RationalLattice::integer(2), {v2(0, 0), v2(1, 0)}), DomainError);
}

TEST(Multilattice, CsmlMatchesOracle)
{
    std::vector<Multilattice> lattices = {
        Multilattice(RationalLattice::integer(2), {v2(0, 0), v2(Rational(1, 2), 0)}),
        Multilattice(RationalLattice::integer(2), {v2(0, 0), v2(Rational(1, 3), Rational(1, 3))}),
        Multilattice(RationalLattice::integer(2), {v2(0, 0), v2(Rational(1, 2), Rational(1, 2)), v2(Rational(1, 5), Rational(2, 5))}),
    };
    for (const auto& ml : lattices) {
        const std::size_t m = ml.size();
        for (const auto& c : enumerate_coincidences(50, true)) {
            RationalMatrix r = isometry_matrix(c);
            CsmlDescription d = multilattice_coincidence(ml, r);
            ASSERT_GE(d.pairs.size(), 1u);
            ASSERT_LE(d.pairs.size(), m * m);
            Rational sigma = coincidence_index(ml.lattice(), r);
            EXPECT_EQ(d.index * Rational(d.pairs.size()), Rational(m) * sigma);

            std::set<CosetLattice> expected;
            RationalLattice rl = ml.lattice().transformed(r);
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k = 0; k < m; ++k) {
                    auto meet = oracle::coset_intersect(CosetLattice(ml.shifts()[k], ml.lattice()),
                                                        CosetLattice(r * ml.shifts()[j], rl));
                    if (meet)
                        expected.insert(*meet);
                }
            EXPECT_EQ(std::set<CosetLattice>(d.cosets.begin(), d.cosets.end()), expected) << to_string(c);

            // [0, N)^2 is a period of L ∩ RL when N Z^2 lies in the CSL.
            Rational box_side = Rational(c.numerator.norm());
            oracle::Box window = oracle::Box::cube(2, 0, box_side * 2);
            EXPECT_EQ(oracle::empirical_index(ml, AffineIsometry(r), window), d.index) << to_string(c);
        }
    }
}
