#include "csl/arith.hpp"
#include "csl/matrix.hpp"

#include <gtest/gtest.h>

using namespace csl;

TEST(Arith, FloorDivRoundsDown)
{
    EXPECT_EQ(floor_div(Integer(7), Integer(2)), 3);
    EXPECT_EQ(floor_div(Integer(-7), Integer(2)), -4);
    EXPECT_EQ(floor_div(Integer(7), Integer(-2)), -4);
    EXPECT_EQ(floor_of(Rational(-1, 3)), -1);
}

TEST(Arith, GcdAndOddPart)
{
    EXPECT_EQ(gcd_of(Integer(-12), Integer(18)), 6);
    EXPECT_EQ(lcm_of(Integer(4), Integer(6)), 12);
    EXPECT_EQ(odd_part(Integer(48)), 3);
    EXPECT_EQ(odd_part(Integer(7)), 7);
    ExtendedGcd e = extended_gcd(Integer(240), Integer(46));
    EXPECT_EQ(e.g, 2);
    EXPECT_EQ(Integer(e.x * 240 + e.y * 46), e.g);
}

TEST(Arith, ParseRational)
{
    EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-4"), Rational(-4));
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    try {
        parse_rational("12x");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 2u);
    }
}

TEST(Arith, SmallestPrimeFactors)
{
    auto spf = smallest_prime_factors(30);
    EXPECT_EQ(spf[29], 29u);
    EXPECT_EQ(spf[25], 5u);
    EXPECT_EQ(spf[30], 2u);
}

TEST(Matrix, InverseAndDeterminant)
{
    RationalMatrix m{{2, 1}, {1, 1}};
    EXPECT_EQ(determinant(m), Rational(1));
    EXPECT_EQ(inverse(m) * m, RationalMatrix::identity(2));
    EXPECT_THROW(inverse(RationalMatrix{{1, 2}, {2, 4}}), DomainError);
}

TEST(Matrix, SolveAndOrthogonality)
{
    RationalMatrix m{{Rational(3, 5), Rational(-4, 5)}, {Rational(4, 5), Rational(3, 5)}};
    EXPECT_TRUE(is_orthogonal(m));
    EXPECT_FALSE(is_orthogonal(RationalMatrix{{1, 1}, {0, 1}}));
    RationalVector x = solve(m, RationalVector{Rational(1), Rational(0)});
    EXPECT_EQ(m * x, (RationalVector{Rational(1), Rational(0)}));
}

TEST(Matrix, ColumnsRoundTrip)
{
    RationalMatrix m = RationalMatrix::from_columns({{Rational(1), Rational(2)}, {Rational(3), Rational(4)}});
    EXPECT_EQ(m(1, 0), Rational(2));
    EXPECT_EQ(m.column(1), (RationalVector{Rational(3), Rational(4)}));
    EXPECT_EQ(m.transposed()(0, 1), Rational(2));
}
