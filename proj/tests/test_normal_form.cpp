#include "csl/normal_form.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace csl;

namespace {

bool is_hermite(const IntMatrix& h)
{
    for (std::size_t i = 0; i < h.rows(); ++i) {
        if (h(i, i) <= 0)
            return false;
        for (std::size_t j = 0; j < h.cols(); ++j) {
            if (j > i && h(i, j) != 0)
                return false;
            if (j < i && (h(i, j) < 0 || h(i, j) >= h(i, i)))
                return false;
        }
    }
    return true;
}

Integer det(const IntMatrix& m)
{
    return determinant(to_rational(m)).get_num();
}

}  // namespace

TEST(Hermite, IdentityIsFixed)
{
    EXPECT_EQ(hermite_normal_form(IntMatrix::identity(3)), IntMatrix::identity(3));
}

TEST(Hermite, GaussianIdealOfNormFive)
{
    // Columns (1,2) and (-2,1) span (1+2i)Z[i].
    IntMatrix h = hermite_normal_form(IntMatrix{{1, -2}, {2, 1}});
    EXPECT_EQ(h, (IntMatrix{{1, 0}, {2, 5}}));
    EXPECT_EQ(det(h), 5);
}

TEST(Hermite, TransformIsUnimodularAndExact)
{
    IntMatrix a{{4, 6, 2}, {1, 3, 5}};
    HermiteDecomposition d = hermite_decomposition(a);
    EXPECT_TRUE(is_hermite(d.hermite));
    IntMatrix au = a * d.transform;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j)
            EXPECT_EQ(au(i, j), d.hermite(i, j));
        EXPECT_EQ(au(i, 2), 0);
    }
    EXPECT_EQ(abs_of(det(d.transform)), 1);
}

TEST(Hermite, RankDeficientThrows)
{
    EXPECT_THROW(hermite_normal_form(IntMatrix{{1, 2}, {2, 4}}), DomainError);
}

TEST(Hermite, CanonicalUnderBasisChange)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix a(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                a(i, j) = dist(rng);
        if (det(a) == 0)
            continue;
        IntMatrix u{{1, dist(rng), 0}, {0, 1, 0}, {dist(rng), 0, 1}};
        u = u * IntMatrix{{1, 0, 0}, {dist(rng), 1, 0}, {0, dist(rng), 1}};
        IntMatrix h1 = hermite_normal_form(a);
        IntMatrix h2 = hermite_normal_form(a * u);
        EXPECT_TRUE(is_hermite(h1));
        EXPECT_EQ(h1, h2);
        EXPECT_EQ(det(h1), abs_of(det(a)));
    }
}

TEST(Hermite, RationalLattice)
{
    RationalMatrix h = hermite_normal_form(RationalMatrix{{Rational(1, 2), 0}, {0, Rational(1, 3)}});
    EXPECT_EQ(h, (RationalMatrix{{Rational(1, 2), 0}, {0, Rational(1, 3)}}));
}

TEST(Smith, DiagonalDividesAndReconstructs)
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix a(3, 5);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                a(i, j) = dist(rng);
        SmithDecomposition s = smith_decomposition(a);
        EXPECT_EQ(s.left * a * s.right, s.diagonal);
        EXPECT_EQ(abs_of(det(s.left)), 1);
        EXPECT_EQ(abs_of(det(s.right)), 1);
        auto f = s.invariant_factors();
        for (std::size_t k = 0; k + 1 < f.size(); ++k) {
            EXPECT_GE(f[k], 0);
            if (f[k] != 0)
                EXPECT_EQ(f[k + 1] % f[k], 0);
        }
    }
}

TEST(Smith, CyclicQuotientOfOrderThree)
{
    auto f = smith_decomposition(IntMatrix{{1, 0, 0}, {0, 1, 1}, {0, 0, 3}}).invariant_factors();
    EXPECT_EQ(f, (std::vector<Integer>{1, 1, 3}));
}
