#include "ispoly/errors.hpp"
#include "ispoly/quad_ext.hpp"
#include "ispoly/rational.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ispoly;

TEST(Rational, LowestTermsAndPositiveDenominator)
{
    Rational r(Integer(6), Integer(-4));
    EXPECT_EQ(r.to_string(), "-3/2");
    EXPECT_EQ(Rational(0).to_string(), "0/1");
    EXPECT_EQ(Rational(Integer(0), Integer(-7)).to_string(), "0/1");
}

TEST(Rational, ParseAcceptsIntegerShorthand)
{
    EXPECT_EQ(Rational::parse("5"), Rational(5));
    EXPECT_EQ(Rational::parse("-1/5"), Rational(-1, 5));
    EXPECT_EQ(Rational::parse(" 4/6 "), Rational(2, 3));
}

TEST(Rational, ParseRejectsMalformed)
{
    for (const char* bad : {"", "1/", "/2", "1/0", "abc", "1.5", "1/2/3", "- 1", "1/-2"})
        EXPECT_THROW(Rational::parse(bad), DomainError) << bad;
}

TEST(Rational, ArithmeticIsExact)
{
    Rational a(1, 3), b(1, 6);
    EXPECT_EQ(a + b, Rational(1, 2));
    EXPECT_EQ(a - b, Rational(1, 6));
    EXPECT_EQ(a * b, Rational(1, 18));
    EXPECT_EQ(a / b, Rational(2));
    EXPECT_THROW(a / Rational(0), DomainError);
}

TEST(Rational, PowHandlesNegativeExponents)
{
    EXPECT_EQ(Rational(2, 3).pow(3), Rational(8, 27));
    EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
    EXPECT_EQ(Rational(-2).pow(0), Rational(1));
    EXPECT_THROW(Rational(0).pow(-1), DomainError);
}

TEST(Rational, ExactSqrt)
{
    EXPECT_EQ(Rational(9, 4).exact_sqrt(), Rational(3, 2));
    EXPECT_FALSE(Rational(2).exact_sqrt().has_value());
    EXPECT_FALSE(Rational(-4).exact_sqrt().has_value());
}

TEST(Rational, OrderingMatchesRealOrder)
{
    EXPECT_LT(Rational(-1, 4), Rational(-1, 5));
    EXPECT_GT(Rational(2, 3), Rational(3, 5));
    EXPECT_EQ(Rational(-1, 5).sign(), -1);
}

TEST(QuadExt, ConjugateProduct)
{
    QuadExt p(1, 1, 2), q(1, -1, 2);
    QuadExt r = quad_arith(p, q, QuadOp::mul);
    EXPECT_EQ(r.a(), Rational(-1));
    EXPECT_EQ(r.b(), Rational(0));
}

TEST(QuadExt, LambdaSumAndProductAtTwo)
{
    QuadExt l1(Rational(1, 2), Rational(1, 2), 9), l2(Rational(1, 2), Rational(-1, 2), 9);
    QuadExt sum = quad_arith(l1, l2, QuadOp::add);
    EXPECT_EQ(sum.a(), Rational(1));
    EXPECT_EQ(sum.b(), Rational(0));
    QuadExt prod = quad_arith(l1, l2, QuadOp::mul);
    EXPECT_EQ(prod.a(), Rational(-2));
    EXPECT_EQ(prod.b(), Rational(0));
}

TEST(QuadExt, DivisionAndErrors)
{
    QuadExt p(3, 2, 5), q(1, 1, 5);
    EXPECT_EQ(quad_arith(quad_arith(p, q, QuadOp::div), q, QuadOp::mul), p);
    EXPECT_THROW(quad_arith(p, QuadExt(0, 0, 5), QuadOp::div), DomainError);
    EXPECT_THROW(quad_arith(p, QuadExt(1, 1, 7), QuadOp::add), DomainError);
    // 3 - 1*sqrt(9) is zero although its coefficients are not.
    EXPECT_THROW(quad_arith(p, QuadExt(3, -1, 9), QuadOp::div), DomainError);
    EXPECT_THROW(QuadExt(1, 1, -1), DomainError);
}

TEST(QuadExt, SignExamples)
{
    EXPECT_EQ(quad_sign(QuadExt(0, 0, 5)), Sign::zero);
    EXPECT_EQ(quad_sign(QuadExt(-1, 1, 9)), Sign::positive);
    EXPECT_EQ(quad_sign(QuadExt(1, -1, 2)), Sign::negative);
    EXPECT_EQ(quad_sign(QuadExt(3, -1, 9)), Sign::zero);
    EXPECT_EQ(quad_sign(QuadExt(-2, 1, 4)), Sign::zero);
}

TEST(QuadExt, SignAgreesWithFloatingPointAwayFromZero)
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-20, 20), disc(0, 30);
    for (int i = 0; i < 2000; ++i) {
        QuadExt v(Rational(coef(rng), 3), Rational(coef(rng), 2), disc(rng));
        double approx = v.to_double();
        if (std::abs(approx) < 1e-9)
            continue;
        EXPECT_EQ(quad_sign(v), approx > 0 ? Sign::positive : Sign::negative) << v.to_string();
    }
}

TEST(QuadExt, OrderIsConsistentWithRationalsForSquareDiscriminant)
{
    // In Q(sqrt(9)), a + b*sqrt(9) is the rational a + 3b.
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coef(-12, 12);
    for (int i = 0; i < 500; ++i) {
        Rational a1(coef(rng), 4), b1(coef(rng), 3), a2(coef(rng), 4), b2(coef(rng), 3);
        QuadExt p(a1, b1, 9), q(a2, b2, 9);
        Rational rp = a1 + Rational(3) * b1, rq = a2 + Rational(3) * b2;
        EXPECT_EQ(p < q, rp < rq);
        EXPECT_EQ(p == q, rp == rq);
        EXPECT_EQ(p.to_rational(), rp);
    }
}

TEST(QuadExt, OrderIsTransitive)
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coef(-6, 6);
    std::vector<QuadExt> values;
    for (int i = 0; i < 40; ++i)
        values.emplace_back(Rational(coef(rng), 2), Rational(coef(rng), 3), 7);
    for (const auto& a : values)
        for (const auto& b : values)
            for (const auto& c : values)
                if (a < b && b < c)
                    EXPECT_LT(a, c);
}

TEST(LambdaPair, Examples)
{
    auto [l1, l2] = lambda_pair(Rational(2));
    EXPECT_EQ(l1.to_rational(), Rational(2));
    EXPECT_EQ(l2.to_rational(), Rational(-1));
    EXPECT_EQ(l1.d(), Rational(9));
    auto [m1, m2] = lambda_pair(Rational(6));
    EXPECT_EQ(m1.to_rational(), Rational(3));
    EXPECT_EQ(m2.to_rational(), Rational(-2));
}

TEST(LambdaPair, RejectsDegeneratePoints)
{
    EXPECT_THROW(lambda_pair(Rational(-1, 4)), DomainError);
    EXPECT_THROW(lambda_pair(Rational(0)), DomainError);
    EXPECT_THROW(lambda_pair(Rational(-1)), DomainError);
}

TEST(LambdaPair, VietaAndSquareRelations)
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> num(-20, 200), den(1, 40);
    int checked = 0;
    while (checked < 200) {
        Rational x(num(rng), den(rng));
        if (x <= Rational(-1, 4) || x.is_zero())
            continue;
        ++checked;
        auto [l1, l2] = lambda_pair(x);
        const QuadExt xq = QuadExt::rational(x, l1.d());
        EXPECT_EQ(l1 + l2, QuadExt::rational(Rational(1), l1.d()));
        EXPECT_EQ(l1 * l2, -xq);
        EXPECT_EQ(xq + l1, l1 * l1);
        EXPECT_EQ(xq + l2, l2 * l2);
        EXPECT_GT(l1, l2);
    }
}
