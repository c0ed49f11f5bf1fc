#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "isoasym/jet.hpp"
#include "oracles.hpp"

using namespace isoasym;

namespace {

void expect_jet(const Jet3& j, double v0, double v1, double v2, double v3, double tol = 1e-15)
{
    EXPECT_NEAR(j.v0, v0, tol);
    EXPECT_NEAR(j.v1, v1, tol);
    EXPECT_NEAR(j.v2, v2, tol);
    EXPECT_NEAR(j.v3, v3, tol);
}

} // namespace

TEST(Jet, VariableSeeds)
{
    EXPECT_EQ(jet_var(0), (Jet3{0, 1, 0, 0}));
    EXPECT_EQ(jet_var(oracle::pi / 2), (Jet3{oracle::pi / 2, 1, 0, 0}));
    EXPECT_EQ(jet_var(-3.5), (Jet3{-3.5, 1, 0, 0}));
}

TEST(Jet, ConstantHasNoDerivatives)
{
    const Jet3 c = jet_const(4.25);
    EXPECT_EQ(c, (Jet3{4.25, 0, 0, 0}));
    EXPECT_EQ(sin(c).v1, 0.0);
    EXPECT_EQ(sin(c).v3, 0.0);
}

TEST(Jet, LeibnizProduct)
{
    // x^2 at 2
    EXPECT_EQ(jet_mul(jet_var(2), jet_var(2)), (Jet3{4, 4, 2, 0}));

    const Jet3 j{1.5, -2, 0.25, 7};
    EXPECT_EQ(jet_mul(jet_const(1), j), j);

    // d^2/dx^2 (x sin x) at 0 is 2
    expect_jet(jet_mul(jet_var(0), sin(jet_var(0))), 0, 0, 2, 0);
}

TEST(Jet, ElementaryFunctions)
{
    expect_jet(jet_elem(ElemFn::sin, jet_var(0)), 0, 1, 0, -1);
    // cos, -sin, -cos, sin at pi/2
    expect_jet(jet_elem(ElemFn::cos, jet_var(oracle::pi / 2)), 0, -1, 0, 1);
    expect_jet(jet_elem(ElemFn::exp, jet_var(0)), 1, 1, 1, 1);
    expect_jet(jet_elem(ElemFn::ln, jet_var(1)), 0, 1, -1, 2);
    expect_jet(jet_elem(ElemFn::sqrt, jet_var(4)), 2, 0.25, -1.0 / 32, 3.0 / 256);
    expect_jet(jet_elem(ElemFn::recip, jet_var(2)), 0.5, -0.25, 0.25, -0.375);
    expect_jet(jet_elem(ElemFn::neg, Jet3{1, 2, 3, 4}), -1, -2, -3, -4);
    expect_jet(jet_elem(ElemFn::pow_const, jet_var(2), 3.0), 8, 12, 12, 6);
}

TEST(Jet, DomainErrors)
{
    EXPECT_THROW(sqrt(jet_var(0)), DomainError);
    EXPECT_THROW(sqrt(jet_var(-1)), DomainError);
    EXPECT_THROW(log(jet_var(0)), DomainError);
    EXPECT_THROW(recip(jet_var(0)), DomainError);
    EXPECT_THROW(pow(jet_var(-1), 0.5), DomainError);
    EXPECT_THROW(pow(jet_var(0), -2.0), DomainError);
}

TEST(Jet, IntegerPowersAtZeroStayFinite)
{
    const Jet3 sq = pow(jet_var(0), 2.0);
    EXPECT_TRUE(sq.finite());
    expect_jet(sq, 0, 0, 2, 0);
    expect_jet(pow(jet_var(0), 1.0), 0, 1, 0, 0);
    expect_jet(pow(jet_var(0), 0.0), 1, 0, 0, 0);
}

TEST(Jet, CompositionMatchesFiniteDifferences)
{
    std::mt19937_64 rng(oracle::seed());
    std::uniform_real_distribution<double> xs(-2, 2);
    for (int trial = 0; trial < 200; ++trial) {
        const double x = xs(rng);
        const Jet3 j = sin(jet_var(x) * jet_var(x));
        const oracle::Fn f = [](double t) { return std::sin(t * t); };
        EXPECT_LT(oracle::rel_err(j.v1, oracle::fd_derivative(f, x, 1)), 1e-6) << x;
        EXPECT_LT(oracle::rel_err(j.v2, oracle::fd_derivative(f, x, 2)), 1e-6) << x;
        EXPECT_LT(oracle::rel_err(j.v3, oracle::fd_derivative(f, x, 3)), 1e-4) << x;
    }
}

TEST(Jet, RingAxioms)
{
    std::mt19937_64 rng(oracle::seed() + 1);
    std::uniform_real_distribution<double> d(-3, 3);
    auto random_jet = [&] { return Jet3{d(rng), d(rng), d(rng), d(rng)}; };
    auto close = [](const Jet3& p, const Jet3& q) {
        for (int k = 0; k < 4; ++k)
            if (std::fabs(p[k] - q[k]) > 1e-12 * std::max(1.0, std::fabs(q[k])))
                return false;
        return true;
    };
    for (int trial = 0; trial < 500; ++trial) {
        const Jet3 a = random_jet(), b = random_jet(), c = random_jet();
        EXPECT_EQ(a * b, b * a);
        EXPECT_TRUE(close((a * b) * c, a * (b * c)));
        EXPECT_TRUE(close(a * (b + c), a * b + a * c));
    }
}

TEST(Jet, QuotientInvertsProduct)
{
    const Jet3 a{1.25, -0.5, 3, 2}, b{2, 0.75, -1, 0.5};
    const Jet3 q = a / b;
    const Jet3 back = q * b;
    for (int k = 0; k < 4; ++k)
        EXPECT_NEAR(back[k], a[k], 1e-14);
    EXPECT_THROW(a / jet_const(0), DomainError);
}
