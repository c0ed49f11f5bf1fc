#include <gtest/gtest.h>

#include <random>

#include "isoasym/frenet.hpp"
#include "oracles.hpp"

using namespace isoasym;
using oracle::pi;
using oracle::sqrt3;

namespace {

const ParamCurve& helix()
{
    static const ParamCurve c = ParamCurve::helix(0.5, sqrt3 / 2, {0, 2 * pi});
    return c;
}

void expect_orthonormal(const FrenetFrame& f, double tol)
{
    EXPECT_NEAR(norm(f.V1), 1, tol);
    EXPECT_NEAR(norm(f.V2), 1, tol);
    EXPECT_NEAR(norm(f.V3), 1, tol);
    EXPECT_NEAR(dot(f.V1, f.V2), 0, tol);
    EXPECT_NEAR(dot(f.V1, f.V3), 0, tol);
    EXPECT_NEAR(dot(f.V2, f.V3), 0, tol);
    EXPECT_LE(max_abs(cross(f.V1, f.V2) - f.V3), tol);
}

} // namespace

TEST(Frenet, HelixFrameAtQuarterTurn)
{
    const FrenetFrame f = frenet_frame(helix(), pi / 2);
    EXPECT_LE(max_abs(f.V1 - Vec3{0, -0.5, sqrt3 / 2}), 1e-15);
    EXPECT_LE(max_abs(f.V2 - Vec3{-1, 0, 0}), 1e-15);
    EXPECT_LE(max_abs(f.V3 - Vec3{0, -sqrt3 / 2, -0.5}), 1e-15);
}

TEST(Frenet, HelixMatchesClosedForms)
{
    std::mt19937_64 rng(oracle::seed());
    std::uniform_real_distribution<double> ws(0, 2 * pi);
    for (int i = 0; i < 256; ++i) {
        const double w = ws(rng);
        const FrenetFrame f = frenet_frame(helix(), w);
        EXPECT_NEAR(f.kappa, 0.5, 1e-12);
        EXPECT_NEAR(f.tau, -sqrt3 / 2, 1e-12);
        EXPECT_NEAR(f.speed, 1, 1e-12);
        EXPECT_LE(max_abs(f.V1 - oracle::helix_V1(w)), 1e-12);
        EXPECT_LE(max_abs(f.V2 - oracle::helix_V2(w)), 1e-12);
        EXPECT_LE(max_abs(f.V3 - oracle::helix_V3(w)), 1e-12);
        expect_orthonormal(f, 1e-12);
    }
}

TEST(Frenet, GeneralHelixCurvatureAndTorsion)
{
    // kappa = a / (a^2 + b^2), tau = -b / (a^2 + b^2) for (a sin w, a cos w, b w).
    const double a = 2, b = 0.5;
    const FrenetFrame f = frenet_frame(ParamCurve::helix(a, b, {0, 1}), 0.3);
    EXPECT_NEAR(f.kappa, a / (a * a + b * b), 1e-14);
    EXPECT_NEAR(f.tau, -b / (a * a + b * b), 1e-14);
    EXPECT_NEAR(f.speed, std::sqrt(a * a + b * b), 1e-14);
    EXPECT_FALSE(f.unit_speed());
}

TEST(Frenet, StraightLineHasNoFrame)
{
    const auto line = ParamCurve::from_strings("w", "0", "0", {0, 1});
    EXPECT_THROW(frenet_frame(line, 0.5), FrameUndefined);
    try {
        frenet_frame(line, 0.25);
    } catch (const FrameUndefined& e) {
        EXPECT_EQ(e.omega(), 0.25);
    }
}

TEST(Frenet, StalledCurveIsDegenerate)
{
    const auto cusp = ParamCurve::from_strings("w^2", "w^3", "0", {-1, 1});
    EXPECT_THROW(frenet_frame(cusp, 0), DegenerateCurve);
}

TEST(Frenet, OdeResidualSmallOnHelixAndCircle)
{
    const FrenetResidual r = frenet_ode_residual(helix(), 1.0);
    EXPECT_LT(r.max(), 1e-6);

    const auto circle = ParamCurve::circle(1, {0, 2 * pi});
    const FrenetFrame f = frenet_frame(circle, 0);
    EXPECT_NEAR(f.kappa, 1, 1e-15);
    EXPECT_NEAR(f.tau, 0, 1e-15);
    EXPECT_LT(frenet_ode_residual(circle, 0).r1, 1e-6);
}

TEST(Frenet, OdeResidualConvergesQuadratically)
{
    const auto cubic = ParamCurve::from_strings("w", "w^2", "w^3", {-1, 1});
    for (const ParamCurve* c : {&helix(), &cubic}) {
        const double w = 0.7;
        const double coarse = frenet_ode_residual(*c, w, 1e-2).max();
        const double fine = frenet_ode_residual(*c, w, 5e-3).max();
        EXPECT_NEAR(coarse / fine, 4.0, 0.2);
    }
}

TEST(Frenet, PropertiesOnRandomCurves)
{
    const ParamCurve curves[] = {
        ParamCurve::from_strings("w", "w^2", "w^3", {-1, 1}),
        ParamCurve::from_strings("cos(w) + w/3", "sin(2*w)", "exp(w/2)", {-2, 2}),
        ParamCurve::helix(1.3, -0.4, {-3, 3}),
    };
    std::mt19937_64 rng(oracle::seed() + 3);
    for (const auto& c : curves) {
        std::uniform_real_distribution<double> ws(c.domain().lo, c.domain().hi);
        for (int i = 0; i < 256; ++i) {
            const double w = ws(rng);
            const CurveJet j = c.derivatives(w);
            FrenetFrame f;
            try {
                f = frenet_frame(j, w);
            } catch (const FrameUndefined&) {
                continue;
            }
            expect_orthonormal(f, 1e-12);
            EXPECT_GE(dot(f.V2, j.d2), -1e-12);
            EXPECT_GT(f.kappa, 0);
        }
    }
}
