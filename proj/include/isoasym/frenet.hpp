#pragma once

/**
 * Frenet apparatus of a regular space curve in an arbitrary parametrization:
 *
 *   V1 = g' / |g'|
 *   V3 = (g' x g'') / |g' x g''|
 *   V2 = V3 x V1
 *   kappa = |g' x g''| / |g'|^3
 *   tau   = det(g', g'', g''') / |g' x g''|^2
 *
 * For a unit-speed curve these are the usual arc-length quantities and the
 * frame obeys V1' = kappa V2, V2' = -kappa V1 + tau V3, V3' = -tau V2. With
 * speed s != 1 every right-hand side picks up a factor s.
 */

#include <string>

#include "curve.hpp"
#include "errors.hpp"
#include "tolerances.hpp"
#include "vec3.hpp"

namespace isoasym {

struct FrenetFrame {
    Vec3 V1; ///< unit tangent
    Vec3 V2; ///< principal normal
    Vec3 V3; ///< binormal
    double kappa = 0;
    double tau = 0;
    double speed = 0;

    /// Whether the parameter is arc length, to within tol.
    bool unit_speed(double tol = 1e-6) const { return std::fabs(speed - 1) <= tol; }
};

inline FrenetFrame frenet_frame(const CurveJet& j, double omega, const Tolerances& tol = {})
{
    const double speed = norm(j.d1);
    if (!(speed > tol.eps_reg))
        throw DegenerateCurve("curve is not regular at w=" + std::to_string(omega) + " (speed "
                                  + std::to_string(speed) + ")",
                              omega);
    const Vec3 b = cross(j.d1, j.d2);
    const double bn = norm(b);
    if (!(bn > tol.eps_kappa * speed * speed * speed))
        throw FrameUndefined("curvature vanishes at w=" + std::to_string(omega), omega);

    FrenetFrame f;
    f.V1 = j.d1 / speed;
    f.V3 = b / bn;
    f.V2 = cross(f.V3, f.V1);
    f.kappa = bn / (speed * speed * speed);
    f.tau = triple(j.d1, j.d2, j.d3) / (bn * bn);
    f.speed = speed;
    return f;
}

inline FrenetFrame frenet_frame(const ParamCurve& c, double omega, const Tolerances& tol = {})
{
    return frenet_frame(c.derivatives(omega), omega, tol);
}

struct FrenetResidual {
    double r1 = 0, r2 = 0, r3 = 0;

    double max() const { return std::max(r1, std::max(r2, r3)); }
};

/// Distance between central-difference frame derivatives (step h) and the
/// Frenet-Serret right-hand sides scaled by the speed.
inline FrenetResidual frenet_ode_residual(const ParamCurve& c, double omega, double h, const Tolerances& tol = {})
{
    const FrenetFrame f = frenet_frame(c, omega, tol);
    const FrenetFrame fp = frenet_frame(c, omega + h, tol);
    const FrenetFrame fm = frenet_frame(c, omega - h, tol);
    const double s = f.speed;

    const Vec3 d1 = (fp.V1 - fm.V1) / (2 * h);
    const Vec3 d2 = (fp.V2 - fm.V2) / (2 * h);
    const Vec3 d3 = (fp.V3 - fm.V3) / (2 * h);

    return {norm(d1 - s * f.kappa * f.V2),
            norm(d2 - s * (-f.kappa * f.V1 + f.tau * f.V3)),
            norm(d3 + s * f.tau * f.V2)};
}

inline FrenetResidual frenet_ode_residual(const ParamCurve& c, double omega, const Tolerances& tol = {})
{
    return frenet_ode_residual(c, omega, tol.step(omega), tol);
}

} // namespace isoasym
