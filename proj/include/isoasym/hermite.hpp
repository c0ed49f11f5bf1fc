#pragma once

/**
 * C0 Hermite interpolation with an isoasymptotic curve.
 *
 * Given points A_t with assigned parameters (w_t, eta_t), find U, V, Z such
 * that Psi(w_t, eta_t) = A_t. Projecting A_t - g(w_t) on the frame at w_t
 * gives the targets U(eta_t), V(eta_t), Z(eta_t); with x_t = eta_t - eta0 the
 * three coefficient sets then solve
 *
 *   M1 a = d1,   M1 b = d2,   M2 c = d3,
 *   M1[t][j] = x_t^j,   M2[t][j] = x_t^(j+1),   j = 1..m.
 *
 * Both matrices are diagonally scaled Vandermonde matrices:
 *
 *   det M1 = (-1)^(m(m-1)/2) prod x_t   prod_{t<j} (eta_t - eta_j)
 *   det M2 = (-1)^(m(m-1)/2) prod x_t^2 prod_{t<j} (eta_t - eta_j)
 *
 * so the solution exists and is unique whenever the eta_t are pairwise
 * distinct and differ from eta0.
 */

#include <cmath>
#include <string>
#include <vector>

#include "curve.hpp"
#include "errors.hpp"
#include "frenet.hpp"
#include "linalg.hpp"
#include "pencil.hpp"
#include "tolerances.hpp"
#include "vec3.hpp"

namespace isoasym {

struct ControlPoint {
    Vec3 A;
    double omega = 0;
    double eta = 0;
};

struct HermiteData {
    std::vector<ControlPoint> points;
    double eta0 = 0;

    std::vector<double> etas() const
    {
        std::vector<double> e;
        e.reserve(points.size());
        for (const auto& p : points)
            e.push_back(p.eta);
        return e;
    }
};

/// Frame components of each displacement A_t - g(w_t).
struct ProjectedTargets {
    std::vector<double> d1, d2, d3;
};

inline ProjectedTargets project_targets(const ParamCurve& c, const HermiteData& h, const Tolerances& tol = {})
{
    ProjectedTargets t;
    for (const auto& p : h.points) {
        const CurveJet j = c.derivatives(p.omega);
        const FrenetFrame f = frenet_frame(j, p.omega, tol);
        const Vec3 disp = p.A - j.d0;
        t.d1.push_back(dot(disp, f.V1));
        t.d2.push_back(dot(disp, f.V2));
        t.d3.push_back(dot(disp, f.V3));
    }
    return t;
}

inline void check_nodes(const std::vector<double>& etas, double eta0)
{
    for (std::size_t i = 0; i < etas.size(); ++i) {
        if (etas[i] == eta0)
            throw EtaEqualsEta0("eta of point " + std::to_string(i + 1) + " equals eta0");
        for (std::size_t j = 0; j < i; ++j)
            if (etas[i] == etas[j])
                throw DuplicateEta("points " + std::to_string(j + 1) + " and " + std::to_string(i + 1)
                                   + " share eta=" + std::to_string(etas[i]));
    }
}

template <typename T>
struct BasicHermiteSystems {
    BasicMatrix<T> M1; ///< rows (x, x^2, ..., x^m)
    BasicMatrix<T> M2; ///< rows (x^2, x^3, ..., x^(m+1))
};

using HermiteSystems = BasicHermiteSystems<double>;

/// The powers are formed in T from x = eta - eta0 rounded to double.
template <typename T = double>
BasicHermiteSystems<T> assemble_systems(const std::vector<double>& etas, double eta0)
{
    check_nodes(etas, eta0);
    const std::size_t m = etas.size();
    BasicHermiteSystems<T> s{BasicMatrix<T>(m, m), BasicMatrix<T>(m, m)};
    for (std::size_t t = 0; t < m; ++t) {
        const T x = etas[t] - eta0;
        T pw = x;
        for (std::size_t j = 0; j < m; ++j) {
            s.M1(t, j) = pw;
            s.M2(t, j) = pw * x;
            pw *= x;
        }
    }
    return s;
}

enum class WhichSystem { M1, M2 };

/// Closed-form determinant of M1 or M2.
inline double vandermonde_det_closed(const std::vector<double>& etas, double eta0, WhichSystem which)
{
    check_nodes(etas, eta0);
    const std::size_t m = etas.size();
    const int power = which == WhichSystem::M1 ? 1 : 2;
    double d = (m * (m - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    for (double e : etas)
        d *= std::pow(e - eta0, power);
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t j = t + 1; j < m; ++j)
            d *= etas[t] - etas[j];
    return d;
}

struct HermiteSolution {
    MarchingScale scale;
    ProjectedTargets targets;
    SolveResult solve_a, solve_b, solve_c;
    double det_m1_closed = 1, det_m1_lu = 1;
    double det_m2_closed = 1, det_m2_lu = 1;
    bool regularity_warning = false; ///< |b_1| < eps_b: no normal along the curve

    double max_condition() const
    {
        return std::max(solve_a.condition, std::max(solve_b.condition, solve_c.condition));
    }
    /// Largest relative gap between the closed-form and LU determinants.
    double det_disagreement() const
    {
        auto rel = [](double closed, double lu) {
            return closed == 0 ? std::fabs(lu) : std::fabs(closed - lu) / std::fabs(closed);
        };
        return std::max(rel(det_m1_closed, det_m1_lu), rel(det_m2_closed, det_m2_lu));
    }
};

inline constexpr double condition_warning_threshold = 1e12;

/// Solves for the unique marching scale whose unit-factor pencil over `c`
/// passes through every control point.
inline HermiteSolution hermite_solve(const ParamCurve& c, const HermiteData& h, const Tolerances& tol = {})
{
    const std::vector<double> etas = h.etas();
    const HermiteSystems sys = assemble_systems(etas, h.eta0);

    HermiteSolution s;
    s.targets = project_targets(c, h, tol);
    s.solve_a = solve_coefficients(sys.M1, s.targets.d1);
    s.solve_b = solve_coefficients(sys.M1, s.targets.d2);
    s.solve_c = solve_coefficients(sys.M2, s.targets.d3);

    s.det_m1_closed = vandermonde_det_closed(etas, h.eta0, WhichSystem::M1);
    s.det_m2_closed = vandermonde_det_closed(etas, h.eta0, WhichSystem::M2);
    // Vandermonde determinants are sensitive to rounding in the entries, so
    // the cross-check runs in extended precision.
    const auto wide = assemble_systems<long double>(etas, h.eta0);
    s.det_m1_lu = static_cast<double>(lu_determinant(wide.M1));
    s.det_m2_lu = static_cast<double>(lu_determinant(wide.M2));

    s.scale = MarchingScale(h.eta0, s.solve_a.x, s.solve_b.x, s.solve_c.x);
    s.regularity_warning = s.solve_b.x.empty() || std::fabs(s.solve_b.x.front()) < tol.eps_b;
    return s;
}

/// max_t |Psi(w_t, eta_t) - A_t|; zero for no points.
inline double interpolation_residual(const SurfacePencil& p, const HermiteData& h)
{
    double worst = 0;
    for (const auto& pt : h.points)
        worst = std::max(worst, norm(surface_eval(p, pt.omega, pt.eta) - pt.A));
    return worst;
}

} // namespace isoasym
