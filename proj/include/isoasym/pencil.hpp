#pragma once

/**
 * Surface pencils over a curve's Frenet frame:
 *
 *   Psi(w, eta) = g(w) + k(w) U(eta) V1(w) + m(w) V(eta) V2(w) + n(w) Z(eta) V3(w)
 *
 * with marching-scale polynomials in x = eta - eta0
 *
 *   U = sum_{t>=1} a_t x^t,   V = sum_{t>=1} b_t x^t,   Z = sum_{t>=2} c_t x^t.
 *
 * g is isoparametric (Psi(w, eta0) = g) because every term vanishes at x = 0.
 * It is also asymptotic exactly when n(w) = 0 or Z'(eta0) = 0, which the
 * missing linear term of Z guarantees.
 */

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "curve.hpp"
#include "expr.hpp"
#include "frenet.hpp"
#include "tolerances.hpp"
#include "vec3.hpp"

namespace isoasym {

class MarchingScale {
public:
    MarchingScale() = default;

    /// `c` holds c_2, c_3, ... (the first entry multiplies x^2).
    MarchingScale(double eta0, std::vector<double> a, std::vector<double> b, std::vector<double> c)
        : eta0_(eta0), a_(std::move(a)), b_(std::move(b)), c_(std::move(c))
    {
    }

    double eta0() const { return eta0_; }
    const std::vector<double>& a() const { return a_; }
    const std::vector<double>& b() const { return b_; }
    const std::vector<double>& c() const { return c_; }

    /// Coefficient of x in Z. Zero for every scale built through the constructor.
    double linear_z() const { return c1_; }

    /// Copy with a linear term in Z. This violates the asymptotic condition
    /// and exists so validators can be shown to catch it.
    MarchingScale unchecked_with_linear_z(double c1) const
    {
        MarchingScale m = *this;
        m.c1_ = c1;
        return m;
    }

    // Factor functions k, m, n of w; unset means the constant 1.
    const std::optional<Expr>& k() const { return k_; }
    const std::optional<Expr>& m() const { return m_; }
    const std::optional<Expr>& n() const { return n_; }

    MarchingScale with_factors(std::optional<Expr> k, std::optional<Expr> m, std::optional<Expr> n) const
    {
        MarchingScale r = *this;
        r.k_ = std::move(k);
        r.m_ = std::move(m);
        r.n_ = std::move(n);
        return r;
    }

    bool unit_factors() const { return !k_ && !m_ && !n_; }

private:
    double eta0_ = 0;
    std::vector<double> a_, b_, c_;
    double c1_ = 0;
    std::optional<Expr> k_, m_, n_;
};

struct MarchingValues {
    double U = 0, V = 0, Z = 0;
    double dU = 0, dV = 0, dZ = 0; ///< eta-derivatives
};

namespace detail {

// Value and derivative of sum_{t} coef[t - first] x^t by Horner.
inline std::pair<double, double> horner_shifted(const std::vector<double>& coef, int first, double x)
{
    double p = 0, dp = 0;
    for (auto it = coef.rbegin(); it != coef.rend(); ++it) {
        dp = dp * x + p;
        p = p * x + *it;
    }
    // p(x), p'(x) are for sum coef[i] x^i; shift by x^first.
    const double xf = std::pow(x, first);
    const double dxf = first == 0 ? 0.0 : first * std::pow(x, first - 1);
    return {xf * p, dxf * p + xf * dp};
}

} // namespace detail

inline MarchingValues marching_eval(const MarchingScale& ms, double eta)
{
    const double x = eta - ms.eta0();
    MarchingValues r;
    std::tie(r.U, r.dU) = detail::horner_shifted(ms.a(), 1, x);
    std::tie(r.V, r.dV) = detail::horner_shifted(ms.b(), 1, x);
    std::tie(r.Z, r.dZ) = detail::horner_shifted(ms.c(), 2, x);
    r.Z += ms.linear_z() * x;
    r.dZ += ms.linear_z();
    return r;
}

struct ValidationReport {
    // U(eta0) = V(eta0) = Z(eta0) = 0
    bool vanish_at_eta0 = false;
    double U0 = 0, V0 = 0, Z0 = 0;

    // n(w) == 0 on the sampled domain, or Z'(eta0) = 0
    bool normal_branch = false;
    bool n_identically_zero = false;
    double dZ0 = 0;

    // |V'(eta0)| > eps_b; otherwise the surface normal along the curve is undefined
    bool regular = false;
    double dV0 = 0;

    bool isoasymptotic() const { return vanish_at_eta0 && normal_branch; }
};

/// Checks the isoasymptotic conditions on a marching scale. The factor n(w),
/// when present, is sampled at 64 points of `omega_domain`.
inline ValidationReport validate_isoasymptotic(const MarchingScale& ms, Interval omega_domain = {0, 1},
                                               const Tolerances& tol = {})
{
    constexpr double exact = 1e-12;
    const MarchingValues mv = marching_eval(ms, ms.eta0());

    ValidationReport r;
    r.U0 = mv.U;
    r.V0 = mv.V;
    r.Z0 = mv.Z;
    r.vanish_at_eta0 = std::fabs(mv.U) <= exact && std::fabs(mv.V) <= exact && std::fabs(mv.Z) <= exact;

    r.dZ0 = mv.dZ;
    if (ms.n()) {
        r.n_identically_zero = true;
        for (std::size_t i = 0; i < 64; ++i)
            if (std::fabs(eval(*ms.n(), omega_domain.sample(i, 64))) > exact) {
                r.n_identically_zero = false;
                break;
            }
    }
    r.normal_branch = r.n_identically_zero || std::fabs(mv.dZ) <= exact;

    r.dV0 = mv.dV;
    r.regular = std::fabs(mv.dV) > tol.eps_b;
    return r;
}

class SurfacePencil {
public:
    SurfacePencil(ParamCurve curve, MarchingScale ms, Interval eta_domain, Tolerances tol = {})
        : curve_(std::move(curve)), ms_(std::move(ms)), eta_domain_(eta_domain), tol_(tol)
    {
        if (curve_.domain().degenerate())
            throw Error("curve domain is degenerate");
        if (eta_domain_.degenerate())
            throw Error("eta domain is degenerate");
        if (!eta_domain_.contains(ms_.eta0()))
            throw Error("eta0 lies outside the eta domain");
    }

    const ParamCurve& curve() const { return curve_; }
    const MarchingScale& scale() const { return ms_; }
    const Interval& eta_domain() const { return eta_domain_; }
    const Tolerances& tolerances() const { return tol_; }

    /// Evaluation is permitted anywhere; callers warn when this is false.
    bool in_eta_domain(double eta) const { return eta_domain_.contains(eta); }

private:
    ParamCurve curve_;
    MarchingScale ms_;
    Interval eta_domain_;
    Tolerances tol_;
};

namespace detail {

struct Factors {
    double k = 1, m = 1, n = 1;
};

inline Factors factors_at(const MarchingScale& ms, double omega)
{
    Factors f;
    if (ms.k()) f.k = eval(*ms.k(), omega);
    if (ms.m()) f.m = eval(*ms.m(), omega);
    if (ms.n()) f.n = eval(*ms.n(), omega);
    return f;
}

} // namespace detail

inline Vec3 surface_eval(const SurfacePencil& p, double omega, double eta)
{
    const CurveJet j = p.curve().derivatives(omega);
    const FrenetFrame f = frenet_frame(j, omega, p.tolerances());
    const MarchingValues mv = marching_eval(p.scale(), eta);
    const auto fac = detail::factors_at(p.scale(), omega);
    return j.d0 + (fac.k * mv.U) * f.V1 + (fac.m * mv.V) * f.V2 + (fac.n * mv.Z) * f.V3;
}

struct SurfacePartials {
    Vec3 d_omega;
    Vec3 d_eta;
    Vec3 d_omega_omega;
    Vec3 normal; ///< unit, along d_omega x d_eta
};

/// d_eta is exact; the w-derivatives are central differences of surface_eval.
inline SurfacePartials surface_partials(const SurfacePencil& p, double omega, double eta)
{
    const double h = p.tolerances().step(omega);
    const Vec3 s0 = surface_eval(p, omega, eta);
    const Vec3 sp = surface_eval(p, omega + h, eta);
    const Vec3 sm = surface_eval(p, omega - h, eta);

    const FrenetFrame f = frenet_frame(p.curve(), omega, p.tolerances());
    const MarchingValues mv = marching_eval(p.scale(), eta);
    const auto fac = detail::factors_at(p.scale(), omega);

    SurfacePartials r;
    r.d_omega = (sp - sm) / (2 * h);
    r.d_omega_omega = (sp - 2.0 * s0 + sm) / (h * h);
    r.d_eta = (fac.k * mv.dU) * f.V1 + (fac.m * mv.dV) * f.V2 + (fac.n * mv.dZ) * f.V3;

    const Vec3 nrm = cross(r.d_omega, r.d_eta);
    const double len = norm(nrm);
    if (!(len > p.tolerances().eps_reg))
        throw DegenerateSurfacePoint("surface tangents are parallel at (w=" + std::to_string(omega)
                                     + ", eta=" + std::to_string(eta) + ")");
    r.normal = nrm / len;
    return r;
}

struct AsymptoticResidual {
    double max_e = 0;          ///< max |N . Psi_ww| along eta = eta0
    double max_tangency = 0;   ///< max |N . V1| along eta = eta0
    double max_binormal = 0;   ///< max (1 - |N . V3|) along eta = eta0
};

/// Samples the curve domain uniformly along eta = eta0. Zero normal curvature
/// (max_e) certifies that the curve is asymptotic on the surface.
inline AsymptoticResidual asymptotic_residual(const SurfacePencil& p, std::size_t n_samples)
{
    AsymptoticResidual r;
    const double eta0 = p.scale().eta0();
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double w = n_samples == 1 ? p.curve().domain().lo : p.curve().domain().sample(i, n_samples);
        const SurfacePartials sp = surface_partials(p, w, eta0);
        const FrenetFrame f = frenet_frame(p.curve(), w, p.tolerances());
        r.max_e = std::max(r.max_e, std::fabs(dot(sp.normal, sp.d_omega_omega)));
        r.max_tangency = std::max(r.max_tangency, std::fabs(dot(sp.normal, f.V1)));
        r.max_binormal = std::max(r.max_binormal, 1 - std::fabs(dot(sp.normal, f.V3)));
    }
    return r;
}

/// max over samples of |Psi(w, eta0) - g(w)|.
inline double isoparametric_residual(const SurfacePencil& p, std::size_t n_samples)
{
    double worst = 0;
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double w = n_samples == 1 ? p.curve().domain().lo : p.curve().domain().sample(i, n_samples);
        worst = std::max(worst, norm(surface_eval(p, w, p.scale().eta0()) - p.curve()(w)));
    }
    return worst;
}

} // namespace isoasym
