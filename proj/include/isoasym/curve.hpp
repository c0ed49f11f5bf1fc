#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "errors.hpp"
#include "expr.hpp"
#include "vec3.hpp"

namespace isoasym {

struct Interval {
    double lo = 0;
    double hi = 0;

    double length() const { return hi - lo; }
    bool contains(double x) const { return x >= lo && x <= hi; }
    bool degenerate() const { return !(hi > lo); }

    /// i-th of n uniform samples including both endpoints (n >= 2).
    double sample(std::size_t i, std::size_t n) const
    {
        if (i + 1 == n)
            return hi;
        return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
};

/// gamma and its first three derivatives at one parameter value.
struct CurveJet {
    Vec3 d0, d1, d2, d3;
};

/// A map w -> R^3 defined by three expressions in `w` over a closed domain.
class ParamCurve {
public:
    enum class Kind { expressions, helix, circle };

    ParamCurve(Expr x, Expr y, Expr z, Interval domain)
        : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)), domain_(domain)
    {
    }

    static ParamCurve from_strings(const std::string& x, const std::string& y, const std::string& z, Interval domain)
    {
        return ParamCurve(parse_expr(x), parse_expr(y), parse_expr(z), domain);
    }

    /// (a sin w, a cos w, b w)
    static ParamCurve helix(double a, double b, Interval domain)
    {
        auto w = Expr::var();
        ParamCurve c(Expr::binary(BinaryOp::mul, Expr::number(a), Expr::unary(UnaryOp::sin, w)),
                     Expr::binary(BinaryOp::mul, Expr::number(a), Expr::unary(UnaryOp::cos, w)),
                     Expr::binary(BinaryOp::mul, Expr::number(b), w), domain);
        c.kind_ = Kind::helix;
        c.params_ = {a, b};
        return c;
    }

    /// (r cos w, r sin w, 0)
    static ParamCurve circle(double r, Interval domain)
    {
        auto w = Expr::var();
        ParamCurve c(Expr::binary(BinaryOp::mul, Expr::number(r), Expr::unary(UnaryOp::cos, w)),
                     Expr::binary(BinaryOp::mul, Expr::number(r), Expr::unary(UnaryOp::sin, w)),
                     Expr::number(0), domain);
        c.kind_ = Kind::circle;
        c.params_ = {r};
        return c;
    }

    Kind kind() const { return kind_; }
    const std::vector<double>& params() const { return params_; }
    const Interval& domain() const { return domain_; }
    const Expr& x() const { return x_; }
    const Expr& y() const { return y_; }
    const Expr& z() const { return z_; }

    Vec3 operator()(double omega) const { return {eval(x_, omega), eval(y_, omega), eval(z_, omega)}; }

    CurveJet derivatives(double omega) const
    {
        const Jet3 jx = eval_jet(x_, omega), jy = eval_jet(y_, omega), jz = eval_jet(z_, omega);
        return {{jx.v0, jy.v0, jz.v0}, {jx.v1, jy.v1, jz.v1}, {jx.v2, jy.v2, jz.v2}, {jx.v3, jy.v3, jz.v3}};
    }

private:
    Expr x_, y_, z_;
    Interval domain_;
    Kind kind_ = Kind::expressions;
    std::vector<double> params_;
};

inline CurveJet curve_derivatives(const ParamCurve& c, double omega) { return c.derivatives(omega); }

struct RegularityIssue {
    double omega;
    std::string what;
};

/// Samples the domain uniformly and lists every point where the curve is not
/// regular (|gamma'| <= eps_reg) or cannot be evaluated.
inline std::vector<RegularityIssue> check_regularity(const ParamCurve& c, double eps_reg = 1e-9,
                                                     std::size_t samples = 256)
{
    std::vector<RegularityIssue> issues;
    for (std::size_t i = 0; i < samples; ++i) {
        const double w = c.domain().sample(i, samples);
        try {
            const double speed = norm(c.derivatives(w).d1);
            if (!(speed > eps_reg))
                issues.push_back({w, "speed " + std::to_string(speed) + " at or below regularity threshold"});
        } catch (const DomainError& e) {
            issues.push_back({w, e.what()});
        }
    }
    return issues;
}

} // namespace isoasym
