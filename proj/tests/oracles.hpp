#pragma once

// Test-only references that do not share code paths with the library:
// finite-difference derivatives, closed-form helix geometry, brute-force
// small solves, and random generators.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "isoasym/expr.hpp"
#include "isoasym/vec3.hpp"

namespace oracle {

inline constexpr double pi = std::numbers::pi;
inline const double sqrt3 = std::sqrt(3.0);

/// Seed for randomized tests; override with ISOASYM_SEED.
inline std::uint64_t seed()
{
    if (const char* s = std::getenv("ISOASYM_SEED"))
        return std::strtoull(s, nullptr, 10);
    return 20201016;
}

using Fn = std::function<double(double)>;

inline double central1(const Fn& f, double x, double h) { return (f(x + h) - f(x - h)) / (2 * h); }
inline double central2(const Fn& f, double x, double h) { return (f(x + h) - 2 * f(x) + f(x - h)) / (h * h); }
inline double central3(const Fn& f, double x, double h)
{
    return (f(x + 2 * h) - 2 * f(x + h) + 2 * f(x - h) - f(x - 2 * h)) / (2 * h * h * h);
}

// Central differences have O(h^2) error; combining steps h and 10h cancels it.
inline double richardson(double fine, double coarse) { return (100 * fine - coarse) / 99; }

/// k-th derivative of f at x (k = 1..3) by Richardson-combined central
/// differences over steps 1e-4 / 1e-3 (orders 1, 2) and 1e-3 / 1e-2 (order 3).
inline double fd_derivative(const Fn& f, double x, int k)
{
    switch (k) {
    case 1: return richardson(central1(f, x, 1e-4), central1(f, x, 1e-3));
    case 2: return richardson(central2(f, x, 1e-4), central2(f, x, 1e-3));
    default: return richardson(central3(f, x, 1e-3), central3(f, x, 1e-2));
    }
}

/// Gap between the estimate above and the same estimate on doubled steps.
/// A gap near the test tolerance means the function varies too fast for
/// these steps and the estimate cannot serve as an oracle.
inline double fd_spread(const Fn& f, double x, int k)
{
    double alt = 0;
    switch (k) {
    case 1: alt = richardson(central1(f, x, 2e-4), central1(f, x, 2e-3)); break;
    case 2: alt = richardson(central2(f, x, 2e-4), central2(f, x, 2e-3)); break;
    default: alt = richardson(central3(f, x, 2e-3), central3(f, x, 2e-2)); break;
    }
    return std::fabs(alt - fd_derivative(f, x, k));
}

/// Relative error with unit floor on the scale.
inline double rel_err(double got, double want) { return std::fabs(got - want) / std::max(1.0, std::fabs(want)); }

// Closed forms for the helix (sin w / 2, cos w / 2, sqrt(3) w / 2).
inline isoasym::Vec3 helix_point(double w) { return {std::sin(w) / 2, std::cos(w) / 2, sqrt3 * w / 2}; }
inline isoasym::Vec3 helix_V1(double w) { return {std::cos(w) / 2, -std::sin(w) / 2, sqrt3 / 2}; }
inline isoasym::Vec3 helix_V2(double w) { return {-std::sin(w), -std::cos(w), 0}; }
inline isoasym::Vec3 helix_V3(double w) { return {sqrt3 * std::cos(w) / 2, -sqrt3 * std::sin(w) / 2, -0.5}; }

/// x solving [[p, q], [r, s]] x = (u, v) by the explicit inverse.
inline std::pair<double, double> solve2(double p, double q, double r, double s, double u, double v)
{
    const double det = p * s - q * r;
    return {(s * u - q * v) / det, (-r * u + p * v) / det};
}

/// Smooth, domain-safe random expressions for derivative cross-checks.
class SafeExprGen {
public:
    explicit SafeExprGen(std::mt19937_64& rng) : rng_(rng) {}

    isoasym::Expr operator()(int depth)
    {
        using namespace isoasym;
        std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 11);
        std::uniform_real_distribution<double> val(0.1, 2.0);
        auto num = [](double v) { return Expr::number(v); };
        switch (pick(rng_)) {
        case 0: return Expr::var();
        case 1: return Expr::number(val(rng_));
        case 2: return Expr::unary(UnaryOp::sin, (*this)(depth - 1));
        case 3: return Expr::unary(UnaryOp::cos, (*this)(depth - 1));
        case 4: return Expr::binary(BinaryOp::add, (*this)(depth - 1), (*this)(depth - 1));
        case 5: return Expr::binary(BinaryOp::sub, (*this)(depth - 1), (*this)(depth - 1));
        case 6: return Expr::binary(BinaryOp::mul, (*this)(depth - 1), (*this)(depth - 1));
        case 7:
            return Expr::binary(BinaryOp::div, (*this)(depth - 1),
                                Expr::binary(BinaryOp::add, num(2.5),
                                             Expr::unary(UnaryOp::sin, (*this)(depth - 1))));
        case 8:
            return Expr::unary(UnaryOp::sqrt,
                               Expr::binary(BinaryOp::add, num(2), Expr::unary(UnaryOp::cos, (*this)(depth - 1))));
        case 9:
            return Expr::unary(UnaryOp::ln,
                               Expr::binary(BinaryOp::add, num(2), Expr::unary(UnaryOp::sin, (*this)(depth - 1))));
        case 10: return Expr::unary(UnaryOp::exp, Expr::unary(UnaryOp::sin, (*this)(depth - 1)));
        default:
            return Expr::binary(
                BinaryOp::pow,
                Expr::binary(BinaryOp::add, num(1.5), Expr::unary(UnaryOp::cos, (*this)(depth - 1))), num(2.5));
        }
    }

private:
    std::mt19937_64& rng_;
};

/// Arbitrary random trees (any operator, exponents constant) for grammar round-trips.
class AnyExprGen {
public:
    explicit AnyExprGen(std::mt19937_64& rng) : rng_(rng) {}

    isoasym::Expr operator()(int depth, bool allow_var = true)
    {
        using namespace isoasym;
        std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 12);
        const int k = pick(rng_);
        switch (k) {
        case 0: return allow_var ? Expr::var() : number();
        case 1: return number();
        case 2: case 3: case 4: case 5: case 6: case 7: {
            static constexpr UnaryOp ops[] = {UnaryOp::neg, UnaryOp::sin, UnaryOp::cos,
                                              UnaryOp::sqrt, UnaryOp::exp, UnaryOp::ln};
            return Expr::unary(ops[k - 2], (*this)(depth - 1, allow_var));
        }
        case 8: return Expr::binary(BinaryOp::add, (*this)(depth - 1, allow_var), (*this)(depth - 1, allow_var));
        case 9: return Expr::binary(BinaryOp::sub, (*this)(depth - 1, allow_var), (*this)(depth - 1, allow_var));
        case 10: return Expr::binary(BinaryOp::mul, (*this)(depth - 1, allow_var), (*this)(depth - 1, allow_var));
        case 11: return Expr::binary(BinaryOp::div, (*this)(depth - 1, allow_var), (*this)(depth - 1, allow_var));
        default: return Expr::binary(BinaryOp::pow, (*this)(depth - 1, allow_var), (*this)(depth - 1, false));
        }
    }

private:
    isoasym::Expr number()
    {
        std::uniform_int_distribution<int> kind(0, 3);
        switch (kind(rng_)) {
        case 0: return isoasym::Expr::number(std::uniform_int_distribution<int>(0, 100)(rng_));
        case 1: return isoasym::Expr::number(std::uniform_real_distribution<double>(0, 10)(rng_));
        case 2: return isoasym::Expr::number(std::exp(std::uniform_real_distribution<double>(-300, 300)(rng_)));
        default: return isoasym::Expr::number(std::numbers::pi);
        }
    }

    std::mt19937_64& rng_;
};

} // namespace oracle
