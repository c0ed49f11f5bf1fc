#pragma once

/**
 * Third-order truncated Taylor jets.
 *
 * A jet stores (f, f', f'', f''') of some function of a single scalar
 * parameter at one point. Arithmetic propagates the tuple by the Leibniz
 * rule; elementary functions propagate it by third-order Faa di Bruno:
 *
 *   (g o f)'   = g'(f) f'
 *   (g o f)''  = g''(f) f'^2 + g'(f) f''
 *   (g o f)''' = g'''(f) f'^3 + 3 g''(f) f' f'' + g'(f) f'''
 *
 * Three orders is exactly what curvature and torsion consume.
 */

#include <cmath>
#include <string>

#include "errors.hpp"

namespace isoasym {

template <typename T>
struct BasicJet3 {
    T v0{}; ///< value
    T v1{}; ///< first derivative
    T v2{}; ///< second derivative
    T v3{}; ///< third derivative

    static constexpr BasicJet3 constant(T c) { return {c, 0, 0, 0}; }
    static constexpr BasicJet3 variable(T x) { return {x, 1, 0, 0}; }

    constexpr T operator[](int k) const
    {
        switch (k) {
        case 0: return v0;
        case 1: return v1;
        case 2: return v2;
        default: return v3;
        }
    }

    bool finite() const
    {
        return std::isfinite(v0) && std::isfinite(v1) && std::isfinite(v2) && std::isfinite(v3);
    }

    friend constexpr bool operator==(const BasicJet3&, const BasicJet3&) = default;

    constexpr BasicJet3& operator+=(const BasicJet3& o)
    {
        v0 += o.v0; v1 += o.v1; v2 += o.v2; v3 += o.v3;
        return *this;
    }
    constexpr BasicJet3& operator-=(const BasicJet3& o)
    {
        v0 -= o.v0; v1 -= o.v1; v2 -= o.v2; v3 -= o.v3;
        return *this;
    }

    friend constexpr BasicJet3 operator+(BasicJet3 a, const BasicJet3& b) { return a += b; }
    friend constexpr BasicJet3 operator-(BasicJet3 a, const BasicJet3& b) { return a -= b; }
    friend constexpr BasicJet3 operator-(const BasicJet3& a) { return {-a.v0, -a.v1, -a.v2, -a.v3}; }

    friend constexpr BasicJet3 operator*(const BasicJet3& a, const BasicJet3& b)
    {
        return {a.v0 * b.v0,
                a.v1 * b.v0 + a.v0 * b.v1,
                (a.v2 * b.v0 + a.v0 * b.v2) + 2 * (a.v1 * b.v1),
                (a.v3 * b.v0 + a.v0 * b.v3) + 3 * (a.v2 * b.v1 + a.v1 * b.v2)};
    }
    friend constexpr BasicJet3 operator*(T s, const BasicJet3& a) { return {s * a.v0, s * a.v1, s * a.v2, s * a.v3}; }
    friend constexpr BasicJet3 operator*(const BasicJet3& a, T s) { return s * a; }

    // Quotient by the recurrence b*q = a, which keeps exact values exact
    // when the divisor is a constant.
    friend BasicJet3 operator/(const BasicJet3& a, const BasicJet3& b)
    {
        if (b.v0 == 0)
            throw DomainError("division by zero");
        BasicJet3 q;
        q.v0 = a.v0 / b.v0;
        q.v1 = (a.v1 - q.v0 * b.v1) / b.v0;
        q.v2 = (a.v2 - 2 * q.v1 * b.v1 - q.v0 * b.v2) / b.v0;
        q.v3 = (a.v3 - 3 * q.v2 * b.v1 - 3 * q.v1 * b.v2 - q.v0 * b.v3) / b.v0;
        return q;
    }
};

using Jet3 = BasicJet3<double>;

inline constexpr Jet3 jet_var(double x) { return Jet3::variable(x); }
inline constexpr Jet3 jet_const(double c) { return Jet3::constant(c); }
inline constexpr Jet3 jet_mul(const Jet3& a, const Jet3& b) { return a * b; }

/// Composes an outer function, given by its value and first three
/// derivatives at a.v0, with the inner jet a.
template <typename T>
constexpr BasicJet3<T> compose(const BasicJet3<T>& a, T g0, T g1, T g2, T g3)
{
    const T a1sq = a.v1 * a.v1;
    return {g0,
            g1 * a.v1,
            g2 * a1sq + g1 * a.v2,
            g3 * a1sq * a.v1 + 3 * g2 * a.v1 * a.v2 + g1 * a.v3};
}

template <typename T>
BasicJet3<T> sin(const BasicJet3<T>& a)
{
    const T s = std::sin(a.v0), c = std::cos(a.v0);
    return compose(a, s, c, -s, -c);
}

template <typename T>
BasicJet3<T> cos(const BasicJet3<T>& a)
{
    const T s = std::sin(a.v0), c = std::cos(a.v0);
    return compose(a, c, -s, -c, s);
}

template <typename T>
BasicJet3<T> exp(const BasicJet3<T>& a)
{
    const T e = std::exp(a.v0);
    return compose(a, e, e, e, e);
}

template <typename T>
BasicJet3<T> log(const BasicJet3<T>& a)
{
    if (!(a.v0 > 0))
        throw DomainError("ln of non-positive value " + std::to_string(a.v0));
    const T r = 1 / a.v0;
    return compose(a, std::log(a.v0), r, -r * r, 2 * r * r * r);
}

template <typename T>
BasicJet3<T> sqrt(const BasicJet3<T>& a)
{
    // Strict: the derivative of sqrt is singular at 0.
    if (!(a.v0 > 0))
        throw DomainError("sqrt of non-positive value " + std::to_string(a.v0));
    const T s = std::sqrt(a.v0);
    const T r = 1 / a.v0;
    return compose(a, s, T(0.5) / s, T(-0.25) / s * r, T(0.375) / s * r * r);
}

template <typename T>
BasicJet3<T> recip(const BasicJet3<T>& a)
{
    return BasicJet3<T>::constant(1) / a;
}

/// a^p for a constant exponent p. Non-integer p requires a.v0 > 0; negative
/// integer p requires a.v0 != 0.
template <typename T>
BasicJet3<T> pow(const BasicJet3<T>& a, T p)
{
    const bool integral = std::trunc(p) == p;
    if (!integral && !(a.v0 > 0))
        throw DomainError("non-integer power of non-positive value " + std::to_string(a.v0));
    if (integral && p < 0 && a.v0 == 0)
        throw DomainError("negative power of zero");

    // g^(k) = p (p-1) ... (p-k+1) a^(p-k); a vanishing falling factorial
    // kills the term outright so 0^(negative) never enters.
    T g[4];
    T falling = 1;
    for (int k = 0; k < 4; ++k) {
        g[k] = falling == 0 ? T(0) : falling * std::pow(a.v0, p - k);
        falling *= (p - k);
    }
    return compose(a, g[0], g[1], g[2], g[3]);
}

enum class ElemFn { sin, cos, sqrt, exp, ln, neg, recip, pow_const };

/// Applies an elementary function by tag. `exponent` is read only for pow_const.
inline Jet3 jet_elem(ElemFn f, const Jet3& a, double exponent = 0)
{
    switch (f) {
    case ElemFn::sin: return sin(a);
    case ElemFn::cos: return cos(a);
    case ElemFn::sqrt: return sqrt(a);
    case ElemFn::exp: return exp(a);
    case ElemFn::ln: return log(a);
    case ElemFn::neg: return -a;
    case ElemFn::recip: return recip(a);
    case ElemFn::pow_const: return pow(a, exponent);
    }
    return a;
}

} // namespace isoasym
