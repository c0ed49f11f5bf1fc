#pragma once

#include <cmath>
#include <ostream>

namespace isoasym {

template <typename T>
struct BasicVec3 {
    T x{}, y{}, z{};

    constexpr BasicVec3& operator+=(const BasicVec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    constexpr BasicVec3& operator-=(const BasicVec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    constexpr BasicVec3& operator*=(T s) { x *= s; y *= s; z *= s; return *this; }

    friend constexpr BasicVec3 operator+(BasicVec3 a, const BasicVec3& b) { return a += b; }
    friend constexpr BasicVec3 operator-(BasicVec3 a, const BasicVec3& b) { return a -= b; }
    friend constexpr BasicVec3 operator-(const BasicVec3& a) { return {-a.x, -a.y, -a.z}; }
    friend constexpr BasicVec3 operator*(T s, BasicVec3 a) { return a *= s; }
    friend constexpr BasicVec3 operator*(BasicVec3 a, T s) { return a *= s; }
    friend constexpr BasicVec3 operator/(const BasicVec3& a, T s) { return {a.x / s, a.y / s, a.z / s}; }
    friend constexpr bool operator==(const BasicVec3&, const BasicVec3&) = default;

    constexpr T operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    friend std::ostream& operator<<(std::ostream& os, const BasicVec3& v)
    {
        return os << '(' << v.x << ", " << v.y << ", " << v.z << ')';
    }
};

using Vec3 = BasicVec3<double>;

template <typename T>
constexpr T dot(const BasicVec3<T>& a, const BasicVec3<T>& b)
{
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <typename T>
constexpr BasicVec3<T> cross(const BasicVec3<T>& a, const BasicVec3<T>& b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <typename T>
T norm(const BasicVec3<T>& a)
{
    return std::hypot(a.x, a.y, a.z);
}

template <typename T>
BasicVec3<T> normalized(const BasicVec3<T>& a)
{
    return a / norm(a);
}

/// det of the 3x3 matrix with columns a, b, c.
template <typename T>
constexpr T triple(const BasicVec3<T>& a, const BasicVec3<T>& b, const BasicVec3<T>& c)
{
    return dot(a, cross(b, c));
}

template <typename T>
T max_abs(const BasicVec3<T>& a)
{
    return std::fmax(std::fabs(a.x), std::fmax(std::fabs(a.y), std::fabs(a.z)));
}

} // namespace isoasym
