#pragma once

// Small dense linear algebra: the systems here are m x m with m the number
// of control points, so plain Gaussian elimination is all that is needed.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "errors.hpp"

namespace isoasym {

template <typename T>
class BasicMatrix {
public:
    BasicMatrix() = default;
    BasicMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    BasicMatrix(std::initializer_list<std::initializer_list<T>> rows)
        : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
    {
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw Error("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static BasicMatrix identity(std::size_t n)
    {
        BasicMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    T operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const BasicMatrix&, const BasicMatrix&) = default;

    std::vector<T> operator*(std::span<const T> x) const
    {
        std::vector<T> y(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                y[i] += (*this)(i, j) * x[j];
        return y;
    }

    /// Maximum absolute row sum.
    T norm_inf() const
    {
        T best = 0;
        for (std::size_t i = 0; i < rows_; ++i) {
            T s = 0;
            for (std::size_t j = 0; j < cols_; ++j)
                s += std::fabs((*this)(i, j));
            best = std::max(best, s);
        }
        return best;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using Matrix = BasicMatrix<double>;

/// PA = LU with unit lower L, stored packed in `lu`.
template <typename T>
struct BasicLu {
    BasicMatrix<T> lu;
    std::vector<std::size_t> perm;
    int sign = 1;
    bool singular = false;

    T determinant() const
    {
        if (singular)
            return T(0);
        T d = sign;
        for (std::size_t i = 0; i < lu.rows(); ++i)
            d *= lu(i, i);
        return d;
    }

    std::vector<T> solve(std::span<const T> b) const
    {
        if (singular)
            throw SingularSystem("pivot underflow during elimination");
        const std::size_t n = lu.rows();
        std::vector<T> x(n);
        for (std::size_t i = 0; i < n; ++i) {
            T s = b[perm[i]];
            for (std::size_t j = 0; j < i; ++j)
                s -= lu(i, j) * x[j];
            x[i] = s;
        }
        for (std::size_t i = n; i-- > 0;) {
            T s = x[i];
            for (std::size_t j = i + 1; j < n; ++j)
                s -= lu(i, j) * x[j];
            x[i] = s / lu(i, i);
        }
        return x;
    }
};

using LuDecomposition = BasicLu<double>;

template <typename T>
BasicLu<T> lu_decompose(const BasicMatrix<T>& a)
{
    if (!a.square())
        throw Error("LU decomposition needs a square matrix");
    const std::size_t n = a.rows();
    BasicLu<T> d{a, std::vector<std::size_t>(n), 1, false};
    std::iota(d.perm.begin(), d.perm.end(), std::size_t{0});
    BasicMatrix<T>& m = d.lu;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::fabs(m(i, k)) > std::fabs(m(piv, k)))
                piv = i;
        if (std::fabs(m(piv, k)) < std::numeric_limits<T>::min()) {
            d.singular = true;
            return d;
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(k, j), m(piv, j));
            std::swap(d.perm[k], d.perm[piv]);
            d.sign = -d.sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const T f = m(i, k) / m(k, k);
            m(i, k) = f;
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) -= f * m(k, j);
        }
    }
    return d;
}

template <typename T>
T lu_determinant(const BasicMatrix<T>& a)
{
    return lu_decompose(a).determinant();
}

struct SolveResult {
    std::vector<double> x;
    double residual = 0;  ///< |Mx - d|_inf
    double condition = 0; ///< |M|_inf |M^-1|_inf
};

/// Solves M x = d by elimination with partial pivoting.
inline SolveResult solve_coefficients(const Matrix& m, std::span<const double> d)
{
    if (!m.square() || m.rows() != d.size())
        throw Error("solve_coefficients: dimension mismatch");
    const std::size_t n = m.rows();
    const LuDecomposition lu = lu_decompose(m);

    SolveResult r;
    r.x = lu.solve(d);

    // One refinement step with the residual accumulated in extended precision.
    std::vector<double> corr(n);
    for (std::size_t i = 0; i < n; ++i) {
        long double s = d[i];
        for (std::size_t j = 0; j < n; ++j)
            s -= static_cast<long double>(m(i, j)) * r.x[j];
        corr[i] = static_cast<double>(s);
    }
    const std::vector<double> delta = lu.solve(corr);
    for (std::size_t i = 0; i < n; ++i)
        r.x[i] += delta[i];

    const std::vector<double> mx = m * r.x;
    for (std::size_t i = 0; i < n; ++i)
        r.residual = std::max(r.residual, std::fabs(mx[i] - d[i]));

    double inv_norm = 0;
    std::vector<double> rows_abs(n, 0.0);
    std::vector<double> e(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(e.begin(), e.end(), 0.0);
        e[j] = 1;
        const std::vector<double> col = lu.solve(e);
        for (std::size_t i = 0; i < n; ++i)
            rows_abs[i] += std::fabs(col[i]);
    }
    for (double s : rows_abs)
        inv_norm = std::max(inv_norm, s);
    r.condition = m.norm_inf() * inv_norm;
    return r;
}

} // namespace isoasym
