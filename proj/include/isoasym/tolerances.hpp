#pragma once

#include <algorithm>
#include <cmath>

namespace isoasym {

/// Numerical thresholds shared by the geometry routines.
struct Tolerances {
    double eps_reg = 1e-9;    ///< minimum curve speed
    double eps_kappa = 1e-10; ///< minimum curvature, relative: |g' x g''| > eps_kappa |g'|^3
    double eps_b = 1e-9;      ///< minimum |V'(eta0)| for a well-defined normal along the curve
    double h_fd = 1e-5;       ///< relative finite-difference step

    /// Step used for central differences in w at `omega`.
    double step(double omega) const { return h_fd * std::max(1.0, std::fabs(omega)); }
};

} // namespace isoasym
