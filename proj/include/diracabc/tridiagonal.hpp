#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "diracabc/errors.hpp"

namespace diracabc::tridiag {

// Symmetric tridiagonal matrices with constant off-diagonal `off`, as they
// arise from uniform-grid finite differences.

/// Number of eigenvalues strictly below `lambda` (Sturm count via the LDL^T
/// recurrence). Pivots below pivmin are replaced by -pivmin; scaling pivmin
/// with off^2 keeps the next division finite.
inline int count_below(const std::vector<double>& diag, double off, double lambda) {
    const double off2 = off * off;
    const double pivmin =
        std::max(std::numeric_limits<double>::min(),
                 std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon() *
                     std::max(off2, 1.0));
    int count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        q = diag[i] - lambda - (i == 0 ? 0.0 : off2 / q);
        if (std::fabs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

/// The k lowest eigenvalues, ascending, each located by bisection on the
/// Sturm count inside the Gershgorin interval.
inline std::vector<double> lowest_eigenvalues(const std::vector<double>& diag, double off, int k) {
    if (k < 1 || static_cast<std::size_t>(k) > diag.size())
        throw ValidationError("lowest_eigenvalues: k out of range");
    double lo = diag[0], hi = diag[0];
    for (double d : diag) {
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    lo -= 2.0 * std::fabs(off);
    hi += 2.0 * std::fabs(off);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        double a = out.empty() ? lo : out.back(); // eigenvalues are ordered
        double b = hi;
        for (int it = 0; it < 140; ++it) {
            const double mid = 0.5 * (a + b);
            if (mid == a || mid == b) break;
            if (count_below(diag, off, mid) >= j + 1)
                b = mid;
            else
                a = mid;
            if (b - a <= 1e-13 * std::max(1.0, std::fabs(mid))) break;
        }
        out.push_back(0.5 * (a + b));
    }
    return out;
}

namespace detail {

// Tridiagonal solve of (T - shift I) x = rhs with partial pivoting; near
// singular shifts (inverse iteration) are the intended use, so zero pivots
// are replaced by a tiny value instead of failing.
inline std::vector<double> solve_shifted(const std::vector<double>& diag, double off, double shift,
                                         std::vector<double> rhs) {
    const std::size_t n = diag.size();
    std::vector<double> dd(n), du(n > 1 ? n - 1 : 0), du2(n > 2 ? n - 2 : 0, 0.0),
        dl(n > 1 ? n - 1 : 0, off);
    for (std::size_t i = 0; i < n; ++i) dd[i] = diag[i] - shift;
    for (std::size_t i = 0; i + 1 < n; ++i) du[i] = off;

    double scale = std::fabs(off);
    for (double d : dd) scale = std::max(scale, std::fabs(d));
    const double tiny = scale * std::numeric_limits<double>::epsilon() *
                        std::numeric_limits<double>::epsilon();

    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::fabs(dd[i]) >= std::fabs(dl[i])) {
            if (dd[i] == 0.0) dd[i] = tiny;
            const double fact = dl[i] / dd[i];
            dd[i + 1] -= fact * du[i];
            rhs[i + 1] -= fact * rhs[i];
        } else {
            const double fact = dd[i] / dl[i];
            dd[i] = dl[i];
            const double temp = dd[i + 1];
            dd[i + 1] = du[i] - fact * temp;
            du[i] = temp;
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = -fact * du2[i];
            }
            std::swap(rhs[i], rhs[i + 1]);
            rhs[i + 1] -= fact * rhs[i];
        }
    }
    if (dd[n - 1] == 0.0) dd[n - 1] = tiny;
    rhs[n - 1] /= dd[n - 1];
    if (n == 1) return rhs;
    rhs[n - 2] = (rhs[n - 2] - du[n - 2] * rhs[n - 1]) / dd[n - 2];
    for (std::size_t i = n - 2; i-- > 0;)
        rhs[i] = (rhs[i] - du[i] * rhs[i + 1] - du2[i] * rhs[i + 2]) / dd[i];
    return rhs;
}

} // namespace detail

/// Eigenvector for an eigenvalue estimate, by inverse iteration.
inline std::vector<double> inverse_iteration(const std::vector<double>& diag, double off,
                                             double lambda, int iterations = 3) {
    const std::size_t n = diag.size();
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (int it = 0; it < iterations; ++it) {
        v = detail::solve_shifted(diag, off, lambda, std::move(v));
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw GridTooCoarse("inverse iteration failed to produce an eigenvector");
        for (double& x : v) x /= norm;
    }
    return v;
}

} // namespace diracabc::tridiag
