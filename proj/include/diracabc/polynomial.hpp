#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace diracabc::poly {

/// Dense real polynomial, coefficients ordered low degree -> high degree.
using Coeffs = std::vector<double>;

inline double eval(const Coeffs& c, double x) {
    double y = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) y = y * x + c[i];
    return y;
}

inline Coeffs derivative(const Coeffs& c) {
    if (c.size() <= 1) return {};
    Coeffs d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<double>(i);
    return d;
}

inline int degree(const Coeffs& c) {
    int d = static_cast<int>(c.size()) - 1;
    while (d > 0 && c[static_cast<std::size_t>(d)] == 0.0) --d;
    return d;
}

/// Scales the polynomial so its leading coefficient is 1.
inline Coeffs monic(const Coeffs& c) {
    const int d = degree(c);
    Coeffs m(c.begin(), c.begin() + d + 1);
    const double lead = m.back();
    for (double& v : m) v /= lead;
    return m;
}

/// Cauchy bound: every real root lies in [-R, R].
inline double cauchy_root_bound(const Coeffs& c) {
    const Coeffs m = monic(c);
    double mx = 0.0;
    for (std::size_t i = 0; i + 1 < m.size(); ++i) mx = std::max(mx, std::fabs(m[i]));
    return 1.0 + mx;
}

/// Fujiwara bound, 2 max_i |c_{d-i}/c_d|^(1/i). Far tighter than Cauchy when
/// the coefficients decay factorially, as the truncation polynomials do.
inline double fujiwara_root_bound(const Coeffs& c) {
    const Coeffs m = monic(c);
    const std::size_t d = m.size() - 1;
    double mx = 0.0;
    for (std::size_t i = 1; i <= d; ++i)
        mx = std::max(mx, std::pow(std::fabs(m[d - i]), 1.0 / static_cast<double>(i)));
    return 2.0 * mx;
}

/// The smaller of the two classical inclusion radii.
inline double root_bound(const Coeffs& c) {
    return std::min(cauchy_root_bound(c), fujiwara_root_bound(c));
}

namespace detail {

// Bisection on a bracketing interval, then a few guarded Newton steps.
inline double refine_root(const Coeffs& c, const Coeffs& dc, double a, double b) {
    double fa = eval(c, a);
    if (fa == 0.0) return a;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        if (mid == a || mid == b) break; // interval at machine resolution
        const double fm = eval(c, mid);
        if (fm == 0.0) return mid;
        if ((fa < 0.0) == (fm < 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    double x = 0.5 * (a + b);
    for (int it = 0; it < 4; ++it) {
        const double f = eval(c, x);
        const double df = eval(dc, x);
        if (df == 0.0) break;
        const double step = f / df;
        const double nx = x - step;
        if (!(nx >= a && nx <= b)) break;
        x = nx;
        if (std::fabs(step) <= 1e-17 * std::max(1.0, std::fabs(x))) break;
    }
    return x;
}

} // namespace detail

/// All real roots of `c` in [lo, hi] that the polynomial crosses (sign
/// changes). The interval is split at the critical points, found recursively
/// from the derivative, so every monotone piece holds at most one root.
/// Tangential (even-multiplicity) roots are not reported.
inline std::vector<double> real_roots(const Coeffs& c, double lo, double hi) {
    const int d = degree(c);
    if (d <= 0 || lo >= hi) return {};
    if (d == 1) {
        const double r = -c[0] / c[1];
        if (r >= lo && r <= hi) return {r};
        return {};
    }
    const Coeffs dc = derivative(Coeffs(c.begin(), c.begin() + d + 1));
    std::vector<double> pts = real_roots(dc, lo, hi);
    pts.push_back(lo);
    pts.push_back(hi);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<double> vals(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) vals[i] = eval(c, pts[i]);

    std::vector<double> roots;
    // exact zeros at the sample points: report only when the sign changes
    // across them (a zero at a critical point with equal neighbor signs is a
    // tangency)
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (vals[i] != 0.0) continue;
        const bool crossing = i == 0 || i + 1 == pts.size() ||
                              (vals[i - 1] < 0.0) != (vals[i + 1] < 0.0);
        if (crossing) roots.push_back(pts[i]);
    }
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (vals[i] == 0.0 || vals[i + 1] == 0.0) continue;
        if ((vals[i] < 0.0) == (vals[i + 1] < 0.0)) continue;
        roots.push_back(detail::refine_root(c, dc, pts[i], pts[i + 1]));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace diracabc::poly
