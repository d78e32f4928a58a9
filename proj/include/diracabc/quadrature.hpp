#pragma once

#include <cmath>
#include <string>

#include "diracabc/errors.hpp"

namespace diracabc {

namespace detail {

template <class F>
double simpson(F&& f, double a, double fa, double b, double fb, double& fm) {
    const double m = 0.5 * (a + b);
    fm = f(m);
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adaptive_panel(F&& f, double a, double fa, double b, double fb, double m, double fm,
                      double whole, double eps_abs, int depth) {
    double flm, frm;
    const double left = simpson(f, a, fa, m, fm, flm);
    const double right = simpson(f, m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * eps_abs) return left + right + delta / 15.0;
    if (depth <= 0)
        throw QuadratureFailure("adaptive quadrature hit maximum depth on [" +
                                std::to_string(a) + ", " + std::to_string(b) + "]");
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    return adaptive_panel(f, a, fa, m, fm, lm, flm, left, 0.5 * eps_abs, depth - 1) +
           adaptive_panel(f, m, fm, b, fb, rm, frm, right, 0.5 * eps_abs, depth - 1);
}

} // namespace detail

/// Adaptive Simpson integration of f over [a, b] to relative accuracy
/// rel_tol. The budget is seeded from a coarse composite pass; panels are
/// bisected until the embedded higher-order estimate agrees, with a depth cap
/// that converts pathological integrands into QuadratureFailure.
template <class F>
double integrate_adaptive(F&& f, double a, double b, double rel_tol, int max_depth = 56) {
    if (!(rel_tol > 0.0)) throw ValidationError("integrate_adaptive: rel_tol must be > 0");
    if (a == b) return 0.0;
    // coarse composite Simpson estimate to set the absolute budget
    const int panels = 128;
    const double h = (b - a) / panels;
    double coarse = 0.0;
    double prev = f(a);
    for (int i = 0; i < panels; ++i) {
        const double xr = a + (i + 1) * h;
        const double fr = f(xr);
        const double fmid = f(a + (i + 0.5) * h);
        coarse += h / 6.0 * (prev + 4.0 * fmid + fr);
        prev = fr;
    }
    const double eps_abs = rel_tol * std::max(std::fabs(coarse), 1e-300);

    const double fa = f(a), fb = f(b);
    double fm;
    const double whole = detail::simpson(f, a, fa, b, fb, fm);
    return detail::adaptive_panel(f, a, fa, b, fb, 0.5 * (a + b), fm, whole, eps_abs, max_depth);
}

} // namespace diracabc
