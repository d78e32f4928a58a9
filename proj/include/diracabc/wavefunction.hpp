#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "diracabc/core_model.hpp"
#include "diracabc/errors.hpp"
#include "diracabc/polynomial.hpp"
#include "diracabc/quadrature.hpp"

namespace diracabc {

/// Analytic radial profile in the dimensionless coordinate x:
///   phi(x) = C x^exponent exp(-x^2/2) * poly(x),
/// exponent = |gamma| + (1-s)/2 and poly the truncated Heun polynomial.
struct RadialFunction {
    BoundState state;
    double exponent = 0.0;
    std::vector<double> poly;
    double norm_const = 1.0;
};

/// Assembles the profile of a solved state. Resonance states (empty
/// polynomial) have no dimensionless profile; the critical exponent gamma = 0
/// with s = +1 violates phi(0) = 0 and is rejected.
inline RadialFunction make_radial_function(const BoundState& state) {
    if (state.heun_coeffs.empty())
        throw DegenerateCondition(
            "resonance state (omega_bar = 0) has no dimensionless radial profile");
    const double exponent =
        std::fabs(state.derived.gamma) + 0.5 * (1.0 - static_cast<double>(state.qn.s));
    if (!(exponent > 0.0))
        throw CriticalExponent("exponent |gamma| + (1-s)/2 = 0: phi(0) = C != 0 violates the "
                               "boundary condition at the origin");
    return RadialFunction{state, exponent, state.heun_coeffs, 1.0};
}

inline double radial_value(const RadialFunction& rf, double x) {
    if (x < 0.0) throw ValidationError("radial_value: x must be >= 0");
    if (x == 0.0) return 0.0; // exponent > 0 guaranteed at construction
    return rf.norm_const * std::pow(x, rf.exponent) * std::exp(-0.5 * x * x) *
           poly::eval(rf.poly, x);
}

/// Upper integration limit: the Gaussian tail beyond this point is far below
/// the quadrature tolerances used anywhere in the library.
inline double profile_x_max(const RadialFunction& rf) {
    return std::sqrt(2.0 * (rf.exponent + rf.state.qn.n) + 40.0);
}

/// Returns a copy scaled so that the L2 norm over [0, infinity) in the flat
/// measure dx is 1 to relative accuracy tol.
inline RadialFunction normalize(RadialFunction rf, double tol) {
    if (!(tol > 0.0)) throw ValidationError("normalize: tol must be > 0");
    const double x_max = profile_x_max(rf);
    const double integral = integrate_adaptive(
        [&rf](double x) {
            const double v = radial_value(rf, x);
            return v * v;
        },
        0.0, x_max, tol);
    if (!(integral > 0.0) || !std::isfinite(integral))
        throw QuadratureFailure("norm integral evaluated to " + std::to_string(integral));
    rf.norm_const /= std::sqrt(integral);
    return rf;
}

/// Physical rho-space profiles differ from the dimensionless ones by
/// phi_rho(rho) = prefactor * phi(sqrt(m0 omega_bar) rho) with this
/// prefactor, which keeps the rho-space L2 norm at 1.
inline double rho_norm_prefactor(double m0, double omega_bar) {
    return std::pow(m0 * omega_bar, 0.25);
}

/// Number of strict sign changes of the polynomial factor on (0, x_max).
inline int count_nodes(const RadialFunction& rf, double x_max) {
    if (!(x_max > 0.0)) throw ValidationError("count_nodes: x_max must be > 0");
    const auto roots = poly::real_roots(rf.poly, 0.0, x_max);
    int nodes = 0;
    for (double r : roots)
        if (r > 0.0 && r < x_max) ++nodes;
    return nodes;
}

/// Pointwise defect of the dimensionless radial equation,
///   |phi''(x) - [gamma(gamma-s)/x^2 + x^2 - a_bar/x - Ebar_s] phi(x)|,
/// with phi'' from the centered fourth-order five-point stencil and
/// Ebar_s = 2n + 2|gamma| + 2 - s.
inline double ode_residual(const RadialFunction& rf, double x, double h) {
    if (!(x > 0.0) || !(h > 0.0) || !(x - 2.0 * h > 0.0))
        throw ValidationError("ode_residual: need x > 0, h > 0 and x - 2h > 0");
    const double g = rf.state.derived.gamma;
    const double s = static_cast<double>(rf.state.qn.s);
    const double a_bar = rf.state.a_bar_root;
    const double ebar = 2.0 * rf.state.qn.n + 2.0 * g + 2.0 - s;
    const double d2 = (-radial_value(rf, x - 2.0 * h) + 16.0 * radial_value(rf, x - h) -
                       30.0 * radial_value(rf, x) + 16.0 * radial_value(rf, x + h) -
                       radial_value(rf, x + 2.0 * h)) /
                      (12.0 * h * h);
    const double potential = g * (g - s) / (x * x) + x * x - a_bar / x - ebar;
    return std::fabs(d2 - potential * radial_value(rf, x));
}

/// CSV sampling of the profile: header `x,phi,phi_squared`, `samples` rows on
/// the uniform grid [0, x_max].
inline std::string profile_csv(const RadialFunction& rf, double x_max, int samples) {
    if (samples < 2) throw ValidationError("profile_csv: samples must be >= 2");
    if (!(x_max > 0.0)) throw ValidationError("profile_csv: x_max must be > 0");
    std::string out = "x,phi,phi_squared\n";
    char buf[96];
    for (int i = 0; i < samples; ++i) {
        const double x = x_max * static_cast<double>(i) / static_cast<double>(samples - 1);
        const double v = radial_value(rf, x);
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", x, v, v * v);
        out += buf;
    }
    return out;
}

} // namespace diracabc
