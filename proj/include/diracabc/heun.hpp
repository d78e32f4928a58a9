#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "diracabc/errors.hpp"

namespace diracabc {

/// Parameters of the biconfluent Heun equation in the form
///   f'' + (delta/x - 2x) f' + (eps + a_bar/x) f = 0.
/// `eps` is accepted as any real so callers can evaluate off the quantized
/// values eps = 2n.
struct HeunParams {
    HeunParams(double a_bar_, double delta_, double eps_)
        : a_bar(a_bar_), delta(delta_), eps(eps_) {
        if (!(delta > 0.0) || !std::isfinite(delta))
            throw ValidationError("HeunParams: delta must be > 0, got " + std::to_string(delta_));
        if (!std::isfinite(a_bar) || !std::isfinite(eps))
            throw ValidationError("HeunParams: a_bar and eps must be finite");
    }

    double a_bar;
    double delta;
    double eps;
};

/// Frobenius coefficients a_0..a_K of the series solution around the origin,
/// normalized with a_0 = 1.
struct CoefficientSeq {
    std::vector<double> coeffs;
    HeunParams params;
};

/// Generates a_0..a_count via
///   a_1 = -a_bar/delta,
///   a_{k+2} = [-a_bar a_{k+1} + (2k - eps) a_k] / ((k+2)(k+1+delta)).
/// The recurrence mixes signs, so it is accumulated in extended precision.
inline CoefficientSeq coefficients(const HeunParams& hp, int count) {
    if (count < 0) throw ValidationError("coefficients: count must be >= 0");
    std::vector<long double> a;
    a.reserve(static_cast<std::size_t>(count) + 1);
    a.push_back(1.0L);
    if (count >= 1) a.push_back(-static_cast<long double>(hp.a_bar) / hp.delta);
    for (int k = 0; k + 2 <= count; ++k) {
        const long double num =
            -static_cast<long double>(hp.a_bar) * a[static_cast<std::size_t>(k) + 1] +
            (2.0L * k - hp.eps) * a[static_cast<std::size_t>(k)];
        a.push_back(num / ((k + 2.0L) * (k + 1.0L + hp.delta)));
    }
    CoefficientSeq seq{std::vector<double>(a.begin(), a.end()), hp};
    return seq;
}

/// The coefficient a_{n+1} at eps = 2n; it vanishes exactly when (a_bar,
/// delta) admits a polynomial solution of degree n.
inline double truncation_residual(int n, double a_bar, double delta) {
    if (n < 1) throw ValidationError("truncation_residual: n must be >= 1");
    const HeunParams hp(a_bar, delta, 2.0 * n);
    return coefficients(hp, n + 1).coeffs[static_cast<std::size_t>(n) + 1];
}

/// Sums the Frobenius series at x >= 0 until the increment stays below tol,
/// relative to the running scale, for three consecutive terms (so the parity
/// zeros at a_bar = 0 cannot trigger a premature stop). Polynomial parameter
/// sets terminate naturally once the coefficients vanish.
inline double evaluate_series(const HeunParams& hp, double x, double tol, int max_terms) {
    if (x < 0.0) throw ValidationError("evaluate_series: x must be >= 0");
    if (!(tol > 0.0)) throw ValidationError("evaluate_series: tol must be > 0");
    if (max_terms < 1) throw ValidationError("evaluate_series: max_terms must be >= 1");
    if (x == 0.0) return 1.0; // a_0

    long double a_prev = 1.0L;                                      // a_0
    long double a_curr = -static_cast<long double>(hp.a_bar) / hp.delta; // a_1
    long double sum = a_prev;
    long double x_pow = 1.0L;
    long double scale = 1.0L;
    int quiet = 0;
    for (int k = 1; k <= max_terms; ++k) {
        x_pow *= x;
        const long double term = a_curr * x_pow;
        sum += term;
        scale = std::max({scale, std::fabs(sum), std::fabs(term)});
        quiet = std::fabs(term) <= tol * scale ? quiet + 1 : 0;
        if (quiet >= 3) return static_cast<double>(sum);
        const long double a_next =
            (-static_cast<long double>(hp.a_bar) * a_curr + (2.0L * (k - 1) - hp.eps) * a_prev) /
            ((k + 1.0L) * (k + hp.delta));
        a_prev = a_curr;
        a_curr = a_next;
    }
    throw SeriesNotConverged("Heun series did not converge within " + std::to_string(max_terms) +
                             " terms at x = " + std::to_string(x));
}

} // namespace diracabc
