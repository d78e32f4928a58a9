#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "diracabc/core_model.hpp"
#include "diracabc/errors.hpp"
#include "diracabc/tridiagonal.hpp"
#include "diracabc/wavefunction.hpp"

namespace diracabc {

enum class BoundaryCondition { dirichlet };

/// Uniform grid on [x_min, x_max] with Dirichlet conditions at both ends.
/// x_min stays strictly positive to keep the 1/x and 1/x^2 terms finite.
struct GridSpec {
    double x_min = 1e-4;
    double x_max = 12.0;
    int points = 4001;
    BoundaryCondition bc = BoundaryCondition::dirichlet;

    double spacing() const { return (x_max - x_min) / (points - 1); }

    void validate() const {
        detail::require(std::isfinite(x_min) && x_min > 0.0, "GridSpec: x_min must be > 0");
        detail::require(std::isfinite(x_max) && x_max > x_min, "GridSpec: x_max must be > x_min");
        detail::require(points >= 100, "GridSpec: points must be >= 100");
    }
};

/// Outcome of one discretized-operator verification run.
struct OracleReport {
    std::vector<double> eigenvalues; ///< lowest-k eigenvalues, ascending
    int matched_index = -1;          ///< index of the eigenvalue nearest the analytic target
    double eigenvalue_error = 0.0;   ///< |matched - analytic|
    double overlap = 0.0;            ///< |<numeric eigenvector, analytic profile>|, both unit norm
    double residual_max = 0.0;       ///< max ODE residual of the analytic state on the grid
    GridSpec grid;
    bool unverified = false;         ///< overlap < 0.9: the run does not certify the state
};

/// Analytic eigenvalue of the dimensionless operator on a solved state:
/// Ebar_s = 2n + 2|gamma| + 2 - s.
inline double analytic_ebar(const BoundState& state) {
    return 2.0 * state.qn.n + 2.0 * std::fabs(state.derived.gamma) + 2.0 -
           static_cast<double>(state.qn.s);
}

/// Discretizes -d^2/dx^2 + gamma(gamma-s)/x^2 + x^2 - a_bar/x with a_bar
/// frozen at the solved root (second-order central differences, Dirichlet at
/// both ends), solves for the k lowest eigenvalues by Sturm bisection, and
/// compares the nearest one with the analytic Ebar_s. The eigenvector comes
/// from inverse iteration; the analytic profile is sampled on the same grid
/// for the overlap. The frozen coupling keeps the check linear and
/// independent of the quantization route.
inline OracleReport discretized_eigenvalues(const BoundState& state, const GridSpec& grid,
                                            int k) {
    grid.validate();
    if (k < 1) throw ValidationError("discretized_eigenvalues: k must be >= 1");
    if (state.heun_coeffs.empty())
        throw DegenerateCondition("resonance state: no dimensionless operator to discretize");

    const double g = state.derived.gamma;
    const double s = static_cast<double>(state.qn.s);
    const double a_bar = state.a_bar_root;
    const double centrifugal = g * (g - s);
    const double h = grid.spacing();
    const int interior = grid.points - 2;

    std::vector<double> diag(static_cast<std::size_t>(interior));
    const double inv_h2 = 1.0 / (h * h);
    for (int i = 0; i < interior; ++i) {
        const double x = grid.x_min + h * (i + 1);
        diag[static_cast<std::size_t>(i)] =
            2.0 * inv_h2 + centrifugal / (x * x) + x * x - a_bar / x;
    }
    const double off = -inv_h2;

    OracleReport report;
    report.grid = grid;
    report.eigenvalues = tridiag::lowest_eigenvalues(diag, off, k);

    const double target = analytic_ebar(state);
    int best = 0;
    for (int j = 1; j < k; ++j)
        if (std::fabs(report.eigenvalues[static_cast<std::size_t>(j)] - target) <
            std::fabs(report.eigenvalues[static_cast<std::size_t>(best)] - target))
            best = j;
    report.matched_index = best;
    report.eigenvalue_error =
        std::fabs(report.eigenvalues[static_cast<std::size_t>(best)] - target);

    const auto vec = tridiag::inverse_iteration(
        diag, off, report.eigenvalues[static_cast<std::size_t>(best)]);

    RadialFunction rf = normalize(make_radial_function(state), 1e-10);
    double dot = 0.0, nrm = 0.0;
    std::vector<double> sampled(static_cast<std::size_t>(interior));
    for (int i = 0; i < interior; ++i) {
        const double x = grid.x_min + h * (i + 1);
        sampled[static_cast<std::size_t>(i)] = radial_value(rf, x);
        nrm += sampled[static_cast<std::size_t>(i)] * sampled[static_cast<std::size_t>(i)];
        dot += sampled[static_cast<std::size_t>(i)] * vec[static_cast<std::size_t>(i)];
    }
    report.overlap = std::fabs(dot) / std::sqrt(nrm);
    report.unverified = report.overlap < 0.9;

    // Stencil accuracy degrades inside the power-law region near the origin,
    // so the residual diagnostic starts at x = 0.1.
    const double h_fd = 5e-4;
    double worst = 0.0;
    for (int i = 0; i < interior; ++i) {
        const double x = grid.x_min + h * (i + 1);
        if (x < 0.1) continue;
        worst = std::max(worst, ode_residual(rf, x, h_fd));
    }
    report.residual_max = worst;
    return report;
}

/// Runs the eigensolve at h and h/2, checks that the matched-eigenvalue error
/// behaves like a second-order scheme, and returns the Richardson
/// extrapolation of the matched eigenvalue.
inline double refine_and_extrapolate(const BoundState& state, const GridSpec& base) {
    base.validate();
    const int k = state.qn.n + 3;
    GridSpec fine = base;
    fine.points = 2 * base.points - 1; // halves the spacing exactly

    const OracleReport coarse_report = discretized_eigenvalues(state, base, k);
    const OracleReport fine_report = discretized_eigenvalues(state, fine, k);

    const double target = analytic_ebar(state);
    const double err_coarse = coarse_report.eigenvalue_error;
    const double err_fine = fine_report.eigenvalue_error;
    const double floor = 1e-10 * std::max(1.0, std::fabs(target));
    if (err_coarse > floor && err_coarse < 1.5 * err_fine + floor)
        throw GridTooCoarse(
            "matched eigenvalue error did not shrink under refinement (err(h) = " +
            std::to_string(err_coarse) + ", err(h/2) = " + std::to_string(err_fine) +
            "): unresolved singular behavior near x_min");

    const double lam_coarse =
        coarse_report.eigenvalues[static_cast<std::size_t>(coarse_report.matched_index)];
    const double lam_fine =
        fine_report.eigenvalues[static_cast<std::size_t>(fine_report.matched_index)];
    return lam_fine + (lam_fine - lam_coarse) / 3.0;
}

} // namespace diracabc
