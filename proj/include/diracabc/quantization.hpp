#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "diracabc/core_model.hpp"
#include "diracabc/errors.hpp"
#include "diracabc/heun.hpp"
#include "diracabc/polynomial.hpp"

namespace diracabc {

/// One request for the quantized spectrum at fixed quantum numbers.
struct SpectrumRequest {
    SystemParams params;
    QuantumNumbers qn;
    double tol = 1e-12;
};

/// A root of the truncation polynomial that was discarded, with the reason.
struct RejectedRoot {
    double a_bar = 0.0;
    std::string reason;
};

/// Solved states plus the log of rejected roots.
struct SolutionSet {
    std::vector<BoundState> states;
    std::vector<RejectedRoot> diagnostics;
};

/// Energy on the given branch at effective frequency omega_bar:
///   E = branch * sqrt(m0^2 + 2 m0 omega_bar kappa),
/// exactly ±m0 at resonance (omega_bar = 0).
inline double energy_from_frequency(double omega_bar, const QuantumNumbers& qn,
                                    const SystemParams& p) {
    p.validate();
    qn.validate();
    if (!(omega_bar >= 0.0) || !std::isfinite(omega_bar))
        throw NegativeEffectiveFrequency("energy_from_frequency: omega_bar must be >= 0");
    if (omega_bar == 0.0) return static_cast<double>(qn.branch) * p.m0;
    const double g = compute_gamma(p, qn.m_l);
    const double k = kappa(qn.n, g, qn.s, qn.m_l, p.flux_coupling());
    const double radicand = p.m0 * p.m0 + 2.0 * p.m0 * omega_bar * k;
    if (radicand < 0.0)
        throw ImaginaryEnergy("m0^2 + 2 m0 omega_bar kappa = " + std::to_string(radicand) +
                              " < 0: no bound state on this branch");
    return static_cast<double>(qn.branch) * std::sqrt(radicand);
}

namespace detail {

inline double delta_s_checked(double gamma, int s) {
    const double delta = 2.0 * gamma + 1.0 - static_cast<double>(s);
    if (!(delta > 0.0))
        throw CriticalExponent("delta_s = 2|gamma| + 1 - s = " + std::to_string(delta) +
                               " <= 0 (gamma = " + std::to_string(gamma) +
                               ", s = " + std::to_string(s) +
                               "): the radial solution does not vanish at the origin");
    return delta;
}

inline BoundState make_state(const SystemParams& p, QuantumNumbers qn, double energy,
                             double omega_bar, double a_bar, std::vector<double> coeffs) {
    BoundState st;
    st.qn = qn;
    st.energy = energy;
    st.omega_bar = omega_bar;
    st.omega = omega_bar + 0.5 * cyclotron_frequency(p);
    st.a_bar_root = a_bar;
    st.heun_coeffs = std::move(coeffs);
    st.derived = derive_quantities(p, qn, omega_bar, energy);
    st.derived.a_bar = a_bar;
    return st;
}

// Degenerate coupling Z|e|^2 = 0: the spectrum collapses to the rest energy
// and the oscillator sits at half the cyclotron frequency. No polynomial
// factor exists (the coordinate map degenerates), so heun_coeffs stays empty.
inline SolutionSet resonance_states(const SystemParams& p, double m_l, int s, int n) {
    SolutionSet out;
    for (int branch : {+1, -1}) {
        QuantumNumbers qn{n, m_l, s, branch};
        out.states.push_back(make_state(p, qn, static_cast<double>(branch) * p.m0, 0.0, 0.0, {}));
    }
    return out;
}

} // namespace detail

/// Ground state (n = 1) in closed form:
///   E = ±m0 / sqrt(1 - 4 Z^2|e|^4 kappa / delta_s),
///   omega = omega_c/2 + 2 Z^2|e|^4 E^2 / (m0 delta_s).
/// Z|e|^2 = 0 yields the degenerate resonance pair E = ±m0, omega_bar = 0.
inline SolutionSet solve_ground_state(const SystemParams& p, double m_l, int s) {
    p.validate();
    QuantumNumbers{1, m_l, s, +1}.validate();
    const double c = p.coulomb_coupling();
    if (c == 0.0) return detail::resonance_states(p, m_l, s, 1);
    const double g = compute_gamma(p, m_l);
    const double delta = detail::delta_s_checked(g, s);
    const double k = kappa(1, g, s, m_l, p.flux_coupling());
    const double den = 1.0 - 4.0 * c * c * k / delta;
    if (den <= 0.0)
        throw NoBoundState("1 - 4 Z^2|e|^4 kappa / delta_s = " + std::to_string(den) +
                           " <= 0: no normalizable n = 1 state");
    SolutionSet out;
    for (int branch : {+1, -1}) {
        const double energy = static_cast<double>(branch) * p.m0 / std::sqrt(den);
        const double omega_bar = 2.0 * c * c * energy * energy / (p.m0 * delta);
        const double a_bar = 2.0 * c * energy / std::sqrt(p.m0 * omega_bar);
        QuantumNumbers qn{1, m_l, s, branch};
        auto seq = coefficients(HeunParams(a_bar, delta, 2.0), 1);
        out.states.push_back(detail::make_state(p, qn, energy, omega_bar, a_bar, seq.coeffs));
    }
    return out;
}

/// First excited state (n = 2) in closed form:
///   E = ±m0 / sqrt(1 - 2 Z^2|e|^4 kappa / (4|gamma| + 3 - 2s)),
///   omega = omega_c/2 + Z^2|e|^4 E^2 / (m0 (4|gamma| + 3 - 2s)).
inline SolutionSet solve_first_excited(const SystemParams& p, double m_l, int s) {
    p.validate();
    QuantumNumbers{2, m_l, s, +1}.validate();
    const double c = p.coulomb_coupling();
    if (c == 0.0) return detail::resonance_states(p, m_l, s, 2);
    const double g = compute_gamma(p, m_l);
    const double delta = detail::delta_s_checked(g, s);
    const double d2 = 2.0 * delta + 1.0; // = 4|gamma| + 3 - 2s
    const double k = kappa(2, g, s, m_l, p.flux_coupling());
    const double den = 1.0 - 2.0 * c * c * k / d2;
    if (den <= 0.0)
        throw NoBoundState("1 - 2 Z^2|e|^4 kappa / (4|gamma| + 3 - 2s) = " + std::to_string(den) +
                           " <= 0: no normalizable n = 2 state");
    SolutionSet out;
    for (int branch : {+1, -1}) {
        const double energy = static_cast<double>(branch) * p.m0 / std::sqrt(den);
        const double omega_bar = c * c * energy * energy / (p.m0 * d2);
        const double a_bar = 2.0 * c * energy / std::sqrt(p.m0 * omega_bar);
        QuantumNumbers qn{2, m_l, s, branch};
        auto seq = coefficients(HeunParams(a_bar, delta, 4.0), 2);
        out.states.push_back(detail::make_state(p, qn, energy, omega_bar, a_bar, seq.coeffs));
    }
    return out;
}

/// The truncation condition a_{n+1} = 0 as a dense polynomial in a_bar,
/// generated by running the recurrence with a_bar kept symbolic. Degree n+1;
/// its parity is (-1)^(n+1).
inline poly::Coeffs truncation_polynomial(int n, double delta) {
    if (n < 1) throw ValidationError("truncation_polynomial: n must be >= 1");
    if (!(delta > 0.0)) throw ValidationError("truncation_polynomial: delta must be > 0");
    const double eps = 2.0 * static_cast<double>(n);
    std::vector<poly::Coeffs> a;
    a.push_back({1.0});
    a.push_back({0.0, -1.0 / delta});
    for (int k = 0; k + 1 <= n; ++k) {
        const auto& ak = a[static_cast<std::size_t>(k)];
        const auto& ak1 = a[static_cast<std::size_t>(k) + 1];
        poly::Coeffs next(ak1.size() + 1, 0.0);
        for (std::size_t i = 0; i < ak1.size(); ++i) next[i + 1] = -ak1[i]; // -a_bar * a_{k+1}
        const double w = 2.0 * k - eps;
        for (std::size_t i = 0; i < ak.size(); ++i) next[i] += w * ak[i];
        const double div = (k + 2.0) * (k + 1.0 + delta);
        for (double& v : next) v /= div;
        a.push_back(std::move(next));
    }
    return a[static_cast<std::size_t>(n) + 1];
}

/// Solves both truncation conditions for arbitrary n >= 1 by isolating the
/// real roots of the truncation polynomial and converting each admissible
/// root a_bar* into (E, omega_bar) through
///   E^2 = m0^2 / (1 - 8 kappa Z^2|e|^4 / a_bar*^2),
///   m0 omega_bar = 4 Z^2|e|^4 E^2 / a_bar*^2.
/// Roots are kept when E is real, omega_bar > 0 and sign(a_bar*) matches the
/// requested branch; all surviving states are returned sorted by omega_bar.
/// For n >= 3 several roots may survive; each yields a distinct state.
inline SolutionSet solve_general(const SystemParams& p, const QuantumNumbers& qn,
                                 double tol = 1e-12) {
    p.validate();
    qn.validate();
    if (!(tol > 0.0)) throw ValidationError("solve_general: tol must be > 0");
    const double c = p.coulomb_coupling();
    if (c == 0.0)
        throw DegenerateCondition(
            "Z|e|^2 = 0: a_bar vanishes identically and a_{n+1} = 0 does not constrain omega; "
            "supply omega and use energy_from_frequency instead");
    const double g = compute_gamma(p, qn.m_l);
    const double delta = detail::delta_s_checked(g, qn.s);
    const double k = kappa(qn.n, g, qn.s, qn.m_l, p.flux_coupling());

    const poly::Coeffs monic = poly::monic(truncation_polynomial(qn.n, delta));
    const int deg = poly::degree(monic);
    const double bound = poly::root_bound(monic);
    const std::vector<double> roots = poly::real_roots(monic, -bound, bound);

    SolutionSet out;
    for (double root : roots) {
        if (std::fabs(root) <= 1e-9 * bound) {
            out.diagnostics.push_back({root, "zero root"});
            continue;
        }
        // residual judged against the evaluation scale sum |c_k| |root|^k,
        // the magnitude below which a computed value is consistent with zero
        double residual_scale = 0.0;
        double xp = 1.0;
        for (int i = 0; i <= deg; ++i) {
            residual_scale += std::fabs(monic[static_cast<std::size_t>(i)]) * xp;
            xp *= std::fabs(root);
        }
        if (std::fabs(poly::eval(monic, root)) > tol * std::max(1.0, residual_scale)) {
            out.diagnostics.push_back({root, "residual above tolerance"});
            continue;
        }
        const double den = 1.0 - 8.0 * k * c * c / (root * root);
        if (den <= 0.0) {
            out.diagnostics.push_back({root, "imaginary energy"});
            continue;
        }
        const double e2 = p.m0 * p.m0 / den;
        const double energy = static_cast<double>(qn.branch) * std::sqrt(e2);
        if ((root > 0.0) != (energy > 0.0)) {
            out.diagnostics.push_back({root, "sign mismatch for requested branch"});
            continue;
        }
        const double omega_bar = 4.0 * c * c * e2 / (root * root * p.m0);
        if (!(omega_bar > 0.0)) {
            out.diagnostics.push_back({root, "non-positive effective frequency"});
            continue;
        }
        auto seq = coefficients(HeunParams(root, delta, 2.0 * qn.n), qn.n);
        out.states.push_back(detail::make_state(p, qn, energy, omega_bar, root, seq.coeffs));
    }
    std::sort(out.states.begin(), out.states.end(),
              [](const BoundState& a, const BoundState& b) { return a.omega_bar < b.omega_bar; });
    if (out.states.empty())
        throw NoBoundState("no admissible root of the truncation polynomial (n = " +
                           std::to_string(qn.n) + ", " + std::to_string(roots.size()) +
                           " real roots examined)");
    return out;
}

/// Builds the state at a caller-supplied frequency (params.omega required).
/// Valid only when the frequency happens to satisfy the truncation condition,
/// e.g. the degenerate Z|e|^2 = 0 family at even n where a_{n+1} vanishes by
/// parity for every omega_bar > 0.
inline BoundState from_frequency(const SystemParams& p, const QuantumNumbers& qn,
                                 double tol = 1e-10) {
    p.validate();
    qn.validate();
    if (!p.omega.has_value())
        throw ValidationError("from_frequency: params.omega must be set");
    const double omega_bar = effective_frequency(*p.omega, cyclotron_frequency(p));
    if (omega_bar == 0.0)
        throw DegenerateCondition(
            "omega_bar = 0 (resonance): the dimensionless radial problem degenerates");
    const double energy = energy_from_frequency(omega_bar, qn, p);
    const double g = compute_gamma(p, qn.m_l);
    const double delta = detail::delta_s_checked(g, qn.s);
    const double a_bar = 2.0 * p.coulomb_coupling() * energy / std::sqrt(p.m0 * omega_bar);
    auto seq = coefficients(HeunParams(a_bar, delta, 2.0 * qn.n), qn.n + 1);
    double scale = 0.0;
    for (double v : seq.coeffs) scale = std::max(scale, std::fabs(v));
    const double residual = seq.coeffs.back();
    if (std::fabs(residual) > tol * scale)
        throw NoBoundState("a_{n+1} = " + std::to_string(residual) +
                           " at the supplied frequency: the truncation condition fails");
    seq.coeffs.pop_back(); // keep a_0..a_n
    return detail::make_state(p, qn, energy, omega_bar, a_bar, seq.coeffs);
}

/// Runs the root solver, except for the degenerate coupling Z|e|^2 = 0 at
/// n <= 2 where the closed forms supply the resonance pair. The result is
/// filtered to the branch in `req.qn`.
inline SolutionSet solve(const SpectrumRequest& req) {
    if (req.params.coulomb_coupling() != 0.0 || req.qn.n > 2)
        return solve_general(req.params, req.qn, req.tol);
    SolutionSet all = req.qn.n == 1 ? solve_ground_state(req.params, req.qn.m_l, req.qn.s)
                                    : solve_first_excited(req.params, req.qn.m_l, req.qn.s);
    SolutionSet out;
    out.diagnostics = all.diagnostics;
    for (auto& st : all.states)
        if (st.qn.branch == req.qn.branch) out.states.push_back(std::move(st));
    return out;
}

} // namespace diracabc
