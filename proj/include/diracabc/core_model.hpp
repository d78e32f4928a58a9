#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "diracabc/errors.hpp"

namespace diracabc {

/// Fine-structure constant. The physical electron coupling in Gaussian
/// natural units is e_abs = sqrt(fine_structure_constant); the library never
/// applies this value implicitly, it is offered as the documented default
/// choice for callers.
inline constexpr double fine_structure_constant = 7.2973525693e-3;

namespace detail {

inline bool is_finite(double x) { return std::isfinite(x); }

inline void require(bool ok, const std::string& what) {
    if (!ok) throw ValidationError(what);
}

} // namespace detail

/// True iff 2*m_l is an odd integer (m_l = ±1/2, ±3/2, ...).
inline bool is_half_odd_integer(double m_l) {
    const double twice = 2.0 * m_l;
    if (!std::isfinite(twice)) return false;
    const double nearest = std::nearbyint(twice);
    if (std::fabs(twice - nearest) > 1e-9) return false;
    return std::fmod(std::fabs(nearest), 2.0) == 1.0;
}

/// Physical configuration of the oscillator in the AB-Coulomb background.
/// All quantities are in natural units (hbar = c = 1, Gaussian coupling).
struct SystemParams {
    double m0 = 1.0;      ///< rest mass, > 0
    double e_abs = 1.0;   ///< charge magnitude |e|, >= 0
    double Z = 0.0;       ///< atomic number, >= 0
    double phi_ab = 0.0;  ///< flux parameter Phi_AB = Phi / 2*pi
    double B = 0.0;       ///< homogeneous magnetic field strength, >= 0
    std::optional<double> omega{}; ///< oscillator frequency; empty when the solver determines it

    /// Z|e|^2, the Coulomb coupling strength.
    double coulomb_coupling() const { return Z * e_abs * e_abs; }
    /// |e| Phi_AB, the flux term entering gamma and kappa.
    double flux_coupling() const { return e_abs * phi_ab; }

    void validate() const;
};

/// Labels of one bound state.
struct QuantumNumbers {
    int n = 1;        ///< principal quantum number, >= 1
    double m_l = 0.5; ///< orbital magnetic quantum number, half-odd-integer
    int s = +1;       ///< spin parameter, +1 or -1
    int branch = +1;  ///< energy sign: +1 particle, -1 antiparticle

    void validate() const;
};

inline void QuantumNumbers::validate() const {
    detail::require(n >= 1, "n must be >= 1, got " + std::to_string(n));
    detail::require(s == 1 || s == -1, "s must be +1 or -1, got " + std::to_string(s));
    detail::require(branch == 1 || branch == -1,
                    "branch must be +1 or -1, got " + std::to_string(branch));
    detail::require(is_half_odd_integer(m_l),
                    "m_l must be a half-odd-integer (±1/2, ±3/2, ...), got " + std::to_string(m_l));
}

/// Cyclotron frequency |e|B / m0.
inline double cyclotron_frequency(const SystemParams& p) {
    return p.e_abs * p.B / p.m0;
}

/// Effective oscillator frequency.
///
/// For omega > 0 returns omega - omega_c/2 and requires it to be >= 0.
/// For omega = 0 returns |omega_c| (the substitution that keeps the spectrum
/// real when the oscillator is switched off).
inline double effective_frequency(double omega, double omega_c) {
    detail::require(omega >= 0.0 && std::isfinite(omega), "omega must be finite and >= 0");
    detail::require(omega_c >= 0.0 && std::isfinite(omega_c), "omega_c must be finite and >= 0");
    if (omega == 0.0) return std::fabs(omega_c);
    const double omega_bar = omega - 0.5 * omega_c;
    if (omega_bar < 0.0)
        throw NegativeEffectiveFrequency(
            "omega - omega_c/2 = " + std::to_string(omega_bar) +
            " < 0; the configuration has no real spectrum");
    return omega_bar;
}

inline void SystemParams::validate() const {
    detail::require(detail::is_finite(m0) && m0 > 0.0, "m0 must be finite and > 0");
    detail::require(detail::is_finite(e_abs) && e_abs >= 0.0, "e_abs must be finite and >= 0");
    detail::require(detail::is_finite(Z) && Z >= 0.0, "Z must be finite and >= 0");
    detail::require(detail::is_finite(B) && B >= 0.0, "B must be finite and >= 0");
    detail::require(detail::is_finite(phi_ab), "phi_ab must be finite");
    if (omega.has_value()) effective_frequency(*omega, cyclotron_frequency(*this)); // throws if invalid
}

/// Which form of the AB-Coulomb index to evaluate. `linear_ml` combines m_l
/// and the flux linearly, which is the form consistent with the angular
/// operator and with the free limits; `as_printed` squares m_l inside the
/// first term and is kept only for comparison.
enum class GammaConvention { linear_ml, as_printed };

/// AB-Coulomb index gamma = sqrt((m_l + |e|Phi_AB)^2 - Z^2|e|^4) >= 0.
///
/// Throws SupercriticalCoupling when the radicand is negative (gamma would be
/// imaginary and no normalizable bound state exists).
inline double compute_gamma(const SystemParams& p, double m_l,
                            GammaConvention conv = GammaConvention::linear_ml) {
    const double c = p.coulomb_coupling();
    const double base = conv == GammaConvention::linear_ml ? m_l + p.flux_coupling()
                                                           : m_l * m_l + p.flux_coupling();
    const double radicand = base * base - c * c;
    if (radicand < 0.0)
        throw SupercriticalCoupling(
            "(m_l + |e|phi_AB)^2 = " + std::to_string(base * base) + " < (Z|e|^2)^2 = " +
            std::to_string(c * c) + "; gamma is imaginary");
    return std::sqrt(radicand);
}

/// Spectral combination kappa = n + |gamma| + 1 - s - m_l - |e|Phi_AB.
inline double kappa(int n, double gamma, int s, double m_l, double e_phi_ab) {
    detail::require(n >= 1, "kappa requires n >= 1");
    return static_cast<double>(n) + std::fabs(gamma) + 1.0 - static_cast<double>(s) - m_l -
           e_phi_ab;
}

/// Scalar quantities derived from (params, quantum numbers) and, where they
/// depend on it, from the solved (omega_bar, E) pair.
struct DerivedQuantities {
    double gamma = 0.0;     ///< AB-Coulomb index, >= 0
    double delta_s = 0.0;   ///< 2|gamma| + 1 - s, > 0 away from the critical exponent
    double kappa = 0.0;     ///< n + |gamma| + 1 - s - m_l - |e|Phi_AB
    double omega_c = 0.0;   ///< |e|B/m0
    double omega_bar = 0.0; ///< omega - omega_c/2 (or the omega = 0 substitute)
    double a_bar = 0.0;     ///< 2Z|e|^2 E / sqrt(m0 omega_bar); carries the sign of E
    double eps_s = 0.0;     ///< Heun spectral parameter; equals 2n on solved states
};

/// Assembles all derived scalars for a state with the given effective
/// frequency and energy. At omega_bar = 0 (resonance) the Heun map collapses
/// and a_bar is set to 0, eps_s to 2n by definition.
inline DerivedQuantities derive_quantities(const SystemParams& p, const QuantumNumbers& qn,
                                           double omega_bar, double energy) {
    p.validate();
    qn.validate();
    DerivedQuantities d;
    d.gamma = compute_gamma(p, qn.m_l);
    d.delta_s = 2.0 * d.gamma + 1.0 - static_cast<double>(qn.s);
    d.kappa = kappa(qn.n, d.gamma, qn.s, qn.m_l, p.flux_coupling());
    d.omega_c = cyclotron_frequency(p);
    d.omega_bar = omega_bar;
    if (omega_bar > 0.0) {
        d.a_bar = 2.0 * p.coulomb_coupling() * energy / std::sqrt(p.m0 * omega_bar);
        const double e_s = energy * energy - p.m0 * p.m0 +
                           2.0 * p.m0 * omega_bar * p.flux_coupling() +
                           p.m0 * omega_bar * (2.0 * qn.m_l + static_cast<double>(qn.s));
        const double ebar_s = e_s / (p.m0 * omega_bar);
        d.eps_s = ebar_s - 2.0 * d.gamma - (2.0 - static_cast<double>(qn.s));
    } else {
        d.a_bar = 0.0;
        d.eps_s = 2.0 * qn.n;
    }
    return d;
}

/// One solved bound state. `heun_coeffs` holds a_0..a_n of the truncated
/// polynomial factor; it is empty for the degenerate resonance states
/// (omega_bar = 0), which have no dimensionless radial profile.
struct BoundState {
    QuantumNumbers qn;
    double energy = 0.0;
    double omega = 0.0;
    double omega_bar = 0.0;
    double a_bar_root = 0.0;
    std::vector<double> heun_coeffs;
    DerivedQuantities derived;
};

} // namespace diracabc
