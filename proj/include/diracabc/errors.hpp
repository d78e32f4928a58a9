#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace diracabc {

/// Coarse classification of failures, used by callers (e.g. the CLI) to map
/// errors onto exit codes without enumerating every concrete type.
enum class ErrorCategory {
    validation,  ///< inputs violate a documented constraint
    no_solution, ///< inputs are valid but admit no bound state / the condition degenerates
    numerical    ///< a numerical scheme failed to reach its target accuracy
};

/// Base of all library errors. `name()` is a stable machine identifier.
class Error : public std::runtime_error {
  public:
    Error(std::string name, ErrorCategory category, const std::string& detail)
        : std::runtime_error(detail), name_(std::move(name)), category_(category) {}

    const std::string& name() const noexcept { return name_; }
    ErrorCategory category() const noexcept { return category_; }

  private:
    std::string name_;
    ErrorCategory category_;
};

class ValidationError : public Error {
  public:
    explicit ValidationError(const std::string& detail)
        : Error("ValidationError", ErrorCategory::validation, detail) {}

  protected:
    ValidationError(std::string name, const std::string& detail)
        : Error(std::move(name), ErrorCategory::validation, detail) {}
};

/// omega > 0 but omega - omega_c/2 < 0: the oscillator cannot be slower than
/// half the cyclotron frequency.
class NegativeEffectiveFrequency : public ValidationError {
  public:
    explicit NegativeEffectiveFrequency(const std::string& detail)
        : ValidationError("NegativeEffectiveFrequency", detail) {}
};

/// (m_l + |e|Phi_AB)^2 < Z^2|e|^4: the AB-Coulomb index gamma is imaginary
/// and the bound-state formalism does not apply.
class SupercriticalCoupling : public ValidationError {
  public:
    explicit SupercriticalCoupling(const std::string& detail)
        : ValidationError("SupercriticalCoupling", detail) {}
};

/// gamma = 0 with s = +1: the radial exponent vanishes, phi(0) != 0 and the
/// boundary condition at the origin cannot be met.
class CriticalExponent : public ValidationError {
  public:
    explicit CriticalExponent(const std::string& detail)
        : ValidationError("CriticalExponent", detail) {}
};

class NoBoundState : public Error {
  public:
    explicit NoBoundState(const std::string& detail)
        : Error("NoBoundState", ErrorCategory::no_solution, detail) {}
};

/// Z|e|^2 = 0 makes the Coulomb-Heun coupling vanish identically, so the
/// polynomial condition no longer constrains the frequency.
class DegenerateCondition : public Error {
  public:
    explicit DegenerateCondition(const std::string& detail)
        : Error("DegenerateCondition", ErrorCategory::no_solution, detail) {}
};

/// m0^2 + 2 m0 omega_bar kappa < 0 on the requested branch.
class ImaginaryEnergy : public Error {
  public:
    explicit ImaginaryEnergy(const std::string& detail)
        : Error("ImaginaryEnergy", ErrorCategory::no_solution, detail) {}
};

class SeriesNotConverged : public Error {
  public:
    explicit SeriesNotConverged(const std::string& detail)
        : Error("SeriesNotConverged", ErrorCategory::numerical, detail) {}
};

class QuadratureFailure : public Error {
  public:
    explicit QuadratureFailure(const std::string& detail)
        : Error("QuadratureFailure", ErrorCategory::numerical, detail) {}
};

class GridTooCoarse : public Error {
  public:
    explicit GridTooCoarse(const std::string& detail)
        : Error("GridTooCoarse", ErrorCategory::numerical, detail) {}
};

} // namespace diracabc
