#include "dising/error.hpp"

#include <sstream>

namespace dising {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::out_of_normal_phase: return "OutOfNormalPhase";
    case Errc::non_positive_frequency: return "NonPositiveFrequency";
    case Errc::chain_too_short: return "ChainTooShort";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::degenerate_normalization: return "DegenerateNormalization";
    case Errc::complex_energy: return "ComplexEnergy";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::params_mismatch: return "ParamsMismatch";
    case Errc::complex_polariton: return "ComplexPolariton";
    case Errc::degenerate_branches: return "DegenerateBranches";
    case Errc::resonance_divergence: return "ResonanceDivergence";
    case Errc::no_crossing: return "NoCrossing";
    case Errc::too_large: return "TooLarge";
    case Errc::cutoff_unconverged: return "CutoffUnconverged";
  }
  return "Unknown";
}

bool is_validation_error(Errc code) noexcept {
  switch (code) {
    case Errc::out_of_normal_phase:
    case Errc::non_positive_frequency:
    case Errc::chain_too_short:
    case Errc::invalid_argument:
    case Errc::too_large:
      return true;
    default:
      return false;
  }
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

namespace {
std::string describe(int iterations, double residual) {
  std::ostringstream os;
  os << "solver stopped after " << iterations << " iterations with residual " << residual;
  return os.str();
}
}  // namespace

NoConvergence::NoConvergence(int iterations, double residual)
    : Error(Errc::no_convergence, describe(iterations, residual)),
      iterations_(iterations),
      residual_(residual) {}

}  // namespace dising
