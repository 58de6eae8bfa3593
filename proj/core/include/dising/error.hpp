#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dising {

/// Failure categories raised by the library. The CLI maps these onto exit codes.
enum class Errc {
  out_of_normal_phase,
  non_positive_frequency,
  chain_too_short,
  invalid_argument,
  degenerate_normalization,
  complex_energy,
  no_convergence,
  params_mismatch,
  complex_polariton,
  degenerate_branches,
  resonance_divergence,
  no_crossing,
  too_large,
  cutoff_unconverged,
};

std::string_view to_string(Errc code) noexcept;

/// True for errors that reject user-supplied parameters before any computation.
bool is_validation_error(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Thrown by the HP1 solver; carries the state it gave up in.
class NoConvergence : public Error {
 public:
  NoConvergence(int iterations, double residual);

  [[nodiscard]] int iterations() const noexcept { return iterations_; }
  [[nodiscard]] double residual() const noexcept { return residual_; }

 private:
  int iterations_;
  double residual_;
};

}  // namespace dising
