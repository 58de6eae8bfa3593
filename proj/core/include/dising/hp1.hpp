#pragma once

// First-order Holstein-Primakoff treatment of the Ising chain: the
// second-order closed forms and a numeric solution of the self-consistent
// Bogoliubov problem on the Pekar grid.

#include <vector>

#include "dising/chain.hpp"

namespace dising {

enum class Hp1Method { perturbative_order2, numeric };

struct Hp1Solution {
  ChainParams params;
  Hp1Method method = Hp1Method::perturbative_order2;
  std::vector<BogoliubovPair> pairs;  ///< aligned with pekar_grid(params)
  double residual_norm = 0.0;         ///< max_k |off-diagonal coefficient| / omega0
  int iterations = 0;
};

struct SolverOptions {
  double tolerance = 1e-10;
  int max_iterations = 200;
  double damping = 0.5;
};

/// beta = -eta cos k + (2 cos^2 k - 1/2) eta^2, alpha = sqrt(1 + beta^2).
BogoliubovPair hp1_coefficients_perturbative(double k, double eta);

/// The closed-form pairs tabulated on the grid, with their residual.
Hp1Solution hp1_coefficients_perturbative(const ChainParams& params);

/// Damped Newton on the beta vector, seeded from the closed form. Throws
/// NoConvergence when the tolerance is not reached.
Hp1Solution hp1_coefficients_numeric(const ChainParams& params, const SolverOptions& options = {});

/// omega0 (1 + 2 eta cos k + 2 eta^2 sin^2 k); valid for any k.
double hp1_energy(double k, const ChainParams& params);

/// Diagonal coefficient at k. Numeric solutions are only defined on grid
/// points (invalid_argument otherwise); throws params_mismatch when the
/// solution belongs to other parameters.
double hp1_energy(double k, const ChainParams& params, const Hp1Solution& solution);

/// Energies for every grid mode of the solution.
std::vector<double> hp1_energies(const Hp1Solution& solution);

/// omega0 eta^2 sum_k cos k (1 - cos k); extensive, about -N eta^2 omega0 / 2.
double hp1_ground_energy(const ChainParams& params);

ModeSpectrum hp1_spectrum(const Hp1Solution& solution);

/// Off-diagonal coefficient per mode, in units of omega0.
std::vector<double> hp1_residuals(const ChainParams& params, const std::vector<BogoliubovPair>& pairs);

/// (1/N) sum_k beta_k^2.
double hp1_virtual_population(const Hp1Solution& solution);

struct KernelValues {
  double f = 0.0;
  double g = 0.0;
  double h = 0.0;
};

/// The three quartic kernels as polynomials in (alpha, beta, cos) at k and k'.
KernelValues kernels_eval(const BogoliubovPair& at_k, const BogoliubovPair& at_kp);

/// Single-contraction kernels actually summed by the solver (grid mean over
/// k'). With them the diagonal and off-diagonal coefficients read
/// A_k - (J/2) <f>_k' and B_k - (J/2) <g>_k'.
KernelValues contracted_kernels(const BogoliubovPair& at_k, const BogoliubovPair& at_kp);

/// Coefficient table plus kernel evaluation on grid indices.
class NonlinearKernels {
 public:
  explicit NonlinearKernels(Hp1Solution solution);

  /// Printed kernels at 1-based modes (l, lp).
  [[nodiscard]] KernelValues at(int l, int lp) const;
  [[nodiscard]] const Hp1Solution& solution() const noexcept { return solution_; }

 private:
  Hp1Solution solution_;
};

}  // namespace dising
