#pragma once

// Brute-force references for the analytic solvers: dense diagonalization of
// the spin chain, the quadratic fermion (BdG) problem solved numerically, and
// a single photon mode coupled to the chain in a truncated Fock space.

#include <cstddef>
#include <map>
#include <vector>

#include "dising/chain.hpp"

namespace dising {

inline constexpr int kMaxEdSites = 14;
inline constexpr std::size_t kMaxDickeDimension = 20000;

struct DenseSpectrum {
  std::size_t dimension = 0;
  std::vector<double> eigenvalues;  ///< ascending
  /// Ground-state <sigma+ sigma-> per 0-based site; empty unless requested.
  std::map<int, double> site_population;
};

/// omega0 sum n_i + J sum sigma^x_i sigma^x_{i+1}, open chain, bit i = site i.
/// Throws too_large for N > kMaxEdSites.
DenseSpectrum ed_spin_chain(const ChainParams& params, bool ground_populations = false);

enum class BdgMethod { automatic, dense, bidiagonal };

struct BdgSpectrum {
  std::vector<double> quasiparticle_energies;  ///< ascending, N values >= 0
  double ground_energy = 0.0;                  ///< (N omega0 - sum eps) / 2
};

/// Quasiparticle energies of the Jordan-Wigner quadratic form, either from
/// the 2N x 2N Nambu matrix (dense) or as the singular values of A + B
/// (bidiagonal). automatic uses dense up to N = 512.
BdgSpectrum bdg_spin_chain(const ChainParams& params, BdgMethod method = BdgMethod::automatic);

/// E0 + sum_i n_i eps_i over all 2^N occupations, ascending. Throws too_large
/// above 20 modes.
std::vector<double> many_body_spectrum(const BdgSpectrum& bdg);

struct DickeIsingOptions {
  int mode = 1;                 ///< Pekar mode l the photon couples to
  double photon_frequency = 0;  ///< bare omega in units of omega0; 0 means omega0
  int photon_cutoff = 8;        ///< max Fock occupancy
  bool verify_cutoff = true;    ///< rerun at twice the cutoff
  double cutoff_tolerance = 1e-6;
};

struct DickeIsingResult {
  DenseSpectrum spectrum;  ///< all levels at the requested cutoff
  double ground_energy = 0.0;
  double lower_gap = 0.0;  ///< odd-parity level of largest photon weight, lower
  double upper_gap = 0.0;
  double lower_photon_weight = 0.0;
  double upper_photon_weight = 0.0;
  double photon_frequency = 0.0;
  double cutoff_shift = 0.0;  ///< max relative gap change on doubling the cutoff
};

/// omega a^dag a + omega0 sum n_i + J sum sigma^x sigma^x
///   + g sum_i u_i (a - a^dag)(sigma^-_i - sigma^+_i) - D (a - a^dag)^2,
/// g = Omega0 sqrt(omega0 / omega), D = g^2 / omega0, u_i the normalized
/// standing wave of the chosen mode. Throws too_large and
/// cutoff_unconverged.
DickeIsingResult ed_dicke_ising(const ChainParams& params, double nu, const DickeIsingOptions& options = {});

}  // namespace dising
