#pragma once

// Matter-sector configuration shared by every solver: chain parameters, the
// open-chain (Pekar) momentum grid, approximation tags and the value types
// that carry spectra and Bogoliubov coefficients.

#include <cstddef>
#include <string_view>
#include <vector>

namespace dising {

/// Largest |eta| accepted: the normal phase.
inline constexpr double kMaxEta = 0.25;

/// Open chain of N two-level dipoles with transition frequency omega0 and
/// nearest-neighbour Ising coupling J = eta * omega0 (hbar = 1).
struct ChainParams {
  int n_dipoles = 2;
  double omega0 = 1.0;
  double eta = 0.0;

  [[nodiscard]] double coupling() const noexcept { return eta * omega0; }

  friend bool operator==(const ChainParams&, const ChainParams&) = default;
};

/// Returns params unchanged or throws dising::Error with
/// chain_too_short / non_positive_frequency / out_of_normal_phase.
ChainParams validate(const ChainParams& params);

struct GridMode {
  int l;     ///< mode index, 1-based
  double k;  ///< dimensionless quasi-momentum in (0, pi)
};

/// k(l) = l*pi/(N+1), l = 1..N.
class MomentumGrid {
 public:
  explicit MomentumGrid(int n_modes);

  [[nodiscard]] std::size_t size() const noexcept { return modes_.size(); }
  [[nodiscard]] const GridMode& operator[](std::size_t i) const { return modes_[i]; }
  /// Quasi-momentum of 1-based mode l.
  [[nodiscard]] double k(int l) const;

  [[nodiscard]] auto begin() const noexcept { return modes_.begin(); }
  [[nodiscard]] auto end() const noexcept { return modes_.end(); }

 private:
  std::vector<GridMode> modes_;
};

double pekar_momentum(int l, int n_modes);
/// 1-based l with pekar_momentum(l, n) == k to 1e-12; invalid_argument otherwise.
int pekar_index(double k, int n_modes);
MomentumGrid pekar_grid(int n_modes);
MomentumGrid pekar_grid(const ChainParams& params);

enum class Approximation {
  FermionExact,              ///< Jordan-Wigner fermions
  Bose,                      ///< zeroth-order Holstein-Primakoff
  HolsteinPrimakoff1,        ///< first-order HP in the matter sector
  HolsteinPrimakoff1FullLM,  ///< first-order HP including the light-matter vertex
};

std::string_view to_string(Approximation tag) noexcept;

enum class Statistics { fermionic, bosonic };

/// Per-mode Bogoliubov coefficients. Bosonic pairs use the convention
/// b_k = alpha d_k + beta d^dag_{-k}, so that F = alpha - beta multiplies the
/// light-matter vertex.
struct BogoliubovPair {
  double k = 0.0;
  double alpha = 1.0;
  double beta = 0.0;
  Statistics statistics = Statistics::bosonic;

  /// alpha = sqrt(1 + beta^2) exactly.
  static BogoliubovPair bosonic(double k, double beta) noexcept;

  /// |alpha^2 +- beta^2 - 1| for the pair's statistics.
  [[nodiscard]] double canonical_defect() const noexcept;

  /// alpha - beta; the matter factor of the effective light-matter coupling.
  [[nodiscard]] double coupling_factor() const noexcept { return alpha - beta; }
};

/// Single-particle energies on the Pekar grid plus the ground-state energy.
struct ModeSpectrum {
  Approximation tag;
  ChainParams params;
  std::vector<double> energies;
  double ground_energy = 0.0;
};

}  // namespace dising
