#pragma once

// Light-matter sector: a linearly dispersing cavity photon, its diamagnetic
// renormalization, the effective coupling to one matter mode, the Hopfield
// problem for the two polariton branches and the perturbative expressions
// used to interpret them.

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "dising/chain.hpp"
#include "dising/hp1.hpp"

namespace dising {

struct CavityParams {
  double nu = 0.0;     ///< collective coupling Omega0 / omega0
  double delta = 4.0;  ///< zone-edge photon frequency / omega0
  ChainParams chain;
  Approximation tag = Approximation::Bose;

  [[nodiscard]] double omega_collective() const noexcept { return nu * chain.omega0; }
};

/// Throws invalid_argument for nu < 0 or delta <= 0, plus the chain checks.
CavityParams validate(const CavityParams& cavity);

/// omega_k = omega0 delta k / pi.
double photon_frequency(double k, const CavityParams& cavity);

struct RenormalizedCavity {
  double omega_tilde = 0.0;     ///< sqrt(omega_k^2 + 4 Omega0^2)
  double coupling_tilde = 0.0;  ///< Omega0 sqrt(omega0 / omega_tilde)
};

RenormalizedCavity renormalized_cavity(double k, const CavityParams& cavity);

struct MatterMode {
  double energy = 0.0;
  BogoliubovPair pair;
};

/// Bosonic matter modes of one approximation scheme.
class MatterSector {
 public:
  /// Closed forms in continuous k: Bose, or the second-order HP1 pairs and
  /// energies for both HP1 tags. FermionExact has no bosonic coupling and is
  /// rejected.
  static MatterSector for_tag(const ChainParams& params, Approximation tag);

  /// A solved HP1 table; only grid momenta can be queried.
  static MatterSector from_solution(Hp1Solution solution,
                                    Approximation tag = Approximation::HolsteinPrimakoff1);

  [[nodiscard]] MatterMode at(double k) const;
  [[nodiscard]] double ground_energy() const;
  [[nodiscard]] Approximation tag() const noexcept { return tag_; }
  [[nodiscard]] const ChainParams& params() const noexcept { return params_; }
  [[nodiscard]] bool continuous() const noexcept { return solution_.pairs.empty(); }

 private:
  MatterSector(ChainParams params, Approximation tag, Hp1Solution solution);

  ChainParams params_;
  Approximation tag_;
  Hp1Solution solution_;
  std::vector<double> energies_;
};

/// Lambda = Omega_tilde (alpha - beta).
double effective_coupling(double k, const CavityParams& cavity, const BogoliubovPair& matter_pair);

struct HopfieldInputs {
  double omega_tilde = 0.0;
  double matter_energy = 0.0;
  double coupling = 0.0;
};

/// Basis (a_k, d_k, a^dag_-k, d^dag_-k); metric diag(1, 1, -1, -1).
Eigen::Matrix4d hopfield_matrix(const HopfieldInputs& in);
Eigen::Matrix4d hopfield_metric();

/// Real parts of the matrix eigenvalues from a dense nonsymmetric solver,
/// ascending.
Eigen::Vector4d hopfield_eigenvalues_numeric(const Eigen::Matrix4d& m);

struct BranchEnergies {
  double lower = 0.0;
  double upper = 0.0;
};

/// Closed-form E- and E+. Throws complex_polariton if E-^2 < 0.
BranchEnergies polariton_energies(const HopfieldInputs& in);

/// Components (x, y, w, z) as in p = x a + y d - w a^dag - z d^dag.
struct HopfieldCoefficients {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double z = 0.0;

  /// x^2 + y^2 - w^2 - z^2.
  [[nodiscard]] double norm() const noexcept { return x * x + y * y - w * w - z * z; }
};

/// Right eigenvector of hopfield_matrix for the branch. The printed
/// component formula uses the opposite phase of d, so y and z flip sign.
Eigen::Vector4d as_eigenvector(const HopfieldCoefficients& c);

/// Same components expressed through the bare spin-wave operators b instead
/// of the Bogoliubov modes d.
HopfieldCoefficients to_bare_basis(const HopfieldCoefficients& c, const BogoliubovPair& pair);

struct HopfieldVectors {
  HopfieldCoefficients lower;
  HopfieldCoefficients upper;
};

/// Normalized closed-form components. Throws degenerate_branches if
/// E+ - E- < 1e-12 omega0.
HopfieldVectors hopfield_coefficients(const HopfieldInputs& in, const BranchEnergies& energies);

struct PolaritonMode {
  double k = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  HopfieldCoefficients lower_coeffs;
  HopfieldCoefficients upper_coeffs;
  Approximation tag = Approximation::Bose;
  double omega_tilde = 0.0;
  double matter_energy = 0.0;  ///< energy fed to the Hopfield problem
  double coupling = 0.0;
};

HopfieldInputs hopfield_inputs(double k, const CavityParams& cavity, const MatterSector& matter);

/// Energies only (coefficient fields left zero).
PolaritonMode polariton_energies(double k, const CavityParams& cavity, const MatterSector& matter);
PolaritonMode polariton_energies(double k, const CavityParams& cavity);

/// Energies plus normalized components.
PolaritonMode hopfield_coefficients(double k, const CavityParams& cavity, const MatterSector& matter);
PolaritonMode hopfield_coefficients(double k, const CavityParams& cavity);

/// Second-order expansions for schemes Bose, HolsteinPrimakoff1 and
/// HolsteinPrimakoff1FullLM. Lower/upper are the smaller/larger of the
/// photon-like and matter-like expressions. Throws resonance_divergence within
/// 1e-6 omega0 of omega_k = omega0.
BranchEnergies polariton_perturbative(double k, const CavityParams& cavity, Approximation scheme);

/// sqrt(E/omega0) - (alpha - beta) for the matter mode at k.
double no_go_margin(double k, const MatterSector& matter);
double no_go_margin(double k, const CavityParams& cavity);

/// Lambda_HP1 relative to the saturated Bose-form coupling, second order:
/// 1 - eta^2/2.
double saturation_ratio(double eta);

/// (alpha - beta) / sqrt(E/omega0) per grid mode of a solution.
std::vector<double> saturation_profile(const Hp1Solution& solution);

/// Grid mean of saturation_profile.
double saturation_ratio(const Hp1Solution& solution);

struct FiniteSizeCorrection {
  double grid_sum = 0.0;     ///< (1/N) sum_l 1 / (2 x (1 + x)), x = omega_l / omega0
  double closed_form = 0.0;  ///< log((N + delta) / (1 + delta)) / (2 delta)
  double relative_difference = 0.0;  ///< |grid - closed| / |closed|, 0 when both vanish
};

FiniteSizeCorrection finite_size_correction(int n, double delta);

/// Root of omega_tilde(k) = E(k) for the cavity's tag (closed-form matter),
/// bracketed on a 1024-point scan of (0, pi] and bisected. Throws no_crossing.
double crossing_point(const CavityParams& cavity);

/// sum_k (E- + E+ - omega_tilde - E) + E0 over the Pekar grid.
double ground_state_energy(const CavityParams& cavity, const MatterSector& matter);
double ground_state_energy(const CavityParams& cavity);

/// Second-order Hopfield components in the bare-boson basis, split into the
/// photon-like and matter-like branch. Uses omega0 units.
struct SecondOrderTable {
  HopfieldCoefficients photon_like;
  HopfieldCoefficients matter_like;
};

SecondOrderTable second_order_coefficients(double k, const CavityParams& cavity);

}  // namespace dising
