#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "dising/cavity.hpp"
#include "dising/error.hpp"

namespace dising {

Eigen::Matrix4d hopfield_matrix(const HopfieldInputs& in) {
  const double w = in.omega_tilde;
  const double e = in.matter_energy;
  const double l = in.coupling;
  Eigen::Matrix4d m;
  m << w, -l, 0.0, l,
       -l, e, l, 0.0,
       0.0, -l, -w, l,
       -l, 0.0, l, -e;
  return m;
}

Eigen::Matrix4d hopfield_metric() {
  return Eigen::Vector4d(1.0, 1.0, -1.0, -1.0).asDiagonal();
}

Eigen::Vector4d hopfield_eigenvalues_numeric(const Eigen::Matrix4d& m) {
  Eigen::EigenSolver<Eigen::Matrix4d> solver(m, false);
  Eigen::Vector4d ev = solver.eigenvalues().real();
  std::sort(ev.data(), ev.data() + 4);
  return ev;
}

BranchEnergies polariton_energies(const HopfieldInputs& in) {
  const double w = in.omega_tilde;
  const double e = in.matter_energy;
  const double l = in.coupling;
  const double w2 = w * w;
  const double e2 = e * e;
  const double delta = std::sqrt((w2 - e2) * (w2 - e2) + 16.0 * l * l * w * e);
  const double upper2 = 0.5 * (w2 + e2 + delta);
  // E-^2 E+^2 = w^2 E^2 - 4 L^2 w E; the product form avoids cancellation.
  const double det = w2 * e2 - 4.0 * l * l * w * e;
  if (det < 0.0) throw Error(Errc::complex_polariton, "lower polariton energy is imaginary");
  const double lower2 = upper2 > 0.0 ? det / upper2 : 0.0;
  return {std::sqrt(lower2), std::sqrt(upper2)};
}

namespace {

HopfieldCoefficients branch_vector(const HopfieldInputs& in, double energy) {
  const double w = in.omega_tilde;
  const double e = in.matter_energy;
  const double l = in.coupling;
  if (energy == e) return {0.0, 1.0, 0.0, 0.0};  // uncoupled matter branch
  const double gap = energy * energy - e * e;
  const double n = 1.0 / std::sqrt(4.0 * energy * w * (1.0 + 4.0 * l * l * e * w / (gap * gap)));
  return {n * (w + energy), n * 2.0 * l * w / (energy - e), -n * (w - energy),
          n * 2.0 * l * w / (energy + e)};
}

}  // namespace

HopfieldVectors hopfield_coefficients(const HopfieldInputs& in, const BranchEnergies& energies) {
  if (energies.upper - energies.lower < 1e-12 * std::max(in.omega_tilde, in.matter_energy)) {
    throw Error(Errc::degenerate_branches, "polariton branches are degenerate");
  }
  return {branch_vector(in, energies.lower), branch_vector(in, energies.upper)};
}

Eigen::Vector4d as_eigenvector(const HopfieldCoefficients& c) {
  return {c.x, -c.y, c.w, -c.z};
}

HopfieldCoefficients to_bare_basis(const HopfieldCoefficients& c, const BogoliubovPair& pair) {
  return {c.x, c.y * pair.alpha - c.z * pair.beta, c.w, c.z * pair.alpha - c.y * pair.beta};
}

}  // namespace dising
