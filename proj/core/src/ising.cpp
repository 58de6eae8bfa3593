#include "dising/ising.hpp"

#include <cmath>
#include <limits>

#include "dising/error.hpp"
#include "dising/summation.hpp"

namespace dising {

namespace {

// Denominators of the Bogoliubov coefficients vanish only outside the normal
// phase (or at k = pi exactly with |eta| = 1/4).
constexpr double kDegenerateScale = 1e-300;

void require_finite_k(double k) {
  if (!std::isfinite(k)) throw Error(Errc::invalid_argument, "quasi-momentum must be finite");
}

}  // namespace

double fermion_energy(double k, const ChainParams& params) {
  require_finite_k(k);
  const double w0 = params.omega0;
  const double j = params.coupling();
  const double radicand = w0 * w0 + 4.0 * j * j + 4.0 * j * w0 * std::cos(k);
  // (w0 + 2J cos k)^2 + 4 J^2 sin^2 k >= 0; clamp rounding only.
  return std::sqrt(std::max(radicand, 0.0));
}

double fermion_ground_energy(const ChainParams& params) {
  const auto grid = pekar_grid(params);
  CompensatedSum sum;
  for (const auto& mode : grid) sum += fermion_energy(mode.k, params);
  return 0.5 * (params.n_dipoles * params.omega0 - sum.value());
}

BogoliubovPair fermion_bogoliubov(double k, const ChainParams& params) {
  const double w0 = params.omega0;
  const double j = params.coupling();
  const double e = fermion_energy(k, params);
  const double u = w0 + 2.0 * j * std::cos(k) + e;
  const double v = 2.0 * j * std::sin(k);
  const double norm = std::hypot(u, v);
  if (!(norm > kDegenerateScale)) {
    throw Error(Errc::degenerate_normalization, "fermionic Bogoliubov denominator vanished");
  }
  return {k, u / norm, -v / norm, Statistics::fermionic};
}

double bose_energy(double k, const ChainParams& params) {
  require_finite_k(k);
  const double w0 = params.omega0;
  const double radicand = w0 * w0 + 4.0 * params.coupling() * w0 * std::cos(k);
  if (radicand < 0.0) {
    throw Error(Errc::complex_energy, "Bose dispersion radicand is negative");
  }
  return std::sqrt(radicand);
}

double bose_ground_energy(const ChainParams& params) {
  const auto grid = pekar_grid(params);
  CompensatedSum sum;
  for (const auto& mode : grid) sum += bose_energy(mode.k, params);
  return 0.5 * (sum.value() - params.n_dipoles * params.omega0);
}

BogoliubovPair bose_bogoliubov(double k, const ChainParams& params) {
  const double w0 = params.omega0;
  const double jc = params.coupling() * std::cos(k);
  const double e = bose_energy(k, params);
  const double u = w0 + 2.0 * jc + e;
  const double v = 2.0 * jc;
  // (u - v)(u + v) factorizes the radicand without cancellation.
  const double radicand = (u - v) * (u + v);
  if (!(radicand > kDegenerateScale)) {
    throw Error(Errc::degenerate_normalization, "bosonic Bogoliubov denominator vanished");
  }
  const double norm = std::sqrt(radicand);
  // The closed form gives d = alpha b + beta' b^dag; the stored pair expands
  // b in terms of d, which flips the sign of beta.
  return {k, u / norm, -v / norm, Statistics::bosonic};
}

double virtual_population(const ChainParams& params) {
  const auto grid = pekar_grid(params);
  CompensatedSum sum;
  for (const auto& mode : grid) {
    const double beta = bose_bogoliubov(mode.k, params).beta;
    sum += beta * beta;
  }
  return sum.value() / params.n_dipoles;
}

ModeSpectrum fermion_spectrum(const ChainParams& params) {
  const auto grid = pekar_grid(params);
  ModeSpectrum out{Approximation::FermionExact, params, {}, fermion_ground_energy(params)};
  out.energies.reserve(grid.size());
  for (const auto& mode : grid) out.energies.push_back(fermion_energy(mode.k, params));
  return out;
}

ModeSpectrum bose_spectrum(const ChainParams& params) {
  const auto grid = pekar_grid(params);
  ModeSpectrum out{Approximation::Bose, params, {}, bose_ground_energy(params)};
  out.energies.reserve(grid.size());
  for (const auto& mode : grid) out.energies.push_back(bose_energy(mode.k, params));
  return out;
}

}  // namespace dising
