#include "dising/cavity.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "dising/error.hpp"
#include "dising/ising.hpp"
#include "dising/summation.hpp"

namespace dising {

namespace {

constexpr double kResonanceGuard = 1e-6;
constexpr int kCrossingScan = 1024;

bool is_hp1(Approximation tag) {
  return tag == Approximation::HolsteinPrimakoff1 || tag == Approximation::HolsteinPrimakoff1FullLM;
}

}  // namespace

CavityParams validate(const CavityParams& cavity) {
  validate(cavity.chain);
  if (!(cavity.nu >= 0.0) || !std::isfinite(cavity.nu)) {
    std::ostringstream os;
    os << "nu = " << cavity.nu << " must be non-negative";
    throw Error(Errc::invalid_argument, os.str());
  }
  if (!(cavity.delta > 0.0) || !std::isfinite(cavity.delta)) {
    std::ostringstream os;
    os << "delta = " << cavity.delta << " must be positive";
    throw Error(Errc::invalid_argument, os.str());
  }
  return cavity;
}

double photon_frequency(double k, const CavityParams& cavity) {
  return cavity.chain.omega0 * cavity.delta * k / std::numbers::pi;
}

RenormalizedCavity renormalized_cavity(double k, const CavityParams& cavity) {
  const double wk = photon_frequency(k, cavity);
  const double om = cavity.omega_collective();
  const double wt = std::sqrt(wk * wk + 4.0 * om * om);
  const double coupling = wt > 0.0 ? om * std::sqrt(cavity.chain.omega0 / wt) : 0.0;
  return {wt, coupling};
}

MatterSector::MatterSector(ChainParams params, Approximation tag, Hp1Solution solution)
    : params_(params), tag_(tag), solution_(std::move(solution)) {
  if (!solution_.pairs.empty()) energies_ = hp1_energies(solution_);
}

MatterSector MatterSector::for_tag(const ChainParams& params, Approximation tag) {
  if (tag == Approximation::FermionExact) {
    throw Error(Errc::invalid_argument, "the fermionic scheme has no bosonic light-matter coupling");
  }
  return MatterSector(validate(params), tag, {});
}

MatterSector MatterSector::from_solution(Hp1Solution solution, Approximation tag) {
  if (!is_hp1(tag)) throw Error(Errc::invalid_argument, "a solved table needs an HP1 tag");
  const ChainParams params = solution.params;
  return MatterSector(params, tag, std::move(solution));
}

MatterMode MatterSector::at(double k) const {
  if (!solution_.pairs.empty()) {
    const auto i = static_cast<std::size_t>(pekar_index(k, params_.n_dipoles) - 1);
    return {energies_[i], solution_.pairs[i]};
  }
  if (tag_ == Approximation::Bose) return {bose_energy(k, params_), bose_bogoliubov(k, params_)};
  return {hp1_energy(k, params_), hp1_coefficients_perturbative(k, params_.eta)};
}

double MatterSector::ground_energy() const {
  return tag_ == Approximation::Bose ? bose_ground_energy(params_) : hp1_ground_energy(params_);
}

double effective_coupling(double k, const CavityParams& cavity, const BogoliubovPair& matter_pair) {
  return renormalized_cavity(k, cavity).coupling_tilde * matter_pair.coupling_factor();
}

HopfieldInputs hopfield_inputs(double k, const CavityParams& cavity, const MatterSector& matter) {
  const auto rc = renormalized_cavity(k, cavity);
  const auto mode = matter.at(k);
  double energy = mode.energy;
  if (matter.tag() == Approximation::HolsteinPrimakoff1FullLM) {
    // Nonlinear light-matter vertex: a rigid nu^2 F(N) shift of the matter mode.
    const double nu = cavity.nu;
    energy += nu * nu * cavity.chain.omega0
              * finite_size_correction(cavity.chain.n_dipoles, cavity.delta).grid_sum;
  }
  return {rc.omega_tilde, energy, rc.coupling_tilde * mode.pair.coupling_factor()};
}

PolaritonMode polariton_energies(double k, const CavityParams& cavity, const MatterSector& matter) {
  const auto in = hopfield_inputs(k, cavity, matter);
  const auto e = polariton_energies(in);
  PolaritonMode out;
  out.k = k;
  out.lower = e.lower;
  out.upper = e.upper;
  out.tag = matter.tag();
  out.omega_tilde = in.omega_tilde;
  out.matter_energy = in.matter_energy;
  out.coupling = in.coupling;
  return out;
}

PolaritonMode polariton_energies(double k, const CavityParams& cavity) {
  return polariton_energies(k, cavity, MatterSector::for_tag(cavity.chain, cavity.tag));
}

PolaritonMode hopfield_coefficients(double k, const CavityParams& cavity, const MatterSector& matter) {
  auto out = polariton_energies(k, cavity, matter);
  const auto v = hopfield_coefficients(HopfieldInputs{out.omega_tilde, out.matter_energy, out.coupling},
                                       BranchEnergies{out.lower, out.upper});
  out.lower_coeffs = v.lower;
  out.upper_coeffs = v.upper;
  return out;
}

PolaritonMode hopfield_coefficients(double k, const CavityParams& cavity) {
  return hopfield_coefficients(k, cavity, MatterSector::for_tag(cavity.chain, cavity.tag));
}

BranchEnergies polariton_perturbative(double k, const CavityParams& cavity, Approximation scheme) {
  if (scheme == Approximation::FermionExact) {
    throw Error(Errc::invalid_argument, "no perturbative polariton expansion for the fermionic scheme");
  }
  const double w0 = cavity.chain.omega0;
  const double x = photon_frequency(k, cavity) / w0;
  if (std::abs(x - 1.0) < kResonanceGuard) {
    throw Error(Errc::resonance_divergence, "photon within 1e-6 omega0 of the bare resonance");
  }
  const double eta = cavity.chain.eta;
  const double nu2 = cavity.nu * cavity.nu;
  const double c = std::cos(k);
  const double s = std::sin(k);
  const double detuning = x * x - 1.0;

  const double photon = x + 2.0 * x * nu2 / detuning;
  double matter = 1.0 + 2.0 * eta * c - 2.0 * nu2 / detuning;
  if (scheme == Approximation::Bose) {
    matter -= 2.0 * eta * eta * c * c;
  } else {
    matter += 2.0 * eta * eta * s * s;
  }
  if (scheme == Approximation::HolsteinPrimakoff1FullLM) {
    matter += nu2 * finite_size_correction(cavity.chain.n_dipoles, cavity.delta).grid_sum;
  }
  return {w0 * std::min(photon, matter), w0 * std::max(photon, matter)};
}

double no_go_margin(double k, const MatterSector& matter) {
  const auto mode = matter.at(k);
  return std::sqrt(mode.energy / matter.params().omega0) - mode.pair.coupling_factor();
}

double no_go_margin(double k, const CavityParams& cavity) {
  return no_go_margin(k, MatterSector::for_tag(cavity.chain, cavity.tag));
}

double saturation_ratio(double eta) {
  if (!(std::abs(eta) <= kMaxEta)) {
    throw Error(Errc::out_of_normal_phase, "saturation ratio needs |eta| <= 0.25");
  }
  return 1.0 - 0.5 * eta * eta;
}

std::vector<double> saturation_profile(const Hp1Solution& solution) {
  const auto energies = hp1_energies(solution);
  std::vector<double> out;
  out.reserve(energies.size());
  for (std::size_t i = 0; i < energies.size(); ++i) {
    out.push_back(solution.pairs[i].coupling_factor() / std::sqrt(energies[i] / solution.params.omega0));
  }
  return out;
}

double saturation_ratio(const Hp1Solution& solution) {
  const auto profile = saturation_profile(solution);
  return compensated_sum(profile) / static_cast<double>(profile.size());
}

FiniteSizeCorrection finite_size_correction(int n, double delta) {
  if (n < 1) throw Error(Errc::invalid_argument, "finite-size correction needs N >= 1");
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw Error(Errc::invalid_argument, "finite-size correction needs delta > 0");
  }
  CompensatedSum sum;
  for (int l = 1; l <= n; ++l) {
    const double x = delta * l / (n + 1.0);
    sum += 1.0 / (2.0 * x * (1.0 + x));
  }
  FiniteSizeCorrection out;
  out.grid_sum = sum.value() / n;
  out.closed_form = std::log((n + delta) / (1.0 + delta)) / (2.0 * delta);
  const double diff = std::abs(out.grid_sum - out.closed_form);
  out.relative_difference = out.closed_form != 0.0 ? diff / std::abs(out.closed_form) : diff;
  return out;
}

double crossing_point(const CavityParams& cavity) {
  validate(cavity);
  const auto matter = MatterSector::for_tag(cavity.chain, cavity.tag);
  auto gap = [&](double k) { return renormalized_cavity(k, cavity).omega_tilde - matter.at(k).energy; };

  double lo = 0.0;
  double g_lo = gap(std::numbers::pi / kCrossingScan * 1e-6);
  double hi = -1.0;
  for (int i = 1; i <= kCrossingScan; ++i) {
    const double k = std::numbers::pi * i / kCrossingScan;
    const double g = gap(k);
    if ((g_lo < 0.0) != (g < 0.0) || g == 0.0) {
      hi = k;
      break;
    }
    lo = k;
    g_lo = g;
  }
  if (hi < 0.0) {
    throw Error(Errc::no_crossing, "renormalized photon never meets the matter branch in (0, pi]");
  }
  if (lo == 0.0) lo = std::numbers::pi / kCrossingScan * 1e-6;
  while (hi - lo > 1e-12 * hi) {
    const double mid = 0.5 * (lo + hi);
    const double g = gap(mid);
    if ((g < 0.0) == (g_lo < 0.0) && g != 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double ground_state_energy(const CavityParams& cavity, const MatterSector& matter) {
  const auto grid = pekar_grid(cavity.chain);
  CompensatedSum sum;
  for (const auto& mode : grid) {
    const auto p = polariton_energies(mode.k, cavity, matter);
    sum += p.lower;
    sum += p.upper;
    sum += -p.omega_tilde;
    sum += -p.matter_energy;
  }
  sum += matter.ground_energy();
  return sum.value();
}

double ground_state_energy(const CavityParams& cavity) {
  return ground_state_energy(cavity, MatterSector::for_tag(cavity.chain, cavity.tag));
}

SecondOrderTable second_order_coefficients(double k, const CavityParams& cavity) {
  const double x = photon_frequency(k, cavity) / cavity.chain.omega0;
  if (std::abs(x - 1.0) < kResonanceGuard) {
    throw Error(Errc::resonance_divergence, "photon within 1e-6 omega0 of the bare resonance");
  }
  const double eta = cavity.chain.eta;
  const double nu = cavity.nu;
  const double c = std::cos(k);
  const double rx = std::sqrt(x);
  const double xm = x - 1.0;
  const double xp = x + 1.0;
  const double x2m = x * x - 1.0;
  const double fn = finite_size_correction(cavity.chain.n_dipoles, cavity.delta).grid_sum;

  SecondOrderTable t;
  t.photon_like.x = 1.0 - 2.0 * nu * nu / (x2m * x2m);
  t.photon_like.y = -nu / (rx * xm) - 4.0 * c * rx * eta * nu / (xm * xm * xp);
  t.photon_like.z = nu / (rx * xp) - 4.0 * c * rx * eta * nu / (x2m * xp);
  t.photon_like.w = -nu * nu / (x * x * x2m);
  t.matter_like.x = nu / (rx * xm) + c * xp * eta * nu / (rx * xm * xm);
  t.matter_like.y = 1.0 + 0.5 * eta * eta * c * c - 2.0 * nu * nu / (xm * xm * xp * xp);
  t.matter_like.z = eta * c - eta * eta * (2.0 * c * c - 0.5) - nu * nu * (-1.0 / x2m + fn);
  t.matter_like.w = nu / (rx * xp) + c * xm * xm * xm * eta * nu / (rx * x2m);
  return t;
}

}  // namespace dising
