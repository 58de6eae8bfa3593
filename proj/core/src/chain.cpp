#include "dising/chain.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "dising/error.hpp"

namespace dising {

ChainParams validate(const ChainParams& params) {
  if (params.n_dipoles < 2) {
    std::ostringstream os;
    os << "n_dipoles = " << params.n_dipoles << " (a chain needs at least one bond)";
    throw Error(Errc::chain_too_short, os.str());
  }
  if (!(params.omega0 > 0.0) || !std::isfinite(params.omega0)) {
    std::ostringstream os;
    os << "omega0 = " << params.omega0 << " must be positive";
    throw Error(Errc::non_positive_frequency, os.str());
  }
  if (!(std::abs(params.eta) <= kMaxEta)) {
    std::ostringstream os;
    os << "eta = " << params.eta << " lies outside |eta| <= " << kMaxEta;
    throw Error(Errc::out_of_normal_phase, os.str());
  }
  return params;
}

double pekar_momentum(int l, int n_modes) {
  return static_cast<double>(l) * std::numbers::pi / static_cast<double>(n_modes + 1);
}

int pekar_index(double k, int n_modes) {
  const long l = std::lround(k * (n_modes + 1) / std::numbers::pi);
  if (!std::isfinite(k) || l < 1 || l > n_modes || std::abs(pekar_momentum(static_cast<int>(l), n_modes) - k) > 1e-12) {
    throw Error(Errc::invalid_argument, "k is not a Pekar grid momentum");
  }
  return static_cast<int>(l);
}

MomentumGrid::MomentumGrid(int n_modes) {
  if (n_modes < 1) {
    throw Error(Errc::invalid_argument, "momentum grid needs at least one mode");
  }
  modes_.reserve(static_cast<std::size_t>(n_modes));
  for (int l = 1; l <= n_modes; ++l) modes_.push_back({l, pekar_momentum(l, n_modes)});
}

double MomentumGrid::k(int l) const {
  if (l < 1 || static_cast<std::size_t>(l) > modes_.size()) {
    throw Error(Errc::invalid_argument, "mode index out of range");
  }
  return modes_[static_cast<std::size_t>(l - 1)].k;
}

MomentumGrid pekar_grid(int n_modes) { return MomentumGrid(n_modes); }

MomentumGrid pekar_grid(const ChainParams& params) {
  return MomentumGrid(validate(params).n_dipoles);
}

std::string_view to_string(Approximation tag) noexcept {
  switch (tag) {
    case Approximation::FermionExact: return "F";
    case Approximation::Bose: return "B";
    case Approximation::HolsteinPrimakoff1: return "HP1";
    case Approximation::HolsteinPrimakoff1FullLM: return "HP1LM";
  }
  return "?";
}

BogoliubovPair BogoliubovPair::bosonic(double k, double beta) noexcept {
  return {k, std::sqrt(1.0 + beta * beta), beta, Statistics::bosonic};
}

double BogoliubovPair::canonical_defect() const noexcept {
  const double a2 = alpha * alpha;
  const double b2 = beta * beta;
  return statistics == Statistics::fermionic ? std::abs(a2 + b2 - 1.0)
                                             : std::abs(a2 - b2 - 1.0);
}

}  // namespace dising
