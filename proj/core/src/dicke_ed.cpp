#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "dense_eigen.hpp"
#include "dising/error.hpp"
#include "dising/oracle.hpp"

namespace dising {

namespace {

using State = std::uint32_t;

struct Model {
  int n_sites;
  int cutoff;
  double omega;   // bare photon
  double omega0;
  double j;
  double g;
  double dia;     // D
  std::vector<double> u;
};

// Basis (s, n) with total parity popcount(s) + n fixed.
struct Block {
  std::vector<std::pair<State, int>> states;
  std::vector<int> index;  // (s * (cutoff + 1) + n) -> block row or -1
};

Block make_block(const Model& m, unsigned parity) {
  const State dim = State{1} << m.n_sites;
  Block b;
  b.index.assign(static_cast<std::size_t>(dim) * (m.cutoff + 1), -1);
  for (State s = 0; s < dim; ++s) {
    for (int n = 0; n <= m.cutoff; ++n) {
      if (((static_cast<unsigned>(std::popcount(s)) + static_cast<unsigned>(n)) & 1u) != parity) continue;
      b.index[static_cast<std::size_t>(s) * (m.cutoff + 1) + n] = static_cast<int>(b.states.size());
      b.states.emplace_back(s, n);
    }
  }
  return b;
}

std::vector<double> block_hamiltonian(const Model& m, const Block& b) {
  const std::size_t dim = b.states.size();
  std::vector<double> h(dim * dim, 0.0);
  auto add = [&](std::size_t col, State s, int n, double v) {
    if (n < 0 || n > m.cutoff) return;
    const int row = b.index[static_cast<std::size_t>(s) * (m.cutoff + 1) + n];
    h[col * dim + static_cast<std::size_t>(row)] += v;
  };
  for (std::size_t col = 0; col < dim; ++col) {
    const auto [s, n] = b.states[col];
    const double dn = n;
    // -D (a - a^dag)^2 = D (2n + 1 - a^2 - a^dag^2)
    add(col, s, n, m.omega * dn + m.omega0 * std::popcount(s) + m.dia * (2.0 * dn + 1.0));
    add(col, s, n - 2, -m.dia * std::sqrt(dn * (dn - 1.0)));
    add(col, s, n + 2, -m.dia * std::sqrt((dn + 1.0) * (dn + 2.0)));
    for (int i = 0; i + 1 < m.n_sites; ++i) add(col, s ^ (State{3} << i), n, m.j);
    // g u_i (a - a^dag)(sigma^- - sigma^+)
    for (int i = 0; i < m.n_sites; ++i) {
      const double gu = m.g * m.u[static_cast<std::size_t>(i)];
      const State flipped = s ^ (State{1} << i);
      const double spin = (s >> i & 1u) ? 1.0 : -1.0;  // sigma^- gives +, sigma^+ gives -
      add(col, flipped, n - 1, gu * spin * std::sqrt(dn));
      add(col, flipped, n + 1, -gu * spin * std::sqrt(dn + 1.0));
    }
  }
  return h;
}

struct Gaps {
  double ground = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double lower_weight = 0.0;
  double upper_weight = 0.0;
};

Gaps polariton_gaps(const Model& m, const Block& even, const Block& odd) {
  Gaps out;
  const int even_dim = static_cast<int>(even.states.size());
  out.ground = detail::symmetric_eigenvalues(block_hamiltonian(m, even), even_dim).front();

  // The one-excitation manifold has N matter modes plus the photon.
  const int odd_dim = static_cast<int>(odd.states.size());
  const auto pairs = detail::lowest_eigenpairs(block_hamiltonian(m, odd), odd_dim, m.n_sites + 1);
  struct Level {
    double energy;
    double weight;
  };
  std::vector<Level> levels;
  for (std::size_t c = 0; c < pairs.values.size(); ++c) {
    double w = 0.0;
    for (std::size_t r = 0; r < odd.states.size(); ++r) {
      const double amp = pairs.vectors[c * odd.states.size() + r];
      w += amp * amp * odd.states[r].second;
    }
    levels.push_back({pairs.values[c], w});
  }
  if (levels.size() < 2) throw Error(Errc::invalid_argument, "odd sector too small to host two polaritons");
  std::stable_sort(levels.begin(), levels.end(), [](const Level& a, const Level& b) { return a.weight > b.weight; });
  Level lo = levels[0];
  Level hi = levels[1];
  if (hi.energy < lo.energy) std::swap(lo, hi);
  out.lower = lo.energy - out.ground;
  out.upper = hi.energy - out.ground;
  out.lower_weight = lo.weight;
  out.upper_weight = hi.weight;
  return out;
}

}  // namespace

DickeIsingResult ed_dicke_ising(const ChainParams& params, double nu, const DickeIsingOptions& options) {
  validate(params);
  const int n = params.n_dipoles;
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw Error(Errc::invalid_argument, "nu must be non-negative");
  if (options.mode < 1 || options.mode > n) throw Error(Errc::invalid_argument, "photon mode index outside 1..N");
  if (options.photon_cutoff < 1) throw Error(Errc::invalid_argument, "photon_cutoff must be >= 1");
  if (!(options.photon_frequency >= 0.0)) throw Error(Errc::invalid_argument, "photon_frequency must be >= 0");
  if (n > kMaxEdSites
      || (std::size_t{1} << n) * static_cast<std::size_t>(options.photon_cutoff + 1) > kMaxDickeDimension) {
    throw Error(Errc::too_large, "2^N (cutoff + 1) exceeds " + std::to_string(kMaxDickeDimension));
  }

  Model m;
  m.n_sites = n;
  m.cutoff = options.photon_cutoff;
  m.omega0 = params.omega0;
  m.omega = (options.photon_frequency > 0.0 ? options.photon_frequency : 1.0) * params.omega0;
  m.j = params.coupling();
  const double om = nu * params.omega0;
  m.g = om * std::sqrt(params.omega0 / m.omega);
  m.dia = m.g * m.g / params.omega0;
  const double k = pekar_momentum(options.mode, n);
  for (int i = 1; i <= n; ++i) m.u.push_back(std::sqrt(2.0 / (n + 1)) * std::sin(i * k));

  const Block even = make_block(m, 0);
  const Block odd = make_block(m, 1);

  DickeIsingResult out;
  out.photon_frequency = m.omega;
  out.spectrum.dimension = even.states.size() + odd.states.size();
  for (const Block* b : {&even, &odd}) {
    const auto w = detail::symmetric_eigenvalues(block_hamiltonian(m, *b), static_cast<int>(b->states.size()));
    out.spectrum.eigenvalues.insert(out.spectrum.eigenvalues.end(), w.begin(), w.end());
  }
  std::sort(out.spectrum.eigenvalues.begin(), out.spectrum.eigenvalues.end());

  const Gaps gaps = polariton_gaps(m, even, odd);
  out.ground_energy = gaps.ground;
  out.lower_gap = gaps.lower;
  out.upper_gap = gaps.upper;
  out.lower_photon_weight = gaps.lower_weight;
  out.upper_photon_weight = gaps.upper_weight;

  if (options.verify_cutoff) {
    Model doubled = m;
    doubled.cutoff = 2 * m.cutoff;
    const Gaps check = polariton_gaps(doubled, make_block(doubled, 0), make_block(doubled, 1));
    out.cutoff_shift = std::max(std::abs(check.lower - gaps.lower) / std::abs(gaps.lower),
                                std::abs(check.upper - gaps.upper) / std::abs(gaps.upper));
    if (!(out.cutoff_shift <= options.cutoff_tolerance)) {
      throw Error(Errc::cutoff_unconverged, "doubling the photon cutoff moved the polariton gaps by "
                                                + std::to_string(out.cutoff_shift) + " (relative)");
    }
  }
  return out;
}

}  // namespace dising
