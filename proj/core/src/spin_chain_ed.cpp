#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "dense_eigen.hpp"
#include "dising/error.hpp"
#include "dising/oracle.hpp"

namespace dising {

namespace {

using State = std::uint32_t;

// States of one excitation-number parity, and the inverse map.
struct ParityBlock {
  std::vector<State> states;
  std::vector<int> index;  // 2^N entries, -1 outside the block
};

ParityBlock parity_block(int n_sites, unsigned parity) {
  const State dim = State{1} << n_sites;
  ParityBlock b;
  b.index.assign(dim, -1);
  for (State s = 0; s < dim; ++s) {
    if ((static_cast<unsigned>(std::popcount(s)) & 1u) == parity) {
      b.index[s] = static_cast<int>(b.states.size());
      b.states.push_back(s);
    }
  }
  return b;
}

// sigma^x_i sigma^x_{i+1} flips both bits; the number term is diagonal.
std::vector<double> block_hamiltonian(const ParityBlock& b, int n_sites, double omega0, double j) {
  const std::size_t m = b.states.size();
  std::vector<double> h(m * m, 0.0);
  for (std::size_t col = 0; col < m; ++col) {
    const State s = b.states[col];
    h[col * m + col] = omega0 * std::popcount(s);
    if (j == 0.0) continue;
    for (int i = 0; i + 1 < n_sites; ++i) {
      const State t = s ^ (State{3} << i);
      const auto row = static_cast<std::size_t>(b.index[t]);
      h[col * m + row] += j;
    }
  }
  return h;
}

}  // namespace

DenseSpectrum ed_spin_chain(const ChainParams& params, bool ground_populations) {
  validate(params);
  const int n = params.n_dipoles;
  if (n > kMaxEdSites) {
    throw Error(Errc::too_large, "dense ED is capped at N = " + std::to_string(kMaxEdSites));
  }
  DenseSpectrum out;
  out.dimension = std::size_t{1} << n;
  out.eigenvalues.reserve(out.dimension);

  ParityBlock blocks[2] = {parity_block(n, 0), parity_block(n, 1)};
  double lowest[2] = {0.0, 0.0};
  for (unsigned p = 0; p < 2; ++p) {
    const int m = static_cast<int>(blocks[p].states.size());
    const auto w = detail::symmetric_eigenvalues(block_hamiltonian(blocks[p], n, params.omega0, params.coupling()), m);
    lowest[p] = w.front();
    out.eigenvalues.insert(out.eigenvalues.end(), w.begin(), w.end());
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());

  if (ground_populations) {
    const unsigned p = lowest[1] < lowest[0] ? 1u : 0u;
    const auto& b = blocks[p];
    const int m = static_cast<int>(b.states.size());
    const auto ground = detail::ground_eigenpair(block_hamiltonian(b, n, params.omega0, params.coupling()), m, lowest[p]);
    for (int site = 0; site < n; ++site) {
      double pop = 0.0;
      for (int i = 0; i < m; ++i) {
        if (b.states[static_cast<std::size_t>(i)] >> site & 1u) {
          const double amp = ground.vectors[static_cast<std::size_t>(i)];
          pop += amp * amp;
        }
      }
      out.site_population[site] = pop;
    }
  }
  return out;
}

}  // namespace dising
