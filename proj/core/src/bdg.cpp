#include <algorithm>
#include <string>

#include "dense_eigen.hpp"
#include "dising/error.hpp"
#include "dising/oracle.hpp"
#include "dising/summation.hpp"

namespace dising {

namespace {

constexpr int kDenseBdgLimit = 512;
constexpr int kMaxManyBodyModes = 20;

// H = 1/2 Psi^dag [[A, B], [-B, -A]] Psi + tr(A)/2 with Psi = (c, c^dag).
// A: omega0 on the diagonal, J between neighbours; B: +J above, -J below.
std::vector<double> nambu_matrix(int n, double omega0, double j) {
  const int m = 2 * n;
  std::vector<double> h(static_cast<std::size_t>(m) * m, 0.0);
  auto at = [&](int r, int c) -> double& { return h[static_cast<std::size_t>(c) * m + r]; };
  for (int i = 0; i < n; ++i) {
    at(i, i) = omega0;
    at(n + i, n + i) = -omega0;
  }
  for (int i = 0; i + 1 < n; ++i) {
    at(i, i + 1) = at(i + 1, i) = j;
    at(n + i, n + i + 1) = at(n + i + 1, n + i) = -j;
    // B block and its transpose -B in the lower-left corner.
    at(i, n + i + 1) = j;
    at(i + 1, n + i) = -j;
    at(n + i + 1, i) = j;
    at(n + i, i + 1) = -j;
  }
  return h;
}

}  // namespace

BdgSpectrum bdg_spin_chain(const ChainParams& params, BdgMethod method) {
  validate(params);
  const int n = params.n_dipoles;
  const double j = params.coupling();
  if (method == BdgMethod::automatic) method = n <= kDenseBdgLimit ? BdgMethod::dense : BdgMethod::bidiagonal;

  BdgSpectrum out;
  if (method == BdgMethod::dense) {
    auto w = detail::symmetric_eigenvalues(nambu_matrix(n, params.omega0, j), 2 * n);
    // Eigenvalues come in +-eps pairs; keep the upper half.
    out.quasiparticle_energies.assign(w.begin() + n, w.end());
    for (auto& e : out.quasiparticle_energies) e = std::max(e, 0.0);
  } else {
    // A + B is upper bidiagonal with omega0 and 2J; its singular values are eps.
    out.quasiparticle_energies = detail::bidiagonal_singular_values(
        std::vector<double>(static_cast<std::size_t>(n), params.omega0),
        std::vector<double>(static_cast<std::size_t>(n - 1), 2.0 * j));
  }
  out.ground_energy = 0.5 * (n * params.omega0 - compensated_sum(out.quasiparticle_energies));
  return out;
}

std::vector<double> many_body_spectrum(const BdgSpectrum& bdg) {
  const auto n = bdg.quasiparticle_energies.size();
  if (n > kMaxManyBodyModes) {
    throw Error(Errc::too_large, "many-body enumeration is capped at " + std::to_string(kMaxManyBodyModes) + " modes");
  }
  std::vector<double> levels{bdg.ground_energy};
  levels.reserve(std::size_t{1} << n);
  for (double eps : bdg.quasiparticle_energies) {
    const std::size_t half = levels.size();
    for (std::size_t i = 0; i < half; ++i) levels.push_back(levels[i] + eps);
  }
  std::sort(levels.begin(), levels.end());
  return levels;
}

}  // namespace dising
