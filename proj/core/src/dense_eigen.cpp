#include "dense_eigen.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "dising/error.hpp"

namespace dising::detail {

namespace {

using Map = Eigen::Map<const Eigen::MatrixXd>;

void check(Eigen::ComputationInfo info, const char* what) {
  if (info != Eigen::Success) throw Error(Errc::no_convergence, what);
}

bool is_diagonal(const std::vector<double>& a, int n) {
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) {
      if (r != c && a[static_cast<std::size_t>(c) * n + r] != 0.0) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<double> symmetric_eigenvalues(const std::vector<double>& a, int n) {
  std::vector<double> w(static_cast<std::size_t>(n));
  if (n == 0) return w;
  if (is_diagonal(a, n)) {
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i) * n + i];
    std::sort(w.begin(), w.end());
    return w;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(Map(a.data(), n, n), Eigen::EigenvaluesOnly);
  check(solver.info(), "symmetric eigensolver did not converge");
  Eigen::VectorXd::Map(w.data(), n) = solver.eigenvalues();
  return w;
}

EigenPairs lowest_eigenpairs(const std::vector<double>& a, int n, int count) {
  count = std::clamp(count, 0, n);
  EigenPairs out;
  if (count == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(Map(a.data(), n, n));
  check(solver.info(), "symmetric eigensolver did not converge");
  out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + count);
  out.vectors.assign(solver.eigenvectors().data(),
                     solver.eigenvectors().data() + static_cast<std::size_t>(n) * count);
  return out;
}

EigenPairs ground_eigenpair(const std::vector<double>& a, int n, double lowest) {
  const Map h(a.data(), n, n);
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  const double sigma = lowest - 1e-9 * scale;
  Eigen::MatrixXd shifted = h;
  shifted.diagonal().array() -= sigma;
  const Eigen::LLT<Eigen::MatrixXd> llt(shifted);
  check(llt.info(), "shifted Hamiltonian is not positive definite");

  Eigen::VectorXd x = Eigen::VectorXd::Ones(n).normalized();
  for (int it = 0; it < 4; ++it) x = llt.solve(x).normalized();
  // Fix the overall sign so repeated runs agree.
  Eigen::Index imax = 0;
  x.cwiseAbs().maxCoeff(&imax);
  if (x[imax] < 0) x = -x;

  EigenPairs out;
  out.values = {x.dot(h * x)};
  out.vectors.assign(x.data(), x.data() + n);
  return out;
}

std::vector<double> bidiagonal_singular_values(const std::vector<double>& diag, const std::vector<double>& super) {
  // Golub-Kahan: the 2n tridiagonal with zero diagonal and off-diagonal
  // (d1, e1, d2, e2, ..., dn) has eigenvalues +-sigma, without squaring.
  const auto n = static_cast<Eigen::Index>(diag.size());
  if (n == 0) return {};
  Eigen::VectorXd d = Eigen::VectorXd::Zero(2 * n);
  Eigen::VectorXd off(2 * n - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    off[2 * i] = diag[static_cast<std::size_t>(i)];
    if (i + 1 < n) off[2 * i + 1] = super[static_cast<std::size_t>(i)];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(d, off, Eigen::EigenvaluesOnly);
  check(solver.info(), "tridiagonal eigensolver did not converge");
  std::vector<double> out(solver.eigenvalues().data() + n, solver.eigenvalues().data() + 2 * n);
  for (auto& s : out) s = std::abs(s);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dising::detail
