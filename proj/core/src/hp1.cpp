#include "dising/hp1.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dising/error.hpp"
#include "dising/summation.hpp"

namespace dising {

namespace {

// Grid means entering the contracted equations:
//   c1 = <2 beta^2 + alpha beta>,  c2 = <beta (alpha + beta) cos k>.
struct MeanFields {
  double c1 = 0.0;
  double c2 = 0.0;
};

MeanFields mean_fields(const std::vector<BogoliubovPair>& pairs) {
  CompensatedSum c1;
  CompensatedSum c2;
  for (const auto& p : pairs) {
    const double s = p.alpha + p.beta;
    c1 += 2.0 * p.beta * p.beta + p.alpha * p.beta;
    c2 += p.beta * s * std::cos(p.k);
  }
  const double n = static_cast<double>(pairs.size());
  return {c1.value() / n, c2.value() / n};
}

double offdiag(const BogoliubovPair& p, double eta, const MeanFields& m) {
  const double c = std::cos(p.k);
  const double ab = p.alpha * p.beta;
  const double s2 = (p.alpha + p.beta) * (p.alpha + p.beta);
  return ab + eta * c * s2 - eta * (m.c1 * c * s2 + m.c2 * (s2 + 2.0 * ab));
}

double diag(const BogoliubovPair& p, double eta, const MeanFields& m) {
  const double c = std::cos(p.k);
  const double a2b2 = p.alpha * p.alpha + p.beta * p.beta;
  const double s2 = (p.alpha + p.beta) * (p.alpha + p.beta);
  return a2b2 + 2.0 * eta * c * s2
         - eta * (2.0 * m.c1 * c * s2 + 4.0 * m.c2 * (a2b2 + p.alpha * p.beta));
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

std::vector<BogoliubovPair> with_betas(const MomentumGrid& grid, const std::vector<double>& beta) {
  std::vector<BogoliubovPair> out;
  out.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out.push_back(BogoliubovPair::bosonic(grid[i].k, beta[i]));
  return out;
}

// Newton step for R(beta) = 0. The Jacobian is diag(d) + U V^T with rank 2
// coming from the two mean fields; Woodbury reduces the solve to 2x2.
std::vector<double> newton_step(const std::vector<BogoliubovPair>& pairs, double eta,
                                const std::vector<double>& residual) {
  const std::size_t n = pairs.size();
  const MeanFields m = mean_fields(pairs);
  std::vector<double> d(n), u1(n), u2(n), v1(n), v2(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = pairs[i];
    const double a = p.alpha;
    const double b = p.beta;
    const double c = std::cos(p.k);
    const double s2 = (a + b) * (a + b);
    const double a2b2 = a * a + b * b;
    d[i] = a2b2 / a + 2.0 * eta * c * s2 / a * (1.0 - m.c1)
           - eta * m.c2 * (2.0 * s2 / a + 2.0 * a2b2 / a);
    u1[i] = -eta * c * s2;
    u2[i] = -eta * (s2 + 2.0 * a * b);
    v1[i] = (4.0 * b + a2b2 / a) / static_cast<double>(n);
    v2[i] = c * s2 / a / static_cast<double>(n);
  }
  // y = D^-1 r, Z = D^-1 U.
  double m11 = 1.0, m12 = 0.0, m21 = 0.0, m22 = 1.0, r1 = 0.0, r2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double y = residual[i] / d[i];
    const double z1 = u1[i] / d[i];
    const double z2 = u2[i] / d[i];
    m11 += v1[i] * z1;
    m12 += v1[i] * z2;
    m21 += v2[i] * z1;
    m22 += v2[i] * z2;
    r1 += v1[i] * y;
    r2 += v2[i] * y;
  }
  const double det = m11 * m22 - m12 * m21;
  const double t1 = (m22 * r1 - m12 * r2) / det;
  const double t2 = (m11 * r2 - m21 * r1) / det;
  std::vector<double> step(n);
  for (std::size_t i = 0; i < n; ++i) step[i] = -(residual[i] - u1[i] * t1 - u2[i] * t2) / d[i];
  return step;
}

}  // namespace

BogoliubovPair hp1_coefficients_perturbative(double k, double eta) {
  if (!std::isfinite(k)) throw Error(Errc::invalid_argument, "quasi-momentum must be finite");
  const double c = std::cos(k);
  return BogoliubovPair::bosonic(k, -c * eta + (2.0 * c * c - 0.5) * eta * eta);
}

Hp1Solution hp1_coefficients_perturbative(const ChainParams& params) {
  const auto grid = pekar_grid(params);
  Hp1Solution out{params, Hp1Method::perturbative_order2, {}, 0.0, 0};
  out.pairs.reserve(grid.size());
  for (const auto& mode : grid) out.pairs.push_back(hp1_coefficients_perturbative(mode.k, params.eta));
  out.residual_norm = max_abs(hp1_residuals(params, out.pairs));
  return out;
}

std::vector<double> hp1_residuals(const ChainParams& params, const std::vector<BogoliubovPair>& pairs) {
  if (pairs.size() != static_cast<std::size_t>(params.n_dipoles)) {
    throw Error(Errc::params_mismatch, "coefficient table size differs from N");
  }
  const MeanFields m = mean_fields(pairs);
  std::vector<double> r;
  r.reserve(pairs.size());
  for (const auto& p : pairs) r.push_back(offdiag(p, params.eta, m));
  return r;
}

Hp1Solution hp1_coefficients_numeric(const ChainParams& params, const SolverOptions& options) {
  const auto grid = pekar_grid(params);
  if (!(options.damping > 0.0 && options.damping < 1.0) || options.max_iterations < 0
      || !(options.tolerance > 0.0)) {
    throw Error(Errc::invalid_argument, "solver options: need 0 < damping < 1, tolerance > 0");
  }
  std::vector<double> beta;
  beta.reserve(grid.size());
  for (const auto& mode : grid) beta.push_back(hp1_coefficients_perturbative(mode.k, params.eta).beta);

  auto pairs = with_betas(grid, beta);
  auto residual = hp1_residuals(params, pairs);
  double norm = max_abs(residual);
  int iter = 0;
  while (norm > options.tolerance) {
    if (iter == options.max_iterations) throw NoConvergence(iter, norm);
    ++iter;
    const auto step = newton_step(pairs, params.eta, residual);
    double lambda = 1.0;
    std::vector<double> trial(beta.size());
    std::vector<BogoliubovPair> trial_pairs;
    std::vector<double> trial_residual;
    double trial_norm = norm;
    for (int halvings = 0; halvings < 40; ++halvings) {
      for (std::size_t i = 0; i < beta.size(); ++i) trial[i] = beta[i] + lambda * step[i];
      trial_pairs = with_betas(grid, trial);
      trial_residual = hp1_residuals(params, trial_pairs);
      trial_norm = max_abs(trial_residual);
      if (std::isfinite(trial_norm) && trial_norm < norm) break;
      lambda *= options.damping;
    }
    if (!(trial_norm < norm)) throw NoConvergence(iter, norm);
    beta.swap(trial);
    pairs.swap(trial_pairs);
    residual.swap(trial_residual);
    norm = trial_norm;
  }
  return {params, Hp1Method::numeric, std::move(pairs), norm, iter};
}

double hp1_energy(double k, const ChainParams& params) {
  if (!std::isfinite(k)) throw Error(Errc::invalid_argument, "quasi-momentum must be finite");
  const double s = std::sin(k);
  const double eta = params.eta;
  return params.omega0 * (1.0 + 2.0 * eta * std::cos(k) + 2.0 * eta * eta * s * s);
}

double hp1_energy(double k, const ChainParams& params, const Hp1Solution& solution) {
  if (!(solution.params == params)) {
    throw Error(Errc::params_mismatch, "HP1 solution was computed for different chain parameters");
  }
  if (solution.method == Hp1Method::perturbative_order2) return hp1_energy(k, params);
  const auto i = static_cast<std::size_t>(pekar_index(k, params.n_dipoles) - 1);
  const MeanFields m = mean_fields(solution.pairs);
  return params.omega0 * diag(solution.pairs[i], params.eta, m);
}

std::vector<double> hp1_energies(const Hp1Solution& solution) {
  std::vector<double> out;
  out.reserve(solution.pairs.size());
  if (solution.method == Hp1Method::perturbative_order2) {
    for (const auto& p : solution.pairs) out.push_back(hp1_energy(p.k, solution.params));
    return out;
  }
  const MeanFields m = mean_fields(solution.pairs);
  for (const auto& p : solution.pairs) out.push_back(solution.params.omega0 * diag(p, solution.params.eta, m));
  return out;
}

double hp1_ground_energy(const ChainParams& params) {
  const auto grid = pekar_grid(params);
  CompensatedSum sum;
  for (const auto& mode : grid) {
    const double c = std::cos(mode.k);
    sum += c * (1.0 - c);
  }
  return params.omega0 * params.eta * params.eta * sum.value();
}

ModeSpectrum hp1_spectrum(const Hp1Solution& solution) {
  return {Approximation::HolsteinPrimakoff1, solution.params, hp1_energies(solution),
          hp1_ground_energy(solution.params)};
}

double hp1_virtual_population(const Hp1Solution& solution) {
  CompensatedSum sum;
  for (const auto& p : solution.pairs) sum += p.beta * p.beta;
  return sum.value() / static_cast<double>(solution.pairs.size());
}

KernelValues kernels_eval(const BogoliubovPair& at_k, const BogoliubovPair& at_kp) {
  const double a = at_k.alpha, b = at_k.beta, c = std::cos(at_k.k);
  const double ap = at_kp.alpha, bp = at_kp.beta, cp = std::cos(at_kp.k);
  const double s = a + b, sp = ap + bp;
  KernelValues out;
  out.f = 2.0 * (a * bp + ap * b) * s * sp * (c + cp) + 2.0 * a * b * cp * sp * sp
          + 2.0 * bp * bp * c * s * s;
  out.g = 4.0 * bp * s * s * sp * (c + cp) + 2.0 * a * a * cp * sp * sp + 4.0 * bp * bp * c * s * s
          + 2.0 * b * b * cp * sp * sp;
  out.h = 2.0 * b * bp * (c + cp) * s * sp + 2.0 * b * b * cp * sp * sp;
  return out;
}

KernelValues contracted_kernels(const BogoliubovPair& at_k, const BogoliubovPair& at_kp) {
  const double a = at_k.alpha, b = at_k.beta, c = std::cos(at_k.k);
  const double ap = at_kp.alpha, bp = at_kp.beta, cp = std::cos(at_kp.k);
  const double s2 = (a + b) * (a + b);
  const double w1 = 2.0 * bp * bp + ap * bp;
  const double w2 = bp * (ap + bp) * cp;
  KernelValues out;
  out.f = 2.0 * (2.0 * w1 * c * s2 + 4.0 * w2 * (a * a + b * b + a * b));
  out.g = 2.0 * (w1 * c * s2 + w2 * (s2 + 2.0 * a * b));
  return out;
}

NonlinearKernels::NonlinearKernels(Hp1Solution solution) : solution_(std::move(solution)) {}

KernelValues NonlinearKernels::at(int l, int lp) const {
  const int n = static_cast<int>(solution_.pairs.size());
  if (l < 1 || l > n || lp < 1 || lp > n) {
    throw Error(Errc::invalid_argument, "kernel mode index outside 1.." + std::to_string(n));
  }
  return kernels_eval(solution_.pairs[static_cast<std::size_t>(l - 1)],
                      solution_.pairs[static_cast<std::size_t>(lp - 1)]);
}

}  // namespace dising
