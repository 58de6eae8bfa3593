#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "dising/cavity.hpp"
#include "dising/error.hpp"
#include "dising/ising.hpp"
#include "doctest.h"

using namespace dising;
using std::numbers::pi;

namespace {

CavityParams cavity(double nu, double delta, double eta, Approximation tag = Approximation::Bose, int n = 100) {
  return {nu, delta, {n, 1.0, eta}, tag};
}

}  // namespace

TEST_CASE("photon dispersion and renormalization") {
  CHECK(photon_frequency(pi, cavity(0, 7.5, 0)) == doctest::Approx(7.5));
  CHECK(photon_frequency(pi / 4, cavity(0, 4, 0)) == doctest::Approx(1.0));
  CHECK(photon_frequency(pi / 16, cavity(0, 16, 0)) == doctest::Approx(1.0));

  const auto bare = renormalized_cavity(0.5, cavity(0, 4, 0));
  CHECK(bare.omega_tilde == doctest::Approx(photon_frequency(0.5, cavity(0, 4, 0))));
  CHECK(bare.coupling_tilde == 0.0);

  const auto rc = renormalized_cavity(pi / 4, cavity(0.5, 4, 0));
  CHECK(rc.omega_tilde == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(rc.coupling_tilde == doctest::Approx(0.5 * std::pow(2.0, -0.25)).epsilon(1e-14));
}

TEST_CASE("cavity validation") {
  CHECK_THROWS_AS(validate(cavity(-0.1, 4, 0)), Error);
  CHECK_THROWS_AS(validate(cavity(0.1, 0, 0)), Error);
  CHECK_THROWS_AS(validate(cavity(0.1, 4, 0.3)), Error);
  CHECK_NOTHROW(validate(cavity(0.0, 4, 0.25)));
}

TEST_CASE("effective coupling") {
  const auto cv = cavity(0.2, 4, 0.0);
  CHECK(effective_coupling(1.0, cv, bose_bogoliubov(1.0, cv.chain)) == renormalized_cavity(1.0, cv).coupling_tilde);
  const auto b = cavity(0.2, 4, 0.2);
  for (double k = 0.1; k < pi; k += 0.2) {
    CHECK(bose_bogoliubov(k, b.chain).coupling_factor() == doctest::Approx(std::sqrt(bose_energy(k, b.chain))).epsilon(1e-13));
  }
}

TEST_CASE("hopfield matrix pattern") {
  const HopfieldInputs in{1.3, 1.0, 0.2};
  const auto m = hopfield_matrix(in);
  CHECK(m(0, 1) == -0.2);
  CHECK(m(1, 0) == -0.2);
  CHECK(m(0, 3) == 0.2);
  CHECK(m(2, 3) == 0.2);
  CHECK(m(0, 2) == 0.0);
  const Eigen::Matrix4d mu_m = hopfield_metric() * m;
  CHECK((mu_m - mu_m.transpose()).cwiseAbs().maxCoeff() == 0.0);

  const auto ev = hopfield_eigenvalues_numeric(m);
  const auto e = polariton_energies(in);
  CHECK(ev[3] == doctest::Approx(e.upper).epsilon(1e-12));
  CHECK(ev[2] == doctest::Approx(e.lower).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(-e.lower).epsilon(1e-12));
  CHECK(ev[0] == doctest::Approx(-e.upper).epsilon(1e-12));

  const auto free = hopfield_eigenvalues_numeric(hopfield_matrix({1.3, 0.7, 0.0}));
  CHECK(free[2] == doctest::Approx(0.7));
  CHECK(free[3] == doctest::Approx(1.3));
}

TEST_CASE("closed form against the eigensolver for random triples") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(0.05, 3.0);
  for (int i = 0; i < 1000; ++i) {
    const double w = u(rng);
    const double e = u(rng);
    const double lmax = 0.5 * std::sqrt(w * e);  // no-go bound keeps E- real
    const double l = std::uniform_real_distribution<double>(0.0, 0.999 * lmax)(rng);
    const HopfieldInputs in{w, e, l};
    const auto closed = polariton_energies(in);
    const auto ev = hopfield_eigenvalues_numeric(hopfield_matrix(in));
    CHECK(std::abs(ev[3] - closed.upper) <= 1e-12 * closed.upper);
    CHECK(std::abs(ev[2] - closed.lower) <= 1e-12 * closed.upper);
    CHECK(closed.lower * closed.upper <= w * e * (1 + 1e-15));
    if (l > 0) {
      CHECK(closed.lower < std::min(w, e));
      CHECK(closed.upper > std::max(w, e));
    }

    const auto v = hopfield_coefficients(in, closed);
    CHECK(std::abs(v.lower.norm() - 1.0) <= 1e-10);
    CHECK(std::abs(v.upper.norm() - 1.0) <= 1e-10);
    const auto m = hopfield_matrix(in);
    const Eigen::Vector4d xl = as_eigenvector(v.lower);
    const Eigen::Vector4d xu = as_eigenvector(v.upper);
    CHECK((m * xl - closed.lower * xl).cwiseAbs().maxCoeff() <= 1e-10 * (1 + xl.cwiseAbs().maxCoeff()));
    CHECK((m * xu - closed.upper * xu).cwiseAbs().maxCoeff() <= 1e-10 * (1 + xu.cwiseAbs().maxCoeff()));
    CHECK(std::abs(xl.dot(hopfield_metric() * xu)) <= 1e-10 * (1 + xl.norm() * xu.norm()));
  }
}

TEST_CASE("complex polariton beyond the bound") {
  CHECK_THROWS_AS(polariton_energies(HopfieldInputs{1.0, 1.0, 0.6}), Error);
  CHECK_THROWS_AS(hopfield_coefficients(HopfieldInputs{1.0, 1.0, 0.0}, {1.0, 1.0}), Error);
}

TEST_CASE("decoupled limit") {
  const auto cv = cavity(0.0, 4, -0.1);
  const double k = 1.5;
  const auto mode = hopfield_coefficients(k, cv);
  const double wk = photon_frequency(k, cv);
  const double e = bose_energy(k, cv.chain);
  CHECK(mode.lower == doctest::Approx(std::min(wk, e)));
  CHECK(mode.upper == doctest::Approx(std::max(wk, e)));
  // photon above matter: the lower branch is pure matter
  CHECK(mode.lower_coeffs.y == 1.0);
  CHECK(mode.upper_coeffs.x == doctest::Approx(1.0));
  CHECK(mode.upper_coeffs.y == 0.0);
}

TEST_CASE("resonant splitting is 2 Omega0 at small coupling") {
  const double nu = 0.01;
  const auto cv = cavity(nu, 4, 0.0);
  const auto m = polariton_energies(pi / 4, cv);
  CHECK(m.upper - m.lower == doctest::Approx(2 * nu).epsilon(1e-3));
}

TEST_CASE("perturbative branches") {
  const double k = 2.0;
  const auto b = cavity(0.05, 4, -0.05);
  const auto pb = polariton_perturbative(k, b, Approximation::Bose);
  const auto ph = polariton_perturbative(k, b, Approximation::HolsteinPrimakoff1);
  const auto pl = polariton_perturbative(k, b, Approximation::HolsteinPrimakoff1FullLM);
  // photon above matter at k = 2, delta = 4: lower is the matter line
  CHECK(ph.lower - pb.lower == doctest::Approx(2 * 0.05 * 0.05).epsilon(1e-12));
  CHECK(pl.lower - ph.lower ==
        doctest::Approx(0.05 * 0.05 * finite_size_correction(100, 4).grid_sum).epsilon(1e-12));
  CHECK(pb.upper == ph.upper);

  const auto free = polariton_perturbative(k, cavity(0, 4, -0.05), Approximation::Bose);
  CHECK(free.upper == doctest::Approx(photon_frequency(k, b)));
  CHECK(free.lower == doctest::Approx(1 - 0.1 * std::cos(k) - 2 * 0.0025 * std::cos(k) * std::cos(k)));
  CHECK_THROWS_AS(polariton_perturbative(pi / 4, b, Approximation::Bose), Error);
}

TEST_CASE("closed form minus second-order expansion is third order") {
  // Off resonance on both sides of the bare crossing.
  for (double k : {0.35, 2.4}) {
    double worst = 0.0;
    for (double eta : {0.01, 0.02, 0.03, 0.04, 0.05}) {
      for (double nu : {0.01, 0.02, 0.03, 0.04, 0.05}) {
        for (auto tag : {Approximation::Bose, Approximation::HolsteinPrimakoff1}) {
          const auto cv = cavity(nu, 4, -eta, tag);
          const auto exact = polariton_energies(k, cv);
          const auto pert = polariton_perturbative(k, cv, tag);
          const double s = std::max(eta, nu);
          worst = std::max(worst, std::max(std::abs(exact.lower - pert.lower), std::abs(exact.upper - pert.upper)) /
                                      (s * s * s));
        }
      }
    }
    CHECK(worst <= 20.0);
  }
}

TEST_CASE("no-go margin") {
  for (double eta : {0.0, 0.1, -0.2, 0.25}) {
    const auto b = cavity(0.3, 4, eta, Approximation::Bose);
    for (double k = 0.05; k < 3.1; k += 0.1) CHECK(std::abs(no_go_margin(k, b)) <= 1e-10);
  }
  const auto ht = cavity(0.3, 4, 0.2, Approximation::HolsteinPrimakoff1);
  CHECK(no_go_margin(pi / 2, ht) == doctest::Approx(0.02).epsilon(0.1));
  CHECK(no_go_margin(1.0, cavity(0.3, 4, 0.0, Approximation::HolsteinPrimakoff1)) == 0.0);
  const auto num = MatterSector::from_solution(hp1_coefficients_numeric({60, 1.0, 0.25}));
  for (const auto& m : pekar_grid(60)) CHECK(no_go_margin(m.k, num) >= 0.0);
}

TEST_CASE("saturation") {
  CHECK(saturation_ratio(0.0) == 1.0);
  CHECK(saturation_ratio(0.2) == doctest::Approx(0.98));
  double prev = 2.0;
  for (double eta = 0.0; eta <= 0.25; eta += 0.01) {
    CHECK(saturation_ratio(eta) < prev);
    prev = saturation_ratio(eta);
  }
  const auto sol = hp1_coefficients_numeric({400, 1.0, 0.2});
  const auto profile = saturation_profile(sol);
  const auto [lo, hi] = std::minmax_element(profile.begin(), profile.end());
  CHECK(*hi - *lo <= 1e-9);
  CHECK(saturation_ratio(sol) == doctest::Approx(0.98).epsilon(0.002));
  CHECK(std::abs(saturation_ratio(sol) - (1 - hp1_virtual_population(sol))) <= 0.2 * 0.2 * 0.2);
}

TEST_CASE("finite-size correction") {
  CHECK(finite_size_correction(1, 4).closed_form == 0.0);
  CHECK(finite_size_correction(100, 1e6).grid_sum < 1e-4);
  CHECK(finite_size_correction(100, 1e6).closed_form < 1e-4);
  const auto f = finite_size_correction(1000, 4);
  CHECK(f.closed_form == doctest::Approx(std::log(1004.0 / 5.0) / 8.0));
  CHECK(f.relative_difference == doctest::Approx(std::abs(f.grid_sum - f.closed_form) / f.closed_form));
  CHECK_THROWS_AS(finite_size_correction(0, 4), Error);
}

TEST_CASE("crossing point") {
  CHECK(crossing_point(cavity(0, 4, 0)) == doctest::Approx(pi / 4).epsilon(1e-12));
  CHECK(crossing_point(cavity(0, 16, 0)) == doctest::Approx(pi / 16).epsilon(1e-12));
  const auto hp = cavity(0, 4, -0.2, Approximation::HolsteinPrimakoff1);
  const double kc = crossing_point(hp);
  CHECK(photon_frequency(kc, hp) == doctest::Approx(hp1_energy(kc, hp.chain)).epsilon(1e-11));
  CHECK(crossing_point(cavity(0.2, 4, 0)) < pi / 4);
  CHECK_THROWS_AS(crossing_point(cavity(0, 0.5, 0)), Error);
}

TEST_CASE("coupled ground-state energy") {
  CHECK(ground_state_energy(cavity(0, 4, 0, Approximation::Bose, 20)) == doctest::Approx(0.0).epsilon(1e-14));
  const auto m = cavity(0, 4, -0.1, Approximation::Bose, 20);
  CHECK(ground_state_energy(m) == doctest::Approx(bose_ground_energy(m.chain)).epsilon(1e-12));
  CHECK(ground_state_energy(cavity(0.1, 4, 0, Approximation::Bose, 20)) < 0.0);
}

TEST_CASE("second-order coefficient table matches the exact components") {
  for (double k : {0.35, 2.4}) {
    for (double s : {0.04, 0.02, 0.01}) {
      auto cv = cavity(s, 4, s, Approximation::HolsteinPrimakoff1, 100);
      const auto table = second_order_coefficients(k, cv);
      const auto mode = hopfield_coefficients(k, cv);
      const auto pair = hp1_coefficients_perturbative(k, s);
      const bool photon_above = photon_frequency(k, cv) > 1.0;
      const auto photon = to_bare_basis(photon_above ? mode.upper_coeffs : mode.lower_coeffs, pair);
      const auto matter = to_bare_basis(photon_above ? mode.lower_coeffs : mode.upper_coeffs, pair);
      const double tol = 5 * s * s;
      CHECK(std::abs(std::abs(photon.x) - std::abs(table.photon_like.x)) <= tol);
      CHECK(std::abs(std::abs(photon.y) - std::abs(table.photon_like.y)) <= tol);
      CHECK(std::abs(std::abs(photon.w) - std::abs(table.photon_like.w)) <= tol);
      CHECK(std::abs(std::abs(photon.z) - std::abs(table.photon_like.z)) <= tol);
      CHECK(std::abs(std::abs(matter.x) - std::abs(table.matter_like.x)) <= tol);
      CHECK(std::abs(std::abs(matter.y) - std::abs(table.matter_like.y)) <= tol);
      CHECK(std::abs(std::abs(matter.w) - std::abs(table.matter_like.w)) <= tol);
      CHECK(std::abs(std::abs(matter.z) - std::abs(table.matter_like.z)) <= tol);
    }
  }
}

TEST_CASE("HP1LM shifts the matter mode by nu^2 F(N)") {
  const auto a = cavity(0.1, 4, -0.1, Approximation::HolsteinPrimakoff1, 50);
  auto b = a;
  b.tag = Approximation::HolsteinPrimakoff1FullLM;
  const double k = 2.5;
  const auto ma = polariton_energies(k, a);
  const auto mb = polariton_energies(k, b);
  CHECK(mb.matter_energy - ma.matter_energy == doctest::Approx(0.01 * finite_size_correction(50, 4).grid_sum));
  CHECK(mb.coupling == ma.coupling);
}
