// One PASS/FAIL line per acceptance criterion, followed by indented info
// lines. Exit status: 0 when the failing set equals --expect-red (default
// empty), 1 otherwise.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dising/cavity.hpp"
#include "dising/hp1.hpp"
#include "dising/ising.hpp"
#include "dising/oracle.hpp"
#include "sweep/sweep.hpp"

using namespace dising;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> info;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    info.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& what) { info.push_back("info " + what); }
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (double eta : {0.01, 0.02, 0.05}) {
    const ChainParams p{100, 1.0, eta};
    double worst_f = 0.0;
    double worst_b = 0.0;
    for (const auto& m : pekar_grid(p)) {
      const double c = std::cos(m.k);
      const double s = std::sin(m.k);
      worst_f = std::max(worst_f, std::abs(fermion_energy(m.k, p) - (1 + 2 * eta * c + 2 * eta * eta * s * s)));
      worst_b = std::max(worst_b, std::abs(bose_energy(m.k, p) - (1 + 2 * eta * c - 2 * eta * eta * c * c)));
    }
    const double bound = 10 * eta * eta * eta;
    o.require(worst_f <= bound, fmt("eta=%g fermion max dev %.3e <= %.3e", eta, worst_f, bound));
    o.require(worst_b <= bound, fmt("eta=%g bose max dev %.3e <= %.3e", eta, worst_b, bound));
  }
  const double t = seconds_since(t0);
  o.require(t < 1.0, fmt("runtime %.3f s < 1 s", t));
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (double eta : {0.1, 0.2}) {
    const ChainParams p{100, 1.0, eta};
    double worst = 0.0;
    for (const auto& m : pekar_grid(p)) worst = std::max(worst, std::abs(hp1_energy(m.k, p) - fermion_energy(m.k, p)));
    const double bound = 10 * eta * eta * eta;
    o.require(worst <= bound, fmt("eta=%g max_k |E_HP1 - E_F| = %.3e <= %.3e", eta, worst, bound));
  }
  const double target = 2 * 0.2 * 0.2;
  for (double eta : {0.2, -0.2}) {
    const ChainParams p{100, 1.0, eta};
    const double k = pekar_momentum(1, p.n_dipoles);
    const double bose_dev = std::abs(bose_energy(k, p) - fermion_energy(k, p));
    const double hp1_dev = std::abs(hp1_energy(k, p) - fermion_energy(k, p));
    const std::string tag = fmt("eta=%g first mode: ", eta);
    if (eta > 0) {
      o.require(std::abs(bose_dev - target) <= 0.2 * target,
                tag + fmt("|E_B - E_F| = %.4f within 20%% of %.2f", bose_dev, target));
      o.require(hp1_dev < 0.01, tag + fmt("|E_HP1 - E_F| = %.4f < 0.01", hp1_dev));
    } else {
      o.note(tag + fmt("|E_B - E_F| = %.4f, |E_HP1 - E_F| = %.4f", bose_dev, hp1_dev));
    }
  }
  o.note("second-order Bose gap is 2 eta^2; the third-order term -4 eta^3 moves it to 0.058 (eta>0) or 0.153 (eta<0)");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (int n : {4, 8, 10, 12}) {
    for (double eta : {0.0, 0.1, 0.25}) {
      const ChainParams p{n, 1.0, eta};
      const auto ed = ed_spin_chain(p).eigenvalues;
      const auto mb = many_body_spectrum(bdg_spin_chain(p));
      double worst = ed.size() == mb.size() ? 0.0 : INFINITY;
      for (std::size_t i = 0; i < std::min(ed.size(), mb.size()); ++i) worst = std::max(worst, std::abs(ed[i] - mb[i]));
      o.require(worst <= 1e-10, fmt("N=%d eta=%g: %zu levels, max |ED - BdG| = %.2e", n, eta, ed.size(), worst));
    }
  }
  const double t = seconds_since(t0);
  o.require(t < 60.0, fmt("runtime %.2f s < 60 s", t));
  return o;
}

Outcome criterion4() {
  Outcome o;
  const double target = 0.02;
  for (double eta : {0.2, -0.2}) {
    const double pop = virtual_population({2000, 1.0, eta});
    o.require(std::abs(pop - target) <= 0.15 * target,
              fmt("N=2000 eta=%g: (1/N) sum beta_B^2 = %.5f within 15%% of 0.02", eta, pop));
  }
  for (double eta : {0.05, 0.1, 0.15}) {
    o.note(fmt("Bose population at eta=%g: %.6f vs eta^2/2 = %.6f", eta, virtual_population({2000, 1.0, eta}),
               eta * eta / 2));
  }
  o.note(fmt("numeric HP1 population at N=2000 eta=0.2: %.5f",
             hp1_virtual_population(hp1_coefficients_numeric({2000, 1.0, 0.2}))));
  const auto ed = ed_spin_chain({12, 1.0, 0.1}, true);
  const double mid = ed.site_population.at(6);
  const double ref = 0.005;
  o.require(mid >= ref / 1.5 && mid <= ref * 1.5, fmt("ED N=12 eta=0.1 site 7 population %.5f within x1.5 of 0.005", mid));
  o.note(fmt("ED N=12 site 6 population %.5f", ed.site_population.at(5)));
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.05, 3.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double w = u(rng);
    const double e = u(rng);
    const double l = std::uniform_real_distribution<double>(0.0, 0.999 * 0.5 * std::sqrt(w * e))(rng);
    const HopfieldInputs in{w, e, l};
    const auto closed = polariton_energies(in);
    const auto ev = hopfield_eigenvalues_numeric(hopfield_matrix(in));
    worst = std::max({worst, std::abs(ev[3] - closed.upper) / closed.upper,
                      std::abs(ev[2] - closed.lower) / closed.lower,
                      std::abs(ev[1] + closed.lower) / closed.lower,
                      std::abs(ev[0] + closed.upper) / closed.upper});
  }
  o.require(worst <= 1e-12, fmt("1000 triples, max relative eigenvalue error %.2e <= 1e-12", worst));
  const double t = seconds_since(t0);
  o.require(t < 1.0, fmt("runtime %.3f s < 1 s", t));
  return o;
}

Outcome criterion6() {
  Outcome o;
  constexpr int kEta = 20;
  constexpr int kNu = 20;
  constexpr int kModes = 100;
  double min_lower_b = INFINITY;
  double min_lower_h = INFINITY;
  double min_margin_h = INFINITY;
  double max_abs_margin_b = 0.0;
  double min_margin_pert = INFINITY;
  for (int i = 0; i < kEta; ++i) {
    const double eta = 0.25 * i / (kEta - 1);
    const ChainParams chain{kModes, 1.0, eta};
    const auto bose = MatterSector::for_tag(chain, Approximation::Bose);
    const auto hp1 = MatterSector::from_solution(hp1_coefficients_numeric(chain));
    const auto pert = MatterSector::for_tag(chain, Approximation::HolsteinPrimakoff1);
    for (const auto& m : pekar_grid(chain)) {
      max_abs_margin_b = std::max(max_abs_margin_b, std::abs(no_go_margin(m.k, bose)));
      min_margin_h = std::min(min_margin_h, no_go_margin(m.k, hp1));
      min_margin_pert = std::min(min_margin_pert, no_go_margin(m.k, pert));
    }
    for (int j = 0; j < kNu; ++j) {
      const double nu = 1.0 * j / (kNu - 1);
      const CavityParams cav{nu, 4.0, chain, Approximation::Bose};
      for (const auto& m : pekar_grid(chain)) {
        min_lower_b = std::min(min_lower_b, polariton_energies(m.k, cav, bose).lower);
        min_lower_h = std::min(min_lower_h, polariton_energies(m.k, cav, hp1).lower);
      }
    }
  }
  o.require(min_lower_b > 0.0, fmt("tag B: min E- = %.4e > 0", min_lower_b));
  o.require(min_lower_h > 0.0, fmt("tag HP1 (numeric): min E- = %.4e > 0", min_lower_h));
  o.require(min_margin_h >= -1e-10, fmt("tag HP1 (numeric): min margin %.3e >= -1e-10", min_margin_h));
  o.require(max_abs_margin_b <= 1e-10, fmt("tag B: max |margin| %.2e <= 1e-10", max_abs_margin_b));
  o.note(fmt("second-order HP1 pairs: min margin %.3e (beyond their accuracy at eta=0.25)", min_margin_pert));
  o.note("grid: eta 20 points in [0,0.25], nu 20 points in [0,1], 100 Pekar modes, delta=4");
  return o;
}

Outcome criterion7() {
  Outcome o;
  const double second = saturation_ratio(0.2);
  const double numeric = saturation_ratio(hp1_coefficients_numeric({2000, 1.0, 0.2}));
  o.require(std::abs(second - 0.98) <= 0.002, fmt("second order %.6f = 0.98 +- 0.002", second));
  o.require(std::abs(numeric - 0.98) <= 0.002, fmt("numeric HP1 N=2000 %.6f = 0.98 +- 0.002", numeric));
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (double delta : {4.0, 16.0}) {
    const auto f = finite_size_correction(10000, delta);
    o.require(f.relative_difference <= 0.02,
              fmt("N=1e4 delta=%g: grid %.6e closed %.6e rel diff %.4f <= 0.02", delta, f.grid_sum, f.closed_form,
                  f.relative_difference));
  }
  for (double delta : {4.0, 16.0}) {
    for (int n : {100000, 1000000, 10000000}) {
      const double scaled = delta * (n + 1.0) / 10001.0;
      const auto f = finite_size_correction(n, scaled);
      const std::string tag = fmt("N=%d delta_N=%g: grid %.4e closed %.4e", n, scaled, f.grid_sum, f.closed_form);
      if (n == 10000000) {
        o.require(f.grid_sum < 1e-3 && f.closed_form < 1e-3, tag + " both < 1e-3");
      } else {
        o.note(tag);
      }
    }
  }
  o.note("delta scaled with N so the cavity length grows with the chain; delta_N = delta (N+1)/(1e4+1)");
  o.note("the 1/x end of the sum adds ~Euler gamma / log N relative to the log, so the grid sum stays ~8% high");
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

Outcome criterion9(const std::string& golden_dir) {
  Outcome o;
  struct Case {
    sweep::Figure fig;
    const char* file;
  };
  for (const auto& [fig, file] : {Case{sweep::Figure::fig4, "fig4.csv"}, Case{sweep::Figure::fig5, "fig5.csv"}}) {
    auto config = sweep::polaritons_recipe(fig);
    config.recipe = std::string(sweep::to_string(fig));
    const auto r1 = sweep::run_polaritons(config, 1);
    const std::string csv = sweep::render_csv(r1);
    const bool stable = csv == sweep::render_csv(sweep::run_polaritons(config, 4));
    const std::string golden = slurp(golden_dir + "/" + file);
    o.require(stable, fmt("%s: identical bytes at 1 and 4 threads", file));
    o.require(csv == golden, fmt("%s: matches golden (%zu bytes)", file, golden.size()));

    const auto& cols = r1.table.columns;
    auto col = [&](const char* name) {
      return static_cast<std::size_t>(std::find(cols.begin(), cols.end(), name) - cols.begin());
    };
    const std::size_t ratio_c = col("k_over_kc");
    double lo = INFINITY;
    double hi = -INFINITY;
    double bare_lo = INFINITY;
    double bare_hi = -INFINITY;
    int used = 0;
    for (const auto& row : r1.table.rows) {
      const double r = std::get<double>(row[ratio_c]);
      if (std::abs(r - 1.0) < 0.5) continue;
      const char* b = r < 1.0 ? "upper_B" : "lower_B";
      const char* h = r < 1.0 ? "upper_HP1" : "lower_HP1";
      const double d = std::get<double>(row[col(h)]) - std::get<double>(row[col(b)]);
      const double bare = std::get<double>(row[col("matter_HP1")]) - std::get<double>(row[col("matter_B")]);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
      bare_lo = std::min(bare_lo, bare);
      bare_hi = std::max(bare_hi, bare);
      ++used;
    }
    const double eta = config.eta;
    if (fig == sweep::Figure::fig5) {
      const double tol = 10 * std::abs(eta * eta * eta);
      o.require(std::abs(lo - 0.08) <= tol && std::abs(hi - 0.08) <= tol,
                fmt("fig5: matter-like branch HP1 - B in [%.5f, %.5f], 0.08 +- %.3f (%d rows, |k/kc-1|>=0.5)", lo,
                    hi, tol, used));
    } else {
      o.require(std::max(std::abs(lo), std::abs(hi)) <= 0.006,
                fmt("fig4: matter-like branch HP1 - B in [%.5f, %.5f], |.| <= 0.006 (%d rows)", lo, hi, used));
    }
    o.note(fmt("%s: bare matter columns HP1 - B in [%.5f, %.5f]", file, bare_lo, bare_hi));
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> expect_red;
  std::string golden_dir = DISING_GOLDEN_DIR;
  app.add_option("--expect-red", expect_red, "Criteria known to fail; exit 0 only if exactly these fail")
      ->delimiter(',');
  app.add_option("--golden-dir", golden_dir, "Directory with fig4.csv and fig5.csv");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Outcome()>> criteria{
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, [&] { return criterion9(golden_dir); }};

  std::set<int> red;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << fmt("  (%.2f s)", seconds_since(t0))
              << '\n';
    for (const auto& line : o.info) std::cout << "    " << line << '\n';
    if (!o.pass) red.insert(id);
  }
  const std::set<int> expected(expect_red.begin(), expect_red.end());
  std::cout << "summary: " << criteria.size() - red.size() << "/" << criteria.size() << " pass";
  if (!expected.empty()) std::cout << (red == expected ? "; failures match the expected set" : "; failures differ from the expected set");
  std::cout << '\n';
  return red == expected ? 0 : 1;
}
