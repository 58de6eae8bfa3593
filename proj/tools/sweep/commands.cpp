#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>

#include "dising/cavity.hpp"
#include "dising/error.hpp"
#include "dising/hp1.hpp"
#include "dising/ising.hpp"
#include "dising/oracle.hpp"
#include "pool.hpp"
#include "sweep.hpp"

namespace dising::sweep {

namespace {

using Row = std::vector<Cell>;
using Rows = std::vector<Row>;

// Shortest representation that round-trips; used for provenance lines.
std::string exact(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return {buf, r.ptr};
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::string s;
  for (const auto& x : xs) {
    if (!s.empty()) s += ' ';
    if constexpr (std::is_floating_point_v<T>) {
      s += exact(x);
    } else {
      s += std::to_string(x);
    }
  }
  return s;
}

std::string axis(const Axis& a) {
  return exact(a.start) + " " + exact(a.stop) + " " + std::to_string(a.count);
}

Table flatten(std::vector<std::string> columns, std::vector<Rows> groups) {
  Table t{std::move(columns), {}};
  for (auto& g : groups) {
    for (auto& r : g) t.rows.push_back(std::move(r));
  }
  return t;
}

}  // namespace

CommandResult run_ising_spectrum(const IsingSpectrumConfig& c, int threads) {
  validate(c);
  struct Point {
    int n;
    double eta;
  };
  std::vector<Point> points;
  for (int n : c.n_dipoles) {
    for (double eta : c.eta.values()) points.push_back({n, eta});
  }
  auto groups = parallel_map<Rows>(points.size(), threads, [&](std::size_t i) {
    const ChainParams p{points[i].n, 1.0, points[i].eta};
    const auto grid = pekar_grid(p);
    const auto numeric = hp1_energies(hp1_coefficients_numeric(p));
    std::vector<int> modes = c.modes;
    if (modes.empty()) {
      for (int l = 1; l <= p.n_dipoles; ++l) modes.push_back(l);
    }
    Rows rows;
    for (int l : modes) {
      const double k = grid.k(l);
      rows.push_back({std::int64_t{p.n_dipoles}, p.eta, std::int64_t{l}, k, fermion_energy(k, p),
                      bose_energy(k, p), hp1_energy(k, p), numeric[static_cast<std::size_t>(l - 1)]});
    }
    return rows;
  });
  CommandResult r;
  r.command = "ising-spectrum";
  r.config = {{"recipe", c.recipe.empty() ? "none" : c.recipe},
              {"eta", axis(c.eta)},
              {"n-dipoles", join(c.n_dipoles)},
              {"modes", c.modes.empty() ? "all" : join(c.modes)},
              {"omega0", "1"}};
  r.table = flatten({"N", "eta", "l", "k", "E_F", "E_B", "E_HP1_pert", "E_HP1_num"}, std::move(groups));
  return r;
}

CommandResult run_polaritons(const PolaritonsConfig& c, int threads) {
  validate(c);
  const bool finite = c.n_dipoles > 0;
  const ChainParams chain{finite ? c.n_dipoles : 2, 1.0, c.eta};
  const auto bose = MatterSector::for_tag(chain, Approximation::Bose);
  const auto hp1 = MatterSector::for_tag(chain, Approximation::HolsteinPrimakoff1);
  const auto hp1lm = MatterSector::for_tag(chain, Approximation::HolsteinPrimakoff1FullLM);

  struct Panel {
    CavityParams cavity;
    double kc;
  };
  std::vector<Panel> panels;
  for (double nu : c.nu) {
    for (double delta : c.delta) {
      const CavityParams cav{nu, delta, chain, Approximation::HolsteinPrimakoff1};
      panels.push_back({cav, crossing_point(cav)});
    }
  }
  const auto per_panel = static_cast<std::size_t>(c.points);
  auto rows = parallel_map<std::optional<Row>>(panels.size() * per_panel, threads, [&](std::size_t i) {
    const Panel& panel = panels[i / per_panel];
    const double ratio = c.ratio_max * static_cast<double>(i % per_panel + 1) / c.points;
    const double k = ratio * panel.kc;
    if (k > std::numbers::pi) return std::optional<Row>{};
    const auto b = polariton_energies(k, panel.cavity, bose);
    const auto h = polariton_energies(k, panel.cavity, hp1);
    Row row{panel.cavity.nu, panel.cavity.delta, ratio,    k,       h.omega_tilde, b.matter_energy,
            h.matter_energy, b.lower,            b.upper,  h.lower, h.upper};
    if (finite) {
      const auto l = polariton_energies(k, panel.cavity, hp1lm);
      row.insert(row.end(), {l.matter_energy, l.lower, l.upper});
    }
    return std::optional<Row>{std::move(row)};
  });

  CommandResult r;
  r.command = "polaritons";
  r.config = {{"recipe", c.recipe.empty() ? "none" : c.recipe},
              {"eta", exact(c.eta)},
              {"nu", join(c.nu)},
              {"delta", join(c.delta)},
              {"points", std::to_string(c.points)},
              {"ratio-max", exact(c.ratio_max)},
              {"n-dipoles", finite ? std::to_string(c.n_dipoles) : "0 (thermodynamic limit)"},
              {"kc-scheme", "HP1"},
              {"omega0", "1"}};
  r.table.columns = {"nu",       "delta",      "k_over_kc", "k",       "omega_tilde", "matter_B",
                     "matter_HP1", "lower_B", "upper_B",   "lower_HP1", "upper_HP1"};
  if (finite) r.table.columns.insert(r.table.columns.end(), {"matter_HP1LM", "lower_HP1LM", "upper_HP1LM"});
  for (auto& row : rows) {
    if (row) r.table.rows.push_back(std::move(*row));
  }
  return r;
}

CommandResult run_saturation(const SaturationConfig& c, int threads) {
  validate(c);
  const auto etas = c.abs_eta.values();
  auto rows = parallel_map<Row>(etas.size(), threads, [&](std::size_t i) {
    const double eta = etas[i];
    const auto sol = hp1_coefficients_numeric({c.n_dipoles, 1.0, eta});
    return Row{eta, saturation_ratio(eta), saturation_ratio(sol), 1.0 - hp1_virtual_population(sol)};
  });
  CommandResult r;
  r.command = "saturation";
  r.config = {{"recipe", c.recipe.empty() ? "none" : c.recipe},
              {"abs-eta", axis(c.abs_eta)},
              {"n-dipoles", std::to_string(c.n_dipoles)}};
  r.table = {{"abs_eta", "ratio_order2", "ratio_numeric", "one_minus_population"}, std::move(rows)};
  return r;
}

CommandResult run_fn_correction(const FnCorrectionConfig& c, int threads) {
  validate(c);
  struct Point {
    int n;
    double delta;
  };
  std::vector<Point> points;
  for (int n : c.n_dipoles) {
    for (double d : c.delta) points.push_back({n, d});
  }
  auto rows = parallel_map<Row>(points.size(), threads, [&](std::size_t i) {
    const auto [n, delta] = points[i];
    const double eff = c.scale_reference > 0 ? delta * (n + 1.0) / (c.scale_reference + 1.0) : delta;
    const auto f = finite_size_correction(n, eff);
    return Row{std::int64_t{n}, delta, eff, f.grid_sum, f.closed_form, f.relative_difference};
  });
  CommandResult r;
  r.command = "fn-correction";
  r.config = {{"n-dipoles", join(c.n_dipoles)},
              {"delta", join(c.delta)},
              {"scale-reference", std::to_string(c.scale_reference)}};
  r.table = {{"N", "delta", "delta_effective", "grid_sum", "closed_form", "relative_difference"}, std::move(rows)};
  return r;
}

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

Row report(std::string check, int n, double eta, double analytic, double oracle, double diff) {
  return {std::move(check), std::int64_t{n}, eta, analytic, oracle, diff, std::string{}, std::string("soft"),
          std::string("report")};
}

}  // namespace

CommandResult run_oracle(const OracleConfig& c, int threads) {
  validate(c);
  using Task = std::function<Row()>;
  std::vector<Task> tasks;
  for (int n : c.n_dipoles) {
    for (double eta : c.eta) {
      tasks.emplace_back([n, eta, &c] {
        const ChainParams p{n, 1.0, eta};
        const auto ed = ed_spin_chain(p);
        const auto bdg = bdg_spin_chain(p);
        const double diff = max_abs_diff(ed.eigenvalues, many_body_spectrum(bdg));
        return Row{std::string("ed_vs_bdg_spectrum"), std::int64_t{n}, eta, bdg.ground_energy,
                   ed.eigenvalues.front(), diff, c.hard_tolerance, std::string("hard"),
                   std::string(diff <= c.hard_tolerance ? "pass" : "fail")};
      });
      tasks.emplace_back([n, eta] {
        const ChainParams p{n, 1.0, eta};
        const double analytic = fermion_ground_energy(p);
        const double oracle = bdg_spin_chain(p).ground_energy;
        return report("bdg_vs_pekar_ground_energy", n, eta, analytic, oracle, std::abs(analytic - oracle));
      });
    }
  }
  tasks.emplace_back([&c] {
    const ChainParams p{c.population_n, 1.0, c.population_eta};
    const auto ed = ed_spin_chain(p, true);
    const double pop = ed.site_population.at(c.population_n / 2);
    const double target = 0.5 * c.population_eta * c.population_eta;
    return report("ed_population_mid_chain", c.population_n, c.population_eta, target, pop, std::abs(pop - target));
  });
  for (int branch = 0; branch < 2; ++branch) {
    tasks.emplace_back([&c, branch] {
      DickeIsingOptions o;
      o.mode = c.dicke_mode;
      o.photon_cutoff = c.dicke_cutoff;
      const ChainParams p{c.dicke_n, 1.0, c.dicke_eta};
      const auto ed = ed_dicke_ising(p, c.dicke_nu, o);
      const double k = pekar_momentum(c.dicke_mode, c.dicke_n);
      const double wt = std::sqrt(1.0 + 4.0 * c.dicke_nu * c.dicke_nu);
      const auto pair = hp1_coefficients_perturbative(k, c.dicke_eta);
      const auto e = polariton_energies(
          HopfieldInputs{wt, hp1_energy(k, p), c.dicke_nu * std::sqrt(1.0 / wt) * pair.coupling_factor()});
      const double analytic = branch == 0 ? e.lower : e.upper;
      const double oracle = branch == 0 ? ed.lower_gap : ed.upper_gap;
      return report(branch == 0 ? "dicke_lower_polariton" : "dicke_upper_polariton", c.dicke_n, c.dicke_eta,
                    analytic, oracle, std::abs(analytic - oracle));
    });
  }

  CommandResult r;
  r.command = "oracle";
  r.config = {{"n-dipoles", join(c.n_dipoles)},
              {"eta", join(c.eta)},
              {"hard-tolerance", exact(c.hard_tolerance)},
              {"population-n", std::to_string(c.population_n)},
              {"population-eta", exact(c.population_eta)},
              {"dicke-n", std::to_string(c.dicke_n)},
              {"dicke-eta", exact(c.dicke_eta)},
              {"dicke-nu", exact(c.dicke_nu)},
              {"dicke-cutoff", std::to_string(c.dicke_cutoff)},
              {"dicke-mode", std::to_string(c.dicke_mode)},
              {"dicke-photon-frequency", "1"}};
  r.table = {{"check", "N", "eta", "analytic", "oracle", "abs_diff", "tolerance", "kind", "status"},
             parallel_map<Row>(tasks.size(), threads, [&](std::size_t i) { return tasks[i](); })};
  for (const auto& row : r.table.rows) {
    if (std::get<std::string>(row[8]) == "fail") r.exit_code = 4;
  }
  return r;
}

}  // namespace dising::sweep
