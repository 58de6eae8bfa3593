#include <any>
#include <deque>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "dising/error.hpp"
#include "dising/version.hpp"
#include "sweep/sweep.hpp"

namespace {

using namespace dising::sweep;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitDomain = 3;

struct Common {
  std::string out = "-";
  std::string format;
  int threads = 0;
};

// Options bound to staging values; only those given on the command line or in
// the config file replace the recipe or default value.
template <class T>
struct Staged {
  T value{};
  CLI::Option* opt = nullptr;

  void apply(T& target) const {
    if (opt->count() > 0) target = value;
  }
};

template <class T>
Staged<T>& stage(CLI::App* sub, std::deque<std::any>& store, const std::string& name, const std::string& help) {
  auto& s = std::any_cast<Staged<T>&>(store.emplace_back(Staged<T>{}));
  s.opt = sub->add_option(name, s.value, help);
  return s;
}

void add_common(CLI::App* sub, Common& c, std::string default_format) {
  c.format = std::move(default_format);
  sub->add_option("--out", c.out, "Output path, '-' for stdout")->capture_default_str();
  sub->add_option("--format", c.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--threads", c.threads, "Worker threads, 0 for all cores")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

struct AxisOptions {
  Staged<double>* start;
  Staged<double>* stop;
  Staged<int>* count;

  void apply(Axis& a) const {
    start->apply(a.start);
    stop->apply(a.stop);
    count->apply(a.count);
  }
};

template <class Config>
Config from_recipe(const std::string& command, const std::string& name, Config (*recipe)(Figure)) {
  if (name.empty()) return Config{};
  const auto fig = parse_figure(name);
  if (!fig) throw dising::Error(dising::Errc::invalid_argument, "recipe: unknown recipe '" + name + "'");
  try {
    auto c = recipe(*fig);
    c.recipe = name;
    return c;
  } catch (const dising::Error&) {
    throw dising::Error(dising::Errc::invalid_argument,
                        "recipe: '" + name + "' does not belong to " + command);
  }
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dipole-chain Ising spectra, cavity polaritons and exact-diagonalization checks"};
  app.set_version_flag("--version", std::string(dising::kVersion));
  app.set_config("--config", "", "TOML/INI file with a [<subcommand>] section; flags override it");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);

  std::deque<std::any> store;
  std::deque<Common> commons;

  auto* ising = app.add_subcommand("ising-spectrum", "Single-particle energies per scheme");
  add_common(ising, commons.emplace_back(), "csv");
  auto& is_recipe = stage<std::string>(ising, store, "--recipe", "fig1, fig2a or fig2b");
  const AxisOptions is_eta{&stage<double>(ising, store, "--eta-start", "First eta"),
                           &stage<double>(ising, store, "--eta-stop", "Last eta"),
                           &stage<int>(ising, store, "--eta-count", "Number of eta points")};
  auto& is_n = stage<std::vector<int>>(ising, store, "--n-dipoles", "Chain lengths");
  auto& is_modes = stage<std::vector<int>>(ising, store, "--modes", "1-based mode indices, default all");

  auto* pol = app.add_subcommand("polaritons", "Polariton branches versus k/k_c");
  add_common(pol, commons.emplace_back(), "csv");
  auto& po_recipe = stage<std::string>(pol, store, "--recipe", "fig4 or fig5");
  auto& po_eta = stage<double>(pol, store, "--eta", "Chain coupling eta");
  auto& po_nu = stage<std::vector<double>>(pol, store, "--nu", "Light-matter couplings");
  auto& po_delta = stage<std::vector<double>>(pol, store, "--delta", "Cavity detunings");
  auto& po_points = stage<int>(pol, store, "--points", "k samples per panel");
  auto& po_ratio = stage<double>(pol, store, "--ratio-max", "Largest k/k_c");
  auto& po_n = stage<int>(pol, store, "--n-dipoles", "Finite N for the HP1LM columns, 0 for none");

  auto* sat = app.add_subcommand("saturation", "Coupling saturation ratio versus |eta|");
  add_common(sat, commons.emplace_back(), "csv");
  auto& sa_recipe = stage<std::string>(sat, store, "--recipe", "fig6");
  const AxisOptions sa_eta{&stage<double>(sat, store, "--abs-eta-start", "First |eta|"),
                           &stage<double>(sat, store, "--abs-eta-stop", "Last |eta|"),
                           &stage<int>(sat, store, "--abs-eta-count", "Number of |eta| points")};
  auto& sa_n = stage<int>(sat, store, "--n-dipoles", "Grid size for the numeric ratio");

  auto* fn = app.add_subcommand("fn-correction", "Finite-size function, grid sum versus closed form");
  add_common(fn, commons.emplace_back(), "csv");
  auto& fn_n = stage<std::vector<int>>(fn, store, "--n-dipoles", "Chain lengths");
  auto& fn_delta = stage<std::vector<double>>(fn, store, "--delta", "Detunings");
  auto& fn_ref = stage<int>(fn, store, "--scale-reference", "Scale delta with N from this reference, 0 for off");

  auto* ora = app.add_subcommand("oracle", "Exact-diagonalization cross-checks");
  add_common(ora, commons.emplace_back(), "json");
  auto& or_n = stage<std::vector<int>>(ora, store, "--n-dipoles", "Chain lengths for ED vs BdG");
  auto& or_eta = stage<std::vector<double>>(ora, store, "--eta", "Couplings for ED vs BdG");
  auto& or_tol = stage<double>(ora, store, "--hard-tolerance", "ED vs BdG tolerance");
  auto& or_pn = stage<int>(ora, store, "--population-n", "Chain length for the population check");
  auto& or_peta = stage<double>(ora, store, "--population-eta", "Coupling for the population check");
  auto& or_dn = stage<int>(ora, store, "--dicke-n", "Chain length for the Dicke-Ising check");
  auto& or_deta = stage<double>(ora, store, "--dicke-eta", "Coupling for the Dicke-Ising check");
  auto& or_dnu = stage<double>(ora, store, "--dicke-nu", "Light-matter coupling for the Dicke-Ising check");
  auto& or_dcut = stage<int>(ora, store, "--dicke-cutoff", "Photon Fock cutoff");
  auto& or_dmode = stage<int>(ora, store, "--dicke-mode", "Mode the photon couples to");

  for (auto* sub : {ising, pol, sat, fn, ora}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    const CLI::App* subs[] = {ising, pol, sat, fn, ora};
    std::size_t active = 0;
    while (!subs[active]->parsed()) ++active;
    const Common& common = commons[active];
    const int threads = resolve_threads(common.threads);
    CommandResult result;
    if (ising->parsed()) {
      std::string name;
      is_recipe.apply(name);
      auto c = from_recipe("ising-spectrum", name, ising_spectrum_recipe);
      is_eta.apply(c.eta);
      is_n.apply(c.n_dipoles);
      is_modes.apply(c.modes);
      result = run_ising_spectrum(c, threads);
    } else if (pol->parsed()) {
      std::string name;
      po_recipe.apply(name);
      auto c = from_recipe("polaritons", name, polaritons_recipe);
      po_eta.apply(c.eta);
      po_nu.apply(c.nu);
      po_delta.apply(c.delta);
      po_points.apply(c.points);
      po_ratio.apply(c.ratio_max);
      po_n.apply(c.n_dipoles);
      result = run_polaritons(c, threads);
    } else if (sat->parsed()) {
      std::string name;
      sa_recipe.apply(name);
      auto c = from_recipe("saturation", name, saturation_recipe);
      sa_eta.apply(c.abs_eta);
      sa_n.apply(c.n_dipoles);
      result = run_saturation(c, threads);
    } else if (fn->parsed()) {
      FnCorrectionConfig c;
      fn_n.apply(c.n_dipoles);
      fn_delta.apply(c.delta);
      fn_ref.apply(c.scale_reference);
      result = run_fn_correction(c, threads);
    } else {
      OracleConfig c;
      or_n.apply(c.n_dipoles);
      or_eta.apply(c.eta);
      or_tol.apply(c.hard_tolerance);
      or_pn.apply(c.population_n);
      or_peta.apply(c.population_eta);
      or_dn.apply(c.dicke_n);
      or_deta.apply(c.dicke_eta);
      or_dnu.apply(c.dicke_nu);
      or_dcut.apply(c.dicke_cutoff);
      or_dmode.apply(c.dicke_mode);
      result = run_oracle(c, threads);
    }
    write_output(render(result, common.format == "json" ? Format::json : Format::csv), common.out);
    if (result.exit_code != 0) std::cerr << "dising: oracle hard check failed\n";
    return result.exit_code;
  } catch (const dising::Error& e) {
    std::cerr << "dising: " << e.what() << '\n';
    return dising::is_validation_error(e.code()) ? kExitValidation : kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "dising: internal error: " << e.what() << '\n';
    return 1;
  }
}
