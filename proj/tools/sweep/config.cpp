#include <cmath>
#include <string>

#include "dising/chain.hpp"
#include "dising/error.hpp"
#include "dising/oracle.hpp"
#include "sweep.hpp"

namespace dising::sweep {

namespace {

[[noreturn]] void reject(std::string_view field, const std::string& why) {
  throw Error(Errc::invalid_argument, std::string(field) + ": " + why);
}

void require_count(std::string_view field, std::size_t n) {
  if (n == 0) reject(field, "needs at least one value");
}

void require_axis(std::string_view field, const Axis& a) {
  if (a.count < 1) reject(field, "count must be >= 1");
  if (!std::isfinite(a.start) || !std::isfinite(a.stop)) reject(field, "range must be finite");
}

void require_eta(std::string_view field, double eta) {
  if (!(std::abs(eta) <= kMaxEta)) reject(field, "|eta| = " + std::to_string(std::abs(eta)) + " exceeds 0.25");
}

void require_chain_length(std::string_view field, int n, int max = 1 << 30) {
  if (n < 2) reject(field, "N = " + std::to_string(n) + " must be >= 2");
  if (n > max) reject(field, "N = " + std::to_string(n) + " exceeds " + std::to_string(max));
}

}  // namespace

std::optional<Figure> parse_figure(std::string_view id) {
  for (auto f : {Figure::fig1, Figure::fig2a, Figure::fig2b, Figure::fig4, Figure::fig5, Figure::fig6}) {
    if (to_string(f) == id) return f;
  }
  return std::nullopt;
}

std::string_view to_string(Figure f) noexcept {
  switch (f) {
    case Figure::fig1: return "fig1";
    case Figure::fig2a: return "fig2a";
    case Figure::fig2b: return "fig2b";
    case Figure::fig4: return "fig4";
    case Figure::fig5: return "fig5";
    case Figure::fig6: return "fig6";
  }
  return "";
}

std::vector<double> Axis::values() const {
  std::vector<double> v;
  if (count < 1) return v;
  v.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    v.push_back(start);
    return v;
  }
  for (int i = 0; i < count; ++i) {
    // Endpoints exact; interior points from the same expression every run.
    v.push_back(i == count - 1 ? stop : start + (stop - start) * i / (count - 1));
  }
  return v;
}

IsingSpectrumConfig ising_spectrum_recipe(Figure f) {
  IsingSpectrumConfig c;
  c.recipe = std::string(to_string(f));
  switch (f) {
    case Figure::fig1:
      c.eta = {0.0, -0.25, 26};
      c.n_dipoles = {1000};
      c.modes = {1};
      return c;
    case Figure::fig2a:
    case Figure::fig2b:
      c.eta = {f == Figure::fig2a ? -0.05 : -0.2, 0.0, 1};
      c.n_dipoles.clear();
      for (int n = 10; n <= 200; n += 10) c.n_dipoles.push_back(n);
      c.modes = {1, 2};
      return c;
    default:
      reject("recipe", std::string(to_string(f)) + " is not an ising-spectrum recipe (fig1, fig2a, fig2b)");
  }
}

PolaritonsConfig polaritons_recipe(Figure f) {
  if (f != Figure::fig4 && f != Figure::fig5) {
    reject("recipe", std::string(to_string(f)) + " is not a polaritons recipe (fig4, fig5)");
  }
  PolaritonsConfig c;
  c.recipe = std::string(to_string(f));
  c.eta = f == Figure::fig4 ? -0.05 : -0.2;
  c.nu = {0.05, 0.2};
  c.delta = {4.0, 16.0};
  c.points = 400;
  c.ratio_max = 3.0;
  c.n_dipoles = 0;
  return c;
}

SaturationConfig saturation_recipe(Figure f) {
  if (f != Figure::fig6) reject("recipe", std::string(to_string(f)) + " is not a saturation recipe (fig6)");
  SaturationConfig c;
  c.recipe = "fig6";
  c.abs_eta = {0.0, 0.25, 26};
  c.n_dipoles = 2000;
  return c;
}

void validate(const IsingSpectrumConfig& c) {
  require_axis("eta", c.eta);
  require_eta("eta", c.eta.start);
  require_eta("eta", c.eta.stop);
  require_count("n-dipoles", c.n_dipoles.size());
  for (int n : c.n_dipoles) require_chain_length("n-dipoles", n, 1000000);
  for (int l : c.modes) {
    if (l < 1) reject("modes", "mode index " + std::to_string(l) + " must be >= 1");
    for (int n : c.n_dipoles) {
      if (l > n) reject("modes", "mode index " + std::to_string(l) + " exceeds N = " + std::to_string(n));
    }
  }
}

void validate(const PolaritonsConfig& c) {
  require_eta("eta", c.eta);
  require_count("nu", c.nu.size());
  require_count("delta", c.delta.size());
  for (double nu : c.nu) {
    if (!(nu >= 0.0) || !std::isfinite(nu)) reject("nu", "must be finite and >= 0");
  }
  for (double d : c.delta) {
    if (!(d > 1.0) || !std::isfinite(d)) reject("delta", "must be finite and > 1");
  }
  if (c.points < 1) reject("points", "must be >= 1");
  if (!(c.ratio_max > 0.0) || !std::isfinite(c.ratio_max)) reject("ratio-max", "must be finite and > 0");
  if (c.n_dipoles != 0) require_chain_length("n-dipoles", c.n_dipoles, 100000000);
}

void validate(const SaturationConfig& c) {
  require_axis("abs-eta", c.abs_eta);
  for (double e : {c.abs_eta.start, c.abs_eta.stop}) {
    if (!(e >= 0.0)) reject("abs-eta", "range must be non-negative");
    require_eta("abs-eta", e);
  }
  require_chain_length("n-dipoles", c.n_dipoles, 1000000);
}

void validate(const FnCorrectionConfig& c) {
  require_count("n-dipoles", c.n_dipoles.size());
  require_count("delta", c.delta.size());
  for (int n : c.n_dipoles) {
    if (n < 1 || n > 100000000) reject("n-dipoles", "N must lie in 1..1e8");
  }
  for (double d : c.delta) {
    if (!(d > 0.0) || !std::isfinite(d)) reject("delta", "must be finite and > 0");
  }
  if (c.scale_reference < 0) reject("scale-reference", "must be >= 0");
}

void validate(const OracleConfig& c) {
  require_count("n-dipoles", c.n_dipoles.size());
  require_count("eta", c.eta.size());
  for (int n : c.n_dipoles) require_chain_length("n-dipoles", n, kMaxEdSites);
  for (double e : c.eta) require_eta("eta", e);
  if (!(c.hard_tolerance > 0.0)) reject("hard-tolerance", "must be > 0");
  require_chain_length("population-n", c.population_n, kMaxEdSites);
  require_eta("population-eta", c.population_eta);
  require_chain_length("dicke-n", c.dicke_n, kMaxEdSites);
  require_eta("dicke-eta", c.dicke_eta);
  if (!(c.dicke_nu >= 0.0)) reject("dicke-nu", "must be >= 0");
  if (c.dicke_cutoff < 1) reject("dicke-cutoff", "must be >= 1");
  if (c.dicke_mode < 1 || c.dicke_mode > c.dicke_n) reject("dicke-mode", "must lie in 1..dicke-n");
}

}  // namespace dising::sweep
