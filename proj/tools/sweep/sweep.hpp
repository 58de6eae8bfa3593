#pragma once

// Parameter sweeps behind the dising command-line tool. Each command takes a
// fully resolved config, evaluates its sweep points on a worker pool and
// returns a table whose row order never depends on the thread count.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace dising::sweep {

enum class Format { csv, json };

enum class Figure { fig1, fig2a, fig2b, fig4, fig5, fig6 };

std::optional<Figure> parse_figure(std::string_view id);
std::string_view to_string(Figure f) noexcept;

/// Evenly spaced values start..stop inclusive; count 1 gives start.
struct Axis {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  [[nodiscard]] std::vector<double> values() const;
};

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

using Provenance = std::vector<std::pair<std::string, std::string>>;

struct CommandResult {
  std::string command;
  Provenance config;  ///< resolved parameters, in emission order
  Table table;
  int exit_code = 0;  ///< nonzero only for oracle hard-check failures
};

struct IsingSpectrumConfig {
  std::string recipe;
  Axis eta{0.0, 0.0, 1};
  std::vector<int> n_dipoles{100};
  std::vector<int> modes;  ///< 1-based; empty means every mode
};

struct PolaritonsConfig {
  std::string recipe;
  double eta = -0.05;
  std::vector<double> nu{0.05};
  std::vector<double> delta{4.0};
  int points = 400;
  double ratio_max = 3.0;  ///< k / k_c runs over (0, ratio_max]
  int n_dipoles = 0;       ///< > 0 adds finite-N HP1LM columns
};

struct SaturationConfig {
  std::string recipe;
  Axis abs_eta{0.0, 0.25, 26};
  int n_dipoles = 2000;  ///< grid for the numeric HP1 ratio
};

struct FnCorrectionConfig {
  std::vector<int> n_dipoles{10, 100, 1000, 10000};
  std::vector<double> delta{4.0, 16.0};
  int scale_reference = 0;  ///< > 0: delta_N = delta (N + 1) / (ref + 1)
};

struct OracleConfig {
  std::vector<int> n_dipoles{4, 8, 10};
  std::vector<double> eta{0.0, 0.1, 0.25};
  double hard_tolerance = 1e-10;
  int population_n = 10;
  double population_eta = 0.1;
  int dicke_n = 6;
  double dicke_eta = -0.1;
  double dicke_nu = 0.1;
  int dicke_cutoff = 8;
  int dicke_mode = 1;
};

/// Recipe parameters; the recipe name must belong to the command.
IsingSpectrumConfig ising_spectrum_recipe(Figure f);
PolaritonsConfig polaritons_recipe(Figure f);
SaturationConfig saturation_recipe(Figure f);

/// Throw dising::Error(invalid_argument or a chain code) naming the field.
void validate(const IsingSpectrumConfig& c);
void validate(const PolaritonsConfig& c);
void validate(const SaturationConfig& c);
void validate(const FnCorrectionConfig& c);
void validate(const OracleConfig& c);

CommandResult run_ising_spectrum(const IsingSpectrumConfig& c, int threads);
CommandResult run_polaritons(const PolaritonsConfig& c, int threads);
CommandResult run_saturation(const SaturationConfig& c, int threads);
CommandResult run_fn_correction(const FnCorrectionConfig& c, int threads);
CommandResult run_oracle(const OracleConfig& c, int threads);

/// 17 significant digits, shortest exact integers.
std::string format_number(double x);

/// '#' header (version, command, resolved config), a column line, rows; LF.
std::string render_csv(const CommandResult& r);
std::string render_json(const CommandResult& r);
std::string render(const CommandResult& r, Format f);

/// "-" writes to stdout. Throws dising::Error(invalid_argument) if the file
/// cannot be written.
void write_output(const std::string& text, const std::string& path);

}  // namespace dising::sweep
