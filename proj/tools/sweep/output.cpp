#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include "json.hpp"

#include "dising/error.hpp"
#include "dising/version.hpp"
#include "sweep.hpp"

namespace dising::sweep {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  return std::get<std::string>(c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  if (const auto* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) return nullptr;
    return *d;
  }
  const auto& s = std::get<std::string>(c);
  if (s.empty()) return nullptr;
  return s;
}

}  // namespace

std::string render_csv(const CommandResult& r) {
  std::string out = "# dising " + std::string(kVersion) + "\n";
  out += "# command = " + r.command + "\n";
  for (const auto& [key, value] : r.config) out += "# " + key + " = " + value + "\n";
  for (std::size_t i = 0; i < r.table.columns.size(); ++i) {
    if (i) out += ',';
    out += r.table.columns[i];
  }
  out += '\n';
  for (const auto& row : r.table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_text(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const CommandResult& r) {
  nlohmann::ordered_json doc;
  doc["dising_version"] = kVersion;
  doc["command"] = r.command;
  auto& config = doc["config"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : r.config) config[key] = value;
  doc["columns"] = r.table.columns;
  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : r.table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[r.table.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

std::string render(const CommandResult& r, Format f) {
  return f == Format::csv ? render_csv(r) : render_json(r);
}

void write_output(const std::string& text, const std::string& path) {
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(Errc::invalid_argument, "out: cannot open '" + path + "' for writing");
  f << text;
  f.flush();
  if (!f) throw Error(Errc::invalid_argument, "out: failed writing '" + path + "'");
}

}  // namespace dising::sweep
