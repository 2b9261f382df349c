#include "shs/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

#include "shs/errors.hpp"

#ifndef SHS_VERSION_STRING
#define SHS_VERSION_STRING "0.0.0"
#endif

namespace shs {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(format_double(x)); }

json report_json(const EstimateReport& r) {
  return {{"name", r.name},       {"lhs", number_or_null(r.lhs)}, {"rhs", number_or_null(r.rhs)},
          {"slack", number_or_null(r.slack)}, {"tol", r.tol},     {"passed", r.passed}};
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a number: \"" + std::string(text) + "\"");
  }
  return value;
}

std::string render_csv(const CsvTable& table) {
  std::string out;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c) out += ',';
    out += table.header[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_double(row[c]);
    }
    out += '\n';
  }
  return out;
}

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  bool first = true;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (first) {
      for (auto c : cells) table.header.emplace_back(c);
      first = false;
      continue;
    }
    if (cells.size() != table.header.size()) throw std::invalid_argument("ragged CSV row");
    std::vector<double> row;
    for (auto c : cells) row.push_back(parse_double(c));
    table.rows.push_back(std::move(row));
  }
  return table;
}

CsvTable read_csv(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_csv(buffer.str());
}

void write_file_atomic(const fs::path& path, std::string_view content) {
  std::error_code ec;
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw OutputError("cannot create " + path.parent_path().string() + ": " + ec.message());
  }
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw OutputError("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw OutputError("write failed for " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw OutputError("cannot rename onto " + path.string());
  }
}

CsvTable series_table(const std::vector<SeriesRow>& series) {
  CsvTable t{{"t", "front", "mass_u", "mass_v_or_chi", "umin", "umax"}, {}};
  t.rows.reserve(series.size());
  for (const auto& r : series) t.rows.push_back({r.t, r.front, r.mass_u, r.mass_aux, r.umin, r.umax});
  return t;
}

CsvTable snapshots_table(const Trajectory& traj) {
  CsvTable t{{"t", "x", "u", "aux"}, {}};
  t.rows.reserve(traj.snapshots() * traj.domain.nodes());
  for (std::size_t k = 0; k < traj.snapshots(); ++k) {
    for (std::size_t i = 0; i < traj.domain.nodes(); ++i) {
      t.rows.push_back({traj.times[k], traj.domain.x(i), traj.u[k][i], traj.aux[k][i]});
    }
  }
  return t;
}

void write_trajectory(const fs::path& dir, const Trajectory& traj) {
  write_file_atomic(dir / "series.csv", render_csv(series_table(traj.series)));
  write_file_atomic(dir / "snapshots.csv", render_csv(snapshots_table(traj)));
}

std::string render_manifest(const Manifest& m) {
  json doc;
  doc["tool_version"] = m.tool_version;
  doc["experiment"] = m.experiment;
  doc["config"] = m.config_echo.empty() ? json(nullptr) : json::parse(m.config_echo);
  doc["wall_clock_seconds"] = m.wall_clock_seconds;

  json reports = json::object();
  for (const auto& [run, list] : m.reports) {
    json arr = json::array();
    for (const auto& r : list) arr.push_back(report_json(r));
    reports[run] = arr;
  }
  doc["reports"] = reports;

  json assumptions = json::array();
  for (const auto& a : m.assumptions) {
    json values = json::array();
    for (double v : a.values) values.push_back(number_or_null(v));
    assumptions.push_back(
        {{"name", a.name}, {"eps", a.eps}, {"values", values}, {"tol", a.tol}, {"passed", a.passed}});
  }
  doc["assumptions"] = assumptions;

  json verdicts = json::object();
  for (const auto& [name, v] : m.verdicts) verdicts[name] = v ? json(*v) : json(nullptr);
  doc["verdicts"] = verdicts;

  json metrics = json::object();
  for (const auto& [name, v] : m.metrics) metrics[name] = number_or_null(v);
  doc["metrics"] = metrics;

  json notes = json::object();
  for (const auto& [name, v] : m.notes) notes[name] = v;
  doc["notes"] = notes;
  doc["files"] = m.files;
  return doc.dump(2) + "\n";
}

std::string_view library_version() noexcept { return SHS_VERSION_STRING; }

}  // namespace shs
