#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shs/diagnostics.hpp"
#include "shs/kinetics.hpp"
#include "shs/trajectory.hpp"

namespace shs {

/// Shortest decimal that parses back to the same double; "nan", "inf", "-inf"
/// for the non-finite values.
std::string format_double(double value);

/// Inverse of format_double. Throws std::invalid_argument on malformed input.
double parse_double(std::string_view text);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

std::string render_csv(const CsvTable& table);
CsvTable parse_csv(std::string_view text);
CsvTable read_csv(const std::filesystem::path& path);

/// Writes `content` to a sibling temp file and renames it over `path`.
/// Creates parent directories. Throws OutputError on failure.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// `t,front,mass_u,mass_v_or_chi,umin,umax`, one row per recorded step.
CsvTable series_table(const std::vector<SeriesRow>& series);

/// `t,x,u,aux`, one row per node per snapshot.
CsvTable snapshots_table(const Trajectory& traj);

/// series.csv and snapshots.csv in `dir`.
void write_trajectory(const std::filesystem::path& dir, const Trajectory& traj);

/// Contents of manifest.json. Only `wall_clock_seconds` varies between
/// otherwise identical runs.
struct Manifest {
  std::string tool_version;
  std::string experiment;
  std::string config_echo;  // JSON text; embedded as a JSON value
  double wall_clock_seconds = 0.0;
  std::vector<std::pair<std::string, std::vector<EstimateReport>>> reports;
  std::vector<AssumptionReport> assumptions;
  /// Named verdicts; nullopt is written as null (no verdict issued).
  std::vector<std::pair<std::string, std::optional<bool>>> verdicts;
  std::vector<std::pair<std::string, double>> metrics;
  std::vector<std::pair<std::string, std::string>> notes;
  std::vector<std::string> files;
};

std::string render_manifest(const Manifest& manifest);

/// Version compiled into the library.
std::string_view library_version() noexcept;

}  // namespace shs
