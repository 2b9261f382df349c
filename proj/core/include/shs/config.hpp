#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shs/experiments.hpp"
#include "shs/grid.hpp"
#include "shs/kinetics.hpp"
#include "shs/profiles.hpp"

namespace shs {

enum class ExperimentKind {
  simulate_shs,
  simulate_limit,
  converge,
  ode_select,
  wave,
  pulsate,
  peak_probe,
  validate_assumptions,
};

std::string_view to_string(ExperimentKind kind) noexcept;
std::optional<ExperimentKind> parse_experiment_kind(std::string_view name) noexcept;

struct Tolerances {
  double estimate_slack = 0.05;
  double plateau = 0.02;
  double period = 0.10;
  double control_std = 0.02;
  double assumption = 1e-2;
};

struct WaveOptions {
  double u_infinity = -0.5;
  double ignition_fraction = 0.05;
  double ignition_value = 1.0;
  double window_lo = 1.0 / 3.0;
  double window_hi = 2.0 / 3.0;
};

struct PulsateOptions {
  double u_infinity = -0.25;
  double ignition_fraction = 0.05;
  double ignition_value = 1.0;
  double window_lo = 1.0 / 3.0;
  double window_hi = 2.0 / 3.0;
  double deceleration_fraction = 0.9;
};

struct ProbeOptions {
  std::size_t refinements = 3;
  double dt_ratio = 0.5;
  std::optional<double> fixed_dt;
  double threshold = 1e-3;
};

struct AssumptionOptions {
  Interval cold{-0.9, -0.1};
  Interval hot{0.1, 1.0};
  double c_hot = 1.0;
};

struct RefinementOptions {
  double dt = 1e-3;
  double horizon = 0.04;
};

/// Everything a study may need; each subcommand reads the parts it uses.
struct RunConfig {
  ExperimentKind experiment = ExperimentKind::simulate_shs;
  Domain1D domain{1.0, 3};
  TimeGrid time{1.0, 1.0};
  KineticsFamily kinetics = KineticsFamily::matkowsky_sivashinsky(0.1);
  /// Empty unless kinetics.eps_list was given.
  std::vector<double> eps_list;
  Profile u0 = ConstantProfile{0.0};
  Profile v0 = ConstantProfile{0.0};
  Tolerances tolerances;
  double p = 1.0;
  double gradient_M = 2.0;
  /// Bound constant for the estimate suite; defaults to max v0.
  std::optional<double> C;
  OdeSelectionParams ode;
  WaveOptions wave;
  PulsateOptions pulsate;
  ProbeOptions probe;
  AssumptionOptions assumptions;
  std::optional<RefinementOptions> refinement;
  std::optional<std::string> output_directory;
  /// Canonical re-serialization of the input document, for the manifest.
  std::string echo;
};

/// Parses and validates a JSON document. Throws ConfigError with the key path
/// on semantic violations and with "line L, column C" on syntax errors.
///
/// Defaults: time.dt = h^2/2, time.horizon = 1, time.record_every =
/// max(1, steps/200), study.p = 1, tolerances.estimate_slack = 0.05.
RunConfig parse_config(std::string_view text);

/// Reads a file and parses it. Unreadable files raise ConfigError.
RunConfig load_config(const std::string& path);

ConvergenceConfig to_convergence_config(const RunConfig& cfg);
/// Requires a constant initial.v0 (ConfigError otherwise).
WaveConfig to_wave_config(const RunConfig& cfg);
PulsationConfig to_pulsation_config(const RunConfig& cfg);
ProbeConfig to_probe_config(const RunConfig& cfg);
LimitRefinementConfig to_refinement_config(const RunConfig& cfg);

/// Eps sequence for sweeps: kinetics.eps_list if given, else the default.
std::vector<double> sweep_eps(const RunConfig& cfg);

}  // namespace shs
