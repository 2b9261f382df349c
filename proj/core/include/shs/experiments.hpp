#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shs/diagnostics.hpp"
#include "shs/grid.hpp"
#include "shs/kinetics.hpp"
#include "shs/profiles.hpp"
#include "shs/trajectory.hpp"

namespace shs {

/// Aggregate of an epsilon sweep. Vectors are aligned with eps_values.
struct SweepResult {
  std::vector<double> eps_values;
  std::vector<double> distances;
  std::vector<double> cauchy;  // distance to the previous run; NaN for the first
  std::vector<std::vector<SeriesRow>> series;
  std::vector<std::vector<EstimateReport>> diagnostics;
  std::optional<bool> verdict;  // empty when the study issues no verdict
  std::string caveat;
};

// ---------------------------------------------------------------------------
// Scalar ODE selection

struct OdeSelectionParams {
  double kappa = 0.5;
  std::vector<double> eps_list{0.2, 0.1, 0.05};
  double horizon = 2.0;
  double dt = 1e-3;
  /// Overrides u(0) = kappa - 1.
  std::optional<double> initial_value;
};

/// Integrates u' = -d/dt exp(-(1/eps) int_0^t g_eps(u) ds) (MS kinetics, unit
/// reactant) with the reaction update alone. distances[k] = sup_t |u - u(0)|;
/// verdict: strictly decreasing and final < 1e-2. series rows carry
/// (t, NaN, u, v, u, u).
SweepResult ode_selection(const OdeSelectionParams& params);

// ---------------------------------------------------------------------------
// Epsilon -> 0 convergence

struct ConvergenceConfig {
  Domain1D domain{4.0, 401};
  TimeGrid time{5e-5, 0.5, 20};
  Profile u0 = StepProfile{0.5, -0.25, 0.25};
  Profile v0 = ConstantProfile{1.0};
  KineticsFamily kinetics = KineticsFamily::matkowsky_sivashinsky(0.1);
  std::vector<double> eps_list{0.1, 0.05, 0.025, 0.0125};
  double p = 1.0;
  double gradient_M = 2.0;
};

struct ConvergenceResult {
  SweepResult sweep;
  std::vector<Trajectory> eps_runs;
  Trajectory limit_run;
  std::vector<EstimateReport> limit_diagnostics;
  /// Initial temperature bounded away from 0 at every node.
  bool monotone_data = false;
};

/// run_shs per epsilon (concurrently) and run_limit once, all on one grid.
/// Verdict (monotone data only): last three distances non-increasing and
/// every conservation check passed.
ConvergenceResult convergence_study(const ConvergenceConfig& config);

// ---------------------------------------------------------------------------
// Traveling wave

struct WaveConfig {
  KineticsFamily kinetics = KineticsFamily::matkowsky_sivashinsky(0.1);
  double u_infinity = -0.5;
  double v0 = 1.0;
  Domain1D domain{8.0, 801};
  TimeGrid time{5e-5, 0.6, 20};
  double ignition_fraction = 0.05;
  double ignition_value = 1.0;
  double window_lo = 1.0 / 3.0;
  double window_hi = 2.0 / 3.0;
  double plateau_tol = 0.02;
};

struct FrontSample {
  double t;
  double front;
};

struct WaveReport {
  bool steady = false;
  bool exploratory = false;
  std::optional<bool> passed;
  std::string note;
  double speed = 0.0;
  double burned_temp = 0.0;
  double expected_burned_temp = 0.0;
  double relative_error = 0.0;
  std::vector<FrontSample> window;
  std::vector<EstimateReport> diagnostics;
  Trajectory trajectory;
};

/// Ignites the left edge of a uniform medium and measures the front speed
/// (least squares over the time window) and the burned plateau behind the
/// front (median of u on [front - d/2, front - d/10], d = front - ignition edge).
WaveReport traveling_wave_study(const WaveConfig& config);

// ---------------------------------------------------------------------------
// Pulsating wave

struct PulsationConfig {
  KineticsFamily kinetics = KineticsFamily::threshold(0.1, 1.0, 0.8);
  double u_infinity = -0.25;
  Profile v0 = CosineProfile{0.75, 0.25, 1.0};
  Domain1D domain{8.0, 801};
  TimeGrid time{5e-5, 0.7, 20};
  double ignition_fraction = 0.05;
  double ignition_value = 1.0;
  double window_lo = 1.0 / 3.0;
  double window_hi = 2.0 / 3.0;
  double deceleration_fraction = 0.9;
};

struct SpeedSample {
  double t;
  double front;
  double speed;
};

struct DecelerationEvent {
  double t;
  double front;
  double min_speed;
};

struct PulsationReport {
  double mean_speed = 0.0;
  double speed_rel_std = 0.0;
  double oscillation_period = 0.0;  // NaN when no autocorrelation peak exists
  double oscillation_amplitude = 0.0;
  /// period / mean_speed for cosine profiles, NaN otherwise.
  double expected_period = 0.0;
  double period_error = 0.0;
  std::vector<SpeedSample> speeds;
  std::vector<DecelerationEvent> decelerations;
  std::vector<EstimateReport> diagnostics;
  Trajectory trajectory;
};

PulsationReport pulsating_wave_study(const PulsationConfig& config);

/// Lag (in samples, sub-sample refined) of the first autocorrelation peak of
/// the linearly detrended signal after its first negative value; NaN if none.
double dominant_lag(const std::vector<double>& signal);

/// Maximal runs of speed < fraction * median(speed), one event per run.
std::vector<DecelerationEvent> detect_decelerations(const std::vector<SpeedSample>& speeds,
                                                    double fraction);

// ---------------------------------------------------------------------------
// Peaking probe

struct ProbeConfig {
  double length = 4.0;
  std::size_t base_nodes = 101;
  std::size_t refinements = 3;
  /// dt = dt_ratio h^2 on every grid unless fixed_dt is set.
  double dt_ratio = 0.5;
  std::optional<double> fixed_dt;
  double horizon = 0.5;
  Profile u0 = StepProfile{0.5, -0.25, 0.25};
  Profile v0 = ConstantProfile{1.0};
  KineticsFamily kinetics = KineticsFamily::matkowsky_sivashinsky(0.02);
  double unignited_threshold = 1e-3;
};

struct ProbeGridResult {
  std::size_t nodes = 0;
  double h = 0.0;
  double dt = 0.0;
  std::vector<double> times;
  std::vector<double> probe_max;  // NaN when every node has ignited
  double overall_max = 0.0;  // over t > 0; the initial state is excluded
  std::vector<EstimateReport> diagnostics;
};

struct ProbeReport {
  std::vector<ProbeGridResult> grids;
  /// overall_max strictly increases from each grid to the next finer one.
  bool grows_under_refinement = false;
};

/// Max of u over unignited nodes (w/eps below the threshold, or no reactant)
/// at every step, on grids h, h/2, h/4, ... No verdict.
ProbeReport peaking_probe(const ProbeConfig& config);

// ---------------------------------------------------------------------------
// Limit-scheme grid refinement

struct LimitRefinementConfig {
  double length = 4.0;
  std::size_t base_nodes = 161;
  double dt = 1e-3;
  double horizon = 0.04;
  Profile u0 = StepProfile{0.5, -0.5, 0.25};
  Profile v0 = ConstantProfile{1.0};
};

struct LimitRefinementResult {
  std::vector<std::size_t> nodes;   // h, h/2, h/4, then the h/8 reference
  std::vector<double> errors;       // time-averaged |front - front_ref| per coarse grid
  double observed_order = 0.0;      // log2(e_h / e_{h/4}) / 2
  std::vector<std::vector<double>> fronts;
  bool fronts_monotone = true;
};

/// Self-convergence of the limit front at fixed dt against the h/8 run.
LimitRefinementResult limit_front_refinement(const LimitRefinementConfig& config);

}  // namespace shs
