#include "shs/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numeric>

#include "shs/errors.hpp"
#include "shs/limit_solver.hpp"
#include "shs/shs_solver.hpp"

namespace shs {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::size_t refined_nodes(std::size_t base, std::size_t level) {
  return (base - 1) * (std::size_t{1} << level) + 1;
}

bool conservation_passed(const std::vector<EstimateReport>& reports) {
  for (const auto& r : reports) {
    if (r.name.rfind("conservation", 0) == 0 && !r.passed) return false;
  }
  return true;
}

/// Hot slab of width ignition_fraction * L at the left edge, u_infinity elsewhere.
ScalarField ignition_data(const Domain1D& d, double fraction, double hot, double cold) {
  return sample(StepProfile{hot, cold, fraction}, d);
}

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxx > 0.0 ? sxy / sxx : kNaN;
}

double median(std::vector<double> v) {
  if (v.empty()) return kNaN;
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  const double upper = v[mid];
  if (v.size() % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

std::vector<EstimateReport> epsilon_diagnostics(const Trajectory& run, const Trajectory& twin,
                                                const ScalarField& u0, const ScalarField& v0,
                                                double M) {
  return run_estimate_suite(run, twin, u0, std::max(v0.max(), 0.0), M);
}

std::vector<EstimateReport> limit_diagnostics(const Trajectory& run, const TimeGrid& time,
                                              const ScalarField& v0, double M) {
  const ScalarField start = run.u_at(0);
  const Trajectory twin = run_heat(start, time);
  return run_estimate_suite(run, twin, start, std::max(v0.max(), 0.0), M);
}

/// Series rows inside [lo T, hi T] (T = horizon), with their snapshot index.
std::vector<std::size_t> window_rows(const Trajectory& traj, double lo, double hi) {
  const double T = traj.horizon();
  std::vector<std::size_t> rows;
  for (std::size_t k = 0; k < traj.series.size(); ++k) {
    const double t = traj.series[k].t;
    if (t >= lo * T && t <= hi * T) rows.push_back(k);
  }
  return rows;
}

}  // namespace

// ---------------------------------------------------------------------------

SweepResult ode_selection(const OdeSelectionParams& params) {
  if (!(params.kappa > 0.0 && params.kappa < 1.0)) throw DomainError("kappa must lie in (0, 1)");
  if (params.eps_list.empty()) throw DomainError("eps_list is empty");
  const TimeGrid time(params.dt, params.horizon);
  const double u_start = params.initial_value.value_or(params.kappa - 1.0);

  SweepResult out;
  std::vector<std::vector<double>> paths;
  for (double eps : params.eps_list) {
    const auto family = KineticsFamily::matkowsky_sivashinsky(eps);
    ClampCounter clamps;
    double u = u_start;
    double w = 0.0;
    double deviation = 0.0;
    double drift = 0.0;
    std::vector<SeriesRow> rows{{0.0, kNaN, u, 1.0, u, u}};
    std::vector<double> path{u};
    for (std::size_t k = 0; k < time.steps(); ++k) {
      const auto r = react_node(u, w, 1.0, family, time.step_size(k), &clamps);
      u += r.du;
      w = r.w_new;
      if (!std::isfinite(u)) throw NumericalFailure("ODE state became non-finite", 0, time.time_at(k + 1));
      const double v = std::exp(-w / eps);
      deviation = std::max(deviation, std::abs(u - u_start));
      drift = std::max(drift, std::abs(u + v - (u_start + 1.0)));
      rows.push_back({time.time_at(k + 1), kNaN, u, v, u, u});
      path.push_back(u);
    }
    double cauchy = kNaN;
    if (!paths.empty()) {
      cauchy = 0.0;
      for (std::size_t k = 0; k < path.size(); ++k) {
        cauchy = std::max(cauchy, std::abs(path[k] - paths.back()[k]));
      }
    }
    out.eps_values.push_back(eps);
    out.distances.push_back(deviation);
    out.cauchy.push_back(cauchy);
    out.series.push_back(std::move(rows));
    out.diagnostics.push_back({make_report("conservation_u_plus_v", drift,
                                           kConservationTol * (1.0 + std::abs(u_start + 1.0)),
                                           0.0)});
    paths.push_back(std::move(path));
  }

  bool decreasing = true;
  for (std::size_t k = 1; k < out.distances.size(); ++k) {
    if (!(out.distances[k] < out.distances[k - 1])) decreasing = false;
  }
  bool conserved = true;
  for (const auto& d : out.diagnostics) conserved = conserved && conservation_passed(d);
  out.verdict = decreasing && out.distances.back() < 1e-2 && conserved;
  return out;
}

// ---------------------------------------------------------------------------

ConvergenceResult convergence_study(const ConvergenceConfig& config) {
  if (config.eps_list.empty()) throw DomainError("eps_list is empty");
  for (std::size_t k = 0; k < config.eps_list.size(); ++k) {
    if (!(config.eps_list[k] > 0.0)) throw DomainError("eps values must be positive");
    if (k > 0 && config.eps_list[k] > config.eps_list[k - 1]) {
      throw DomainError("eps_list must be non-increasing");
    }
  }
  const ScalarField u0 = sample(config.u0, config.domain);
  const ScalarField v0 = sample(config.v0, config.domain);

  ConvergenceResult out;
  out.monotone_data = std::all_of(u0.values().begin(), u0.values().end(),
                                  [](double z) { return z != 0.0; });

  const Trajectory twin = run_heat(u0, config.time);

  std::vector<std::future<std::pair<Trajectory, std::vector<EstimateReport>>>> jobs;
  for (double eps : config.eps_list) {
    jobs.push_back(std::async(std::launch::async, [&, eps] {
      Trajectory run = run_shs(u0, v0, config.kinetics.with_epsilon(eps), config.time);
      auto diag = epsilon_diagnostics(run, twin, u0, v0, config.gradient_M);
      return std::make_pair(std::move(run), std::move(diag));
    }));
  }
  out.limit_run = run_limit(u0, v0, config.time);
  out.limit_diagnostics = limit_diagnostics(out.limit_run, config.time, v0, config.gradient_M);

  for (std::size_t k = 0; k < jobs.size(); ++k) {
    auto [run, diag] = jobs[k].get();
    out.sweep.eps_values.push_back(config.eps_list[k]);
    out.sweep.distances.push_back(lp_space_time_distance(run, out.limit_run, config.p));
    out.sweep.cauchy.push_back(
        k == 0 ? kNaN : lp_space_time_distance(run, out.eps_runs.back(), config.p));
    out.sweep.series.push_back(run.series);
    out.sweep.diagnostics.push_back(std::move(diag));
    out.eps_runs.push_back(std::move(run));
  }

  const auto& d = out.sweep.distances;
  bool tail_ok = true;
  const std::size_t first = d.size() >= 3 ? d.size() - 3 : 0;
  for (std::size_t k = first + 1; k < d.size(); ++k) {
    if (d[k] > d[k - 1]) tail_ok = false;
  }
  bool conserved = conservation_passed(out.limit_diagnostics);
  for (const auto& diag : out.sweep.diagnostics) conserved = conserved && conservation_passed(diag);
  if (out.monotone_data) out.sweep.verdict = tail_ok && conserved;
  out.sweep.caveat =
      "convergence holds along subsequences; this study measures one discrete sequence and "
      "cannot distinguish subsequence limits";
  if (!out.monotone_data) {
    out.sweep.caveat += "; initial temperature touches 0, so no verdict is issued";
  }
  return out;
}

// ---------------------------------------------------------------------------

WaveReport traveling_wave_study(const WaveConfig& config) {
  const Domain1D& d = config.domain;
  const ScalarField u0 =
      ignition_data(d, config.ignition_fraction, config.ignition_value, config.u_infinity);
  const ScalarField v0 = ScalarField::constant(d, config.v0);

  WaveReport out;
  out.expected_burned_temp = config.u_infinity + config.v0;
  out.exploratory = !(out.expected_burned_temp > 0.0);
  out.trajectory = run_shs(u0, v0, config.kinetics, config.time);
  const Trajectory twin = run_heat(u0, config.time);
  out.diagnostics = epsilon_diagnostics(out.trajectory, twin, u0, v0, 2.0);

  const Trajectory& traj = out.trajectory;
  const auto rows = window_rows(traj, config.window_lo, config.window_hi);
  const double x_ign = config.ignition_fraction * d.length();
  for (std::size_t k : rows) out.window.push_back({traj.series[k].t, traj.series[k].front});

  const bool all_finite =
      !out.window.empty() && std::all_of(out.window.begin(), out.window.end(),
                                         [](const FrontSample& s) { return std::isfinite(s.front); });
  if (!(config.v0 > 0.0)) {
    out.note = "no steady wave: nothing to burn";
  } else if (out.window.size() < 5 || !all_finite) {
    out.note = "no steady wave: front never formed or left the domain before measurement";
  } else if (out.window.front().front <= x_ign + 5.0 * d.h() ||
             out.window.back().front - out.window.front().front < 10.0 * d.h()) {
    out.note = "no steady wave: front did not propagate";
  } else {
    out.steady = true;
  }

  if (out.steady) {
    std::vector<double> ts, fs;
    for (const auto& s : out.window) {
      ts.push_back(s.t);
      fs.push_back(s.front);
    }
    out.speed = fit_slope(ts, fs);

    const std::size_t k = rows.back();
    const double front = traj.series[k].front;
    const double dist = front - x_ign;
    std::vector<double> behind;
    for (std::size_t i = 0; i < d.nodes(); ++i) {
      const double x = d.x(i);
      if (x >= front - 0.5 * dist && x <= front - 0.1 * dist) behind.push_back(traj.u[k][i]);
    }
    out.burned_temp = median(std::move(behind));
    out.relative_error = out.expected_burned_temp != 0.0
                             ? std::abs(out.burned_temp - out.expected_burned_temp) /
                                   std::abs(out.expected_burned_temp)
                             : std::abs(out.burned_temp);
  }

  if (out.exploratory) {
    if (out.note.empty()) out.note = "degenerate data (u_inf + v0 <= 0): speed is grid-sensitive";
    out.passed.reset();
  } else {
    out.passed = out.steady && out.relative_error <= config.plateau_tol &&
                 conservation_passed(out.diagnostics);
  }
  return out;
}

// ---------------------------------------------------------------------------

double dominant_lag(const std::vector<double>& signal) {
  const std::size_t n = signal.size();
  if (n < 8) return kNaN;
  std::vector<double> idx(n);
  std::iota(idx.begin(), idx.end(), 0.0);
  const double slope = fit_slope(idx, signal);
  const double mean_i = 0.5 * static_cast<double>(n - 1);
  const double mean_s = std::accumulate(signal.begin(), signal.end(), 0.0) / static_cast<double>(n);
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = signal[i] - (mean_s + slope * (idx[i] - mean_i));

  const double energy = std::inner_product(s.begin(), s.end(), s.begin(), 0.0);
  if (!(energy > 0.0)) return kNaN;
  const std::size_t max_lag = n / 2;
  std::vector<double> ac(max_lag + 1);
  for (std::size_t lag = 0; lag <= max_lag; ++lag) {
    double sum = 0.0;
    for (std::size_t i = 0; i + lag < n; ++i) sum += s[i] * s[i + lag];
    ac[lag] = sum / energy;
  }
  std::size_t first_negative = 0;
  while (first_negative <= max_lag && ac[first_negative] >= 0.0) ++first_negative;
  if (first_negative >= max_lag) return kNaN;
  std::size_t best = first_negative;
  for (std::size_t lag = first_negative; lag < max_lag; ++lag) {
    if (ac[lag] > ac[best]) best = lag;
  }
  if (!(ac[best] > 0.0) || best == 0 || best >= max_lag) return kNaN;
  const double a = ac[best - 1], b = ac[best], c = ac[best + 1];
  const double denom = a - 2.0 * b + c;
  const double shift = denom != 0.0 ? 0.5 * (a - c) / denom : 0.0;
  return static_cast<double>(best) + std::clamp(shift, -0.5, 0.5);
}

std::vector<DecelerationEvent> detect_decelerations(const std::vector<SpeedSample>& speeds,
                                                    double fraction) {
  std::vector<double> values;
  for (const auto& s : speeds) values.push_back(s.speed);
  const double threshold = fraction * median(values);
  std::vector<DecelerationEvent> events;
  bool inside = false;
  for (const auto& s : speeds) {
    if (s.speed < threshold) {
      if (!inside) events.push_back({s.t, s.front, s.speed});
      inside = true;
      if (s.speed < events.back().min_speed) events.back() = {s.t, s.front, s.speed};
    } else {
      inside = false;
    }
  }
  return events;
}

PulsationReport pulsating_wave_study(const PulsationConfig& config) {
  const Domain1D& d = config.domain;
  if (const auto* c = std::get_if<CosineProfile>(&config.v0)) {
    if (!(c->amplitude >= 0.0 && c->amplitude < c->mean)) {
      throw DomainError("pulsation profile needs 0 <= amplitude < mean");
    }
    if (!(c->period >= 8.0 * d.h())) throw DomainError("pulsation period must be at least 8h");
  }
  if (const auto* b = std::get_if<BumpProfile>(&config.v0)) {
    if (!(b->width > 0.0)) throw DomainError("bump width must be positive");
  }
  if (profile_min(config.v0) < 0.0) throw DomainError("v0 must be nonnegative");

  const ScalarField u0 =
      ignition_data(d, config.ignition_fraction, config.ignition_value, config.u_infinity);
  const ScalarField v0 = sample(config.v0, d);

  PulsationReport out;
  out.trajectory = run_shs(u0, v0, config.kinetics, config.time);
  const Trajectory twin = run_heat(u0, config.time);
  out.diagnostics = epsilon_diagnostics(out.trajectory, twin, u0, v0, 2.0);

  const Trajectory& traj = out.trajectory;
  std::vector<FrontSample> window;
  for (std::size_t k : window_rows(traj, config.window_lo, config.window_hi)) {
    if (std::isfinite(traj.series[k].front)) window.push_back({traj.series[k].t, traj.series[k].front});
  }
  out.oscillation_period = kNaN;
  out.expected_period = kNaN;
  out.period_error = kNaN;
  if (window.size() < 3) {
    out.mean_speed = kNaN;
    out.speed_rel_std = kNaN;
    return out;
  }
  for (std::size_t k = 0; k + 1 < window.size(); ++k) {
    const double dt = window[k + 1].t - window[k].t;
    out.speeds.push_back({0.5 * (window[k].t + window[k + 1].t),
                          0.5 * (window[k].front + window[k + 1].front),
                          (window[k + 1].front - window[k].front) / dt});
  }
  out.mean_speed = (window.back().front - window.front().front) / (window.back().t - window.front().t);

  std::vector<double> v;
  for (const auto& s : out.speeds) v.push_back(s.speed);
  const double m = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  double var = 0.0;
  for (double x : v) var += (x - m) * (x - m);
  out.speed_rel_std = std::sqrt(var / static_cast<double>(v.size())) / m;
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  out.oscillation_amplitude = 0.5 * (*hi - *lo);

  const double lag = dominant_lag(v);
  const double sample_dt = out.speeds.size() > 1 ? out.speeds[1].t - out.speeds[0].t : kNaN;
  out.oscillation_period = lag * sample_dt;
  if (const auto* c = std::get_if<CosineProfile>(&config.v0)) {
    out.expected_period = c->period / out.mean_speed;
    out.period_error = std::abs(out.oscillation_period - out.expected_period) / out.expected_period;
  }
  out.decelerations = detect_decelerations(out.speeds, config.deceleration_fraction);
  return out;
}

// ---------------------------------------------------------------------------

ProbeReport peaking_probe(const ProbeConfig& config) {
  if (config.refinements == 0) throw DomainError("probe needs at least one grid");
  if (!(config.unignited_threshold > 0.0)) throw DomainError("unignited threshold must be positive");

  auto probe_grid = [&config](std::size_t level) {
    ProbeGridResult g;
    const Domain1D d(config.length, refined_nodes(config.base_nodes, level));
    g.nodes = d.nodes();
    g.h = d.h();
    g.dt = config.fixed_dt.value_or(config.dt_ratio * d.h() * d.h());
    const std::size_t steps = static_cast<std::size_t>(std::ceil(config.horizon / g.dt));
    const TimeGrid time(g.dt, config.horizon, std::max<std::size_t>(1, steps / 200));
    const ScalarField u0 = sample(config.u0, d);
    const ScalarField v0 = sample(config.v0, d);
    const double eps = config.kinetics.epsilon();
    const double thr = config.unignited_threshold;

    RunOptions opts;
    opts.observer = [&](const StepView& s) {
      double best = -std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < s.u.size(); ++i) {
        if (s.aux[i] / eps < thr || s.v0[i] == 0.0) best = std::max(best, s.u[i]);
      }
      g.times.push_back(s.t);
      g.probe_max.push_back(std::isfinite(best) ? best : kNaN);
    };
    const Trajectory run = run_shs(u0, v0, config.kinetics, time, opts);
    const Trajectory twin = run_heat(u0, time);
    g.diagnostics = epsilon_diagnostics(run, twin, u0, v0, 2.0);
    g.overall_max = kNaN;
    for (std::size_t k = 0; k < g.probe_max.size(); ++k) {
      const double x = g.probe_max[k];
      if (g.times[k] > 0.0 && std::isfinite(x) && !(g.overall_max >= x)) g.overall_max = x;
    }
    return g;
  };

  std::vector<std::future<ProbeGridResult>> jobs;
  for (std::size_t level = 0; level < config.refinements; ++level) {
    jobs.push_back(std::async(std::launch::async, probe_grid, level));
  }
  ProbeReport out;
  for (auto& j : jobs) out.grids.push_back(j.get());
  out.grows_under_refinement = out.grids.size() > 1;
  for (std::size_t k = 1; k < out.grids.size(); ++k) {
    if (!(out.grids[k].overall_max > out.grids[k - 1].overall_max)) out.grows_under_refinement = false;
  }
  return out;
}

// ---------------------------------------------------------------------------

LimitRefinementResult limit_front_refinement(const LimitRefinementConfig& config) {
  const TimeGrid time(config.dt, config.horizon, 1);
  LimitRefinementResult out;
  std::vector<std::future<std::vector<double>>> jobs;
  for (std::size_t level = 0; level < 4; ++level) {
    const std::size_t n = refined_nodes(config.base_nodes, level);
    out.nodes.push_back(n);
    jobs.push_back(std::async(std::launch::async, [&config, &time, n] {
      const Domain1D d(config.length, n);
      const Trajectory run = run_limit(sample(config.u0, d), sample(config.v0, d), time);
      std::vector<double> fronts;
      for (std::size_t k = 1; k < run.series.size(); ++k) fronts.push_back(run.series[k].front);
      return fronts;
    }));
  }
  for (auto& j : jobs) out.fronts.push_back(j.get());

  const auto& ref = out.fronts.back();
  for (std::size_t level = 0; level < 3; ++level) {
    const auto& f = out.fronts[level];
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (std::isfinite(f[k]) && std::isfinite(ref[k])) {
        sum += std::abs(f[k] - ref[k]);
        ++count;
      }
    }
    out.errors.push_back(count ? sum / static_cast<double>(count) : kNaN);
  }
  out.observed_order = std::log2(out.errors[0] / out.errors[2]) / 2.0;
  for (const auto& f : out.fronts) {
    double last = -std::numeric_limits<double>::infinity();
    for (double x : f) {
      if (!std::isfinite(x)) continue;
      if (x < last) out.fronts_monotone = false;
      last = x;
    }
  }
  return out;
}

}  // namespace shs
