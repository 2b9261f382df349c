// shs_lab: command line front end for the shs_core studies.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "shs/config.hpp"
#include "shs/diagnostics.hpp"
#include "shs/errors.hpp"
#include "shs/experiments.hpp"
#include "shs/kinetics.hpp"
#include "shs/limit_solver.hpp"
#include "shs/output.hpp"
#include "shs/shs_solver.hpp"

namespace fs = std::filesystem;

namespace {

enum ExitCode : int { kOk = 0, kConfigError = 1, kNumericalFailure = 2, kDiagnosticFailure = 3 };

struct Invocation {
  std::string config_path;
  std::string out_dir;
  bool strict = false;
};

/// Collects files and reports for one invocation and writes the manifest.
class Session {
 public:
  Session(const shs::RunConfig& cfg, fs::path dir) : dir_(std::move(dir)) {
    manifest_.tool_version = std::string(shs::library_version());
    manifest_.experiment = std::string(shs::to_string(cfg.experiment));
    manifest_.config_echo = cfg.echo;
  }

  const fs::path& dir() const { return dir_; }
  shs::Manifest& manifest() { return manifest_; }

  void write_csv(const fs::path& rel, const shs::CsvTable& table) {
    shs::write_file_atomic(dir_ / rel, shs::render_csv(table));
    manifest_.files.push_back(rel.generic_string());
  }

  void write_run(const fs::path& rel, const shs::Trajectory& traj) {
    write_csv(rel / "series.csv", shs::series_table(traj.series));
    write_csv(rel / "snapshots.csv", shs::snapshots_table(traj));
  }

  void add_reports(std::string name, std::vector<shs::EstimateReport> reports) {
    for (const auto& r : reports) diagnostics_ok_ = diagnostics_ok_ && r.passed;
    manifest_.reports.emplace_back(std::move(name), std::move(reports));
  }

  void verdict(std::string name, std::optional<bool> v) {
    if (v && !*v) diagnostics_ok_ = false;
    manifest_.verdicts.emplace_back(std::move(name), v);
  }

  void metric(std::string name, double v) { manifest_.metrics.emplace_back(std::move(name), v); }
  void note(std::string name, std::string v) {
    manifest_.notes.emplace_back(std::move(name), std::move(v));
  }
  void assumption(shs::AssumptionReport r) {
    if (!r.passed) diagnostics_ok_ = false;
    manifest_.assumptions.push_back(std::move(r));
  }

  bool diagnostics_ok() const { return diagnostics_ok_; }

  void finish(std::chrono::steady_clock::time_point start) {
    manifest_.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    shs::write_file_atomic(dir_ / "manifest.json", shs::render_manifest(manifest_));
  }

 private:
  fs::path dir_;
  shs::Manifest manifest_;
  bool diagnostics_ok_ = true;
};

double bound_constant(const shs::RunConfig& cfg, const shs::ScalarField& v0) {
  return cfg.C.value_or(std::max(v0.max(), 0.0));
}

std::string run_label(std::size_t k) { return "run_" + std::to_string(k); }

void simulate_shs(const shs::RunConfig& cfg, Session& s) {
  const auto u0 = shs::sample(cfg.u0, cfg.domain);
  const auto v0 = shs::sample(cfg.v0, cfg.domain);
  const auto traj = shs::run_shs(u0, v0, cfg.kinetics, cfg.time);
  const auto twin = shs::run_heat(u0, cfg.time);
  s.write_run(".", traj);
  s.add_reports("run", shs::run_estimate_suite(traj, twin, u0, bound_constant(cfg, v0),
                                               cfg.gradient_M, cfg.tolerances.estimate_slack));
  s.metric("steps", static_cast<double>(traj.stats.steps));
  s.metric("clamp_events", static_cast<double>(traj.stats.clamp_events));
  s.metric("w_decreases", static_cast<double>(traj.stats.w_decreases));
}

void simulate_limit(const shs::RunConfig& cfg, Session& s) {
  const auto u0 = shs::sample(cfg.u0, cfg.domain);
  const auto v0 = shs::sample(cfg.v0, cfg.domain);
  const auto traj = shs::run_limit(u0, v0, cfg.time);
  const auto start = traj.u_at(0);
  const auto twin = shs::run_heat(start, cfg.time);
  s.write_run(".", traj);
  s.add_reports("run", shs::run_estimate_suite(traj, twin, start, bound_constant(cfg, v0),
                                               cfg.gradient_M, cfg.tolerances.estimate_slack));
  s.metric("steps", static_cast<double>(traj.stats.steps));
  s.metric("ignitions", static_cast<double>(traj.stats.ignitions));

  if (cfg.refinement) {
    const auto ref = shs::limit_front_refinement(shs::to_refinement_config(cfg));
    shs::CsvTable table{{"nodes", "mean_front_error"}, {}};
    for (std::size_t k = 0; k < ref.errors.size(); ++k) {
      table.rows.push_back({static_cast<double>(ref.nodes[k]), ref.errors[k]});
    }
    s.write_csv("refinement.csv", table);
    s.metric("refinement_observed_order", ref.observed_order);
    s.note("refinement", "front error against the finest grid at fixed dt; informational");
  }
}

void converge(const shs::RunConfig& cfg, Session& s) {
  const auto result = shs::convergence_study(shs::to_convergence_config(cfg));
  shs::CsvTable sweep{{"eps", "distance_to_limit", "cauchy"}, {}};
  for (std::size_t k = 0; k < result.eps_runs.size(); ++k) {
    sweep.rows.push_back({result.sweep.eps_values[k], result.sweep.distances[k], result.sweep.cauchy[k]});
    s.write_run(run_label(k), result.eps_runs[k]);
    s.add_reports(run_label(k), result.sweep.diagnostics[k]);
  }
  s.write_run("limit", result.limit_run);
  s.add_reports("limit", result.limit_diagnostics);
  s.write_csv("sweep.csv", sweep);
  s.verdict("convergence", result.sweep.verdict);
  s.note("caveat", result.sweep.caveat);
}

void ode_select(const shs::RunConfig& cfg, Session& s) {
  const auto result = shs::ode_selection(cfg.ode);
  shs::CsvTable sweep{{"eps", "sup_deviation", "cauchy"}, {}};
  for (std::size_t k = 0; k < result.eps_values.size(); ++k) {
    sweep.rows.push_back({result.eps_values[k], result.distances[k], result.cauchy[k]});
    s.write_csv(fs::path(run_label(k)) / "series.csv", shs::series_table(result.series[k]));
    s.add_reports(run_label(k), result.diagnostics[k]);
  }
  s.write_csv("sweep.csv", sweep);
  s.verdict("ode_selection", result.verdict);
}

void wave(const shs::RunConfig& cfg, Session& s) {
  const auto report = shs::traveling_wave_study(shs::to_wave_config(cfg));
  s.write_run(".", report.trajectory);
  shs::CsvTable fronts{{"t", "front"}, {}};
  for (const auto& f : report.window) fronts.rows.push_back({f.t, f.front});
  s.write_csv("wave_window.csv", fronts);
  s.add_reports("run", report.diagnostics);
  s.verdict("burned_plateau", report.passed);
  s.metric("speed", report.speed);
  s.metric("burned_temp", report.burned_temp);
  s.metric("expected_burned_temp", report.expected_burned_temp);
  s.metric("relative_error", report.relative_error);
  s.note("steady", report.steady ? "steady wave" : "no steady wave");
  if (!report.note.empty()) s.note("detail", report.note);
}

void pulsate(const shs::RunConfig& cfg, Session& s) {
  const auto report = shs::pulsating_wave_study(shs::to_pulsation_config(cfg));
  s.write_run(".", report.trajectory);
  shs::CsvTable speeds{{"t", "front", "speed"}, {}};
  for (const auto& v : report.speeds) speeds.rows.push_back({v.t, v.front, v.speed});
  s.write_csv("speeds.csv", speeds);
  shs::CsvTable events{{"t", "front", "min_speed"}, {}};
  for (const auto& e : report.decelerations) events.rows.push_back({e.t, e.front, e.min_speed});
  s.write_csv("decelerations.csv", events);
  s.add_reports("run", report.diagnostics);
  s.metric("mean_speed", report.mean_speed);
  s.metric("speed_rel_std", report.speed_rel_std);
  s.metric("oscillation_period", report.oscillation_period);
  s.metric("oscillation_amplitude", report.oscillation_amplitude);
  s.metric("expected_period", report.expected_period);
  s.metric("period_error", report.period_error);
}

void peak_probe(const shs::RunConfig& cfg, Session& s) {
  const auto report = shs::peaking_probe(shs::to_probe_config(cfg));
  shs::CsvTable summary{{"nodes", "h", "dt", "overall_max"}, {}};
  for (std::size_t k = 0; k < report.grids.size(); ++k) {
    const auto& g = report.grids[k];
    summary.rows.push_back({static_cast<double>(g.nodes), g.h, g.dt, g.overall_max});
    shs::CsvTable series{{"t", "unignited_max"}, {}};
    for (std::size_t i = 0; i < g.times.size(); ++i) series.rows.push_back({g.times[i], g.probe_max[i]});
    s.write_csv(fs::path("grid_" + std::to_string(k)) / "probe.csv", series);
    s.add_reports("grid_" + std::to_string(k), g.diagnostics);
  }
  s.write_csv("probe_summary.csv", summary);
  s.note("grows_under_refinement", report.grows_under_refinement ? "yes" : "no");
}

void validate_assumptions(const shs::RunConfig& cfg, Session& s) {
  const auto eps = shs::sweep_eps(cfg);
  const auto& a = cfg.assumptions;
  s.assumption(shs::verify_assumption_cold(cfg.kinetics, eps, a.cold, cfg.tolerances.assumption));
  s.assumption(shs::verify_assumption_hot(cfg.kinetics, eps, a.hot, a.c_hot, cfg.tolerances.assumption));
  s.assumption(shs::verify_assumption_growth(cfg.kinetics, eps, a.cold));
  s.assumption(shs::verify_assumption_growth(cfg.kinetics, eps, a.hot));
  shs::CsvTable table{{"check", "eps", "value"}, {}};
  const auto& list = s.manifest().assumptions;
  for (std::size_t c = 0; c < list.size(); ++c) {
    for (std::size_t k = 0; k < list[c].eps.size(); ++k) {
      table.rows.push_back({static_cast<double>(c), list[c].eps[k], list[c].values[k]});
    }
  }
  s.write_csv("assumptions.csv", table);
}

int execute(shs::ExperimentKind kind, const Invocation& inv) {
  const auto start = std::chrono::steady_clock::now();
  shs::RunConfig cfg;
  try {
    cfg = shs::load_config(inv.config_path);
    if (cfg.experiment != kind) {
      throw shs::ConfigError("config declares experiment \"" +
                                 std::string(shs::to_string(cfg.experiment)) +
                                 "\" but the subcommand is \"" + std::string(shs::to_string(kind)) +
                                 "\"",
                             "experiment");
    }
  } catch (const shs::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  }

  const fs::path dir = !inv.out_dir.empty() ? fs::path(inv.out_dir)
                                            : fs::path(cfg.output_directory.value_or("shs_out"));
  Session session(cfg, dir);
  try {
    switch (kind) {
      case shs::ExperimentKind::simulate_shs: simulate_shs(cfg, session); break;
      case shs::ExperimentKind::simulate_limit: simulate_limit(cfg, session); break;
      case shs::ExperimentKind::converge: converge(cfg, session); break;
      case shs::ExperimentKind::ode_select: ode_select(cfg, session); break;
      case shs::ExperimentKind::wave: wave(cfg, session); break;
      case shs::ExperimentKind::pulsate: pulsate(cfg, session); break;
      case shs::ExperimentKind::peak_probe: peak_probe(cfg, session); break;
      case shs::ExperimentKind::validate_assumptions: validate_assumptions(cfg, session); break;
    }
    session.finish(start);
  } catch (const shs::RunFailure& e) {
    std::cerr << "numerical failure: " << e.what() << " (node " << e.node() << ", t = " << e.time()
              << ")\n";
    try {
      session.write_run("partial", e.partial());
      session.note("failure", e.what());
      session.finish(start);
    } catch (const shs::OutputError&) {
    }
    return kNumericalFailure;
  } catch (const shs::NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  } catch (const shs::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const shs::DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const shs::OutputError& e) {
    std::cerr << "output error: " << e.what() << "\n";
    return kConfigError;
  }

  const bool validate_mode = kind == shs::ExperimentKind::validate_assumptions;
  if (!session.diagnostics_ok()) {
    std::cerr << "diagnostic failure recorded in " << (dir / "manifest.json").string() << "\n";
    if (inv.strict || validate_mode) return kDiagnosticFailure;
  }
  std::cout << "wrote " << dir.string() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sharp-front combustion laboratory: epsilon-level SHS runs, the hysteresis limit, "
               "and the studies that compare them."};
  app.set_version_flag("--version", std::string(shs::library_version()));
  app.require_subcommand(1);

  Invocation inv;
  int code = kOk;
  constexpr shs::ExperimentKind kinds[] = {
      shs::ExperimentKind::simulate_shs, shs::ExperimentKind::simulate_limit,
      shs::ExperimentKind::converge,     shs::ExperimentKind::ode_select,
      shs::ExperimentKind::wave,         shs::ExperimentKind::pulsate,
      shs::ExperimentKind::peak_probe,   shs::ExperimentKind::validate_assumptions,
  };
  for (auto kind : kinds) {
    auto* sub = app.add_subcommand(std::string(shs::to_string(kind)));
    sub->add_option("--config", inv.config_path, "JSON run configuration")->required();
    sub->add_option("--out", inv.out_dir, "output directory (overrides output.directory)");
    sub->add_flag("--strict", inv.strict, "exit with code 3 when a diagnostic fails");
    sub->callback([kind, &inv, &code] { code = execute(kind, inv); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }
  return code;
}
