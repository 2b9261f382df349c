#include <doctest.h>

#include <string>

#include "shs/config.hpp"
#include "shs/errors.hpp"

using namespace shs;

namespace {

const std::string kMinimal = R"({
  "experiment": "simulate-shs",
  "domain": {"length": 4.0, "nodes": 401},
  "kinetics": {"variant": "matkowsky_sivashinsky", "epsilon": 0.02},
  "initial": {
    "u0": {"type": "step", "left_value": 0.5, "right_value": -0.25, "split_fraction": 0.25},
    "v0": {"type": "constant", "value": 1.0}
  }
})";

std::string with(const std::string& from, const std::string& to) {
  std::string s = kMinimal;
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

std::string error_key(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "<accepted>";
}

}  // namespace

TEST_CASE("minimal document gets documented defaults") {
  const auto cfg = parse_config(kMinimal);
  CHECK(cfg.experiment == ExperimentKind::simulate_shs);
  CHECK(cfg.time.dt() == doctest::Approx(0.5 * 0.01 * 0.01));
  CHECK(cfg.time.horizon() == 1.0);
  CHECK(cfg.time.record_every() == cfg.time.steps() / 200);
  CHECK(cfg.p == 1.0);
  CHECK(cfg.tolerances.estimate_slack == 0.05);
  CHECK(cfg.kinetics.epsilon() == 0.02);
  CHECK(std::get<StepProfile>(cfg.u0).right_value == -0.25);
  CHECK(sweep_eps(cfg).size() == kDefaultEpsSequence.size());
}

TEST_CASE("semantic violations name the key") {
  try {
    parse_config(with(R"("value": 1.0)", R"("value": -0.5)"));
    FAIL("accepted negative v0");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()) == "v0 must be nonnegative");
    CHECK(e.key() == "initial.v0");
  }
  CHECK(error_key(with(R"("type": "constant", "value": 1.0)",
                       R"("type": "cosine", "mean": 0.1, "amplitude": 0.2, "period": 1.0)")) ==
        "initial.v0");
  CHECK(error_key(with(R"("variant": "matkowsky_sivashinsky")",
                       R"("variant": "threshold", "kappa": 0.5, "theta_bar": 1.0)")) ==
        "kinetics.theta_bar");
  CHECK(error_key(with(R"("variant": "matkowsky_sivashinsky")",
                       R"("variant": "threshold", "kappa": 1.5, "theta_bar": 0.5)")) ==
        "kinetics.kappa");
  CHECK(error_key(with(R"("nodes": 401)", R"("nodes": 2)")) == "domain.nodes");
  CHECK(error_key(with(R"("nodes": 401)", R"("nodes": 4.5)")) == "domain.nodes");
  CHECK(error_key(with(R"("domain")", R"("time": {"dt": -1}, "domain")")) == "time.dt");
  CHECK(error_key(with(R"("value": 1.0)", R"("value": 1.0, "extra": 2)")) == "initial.v0.extra");
  CHECK(error_key(with(R"("type": "constant", "value": 1.0)", R"("type": "table", "values": [1, 2])")) ==
        "initial.v0.values");
  CHECK(error_key(with(R"("simulate-shs")", R"("burn")")) == "experiment");
  CHECK(error_key(with(R"("epsilon": 0.02)", R"("eps_list": [0.1, 0.2])")) == "kinetics.eps_list");
}

TEST_CASE("strict syntax") {
  try {
    parse_config(with(R"("value": 1.0)", R"("value": 1.0, "value": 2.0)"));
    FAIL("accepted duplicate key");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("duplicate key \"value\"") != std::string::npos);
  }
  try {
    parse_config("{\n  \"experiment\": \"wave\",\n  \"domain\": {\"length\": 1 \"nodes\": 3}\n}");
    FAIL("accepted malformed JSON");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config(R"({"experiment": "wave"})"), ConfigError);
}

TEST_CASE("study sections map onto experiment configs") {
  const auto cfg = parse_config(with(R"("initial")", R"("study": {
      "p": 2, "M": 3,
      "wave": {"u_infinity": -0.4, "window": [0.2, 0.8]},
      "probe": {"refinements": 2, "fixed_dt": 1e-4},
      "assumptions": {"cold": [-0.8, -0.2]},
      "refinement": {"dt": 2e-3}
    },
    "initial")"));
  CHECK(to_convergence_config(cfg).p == 2.0);
  const auto wave = to_wave_config(cfg);
  CHECK(wave.u_infinity == -0.4);
  CHECK(wave.v0 == 1.0);
  CHECK(wave.window_lo == 0.2);
  const auto probe = to_probe_config(cfg);
  CHECK(probe.refinements == 2);
  CHECK(probe.fixed_dt.value() == 1e-4);
  CHECK(probe.base_nodes == 401);
  CHECK(cfg.assumptions.cold.lo == -0.8);
  CHECK(to_refinement_config(cfg).dt == 2e-3);
  CHECK(cfg.gradient_M == 3.0);

  const auto cos_cfg = parse_config(with(R"("type": "constant", "value": 1.0)",
                                         R"("type": "cosine", "mean": 0.75, "amplitude": 0.25, "period": 1)"));
  CHECK_THROWS_AS(to_wave_config(cos_cfg), ConfigError);
  CHECK(std::holds_alternative<CosineProfile>(to_pulsation_config(cos_cfg).v0));
}

TEST_CASE("experiment names round-trip") {
  for (auto k : {ExperimentKind::simulate_shs, ExperimentKind::simulate_limit, ExperimentKind::converge,
                 ExperimentKind::ode_select, ExperimentKind::wave, ExperimentKind::pulsate,
                 ExperimentKind::peak_probe, ExperimentKind::validate_assumptions}) {
    CHECK(parse_experiment_kind(to_string(k)) == k);
  }
  CHECK_FALSE(parse_experiment_kind("simulate").has_value());
}
