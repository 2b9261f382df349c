#include "shs/config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "shs/errors.hpp"

namespace shs {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<ExperimentKind, std::string_view>, 8> kKindNames{{
    {ExperimentKind::simulate_shs, "simulate-shs"},
    {ExperimentKind::simulate_limit, "simulate-limit"},
    {ExperimentKind::converge, "converge"},
    {ExperimentKind::ode_select, "ode-select"},
    {ExperimentKind::wave, "wave"},
    {ExperimentKind::pulsate, "pulsate"},
    {ExperimentKind::peak_probe, "peak-probe"},
    {ExperimentKind::validate_assumptions, "validate-assumptions"},
}};

/// Strict view of one JSON object: unknown keys are rejected on construction.
class Section {
 public:
  Section(const json& j, std::string path, std::initializer_list<std::string_view> allowed)
      : j_(j), path_(std::move(path)) {
    if (!j.is_object()) throw ConfigError(path_ + " must be an object", path_);
    for (const auto& [key, _] : j.items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        throw ConfigError("unknown key " + key_of(key), key_of(key));
      }
    }
  }

  bool has(std::string_view k) const { return j_.contains(std::string(k)); }
  std::string key_of(std::string_view k) const {
    return path_.empty() ? std::string(k) : path_ + "." + std::string(k);
  }

  const json& at(std::string_view k) const {
    if (!has(k)) throw ConfigError("missing required key " + key_of(k), key_of(k));
    return j_.at(std::string(k));
  }

  double num(std::string_view k) const {
    const json& v = at(k);
    if (!v.is_number()) throw ConfigError(key_of(k) + " must be a number", key_of(k));
    return v.get<double>();
  }
  double num(std::string_view k, double fallback) const { return has(k) ? num(k) : fallback; }
  std::optional<double> opt_num(std::string_view k) const {
    return has(k) ? std::optional<double>(num(k)) : std::nullopt;
  }

  std::size_t count(std::string_view k) const {
    const json& v = at(k);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      throw ConfigError(key_of(k) + " must be a nonnegative integer", key_of(k));
    }
    return v.get<std::size_t>();
  }
  std::size_t count(std::string_view k, std::size_t fallback) const {
    return has(k) ? count(k) : fallback;
  }

  std::string str(std::string_view k) const {
    const json& v = at(k);
    if (!v.is_string()) throw ConfigError(key_of(k) + " must be a string", key_of(k));
    return v.get<std::string>();
  }

  std::vector<double> nums(std::string_view k) const {
    const json& v = at(k);
    if (!v.is_array()) throw ConfigError(key_of(k) + " must be an array of numbers", key_of(k));
    std::vector<double> out;
    for (const auto& e : v) {
      if (!e.is_number()) throw ConfigError(key_of(k) + " must be an array of numbers", key_of(k));
      out.push_back(e.get<double>());
    }
    return out;
  }

  Section sub(std::string_view k, std::initializer_list<std::string_view> allowed) const {
    return Section(at(k), key_of(k), allowed);
  }

  void require(bool ok, std::string_view k, const std::string& message) const {
    if (!ok) throw ConfigError(key_of(k) + ": " + message, key_of(k));
  }

 private:
  const json& j_;
  std::string path_;
};

json parse_strict(std::string_view text) {
  std::vector<std::set<std::string>> open;
  json::parser_callback_t guard = [&open](int, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start:
        open.emplace_back();
        break;
      case json::parse_event_t::object_end:
        open.pop_back();
        break;
      case json::parse_event_t::key: {
        const auto key = parsed.get<std::string>();
        if (!open.back().insert(key).second) throw ConfigError("duplicate key \"" + key + "\"", key);
        break;
      }
      default:
        break;
    }
    return true;
  };
  try {
    return json::parse(text.begin(), text.end(), guard);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ConfigError("syntax error at line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ": " + e.what());
  }
}

Profile parse_profile(const Section& parent, std::string_view key, const Domain1D& domain) {
  const std::string path = parent.key_of(key);
  const json& j = parent.at(key);
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    throw ConfigError(path + " must be an object with a string \"type\"", path);
  }
  const std::string type = j.at("type").get<std::string>();
  if (type == "constant") {
    Section s(j, path, {"type", "value"});
    return ConstantProfile{s.num("value")};
  }
  if (type == "step") {
    Section s(j, path, {"type", "left_value", "right_value", "split_fraction"});
    StepProfile p{s.num("left_value"), s.num("right_value"), s.num("split_fraction", 0.5)};
    s.require(p.split_fraction >= 0.0 && p.split_fraction <= 1.0, "split_fraction",
              "must lie in [0, 1]");
    return p;
  }
  if (type == "cosine") {
    Section s(j, path, {"type", "mean", "amplitude", "period"});
    CosineProfile p{s.num("mean"), s.num("amplitude"), s.num("period")};
    s.require(p.period > 0.0, "period", "must be positive");
    return p;
  }
  if (type == "bump") {
    Section s(j, path, {"type", "mean", "depth", "center", "width"});
    BumpProfile p{s.num("mean"), s.num("depth"), s.num("center"), s.num("width")};
    s.require(p.width > 0.0, "width", "must be positive");
    return p;
  }
  if (type == "table") {
    Section s(j, path, {"type", "values"});
    TableProfile p{s.nums("values")};
    s.require(p.values.size() == domain.nodes(), "values",
              "has " + std::to_string(p.values.size()) + " entries but the grid has " +
                  std::to_string(domain.nodes()) + " nodes");
    return p;
  }
  throw ConfigError(path + ".type: unknown profile type \"" + type + "\"", path + ".type");
}

void require_window(const Section& s, std::string_view key, double& lo, double& hi) {
  if (!s.has(key)) return;
  const auto w = s.nums(key);
  s.require(w.size() == 2 && w[0] >= 0.0 && w[0] < w[1] && w[1] <= 1.0, key,
            "must be [lo, hi] with 0 <= lo < hi <= 1 (fractions of the horizon)");
  lo = w[0];
  hi = w[1];
}

Interval parse_interval(const Section& s, std::string_view key, Interval fallback) {
  if (!s.has(key)) return fallback;
  const auto w = s.nums(key);
  s.require(w.size() == 2 && w[0] < w[1], key, "must be [lo, hi] with lo < hi");
  return {w[0], w[1]};
}

std::vector<double> parse_eps_list(const Section& s, std::string_view key) {
  auto list = s.nums(key);
  s.require(!list.empty(), key, "must not be empty");
  for (std::size_t k = 0; k < list.size(); ++k) {
    s.require(list[k] > 0.0, key, "values must be positive");
    s.require(k == 0 || list[k] < list[k - 1], key, "must be strictly decreasing");
  }
  return list;
}

KineticsFamily parse_kinetics(const Section& k, std::vector<double>& eps_list) {
  const std::string variant = k.str("variant");
  if (k.has("eps_list")) eps_list = parse_eps_list(k, "eps_list");
  double eps = 0.0;
  if (k.has("epsilon")) {
    eps = k.num("epsilon");
    k.require(eps > 0.0, "epsilon", "must be positive");
  } else if (!eps_list.empty()) {
    eps = eps_list.front();
  } else {
    throw ConfigError("kinetics needs epsilon or eps_list", k.key_of("epsilon"));
  }
  const double clamp = k.num("exp_clamp", KineticsFamily::kDefaultExpClamp);
  k.require(clamp > 0.0, "exp_clamp", "must be positive");

  if (variant == "matkowsky_sivashinsky") {
    k.require(!k.has("kappa") && !k.has("theta_bar") && !k.has("table"), "variant",
              "matkowsky_sivashinsky takes no kappa, theta_bar or table");
    return KineticsFamily::matkowsky_sivashinsky(eps, clamp);
  }
  if (variant == "threshold") {
    const double kappa = k.num("kappa");
    const double theta_bar = k.num("theta_bar");
    k.require(kappa > 0.0 && kappa <= 1.0, "kappa", "must lie in (0, 1]");
    k.require(theta_bar > 0.0 && theta_bar < 1.0, "theta_bar", "must lie in (0, 1)");
    k.require(!k.has("table"), "table", "only valid for the tabulated variant");
    return KineticsFamily::threshold(eps, kappa, theta_bar, clamp);
  }
  if (variant == "tabulated") {
    const Section t = k.sub("table", {"z", "g"});
    KineticsTable table{t.nums("z"), t.nums("g")};
    try {
      return KineticsFamily::tabulated(eps, std::move(table));
    } catch (const DomainError& e) {
      throw ConfigError(k.key_of("table") + ": " + e.what(), k.key_of("table"));
    }
  }
  throw ConfigError(k.key_of("variant") + ": unknown variant \"" + variant + "\"",
                    k.key_of("variant"));
}

}  // namespace

std::string_view to_string(ExperimentKind kind) noexcept {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<ExperimentKind> parse_experiment_kind(std::string_view name) noexcept {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

RunConfig parse_config(std::string_view text) {
  const json doc = parse_strict(text);
  const Section root(doc, "", {"experiment", "domain", "time", "kinetics", "initial", "tolerances",
                               "study", "output"});
  RunConfig cfg;
  cfg.echo = doc.dump(2);

  const std::string kind = root.str("experiment");
  const auto parsed_kind = parse_experiment_kind(kind);
  if (!parsed_kind) throw ConfigError("experiment: unknown experiment \"" + kind + "\"", "experiment");
  cfg.experiment = *parsed_kind;

  {
    const Section d = root.sub("domain", {"length", "nodes"});
    const double length = d.num("length");
    const std::size_t nodes = d.count("nodes");
    d.require(length > 0.0, "length", "must be positive");
    d.require(nodes >= 3, "nodes", "must be at least 3");
    cfg.domain = Domain1D(length, nodes);
  }

  {
    const double h = cfg.domain.h();
    double dt = 0.5 * h * h;
    double horizon = 1.0;
    std::optional<std::size_t> record_every;
    if (root.has("time")) {
      const Section t = root.sub("time", {"dt", "horizon", "record_every"});
      dt = t.num("dt", dt);
      horizon = t.num("horizon", horizon);
      t.require(dt > 0.0, "dt", "must be positive");
      t.require(horizon > 0.0, "horizon", "must be positive");
      t.require(dt <= horizon, "dt", "must not exceed the horizon");
      if (t.has("record_every")) {
        record_every = t.count("record_every");
        t.require(*record_every >= 1, "record_every", "must be at least 1");
      }
    }
    const std::size_t steps = TimeGrid(dt, horizon).steps();
    cfg.time = TimeGrid(dt, horizon, record_every.value_or(std::max<std::size_t>(1, steps / 200)));
  }

  cfg.kinetics = parse_kinetics(
      root.sub("kinetics", {"variant", "epsilon", "eps_list", "kappa", "theta_bar", "exp_clamp", "table"}),
      cfg.eps_list);

  {
    const Section init = root.sub("initial", {"u0", "v0"});
    cfg.u0 = parse_profile(init, "u0", cfg.domain);
    cfg.v0 = parse_profile(init, "v0", cfg.domain);
    if (profile_min(cfg.v0) < 0.0) throw ConfigError("v0 must be nonnegative", "initial.v0");
  }

  if (root.has("tolerances")) {
    const Section t = root.sub("tolerances",
                               {"estimate_slack", "plateau", "period", "control_std", "assumption"});
    auto& tol = cfg.tolerances;
    tol.estimate_slack = t.num("estimate_slack", tol.estimate_slack);
    tol.plateau = t.num("plateau", tol.plateau);
    tol.period = t.num("period", tol.period);
    tol.control_std = t.num("control_std", tol.control_std);
    tol.assumption = t.num("assumption", tol.assumption);
    for (std::string_view key : {"estimate_slack", "plateau", "period", "control_std", "assumption"}) {
      if (t.has(key)) t.require(t.num(key) > 0.0, key, "must be positive");
    }
  }

  if (root.has("study")) {
    const Section s = root.sub("study", {"p", "M", "C", "ode", "wave", "pulsate", "probe",
                                         "assumptions", "refinement"});
    cfg.p = s.num("p", cfg.p);
    s.require(cfg.p >= 1.0, "p", "must be >= 1");
    cfg.gradient_M = s.num("M", cfg.gradient_M);
    s.require(cfg.gradient_M >= 1.0, "M", "must be >= 1");
    cfg.C = s.opt_num("C");
    if (cfg.C) s.require(*cfg.C >= 0.0, "C", "must be nonnegative");

    if (s.has("ode")) {
      const Section o = s.sub("ode", {"kappa", "eps_list", "horizon", "dt", "initial_value"});
      auto& ode = cfg.ode;
      ode.kappa = o.num("kappa", ode.kappa);
      o.require(ode.kappa > 0.0 && ode.kappa < 1.0, "kappa", "must lie in (0, 1)");
      if (o.has("eps_list")) ode.eps_list = parse_eps_list(o, "eps_list");
      ode.horizon = o.num("horizon", ode.horizon);
      ode.dt = o.num("dt", ode.dt);
      o.require(ode.horizon > 0.0, "horizon", "must be positive");
      o.require(ode.dt > 0.0, "dt", "must be positive");
      ode.initial_value = o.opt_num("initial_value");
    }
    if (s.has("wave")) {
      const Section w = s.sub("wave", {"u_infinity", "ignition_fraction", "ignition_value", "window"});
      auto& wave = cfg.wave;
      wave.u_infinity = w.num("u_infinity", wave.u_infinity);
      wave.ignition_fraction = w.num("ignition_fraction", wave.ignition_fraction);
      wave.ignition_value = w.num("ignition_value", wave.ignition_value);
      w.require(wave.ignition_fraction > 0.0 && wave.ignition_fraction < 1.0, "ignition_fraction",
                "must lie in (0, 1)");
      require_window(w, "window", wave.window_lo, wave.window_hi);
    }
    if (s.has("pulsate")) {
      const Section w = s.sub("pulsate", {"u_infinity", "ignition_fraction", "ignition_value",
                                          "window", "deceleration_fraction"});
      auto& pul = cfg.pulsate;
      pul.u_infinity = w.num("u_infinity", pul.u_infinity);
      pul.ignition_fraction = w.num("ignition_fraction", pul.ignition_fraction);
      pul.ignition_value = w.num("ignition_value", pul.ignition_value);
      pul.deceleration_fraction = w.num("deceleration_fraction", pul.deceleration_fraction);
      w.require(pul.ignition_fraction > 0.0 && pul.ignition_fraction < 1.0, "ignition_fraction",
                "must lie in (0, 1)");
      w.require(pul.deceleration_fraction > 0.0 && pul.deceleration_fraction < 1.0,
                "deceleration_fraction", "must lie in (0, 1)");
      require_window(w, "window", pul.window_lo, pul.window_hi);
    }
    if (s.has("probe")) {
      const Section p = s.sub("probe", {"refinements", "dt_ratio", "fixed_dt", "threshold"});
      auto& probe = cfg.probe;
      probe.refinements = p.count("refinements", probe.refinements);
      probe.dt_ratio = p.num("dt_ratio", probe.dt_ratio);
      probe.fixed_dt = p.opt_num("fixed_dt");
      probe.threshold = p.num("threshold", probe.threshold);
      p.require(probe.refinements >= 1 && probe.refinements <= 6, "refinements",
                "must lie in [1, 6]");
      p.require(probe.dt_ratio > 0.0, "dt_ratio", "must be positive");
      if (probe.fixed_dt) p.require(*probe.fixed_dt > 0.0, "fixed_dt", "must be positive");
      p.require(probe.threshold > 0.0, "threshold", "must be positive");
    }
    if (s.has("assumptions")) {
      const Section a = s.sub("assumptions", {"cold", "hot", "c_hot"});
      auto& as = cfg.assumptions;
      as.cold = parse_interval(a, "cold", as.cold);
      as.hot = parse_interval(a, "hot", as.hot);
      as.c_hot = a.num("c_hot", as.c_hot);
      a.require(as.cold.hi < 0.0, "cold", "must lie inside (-inf, 0)");
      a.require(as.hot.lo > 0.0, "hot", "must lie inside (0, inf)");
      a.require(as.c_hot >= 0.0, "c_hot", "must be nonnegative");
    }
    if (s.has("refinement")) {
      const Section r = s.sub("refinement", {"dt", "horizon"});
      RefinementOptions ref;
      ref.dt = r.num("dt", ref.dt);
      ref.horizon = r.num("horizon", ref.horizon);
      r.require(ref.dt > 0.0, "dt", "must be positive");
      r.require(ref.horizon > 0.0, "horizon", "must be positive");
      cfg.refinement = ref;
    }
  }

  if (root.has("output")) {
    const Section o = root.sub("output", {"directory"});
    cfg.output_directory = o.str("directory");
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::vector<double> sweep_eps(const RunConfig& cfg) {
  if (!cfg.eps_list.empty()) return cfg.eps_list;
  return {kDefaultEpsSequence.begin(), kDefaultEpsSequence.end()};
}

ConvergenceConfig to_convergence_config(const RunConfig& cfg) {
  ConvergenceConfig c;
  c.domain = cfg.domain;
  c.time = cfg.time;
  c.u0 = cfg.u0;
  c.v0 = cfg.v0;
  c.kinetics = cfg.kinetics;
  c.eps_list = sweep_eps(cfg);
  c.p = cfg.p;
  c.gradient_M = cfg.gradient_M;
  return c;
}

WaveConfig to_wave_config(const RunConfig& cfg) {
  const auto* v0 = std::get_if<ConstantProfile>(&cfg.v0);
  if (!v0) throw ConfigError("wave study needs a constant v0", "initial.v0");
  WaveConfig w;
  w.kinetics = cfg.kinetics;
  w.u_infinity = cfg.wave.u_infinity;
  w.v0 = v0->value;
  w.domain = cfg.domain;
  w.time = cfg.time;
  w.ignition_fraction = cfg.wave.ignition_fraction;
  w.ignition_value = cfg.wave.ignition_value;
  w.window_lo = cfg.wave.window_lo;
  w.window_hi = cfg.wave.window_hi;
  w.plateau_tol = cfg.tolerances.plateau;
  return w;
}

PulsationConfig to_pulsation_config(const RunConfig& cfg) {
  PulsationConfig p;
  p.kinetics = cfg.kinetics;
  p.u_infinity = cfg.pulsate.u_infinity;
  p.v0 = cfg.v0;
  p.domain = cfg.domain;
  p.time = cfg.time;
  p.ignition_fraction = cfg.pulsate.ignition_fraction;
  p.ignition_value = cfg.pulsate.ignition_value;
  p.window_lo = cfg.pulsate.window_lo;
  p.window_hi = cfg.pulsate.window_hi;
  p.deceleration_fraction = cfg.pulsate.deceleration_fraction;
  return p;
}

ProbeConfig to_probe_config(const RunConfig& cfg) {
  ProbeConfig p;
  p.length = cfg.domain.length();
  p.base_nodes = cfg.domain.nodes();
  p.refinements = cfg.probe.refinements;
  p.dt_ratio = cfg.probe.dt_ratio;
  p.fixed_dt = cfg.probe.fixed_dt;
  p.horizon = cfg.time.horizon();
  p.u0 = cfg.u0;
  p.v0 = cfg.v0;
  p.kinetics = cfg.kinetics;
  p.unignited_threshold = cfg.probe.threshold;
  return p;
}

LimitRefinementConfig to_refinement_config(const RunConfig& cfg) {
  const RefinementOptions opts = cfg.refinement.value_or(RefinementOptions{});
  LimitRefinementConfig r;
  r.length = cfg.domain.length();
  r.base_nodes = cfg.domain.nodes();
  r.dt = opts.dt;
  r.horizon = opts.horizon;
  r.u0 = cfg.u0;
  r.v0 = cfg.v0;
  return r;
}

}  // namespace shs
