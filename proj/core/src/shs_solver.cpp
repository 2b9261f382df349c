#include "shs/shs_solver.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "heat_schedule.hpp"
#include "recorder.hpp"
#include "shs/errors.hpp"
#include "shs/front.hpp"

namespace shs {

namespace {

std::vector<double> burned_fraction(std::span<const double> w, double eps) {
  std::vector<double> f(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) f[i] = -std::expm1(-w[i] / eps);
  return f;
}

std::vector<double> reactant(std::span<const double> w, std::span<const double> v0, double eps) {
  std::vector<double> v(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) v[i] = v0[i] * std::exp(-w[i] / eps);
  return v;
}

void react_in_place(std::span<double> u, std::span<double> w, std::span<const double> v0,
                    const KineticsFamily& kinetics, double dt, double t, ClampCounter* counter) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto r = react_node(u[i], w[i], v0[i], kinetics, dt, counter);
    u[i] += r.du;
    w[i] = r.w_new;
    if (!std::isfinite(u[i]) || !std::isfinite(w[i])) {
      throw NumericalFailure("reaction produced a non-finite value at node " + std::to_string(i),
                             i, t);
    }
  }
}

void require_nonnegative(const ScalarField& v0) {
  for (std::size_t i = 0; i < v0.size(); ++i) {
    if (v0[i] < 0.0) throw DomainError("v0 must be nonnegative (node " + std::to_string(i) + ")");
  }
}

}  // namespace

ScalarField SHSState::v() const {
  return ScalarField(u.domain(), reactant(w.values(), v0.values(), kinetics.epsilon()));
}

ReactionUpdate react_node(double u, double w, double v0, const KineticsFamily& kinetics,
                          double dt, ClampCounter* counter) {
  const double eps = kinetics.epsilon();
  const double dw = dt * eval_g(kinetics, u, counter);
  // v0 (e^{-w/eps} - e^{-(w+dw)/eps}) without cancellation for small dw.
  const double du = dw > 0.0 ? -v0 * std::exp(-w / eps) * std::expm1(-dw / eps) : 0.0;
  return {du, w + dw};
}

SHSState reaction_substep(const SHSState& state, double dt, ClampCounter* counter) {
  if (!(dt > 0.0)) throw DomainError("dt must be positive");
  std::vector<double> u(state.u.values().begin(), state.u.values().end());
  std::vector<double> w(state.w.values().begin(), state.w.values().end());
  react_in_place(u, w, state.v0.values(), state.kinetics, dt, state.t, counter);
  const Domain1D& d = state.u.domain();
  return SHSState{state.t + dt, ScalarField(d, std::move(u)), ScalarField(d, std::move(w)),
                  state.v0, state.kinetics};
}

Trajectory run_shs(const ScalarField& u0, const ScalarField& v0, const KineticsFamily& kinetics,
                   const TimeGrid& time, const RunOptions& options) {
  if (!(u0.domain() == v0.domain())) throw DomainError("u0 and v0 live on different grids");
  require_nonnegative(v0);

  const Domain1D& domain = u0.domain();
  const double eps = kinetics.epsilon();
  std::vector<double> u(u0.values().begin(), u0.values().end());
  std::vector<double> w(u.size(), 0.0);
  std::vector<double> u_prev = u;
  std::vector<double> w_prev = w;
  const std::span<const double> v0s = v0.values();

  detail::Recorder rec(Level::epsilon, domain, v0s, eps);
  auto record = [&](double t) {
    auto v = reactant(w, v0s, eps);
    const double mass_v = integrate(domain, v);
    rec.record(t, u, std::move(v), front_position(domain, burned_fraction(w, eps), true), mass_v);
  };
  auto fail = [&](const NumericalFailure& e, double t_good) -> RunFailure {
    u = u_prev;
    w = w_prev;
    if (rec.last_time() != t_good) record(t_good);
    return RunFailure(e, rec.take());
  };

  rec.observe_extremes(u);
  record(0.0);
  if (options.observer) options.observer(StepView{0.0, u, w, v0s, eps});

  detail::HeatSchedule heat(domain, time);
  ClampCounter clamps;
  for (std::size_t k = 0; k < time.steps(); ++k) {
    const double t_old = time.time_at(k);
    const double t_new = time.time_at(k + 1);
    const double dt = time.step_size(k);
    u_prev = u;
    w_prev = w;
    try {
      react_in_place(u, w, v0s, kinetics, dt, t_new, &clamps);
      heat.apply(u, dt);
      require_finite(u, t_new);
    } catch (const NumericalFailure& e) {
      rec.stats().clamp_events = clamps.events;
      throw fail(e, t_old);
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] < w_prev[i]) {
        ++rec.stats().w_decreases;
        break;
      }
    }
    rec.stats().steps = k + 1;
    rec.observe_extremes(u);
    if (options.observer) options.observer(StepView{t_new, u, w, v0s, eps});
    if (time.records_after(k)) record(t_new);
  }
  rec.stats().clamp_events = clamps.events;
  return rec.take();
}

Trajectory run_heat(const ScalarField& u0, const TimeGrid& time, const RunOptions& options) {
  const Domain1D& domain = u0.domain();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> u(u0.values().begin(), u0.values().end());
  const std::vector<double> zeros(u.size(), 0.0);

  detail::Recorder rec(Level::epsilon, domain, zeros, nan);
  rec.observe_extremes(u);
  rec.record(0.0, u, zeros, nan, 0.0);
  if (options.observer) options.observer(StepView{0.0, u, zeros, zeros, nan});

  detail::HeatSchedule heat(domain, time);
  for (std::size_t k = 0; k < time.steps(); ++k) {
    const double t_new = time.time_at(k + 1);
    heat.apply(u, time.step_size(k));
    require_finite(u, t_new);
    rec.stats().steps = k + 1;
    rec.observe_extremes(u);
    if (options.observer) options.observer(StepView{t_new, u, zeros, zeros, nan});
    if (time.records_after(k)) rec.record(t_new, u, zeros, nan, 0.0);
  }
  return rec.take();
}

}  // namespace shs
