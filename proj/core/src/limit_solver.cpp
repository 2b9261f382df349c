#include "shs/limit_solver.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "heat_schedule.hpp"
#include "recorder.hpp"
#include "shs/errors.hpp"
#include "shs/front.hpp"
#include "shs/heat.hpp"

namespace shs {

namespace {

std::size_t ignite_in_place(std::span<double> u, std::span<double> chi,
                            std::span<const double> v0) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (chi[i] < 1.0 && u[i] > 0.0) {
      u[i] += v0[i] * (1.0 - chi[i]);
      chi[i] = 1.0;
      ++count;
    }
  }
  return count;
}

double released_heat(const Domain1D& domain, std::span<const double> chi,
                     std::span<const double> v0) {
  std::vector<double> e(chi.size());
  for (std::size_t i = 0; i < chi.size(); ++i) e[i] = v0[i] * chi[i];
  return integrate(domain, e);
}

void validate(const LimitState& s) {
  const Domain1D& d = s.u.domain();
  if (!(s.chi.domain() == d) || !(s.v0.domain() == d)) {
    throw DomainError("limit state fields live on different grids");
  }
  for (std::size_t i = 0; i < s.u.size(); ++i) {
    if (s.v0[i] < 0.0) throw DomainError("v0 must be nonnegative (node " + std::to_string(i) + ")");
    if (s.chi[i] < 0.0 || s.chi[i] > 1.0) {
      throw DomainError("chi must lie in [0, 1] (node " + std::to_string(i) + ")");
    }
  }
}

}  // namespace

LimitState apply_initial_jump(const ScalarField& u0, const ScalarField& v0) {
  if (!(u0.domain() == v0.domain())) throw DomainError("u0 and v0 live on different grids");
  const std::size_t n = u0.size();
  std::vector<double> u(n), chi(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (v0[i] < 0.0) throw DomainError("v0 must be nonnegative (node " + std::to_string(i) + ")");
    const bool burned = u0[i] > 0.0;
    chi[i] = burned ? 1.0 : 0.0;
    u[i] = burned ? u0[i] + v0[i] : u0[i];
  }
  const Domain1D& d = u0.domain();
  return LimitState{0.0, ScalarField(d, std::move(u)), ScalarField(d, std::move(chi)), v0};
}

LimitState ignition_sweep(const LimitState& state, std::size_t* ignited) {
  std::vector<double> u(state.u.values().begin(), state.u.values().end());
  std::vector<double> chi(state.chi.values().begin(), state.chi.values().end());
  const std::size_t count = ignite_in_place(u, chi, state.v0.values());
  if (ignited) *ignited = count;
  const Domain1D& d = state.u.domain();
  return LimitState{state.t, ScalarField(d, std::move(u)), ScalarField(d, std::move(chi)),
                    state.v0};
}

LimitState step_limit(const LimitState& state, double dt) {
  LimitState heated{state.t + dt, diffusion_substep(state.u, dt), state.chi, state.v0};
  return ignition_sweep(heated);
}

Trajectory run_limit(const ScalarField& u0, const ScalarField& v0, const TimeGrid& time,
                     const RunOptions& options) {
  return run_limit(apply_initial_jump(u0, v0), time, options);
}

Trajectory run_limit(const LimitState& initial, const TimeGrid& time, const RunOptions& options) {
  validate(initial);
  const Domain1D& domain = initial.u.domain();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> u(initial.u.values().begin(), initial.u.values().end());
  std::vector<double> chi(initial.chi.values().begin(), initial.chi.values().end());
  const std::span<const double> v0 = initial.v0.values();
  ignite_in_place(u, chi, v0);

  // chi must equal 1 exactly where the history max of u is positive, and keep
  // its initial value elsewhere.
  const std::vector<double> chi_initial = chi;
  std::vector<double> history_max = u;
  auto count_violations = [&] {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      history_max[i] = std::max(history_max[i], u[i]);
      const double expected = history_max[i] > 0.0 ? 1.0 : chi_initial[i];
      if (chi[i] != expected) ++bad;
    }
    return bad;
  };

  detail::Recorder rec(Level::limit, domain, v0, nan);
  auto record = [&](double t) {
    rec.record(t, u, chi, front_position(domain, chi, false), released_heat(domain, chi, v0));
  };

  rec.stats().hysteresis_violations += count_violations();
  rec.observe_extremes(u);
  record(0.0);
  if (options.observer) options.observer(StepView{0.0, u, chi, v0, nan});

  detail::HeatSchedule heat(domain, time);
  std::vector<double> u_prev = u;
  for (std::size_t k = 0; k < time.steps(); ++k) {
    const double t_old = time.time_at(k);
    const double t_new = time.time_at(k + 1);
    u_prev = u;
    heat.apply(u, time.step_size(k));
    try {
      require_finite(u, t_new);
    } catch (const NumericalFailure& e) {
      u = u_prev;
      if (rec.last_time() != t_old) record(t_old);
      throw RunFailure(e, rec.take());
    }
    rec.stats().ignitions += ignite_in_place(u, chi, v0);
    rec.stats().hysteresis_violations += count_violations();
    rec.stats().steps = k + 1;
    rec.observe_extremes(u);
    if (options.observer) options.observer(StepView{t_new, u, chi, v0, nan});
    if (time.records_after(k)) record(t_new);
  }
  return rec.take();
}

}  // namespace shs
