#pragma once

#include <functional>
#include <span>

#include "shs/errors.hpp"
#include "shs/grid.hpp"
#include "shs/kinetics.hpp"
#include "shs/trajectory.hpp"

namespace shs {

/// State of the epsilon-level system. The reactant is never stored: only the
/// accumulated reaction integral w = int_0^t g_eps(u) ds is, and the reactant
/// is recovered as v = v0 exp(-w/eps).
struct SHSState {
  double t;
  ScalarField u;
  ScalarField w;
  ScalarField v0;
  KineticsFamily kinetics;

  ScalarField v() const;
};

/// Per-node exact exponential update with u frozen over the substep.
struct ReactionUpdate {
  double du;     // v0 (exp(-w/eps) - exp(-w'/eps)) >= 0
  double w_new;  // w + dt g_eps(u)
};

ReactionUpdate react_node(double u, double w, double v0, const KineticsFamily& kinetics,
                          double dt, ClampCounter* counter = nullptr);

/// Applies react_node at every node. Conserves u + v node-wise.
SHSState reaction_substep(const SHSState& state, double dt, ClampCounter* counter = nullptr);

/// Read-only view handed to step observers after every completed step
/// (and once for the initial state).
struct StepView {
  double t;
  std::span<const double> u;
  std::span<const double> aux;  // w for epsilon runs, chi for limit runs
  std::span<const double> v0;
  double epsilon;  // NaN for limit and heat-only runs
};

struct RunOptions {
  std::function<void(const StepView&)> observer;
};

/// Thrown when a run produces a non-finite value. Carries everything
/// recorded up to the last good state.
class RunFailure : public NumericalFailure {
 public:
  RunFailure(const NumericalFailure& cause, Trajectory partial)
      : NumericalFailure(cause), partial_(std::move(partial)) {}
  const Trajectory& partial() const noexcept { return partial_; }

 private:
  Trajectory partial_;
};

/// Lie splitting: reaction_substep then diffusion_substep each step.
/// Requires 0 <= v0 and finite data; throws RunFailure on blow-up.
Trajectory run_shs(const ScalarField& u0, const ScalarField& v0, const KineticsFamily& kinetics,
                   const TimeGrid& time, const RunOptions& options = {});

/// Heat equation alone on the same grid and schedule (the supercaloric twin).
Trajectory run_heat(const ScalarField& u0, const TimeGrid& time, const RunOptions& options = {});

}  // namespace shs
