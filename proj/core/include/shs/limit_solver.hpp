#pragma once

#include <cstddef>

#include "shs/grid.hpp"
#include "shs/shs_solver.hpp"
#include "shs/trajectory.hpp"

namespace shs {

/// State of the limit problem  d/dt (u - v0 chi) = Lap u  with irreversible chi.
///
/// The scheme evolves the enthalpy e = u - v0 chi: a heat step moves u with
/// chi frozen, then every unburned node with u > 0 ignites fully (chi -> 1,
/// u -> u + v0 (1 - chi)). chi therefore only takes the values 0 and 1 after
/// t = 0; fractional values can enter only through the initial state.
struct LimitState {
  double t;
  ScalarField u;
  ScalarField chi;
  ScalarField v0;
};

/// u(0) = u0 + v0 H(u0), selecting H(0) = 0.
LimitState apply_initial_jump(const ScalarField& u0, const ScalarField& v0);

/// Ignites every node with chi < 1 and u > 0 (strict). Preserves e node-wise.
/// `ignited`, when given, receives the number of nodes ignited.
LimitState ignition_sweep(const LimitState& state, std::size_t* ignited = nullptr);

/// diffusion_substep on u, then ignition_sweep.
LimitState step_limit(const LimitState& state, double dt);

/// apply_initial_jump, then step_limit over the schedule.
Trajectory run_limit(const ScalarField& u0, const ScalarField& v0, const TimeGrid& time,
                     const RunOptions& options = {});

/// Same, starting from an explicit state (admits fractional initial chi).
Trajectory run_limit(const LimitState& initial, const TimeGrid& time,
                     const RunOptions& options = {});

}  // namespace shs
