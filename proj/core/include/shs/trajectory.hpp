#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

#include "shs/grid.hpp"

namespace shs {

/// Which system produced a trajectory.
enum class Level { epsilon, limit };

std::string_view to_string(Level level) noexcept;

/// One row of the scalar time series. `mass_aux` is integrate(v) for
/// epsilon-level runs and integrate(v0 * chi) for limit runs.
struct SeriesRow {
  double t;
  double front;
  double mass_u;
  double mass_aux;
  double umin;
  double umax;
};

/// Counters gathered at every step, whether or not the step was recorded.
struct RunStats {
  std::size_t steps = 0;
  std::uint64_t clamp_events = 0;
  double umin = std::numeric_limits<double>::infinity();
  double umax = -std::numeric_limits<double>::infinity();
  /// Limit runs: nodes whose chi disagreed with the running history max of u.
  std::size_t hysteresis_violations = 0;
  /// Limit runs: number of node ignitions after t = 0.
  std::size_t ignitions = 0;
  /// Epsilon runs: steps on which some w decreased (must stay 0).
  std::size_t w_decreases = 0;
};

/// Recorded run. Snapshot k holds the state at times[k]; snapshot 0 is t = 0.
/// `aux` holds v (epsilon level) or chi (limit level).
struct Trajectory {
  Level level = Level::epsilon;
  Domain1D domain{1.0, 3};
  double epsilon = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> v0;
  std::vector<double> times;
  std::vector<std::vector<double>> u;
  std::vector<std::vector<double>> aux;
  std::vector<SeriesRow> series;
  RunStats stats;

  std::size_t snapshots() const noexcept { return times.size(); }
  double horizon() const noexcept { return times.empty() ? 0.0 : times.back(); }
  ScalarField u_at(std::size_t k) const { return ScalarField(domain, u[k]); }
  ScalarField aux_at(std::size_t k) const { return ScalarField(domain, aux[k]); }
};

/// Keeps only snapshots (and series rows) with t <= horizon.
Trajectory truncate(const Trajectory& traj, double horizon);

/// Weight of snapshot k in a right-endpoint time quadrature: t_k - t_{k-1},
/// and 0 for the t = 0 snapshot.
double snapshot_weight(const Trajectory& traj, std::size_t k) noexcept;

/// Discrete L^p((0,T) x Omega) distance between the temperature histories.
/// Both trajectories must share the domain and the snapshot times exactly.
double lp_space_time_distance(const Trajectory& a, const Trajectory& b, double p);

/// Same metric on raw snapshot arrays; used by the trajectory overload.
double lp_space_time_distance(const Domain1D& domain, std::span<const double> times,
                              const std::vector<std::vector<double>>& a,
                              const std::vector<std::vector<double>>& b, double p);

}  // namespace shs
