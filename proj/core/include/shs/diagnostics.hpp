#pragma once

#include <string>
#include <vector>

#include "shs/grid.hpp"
#include "shs/trajectory.hpp"

namespace shs {

/// Result of comparing a measured quantity against a bound.
/// Invariant: passed == (lhs <= rhs * (1 + tol)).
struct EstimateReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  double tol = 0.0;
  bool passed = false;
};

EstimateReport make_report(std::string name, double lhs, double rhs, double tol);

inline constexpr double kEstimateSlack = 0.05;
inline constexpr double kConservationTol = 1e-8;
inline constexpr double kSupercaloricTol = 1e-10;
inline constexpr double kLowerBoundTol = 1e-12;

/// Space-time L2 bound: int_0^T int u^2 <= T int (C + |u0|)^2.
/// Evaluated on the snapshots with t <= T; T must not exceed the horizon.
EstimateReport check_l2_bound(const Trajectory& traj, const ScalarField& u0, double C, double T,
                              double tol = kEstimateSlack);

/// Truncated energy bound: int G_M(u(T)) - int G_M(u0) + int_0^T int |grad min(u, M)|^2
/// <= C M L, with G_M(z) = z^2/2 below M and M z - M^2/2 above. Gradients are
/// forward differences on cell edges.
EstimateReport check_gradient_bound(const Trajectory& traj, const ScalarField& u0, double C,
                                    double M, double tol = kEstimateSlack);

/// Largest drift of int (u + v) (epsilon level) or int (u - v0 chi) (limit
/// level) along the recorded series; bound 1e-8 (1 + |initial|).
EstimateReport check_conservation(const Trajectory& traj, Level kind);

/// max (u_heat - u) over all recorded nodes and times; bound 1e-10.
EstimateReport check_supercaloric(const Trajectory& traj, const Trajectory& heat_twin);

/// min u(0) - min_t u over every step of the run; bound 1e-12.
EstimateReport check_lower_bound(const Trajectory& traj);

/// Limit runs: count of recorded nodes where chi decreased, left {0,1} (or
/// its initial value), or stayed below 1 after the recorded history of u went
/// positive, plus the violations the run counted at every step. Bound 0.
EstimateReport check_hysteresis(const Trajectory& traj);

/// G_M as used by the truncated energy bound.
double truncated_energy_density(double z, double M) noexcept;

/// Everything that applies to the trajectory's level, in a fixed order.
std::vector<EstimateReport> run_estimate_suite(const Trajectory& traj,
                                               const Trajectory& heat_twin,
                                               const ScalarField& u0, double C, double M,
                                               double tol = kEstimateSlack);

bool all_passed(const std::vector<EstimateReport>& reports) noexcept;

}  // namespace shs
