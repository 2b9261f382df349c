#include "shs/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "shs/errors.hpp"

namespace shs {

namespace {

double space_integral_of(const Domain1D& d, std::span<const double> u, auto&& fn) {
  std::vector<double> f(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) f[i] = fn(u[i]);
  return integrate(d, f);
}

double gradient_energy(const Domain1D& d, std::span<const double> u, double M) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    const double diff = std::min(u[i + 1], M) - std::min(u[i], M);
    sum += diff * diff;
  }
  return sum / d.h();
}

void require_same_grid(const Trajectory& traj, const ScalarField& u0) {
  if (!(traj.domain == u0.domain())) throw ComparisonError("u0 lives on a different grid");
  if (traj.snapshots() == 0) throw ComparisonError("trajectory has no snapshots");
}

}  // namespace

EstimateReport make_report(std::string name, double lhs, double rhs, double tol) {
  return EstimateReport{std::move(name), lhs, rhs, rhs - lhs, tol, lhs <= rhs * (1.0 + tol)};
}

double truncated_energy_density(double z, double M) noexcept {
  return z < M ? 0.5 * z * z : M * z - 0.5 * M * M;
}

EstimateReport check_l2_bound(const Trajectory& traj, const ScalarField& u0, double C, double T,
                              double tol) {
  require_same_grid(traj, u0);
  if (!(T > 0.0) || T > traj.horizon() * (1.0 + 1e-12)) {
    throw DomainError("T must lie in (0, horizon]");
  }
  const Domain1D& d = traj.domain;
  double lhs = 0.0;
  for (std::size_t k = 1; k < traj.snapshots() && traj.times[k] <= T * (1.0 + 1e-12); ++k) {
    lhs += snapshot_weight(traj, k) * space_integral_of(d, traj.u[k], [](double z) { return z * z; });
  }
  const double rhs =
      T * space_integral_of(d, u0.values(), [C](double z) { return (C + std::abs(z)) * (C + std::abs(z)); });
  return make_report("l2_bound", lhs, rhs, tol);
}

EstimateReport check_gradient_bound(const Trajectory& traj, const ScalarField& u0, double C,
                                    double M, double tol) {
  require_same_grid(traj, u0);
  if (!(M >= 1.0)) throw DomainError("M must be >= 1");
  const Domain1D& d = traj.domain;
  auto G = [M](double z) { return truncated_energy_density(z, M); };
  double lhs = space_integral_of(d, traj.u.back(), G) - space_integral_of(d, u0.values(), G);
  for (std::size_t k = 1; k < traj.snapshots(); ++k) {
    lhs += snapshot_weight(traj, k) * gradient_energy(d, traj.u[k], M);
  }
  return make_report("gradient_bound", lhs, C * M * d.length(), tol);
}

EstimateReport check_conservation(const Trajectory& traj, Level kind) {
  if (traj.series.empty()) throw ComparisonError("trajectory has no series");
  const double sign = kind == Level::epsilon ? 1.0 : -1.0;
  const double initial = traj.series.front().mass_u + sign * traj.series.front().mass_aux;
  double drift = 0.0;
  for (const auto& row : traj.series) {
    drift = std::max(drift, std::abs(row.mass_u + sign * row.mass_aux - initial));
  }
  const std::string name =
      kind == Level::epsilon ? "conservation_u_plus_v" : "conservation_enthalpy";
  return make_report(name, drift, kConservationTol * (1.0 + std::abs(initial)), 0.0);
}

EstimateReport check_supercaloric(const Trajectory& traj, const Trajectory& heat_twin) {
  if (!(traj.domain == heat_twin.domain) || traj.times != heat_twin.times) {
    throw ComparisonError("heat twin must share grid and snapshot times");
  }
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < traj.snapshots(); ++k) {
    for (std::size_t i = 0; i < traj.u[k].size(); ++i) {
      worst = std::max(worst, heat_twin.u[k][i] - traj.u[k][i]);
    }
  }
  return make_report("supercaloric", worst, kSupercaloricTol, 0.0);
}

EstimateReport check_lower_bound(const Trajectory& traj) {
  if (traj.snapshots() == 0) throw ComparisonError("trajectory has no snapshots");
  const double initial_min = *std::min_element(traj.u[0].begin(), traj.u[0].end());
  double run_min = traj.stats.umin;
  for (const auto& u : traj.u) run_min = std::min(run_min, *std::min_element(u.begin(), u.end()));
  return make_report("lower_bound", initial_min - run_min, kLowerBoundTol, 0.0);
}

EstimateReport check_hysteresis(const Trajectory& traj) {
  if (traj.level != Level::limit) throw ComparisonError("hysteresis check needs a limit run");
  std::size_t violations = traj.stats.hysteresis_violations;
  if (traj.snapshots() > 0) {
    const auto& chi0 = traj.aux[0];
    std::vector<double> history = traj.u[0];
    for (std::size_t k = 0; k < traj.snapshots(); ++k) {
      const auto& chi = traj.aux[k];
      const auto& u = traj.u[k];
      for (std::size_t i = 0; i < chi.size(); ++i) {
        history[i] = std::max(history[i], u[i]);
        if (k > 0 && chi[i] < traj.aux[k - 1][i]) ++violations;
        if (k > 0 && chi[i] != 0.0 && chi[i] != 1.0 && chi[i] != chi0[i]) ++violations;
        // Excursions above 0 between snapshots are invisible here; the online
        // count in stats covers them.
        if (history[i] > 0.0 && chi[i] != 1.0) ++violations;
      }
    }
  }
  return make_report("hysteresis", static_cast<double>(violations), 0.0, 0.0);
}

std::vector<EstimateReport> run_estimate_suite(const Trajectory& traj,
                                               const Trajectory& heat_twin,
                                               const ScalarField& u0, double C, double M,
                                               double tol) {
  std::vector<EstimateReport> out;
  out.push_back(check_conservation(traj, traj.level));
  out.push_back(check_supercaloric(traj, heat_twin));
  out.push_back(check_lower_bound(traj));
  if (traj.level == Level::epsilon) {
    out.push_back(check_l2_bound(traj, u0, C, traj.horizon(), tol));
    out.push_back(check_gradient_bound(traj, u0, C, M, tol));
  } else {
    out.push_back(check_hysteresis(traj));
  }
  return out;
}

bool all_passed(const std::vector<EstimateReport>& reports) noexcept {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
}

}  // namespace shs
