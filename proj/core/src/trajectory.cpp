#include "shs/trajectory.hpp"

#include <cmath>

#include "shs/errors.hpp"

namespace shs {

std::string_view to_string(Level level) noexcept {
  return level == Level::epsilon ? "epsilon_level" : "limit_level";
}

Trajectory truncate(const Trajectory& traj, double horizon) {
  Trajectory out;
  out.level = traj.level;
  out.domain = traj.domain;
  out.epsilon = traj.epsilon;
  out.v0 = traj.v0;
  out.stats = traj.stats;
  for (std::size_t k = 0; k < traj.snapshots(); ++k) {
    if (traj.times[k] > horizon) break;
    out.times.push_back(traj.times[k]);
    out.u.push_back(traj.u[k]);
    out.aux.push_back(traj.aux[k]);
  }
  for (const auto& row : traj.series) {
    if (row.t > horizon) break;
    out.series.push_back(row);
  }
  return out;
}

double snapshot_weight(const Trajectory& traj, std::size_t k) noexcept {
  return k == 0 ? 0.0 : traj.times[k] - traj.times[k - 1];
}

double lp_space_time_distance(const Domain1D& domain, std::span<const double> times,
                              const std::vector<std::vector<double>>& a,
                              const std::vector<std::vector<double>>& b, double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("p must be a finite real >= 1");
  if (a.size() != times.size() || b.size() != times.size()) {
    throw ComparisonError("snapshot count mismatch");
  }
  double total = 0.0;
  for (std::size_t k = 1; k < times.size(); ++k) {
    const auto& ak = a[k];
    const auto& bk = b[k];
    if (ak.size() != domain.nodes() || bk.size() != domain.nodes()) {
      throw ComparisonError("snapshot size does not match the grid");
    }
    double space = 0.0;
    for (std::size_t i = 0; i < ak.size(); ++i) {
      const double gap = std::abs(ak[i] - bk[i]);
      space += domain.weight(i) * (p == 1.0 ? gap : std::pow(gap, p));
    }
    total += (times[k] - times[k - 1]) * space;
  }
  return p == 1.0 ? total : std::pow(total, 1.0 / p);
}

double lp_space_time_distance(const Trajectory& a, const Trajectory& b, double p) {
  if (!(a.domain == b.domain)) {
    throw ComparisonError("trajectories live on different grids; re-run on a shared grid");
  }
  if (a.times != b.times) {
    throw ComparisonError("trajectories have different snapshot times");
  }
  return lp_space_time_distance(a.domain, a.times, a.u, b.u, p);
}

}  // namespace shs
