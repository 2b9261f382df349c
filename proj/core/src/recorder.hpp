#pragma once

// Internal: snapshot/series bookkeeping shared by the three run drivers.

#include <algorithm>
#include <span>
#include <vector>

#include "shs/trajectory.hpp"

namespace shs::detail {

class Recorder {
 public:
  Recorder(Level level, const Domain1D& domain, std::span<const double> v0, double epsilon) {
    traj_.level = level;
    traj_.domain = domain;
    traj_.epsilon = epsilon;
    traj_.v0.assign(v0.begin(), v0.end());
  }

  void record(double t, std::span<const double> u, std::vector<double> aux, double front,
              double mass_aux) {
    const auto [lo, hi] = std::minmax_element(u.begin(), u.end());
    traj_.times.push_back(t);
    traj_.u.emplace_back(u.begin(), u.end());
    traj_.aux.push_back(std::move(aux));
    traj_.series.push_back(
        SeriesRow{t, front, integrate(traj_.domain, u), mass_aux, *lo, *hi});
  }

  void observe_extremes(std::span<const double> u) {
    const auto [lo, hi] = std::minmax_element(u.begin(), u.end());
    traj_.stats.umin = std::min(traj_.stats.umin, *lo);
    traj_.stats.umax = std::max(traj_.stats.umax, *hi);
  }

  double last_time() const { return traj_.times.empty() ? -1.0 : traj_.times.back(); }
  RunStats& stats() { return traj_.stats; }
  Trajectory take() { return std::move(traj_); }
  const Trajectory& view() const { return traj_; }

 private:
  Trajectory traj_;
};

}  // namespace shs::detail
