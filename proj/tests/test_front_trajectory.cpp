#include <doctest.h>

#include <cmath>
#include <vector>

#include "shs/errors.hpp"
#include "shs/front.hpp"
#include "shs/trajectory.hpp"

using namespace shs;

namespace {

Trajectory constant_trajectory(const Domain1D& d, const std::vector<double>& times, double value) {
  Trajectory t;
  t.domain = d;
  t.times = times;
  for (std::size_t k = 0; k < times.size(); ++k) {
    t.u.emplace_back(d.nodes(), value);
    t.aux.emplace_back(d.nodes(), 0.0);
    t.series.push_back({times[k], NAN, value * d.length(), 0.0, value, value});
  }
  return t;
}

}  // namespace

TEST_CASE("front position picks the rightmost descending half crossing") {
  const Domain1D d(1.0, 5);
  const std::vector<double> burned{1.0, 1.0, 0.75, 0.25, 0.0};
  CHECK(front_position(d, burned, true) == doctest::Approx(0.625));
  CHECK(front_position(d, burned, false) == doctest::Approx(0.625));
  const std::vector<double> none{0.0, 0.1, 0.2, 0.3, 0.4};
  CHECK(std::isnan(front_position(d, none, true)));
  const std::vector<double> two{1.0, 0.0, 1.0, 1.0, 0.0};
  CHECK(front_position(d, two, false) == doctest::Approx(0.875));
}

TEST_CASE("space-time distance on constant histories") {
  const Domain1D d(2.0, 11);
  const std::vector<double> times{0.0, 0.25, 0.5};
  const auto a = constant_trajectory(d, times, 0.0);
  const auto b = constant_trajectory(d, times, 1.0);
  CHECK(lp_space_time_distance(a, a, 1.0) == 0.0);
  CHECK(lp_space_time_distance(a, b, 1.0) == doctest::Approx(0.5 * 2.0));
  CHECK(lp_space_time_distance(a, b, 2.0) == doctest::Approx(std::sqrt(0.5 * 2.0)));
  CHECK_THROWS_AS(lp_space_time_distance(a, b, 0.5), DomainError);

  const auto other_grid = constant_trajectory(Domain1D(2.0, 21), times, 1.0);
  CHECK_THROWS_AS(lp_space_time_distance(a, other_grid, 1.0), ComparisonError);
  const auto other_times = constant_trajectory(d, {0.0, 0.2, 0.5}, 1.0);
  CHECK_THROWS_AS(lp_space_time_distance(a, other_times, 1.0), ComparisonError);
}

TEST_CASE("truncate and snapshot weights") {
  const Domain1D d(1.0, 3);
  const auto t = constant_trajectory(d, {0.0, 0.1, 0.3, 0.6}, 2.0);
  CHECK(snapshot_weight(t, 0) == 0.0);
  CHECK(snapshot_weight(t, 2) == doctest::Approx(0.2));
  const auto cut = truncate(t, 0.3);
  CHECK(cut.snapshots() == 3);
  CHECK(cut.series.size() == 3);
  CHECK(cut.horizon() == doctest::Approx(0.3));
  CHECK(to_string(Level::limit) == "limit_level");
}
