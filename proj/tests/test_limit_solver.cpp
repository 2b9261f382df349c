#include <doctest.h>

#include <cmath>
#include <vector>

#include "shs/diagnostics.hpp"
#include "shs/limit_solver.hpp"
#include "shs/profiles.hpp"

using namespace shs;

TEST_CASE("initial jump selects H(0) = 0") {
  const Domain1D d(1.0, 5);
  const auto one = ScalarField::constant(d, 1.0);
  auto s = apply_initial_jump(ScalarField::constant(d, 0.3), one);
  CHECK(s.u[2] == doctest::Approx(1.3));
  CHECK(s.chi[2] == 1.0);
  s = apply_initial_jump(ScalarField::constant(d, -0.4), one);
  CHECK(s.u[2] == -0.4);
  CHECK(s.chi[2] == 0.0);
  s = apply_initial_jump(ScalarField::constant(d, 0.0), one);
  CHECK(s.u[2] == 0.0);
  CHECK(s.chi[2] == 0.0);
}

TEST_CASE("ignition sweep preserves enthalpy node-wise") {
  const Domain1D d(1.0, 3);
  LimitState s{0.0, ScalarField(d, {0.1, -0.2, 0.1}), ScalarField(d, {0.0, 0.0, 1.0}),
               ScalarField::constant(d, 1.0)};
  std::size_t ignited = 0;
  const auto out = ignition_sweep(s, &ignited);
  CHECK(ignited == 1);
  CHECK(out.u[0] == doctest::Approx(1.1));
  CHECK(out.chi[0] == 1.0);
  CHECK(out.u[1] == -0.2);
  CHECK(out.chi[1] == 0.0);
  CHECK(out.u[2] == 0.1);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(out.u[i] - out.chi[i] == doctest::Approx(s.u[i] - s.chi[i]).epsilon(1e-15));
  }
}

TEST_CASE("constant states are fixed") {
  const Domain1D d(2.0, 21);
  const TimeGrid time(0.01, 0.5, 5);
  const auto cold = run_limit(ScalarField::constant(d, -0.4), ScalarField::constant(d, 0.7), time);
  for (std::size_t k = 0; k < cold.snapshots(); ++k) {
    for (std::size_t i = 0; i < d.nodes(); ++i) {
      CHECK(cold.u[k][i] == doctest::Approx(-0.4).epsilon(1e-14));
      CHECK(cold.aux[k][i] == 0.0);
    }
  }
  const auto hot = run_limit(ScalarField::constant(d, 0.2), ScalarField::constant(d, 0.5), time);
  for (std::size_t k = 0; k < hot.snapshots(); ++k) {
    for (std::size_t i = 0; i < d.nodes(); ++i) {
      CHECK(hot.u[k][i] == doctest::Approx(0.7).epsilon(1e-14));
      CHECK(hot.aux[k][i] == 1.0);
    }
  }
}

TEST_CASE("half-burned data conserves enthalpy and never un-burns") {
  const Domain1D d(4.0, 201);
  const TimeGrid time(1e-3, 0.04, 1);
  const auto run = run_limit(sample(StepProfile{0.5, -0.5, 0.5}, d), ScalarField::constant(d, 1.0), time);
  const auto cons = check_conservation(run, Level::limit);
  CHECK(cons.passed);
  CHECK(check_hysteresis(run).lhs == 0.0);
  CHECK(run.stats.ignitions > 0);
  double last = -1.0;
  for (const auto& row : run.series) {
    REQUIRE(std::isfinite(row.front));
    CHECK(row.front >= last);
    last = row.front;
  }
}

TEST_CASE("fractional initial burn fraction is honoured") {
  const Domain1D d(1.0, 11);
  LimitState s{0.0, ScalarField::constant(d, -0.3), ScalarField::constant(d, 0.5),
               ScalarField::constant(d, 1.0)};
  const auto run = run_limit(s, TimeGrid(0.01, 0.1));
  for (double c : run.aux.back()) CHECK(c == 0.5);
  CHECK(check_hysteresis(run).passed);
}
