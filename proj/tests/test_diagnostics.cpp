#include <doctest.h>

#include <cmath>
#include <numbers>

#include "shs/diagnostics.hpp"
#include "shs/errors.hpp"
#include "shs/heat.hpp"
#include "shs/limit_solver.hpp"
#include "shs/profiles.hpp"
#include "shs/shs_solver.hpp"

using namespace shs;

TEST_CASE("report invariant") {
  const auto r = make_report("x", 1.04, 1.0, 0.05);
  CHECK(r.passed);
  CHECK(r.slack == doctest::Approx(-0.04));
  CHECK_FALSE(make_report("x", 1.06, 1.0, 0.05).passed);
  CHECK(truncated_energy_density(1.0, 2.0) == 0.5);
  CHECK(truncated_energy_density(3.0, 2.0) == 4.0);
}

TEST_CASE("L2 bound on trivial and dormant runs") {
  const Domain1D d(1.0, 21);
  const TimeGrid time(0.01, 1.0);
  const auto kin = KineticsFamily::matkowsky_sivashinsky(0.02);

  const auto zero_u0 = ScalarField::constant(d, 0.0);
  const auto zero = run_shs(zero_u0, ScalarField::constant(d, 0.0), kin, time);
  const auto rz = check_l2_bound(zero, zero_u0, 1.0, 1.0);
  CHECK(rz.lhs == 0.0);
  CHECK(rz.rhs == doctest::Approx(1.0));

  const auto u0 = ScalarField::constant(d, -0.5);
  const auto dormant = run_shs(u0, ScalarField::constant(d, 1.0), kin, time);
  const auto r = check_l2_bound(dormant, u0, 1.0, 1.0);
  CHECK(r.lhs == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(r.rhs == doctest::Approx(2.25));
  CHECK(r.passed);
  CHECK_THROWS_AS(check_l2_bound(dormant, u0, 1.0, 2.0), DomainError);
  CHECK(check_gradient_bound(dormant, u0, 1.0, 2.0).lhs == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("gradient bound on a decaying cosine mode matches the closed form") {
  const Domain1D d(1.0, 33);
  const double dt = 1e-3;
  const std::size_t N = 100;
  const TimeGrid time(dt, dt * N);
  const auto u0 = ScalarField::sample(d, [](double x) { return std::cos(std::numbers::pi * x); });
  const auto run = run_shs(u0, ScalarField::constant(d, 0.0), KineticsFamily::matkowsky_sivashinsky(0.1), time);

  long double S = 0.0L, D = 0.0L;
  for (std::size_t i = 0; i < d.nodes(); ++i) S += static_cast<long double>(d.weight(i)) * u0[i] * u0[i];
  for (std::size_t i = 0; i + 1 < d.nodes(); ++i) {
    const long double diff = static_cast<long double>(u0[i + 1]) - u0[i];
    D += diff * diff / d.h();
  }
  const long double h = d.h();
  const long double lambda = 2.0L / (h * h) * (1.0L - std::cos(std::numbers::pi_v<long double> * h));
  const long double r2 = 1.0L / ((1.0L + dt * lambda) * (1.0L + dt * lambda));
  long double geometric = 0.0L, power = 1.0L;
  for (std::size_t k = 1; k <= N; ++k) {
    power *= r2;
    geometric += power;
  }
  const long double expected = (power - 1.0L) * S / 2.0L + dt * D * geometric;

  const auto rep = check_gradient_bound(run, u0, 0.0, 2.0);
  CHECK(rep.lhs == doctest::Approx(static_cast<double>(expected)).epsilon(1e-9));
  CHECK(rep.lhs <= 0.0);
  CHECK(rep.passed);
}

TEST_CASE("suite on heat-only and ignition runs") {
  const Domain1D d(4.0, 101);
  const TimeGrid time(0.5 * d.h() * d.h(), 0.3, 10);
  const auto u0 = sample(StepProfile{0.5, -0.25, 0.25}, d);
  const auto kin = KineticsFamily::matkowsky_sivashinsky(0.02);
  const auto twin = run_heat(u0, time);

  const auto heat_only = run_shs(u0, ScalarField::constant(d, 0.0), kin, time);
  const auto hs = run_estimate_suite(heat_only, twin, u0, 0.0, 2.0);
  CHECK(all_passed(hs));
  CHECK(check_conservation(heat_only, Level::epsilon).lhs <= 1e-12);
  CHECK(check_supercaloric(heat_only, twin).lhs <= 0.0);

  const auto ignition = run_shs(u0, ScalarField::constant(d, 1.0), kin, time);
  const auto is = run_estimate_suite(ignition, twin, u0, 1.0, 2.0);
  REQUIRE(is.size() == 5);
  for (const auto& r : is) CHECK_MESSAGE(r.passed, r.name);
  CHECK_THROWS_AS(check_hysteresis(ignition), ComparisonError);

  const auto limit = run_limit(u0, ScalarField::constant(d, 1.0), time);
  const auto start = limit.u_at(0);
  const auto ls = run_estimate_suite(limit, run_heat(start, time), start, 1.0, 2.0);
  CHECK(ls.back().name == "hysteresis");
  CHECK(all_passed(ls));
  CHECK_THROWS_AS(check_supercaloric(ignition, run_heat(u0, TimeGrid(0.01, 0.3))), ComparisonError);
}
