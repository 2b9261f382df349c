#include <doctest.h>

#include <cmath>
#include <vector>

#include "shs/errors.hpp"
#include "shs/profiles.hpp"
#include "shs/shs_solver.hpp"

using namespace shs;

namespace {

// Exponential reaction update in long double from the closed-form rate.
long double oracle_du(long double u, long double w, long double v0, long double eps, long double dt) {
  const long double g = u <= -1.0L ? 0.0L : std::exp((1.0L - 1.0L / (u + 1.0L)) / eps);
  const long double x = dt * g / eps;
  // 1 - e^{-x} by its Taylor series when x is small, directly otherwise.
  long double released = 0.0L;
  if (x < 0.1L) {
    long double term = x;
    for (int n = 1; n < 40; ++n) {
      released += term;
      term *= -x / (n + 1);
    }
  } else {
    released = 1.0L - std::exp(-x);
  }
  return v0 * std::exp(-w / eps) * released;
}

}  // namespace

TEST_CASE("reaction update closed form") {
  // g(u) = 1 with MS kinetics at u = 0.
  const auto fam = KineticsFamily::matkowsky_sivashinsky(1.0);
  const auto r = react_node(0.0, 0.0, 1.0, fam, 1.0);
  CHECK(r.du == doctest::Approx(0.6321205588285577).epsilon(1e-15));
  CHECK(std::exp(-r.w_new / 1.0) == doctest::Approx(0.36787944117144233).epsilon(1e-15));

  for (double eps : {0.2, 0.05, 0.01}) {
    const auto f = KineticsFamily::matkowsky_sivashinsky(eps);
    for (double u : {-0.3, 0.0, 0.2}) {
      for (double w : {0.0, 0.01, 0.3}) {
        const auto got = react_node(u, w, 0.8, f, 1e-3);
        const double want = static_cast<double>(oracle_du(u, w, 0.8L, eps, 1e-3L));
        CHECK(got.du == doctest::Approx(want).epsilon(1e-12).scale(1e-300));
        CHECK(got.w_new >= w);
      }
    }
  }
}

TEST_CASE("reaction substep edge cases") {
  const Domain1D d(1.0, 5);
  const auto fam = KineticsFamily::threshold(0.1, 1.0, 0.5);
  SHSState cold{0.0, ScalarField::constant(d, -0.7), ScalarField::constant(d, 0.0),
                ScalarField::constant(d, 1.0), fam};
  const auto same = reaction_substep(cold, 0.1);
  for (std::size_t i = 0; i < d.nodes(); ++i) CHECK(same.u[i] == -0.7);

  SHSState empty{0.0, ScalarField::constant(d, 0.5), ScalarField::constant(d, 0.0),
                 ScalarField::constant(d, 0.0), fam};
  const auto next = reaction_substep(empty, 0.1);
  for (std::size_t i = 0; i < d.nodes(); ++i) {
    CHECK(next.u[i] == 0.5);
    CHECK(next.w[i] > 0.0);
  }

  SHSState hot{0.0, ScalarField::constant(d, 0.3), ScalarField::constant(d, 0.0),
               ScalarField::constant(d, 0.9), fam};
  const auto burnt = reaction_substep(hot, 0.01);
  const auto v = burnt.v();
  for (std::size_t i = 0; i < d.nodes(); ++i) CHECK(burnt.u[i] + v[i] == doctest::Approx(1.2).epsilon(1e-15));
}

TEST_CASE("no reactant gives the heat run bit for bit") {
  const Domain1D d(2.0, 41);
  const TimeGrid time(1e-3, 0.1, 7);
  const auto u0 = sample(StepProfile{0.5, -0.25, 0.25}, d);
  const auto run = run_shs(u0, ScalarField::constant(d, 0.0), KineticsFamily::matkowsky_sivashinsky(0.02), time);
  const auto heat = run_heat(u0, time);
  CHECK(run.times == heat.times);
  CHECK(run.u == heat.u);
}

TEST_CASE("dormant data stays put") {
  const Domain1D d(1.0, 21);
  const TimeGrid time(1.25e-3, 1.0, 50);
  const auto run = run_shs(ScalarField::constant(d, -0.5), ScalarField::constant(d, 1.0),
                           KineticsFamily::matkowsky_sivashinsky(0.02), time);
  double dev = 0.0, vmin = 1.0;
  for (std::size_t k = 0; k < run.snapshots(); ++k) {
    for (std::size_t i = 0; i < d.nodes(); ++i) {
      dev = std::max(dev, std::abs(run.u[k][i] + 0.5));
      vmin = std::min(vmin, run.aux[k][i]);
    }
  }
  CHECK(dev < 1e-6);
  CHECK(vmin > 1.0 - 1e-6);
  for (const auto& row : run.series) CHECK(std::isnan(row.front));
}

TEST_CASE("ignition run: monotone front and conserved u + v") {
  const Domain1D d(4.0, 201);
  const TimeGrid time(0.5 * d.h() * d.h(), 0.5, 40);
  const auto run = run_shs(sample(StepProfile{0.5, -0.25, 0.25}, d), ScalarField::constant(d, 1.0),
                           KineticsFamily::matkowsky_sivashinsky(0.02), time);
  const double m0 = run.series.front().mass_u + run.series.front().mass_aux;
  double last = -1.0;
  for (const auto& row : run.series) {
    CHECK(std::abs(row.mass_u + row.mass_aux - m0) <= 1e-10 * std::abs(m0));
    if (std::isfinite(row.front)) {
      CHECK(row.front >= last - 1e-12);
      last = row.front;
    }
  }
  CHECK(last > 1.0);
  CHECK(run.stats.w_decreases == 0);
  CHECK(run.stats.steps == time.steps());
}

TEST_CASE("observer sees every step") {
  const Domain1D d(1.0, 11);
  const TimeGrid time(0.01, 0.1, 5);
  std::size_t calls = 0;
  RunOptions opts;
  opts.observer = [&](const StepView& v) {
    ++calls;
    CHECK(v.u.size() == d.nodes());
    CHECK(v.epsilon == 0.1);
  };
  const auto run = run_shs(ScalarField::constant(d, 0.0), ScalarField::constant(d, 1.0),
                           KineticsFamily::matkowsky_sivashinsky(0.1), time, opts);
  CHECK(calls == time.steps() + 1);
  CHECK(run.snapshots() == 3);
}

TEST_CASE("negative reactant is rejected") {
  const Domain1D d(1.0, 5);
  CHECK_THROWS_AS(run_shs(ScalarField::constant(d, 0.0), ScalarField::constant(d, -0.1),
                          KineticsFamily::matkowsky_sivashinsky(0.1), TimeGrid(0.1, 1.0)),
                  DomainError);
}
