#include <doctest.h>

#include <cmath>
#include <vector>

#include "shs/errors.hpp"
#include "shs/kinetics.hpp"

using namespace shs;

namespace {

// Closed forms evaluated without the library.
long double ms_rate(long double z, long double eps) {
  return z <= -1.0L ? 0.0L : std::exp((1.0L - 1.0L / (z + 1.0L)) / eps);
}

long double threshold_rate(long double z, long double eps, long double kappa, long double theta) {
  return z <= theta - 1.0L ? 0.0L : std::exp((z / (kappa * z + 1.0L)) / eps);
}

}  // namespace

TEST_CASE("closed-form rate values") {
  const auto ms = KineticsFamily::matkowsky_sivashinsky(0.3);
  CHECK(eval_g(ms, 0.0) == 1.0);
  CHECK(eval_g(ms, -1.5) == 0.0);
  CHECK(eval_g(ms, -1.0) == 0.0);
  CHECK(eval_g(KineticsFamily::matkowsky_sivashinsky(0.5), 1.0) ==
        doctest::Approx(2.718281828459045).epsilon(1e-14));

  const auto th = KineticsFamily::threshold(0.1, 0.5, 0.5);
  CHECK(eval_g(th, -0.6) == 0.0);
  CHECK(eval_g(th, -0.5) == 0.0);
  CHECK(eval_g(th, 0.5) == doctest::Approx(static_cast<double>(threshold_rate(0.5L, 0.1L, 0.5L, 0.5L))));
  CHECK(eval_g(th, -0.4) == doctest::Approx(static_cast<double>(threshold_rate(-0.4L, 0.1L, 0.5L, 0.5L))));

  for (double z : {-0.99, -0.5, 0.1, 0.7, 3.0}) {
    CHECK(eval_g(ms, z) == doctest::Approx(static_cast<double>(ms_rate(z, 0.3L))).epsilon(1e-13));
  }
}

TEST_CASE("exponent clamp keeps rates finite and is counted") {
  const auto ms = KineticsFamily::matkowsky_sivashinsky(1e-4);
  ClampCounter counter;
  const double g = eval_g(ms, 1.0, &counter);
  CHECK(std::isfinite(g));
  CHECK(g == doctest::Approx(std::exp(700.0)));
  CHECK(counter.events == 1);
  eval_g(KineticsFamily::matkowsky_sivashinsky(1e-3), 1.0, &counter);
  CHECK(counter.events == 1);
  CHECK(ms.growth_constant() == doctest::Approx(std::exp(700.0)));
}

TEST_CASE("tabulated rates interpolate and extend constantly") {
  const auto tab = KineticsFamily::tabulated(0.1, {{-1.0, 0.0, 1.0}, {0.0, 2.0, 4.0}});
  CHECK(eval_g(tab, -0.5) == doctest::Approx(1.0));
  CHECK(eval_g(tab, 0.25) == doctest::Approx(2.5));
  CHECK(eval_g(tab, 7.0) == doctest::Approx(4.0));
  CHECK(eval_g(tab, -7.0) == doctest::Approx(0.0));
  CHECK_FALSE(tab.cutoff().has_value());
  CHECK_THROWS_AS(KineticsFamily::tabulated(0.1, {{0.0, 1.0}, {1.0, -1.0}}), DomainError);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(KineticsFamily::matkowsky_sivashinsky(0.0), DomainError);
  CHECK_THROWS_AS(KineticsFamily::threshold(0.1, 0.0, 0.5), DomainError);
  CHECK_THROWS_AS(KineticsFamily::threshold(0.1, 1.5, 0.5), DomainError);
  CHECK_THROWS_AS(KineticsFamily::threshold(0.1, 0.5, 1.0), DomainError);
  CHECK(KineticsFamily::threshold(0.1, 1.0, 0.8).cutoff().value() == doctest::Approx(-0.2));
  CHECK(KineticsFamily::matkowsky_sivashinsky(0.1).with_epsilon(0.02).epsilon() == 0.02);
}

TEST_CASE("interval sampling") {
  const auto pts = sample_interval({-0.9, -0.1});
  CHECK(pts.size() == 1002);
  CHECK(pts.front() == -0.9);
  CHECK(pts.back() == -0.1);
}

TEST_CASE("cold-side assumption") {
  const auto ms = KineticsFamily::matkowsky_sivashinsky(0.1);
  const std::vector<double> fine{0.01};
  const auto pass = verify_assumption_cold(ms, fine, {-0.9, -0.1}, 1e-2);
  const double expected = static_cast<double>(ms_rate(-0.1L, 0.01L) / 0.01L);
  CHECK(expected == doctest::Approx(1.49e-3).epsilon(0.01));
  CHECK(pass.values.front() == doctest::Approx(expected).epsilon(1e-12));
  CHECK(pass.passed);

  const std::vector<double> coarse{0.05};
  const auto fail = verify_assumption_cold(ms, coarse, {-0.9, -0.1}, 1e-2);
  CHECK(fail.values.front() == doctest::Approx(2.17).epsilon(0.01));
  CHECK_FALSE(fail.passed);

  const auto th = KineticsFamily::threshold(0.1, 0.5, 0.5);
  const std::vector<double> seq(kDefaultEpsSequence.begin(), kDefaultEpsSequence.end());
  const auto zero = verify_assumption_cold(th, seq, {-0.9, -0.6}, 1e-2);
  for (double s : zero.values) CHECK(s == 0.0);
  CHECK(zero.passed);

  CHECK_THROWS_AS(verify_assumption_cold(ms, seq, {-0.5, 0.1}, 1e-2), DomainError);
  const std::vector<double> increasing{0.01, 0.05};
  CHECK_THROWS_AS(verify_assumption_cold(ms, increasing, {-0.9, -0.1}, 1e-2), DomainError);
}

TEST_CASE("hot-side assumption") {
  const auto ms = KineticsFamily::matkowsky_sivashinsky(0.1);
  const std::vector<double> e05{0.05};
  CHECK(static_cast<double>(ms_rate(0.1L, 0.05L)) == doctest::Approx(6.17).epsilon(0.01));
  const auto r = verify_assumption_hot(ms, e05, {0.1, 1.0}, 1.0, 1e-2);
  CHECK(r.values.front() == 0.0);
  CHECK(r.passed);

  const auto th = KineticsFamily::threshold(0.1, 0.5, 0.5);
  const std::vector<double> e02{0.02};
  CHECK(verify_assumption_hot(th, e02, {0.6, 1.0}, 1.0, 1e-2).values.front() == 0.0);

  const std::vector<double> seq(kDefaultEpsSequence.begin(), kDefaultEpsSequence.end());
  for (double s : verify_assumption_hot(ms, seq, {0.1, 1.0}, 0.0, 1e-2).values) CHECK(s == 0.0);
  CHECK_THROWS_AS(verify_assumption_hot(ms, seq, {-0.1, 1.0}, 1.0, 1e-2), DomainError);
  CHECK_THROWS_AS(verify_assumption_hot(ms, seq, {0.1, 1.0}, -1.0, 1e-2), DomainError);
}

TEST_CASE("rates blow up relative to eps on the hot side along the default sequence") {
  const std::vector<double> seq(kDefaultEpsSequence.begin(), kDefaultEpsSequence.end());
  for (const auto& family : {KineticsFamily::matkowsky_sivashinsky(0.1),
                             KineticsFamily::threshold(0.1, 0.5, 0.8)}) {
    for (double z : {0.05, 0.3, 1.0}) {
      double previous = 0.0;
      for (std::size_t k = seq.size() - 3; k < seq.size(); ++k) {
        const double ratio = eval_g(family.with_epsilon(seq[k]), z) / seq[k];
        CHECK(ratio > previous);
        previous = ratio;
      }
    }
  }
}

TEST_CASE("growth structure holds for the built-in families") {
  const std::vector<double> seq(kDefaultEpsSequence.begin(), kDefaultEpsSequence.end());
  for (const auto& family : {KineticsFamily::matkowsky_sivashinsky(0.1),
                             KineticsFamily::threshold(0.1, 0.5, 0.8)}) {
    const auto r = verify_assumption_growth(family, seq, {-3.0, 3.0});
    CHECK(r.passed);
    CHECK(r.values.size() == seq.size());
  }
}
