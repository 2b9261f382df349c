#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "shs/heat.hpp"

using namespace shs;

namespace {

// Dense (I - dt Lap_h) with mirror ghosts, solved by Gaussian elimination in
// long double. Independent of the Thomas path.
std::vector<long double> dense_heat_solve(const Domain1D& d, double dt, const std::vector<double>& rhs) {
  const std::size_t n = d.nodes();
  const long double r = static_cast<long double>(dt) / (static_cast<long double>(d.h()) * d.h());
  std::vector<std::vector<long double>> a(n, std::vector<long double>(n + 1, 0.0L));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = 1.0L + 2.0L * r;
    if (i == 0) {
      a[i][1] = -2.0L * r;
    } else if (i + 1 == n) {
      a[i][n - 2] = -2.0L * r;
    } else {
      a[i][i - 1] = -r;
      a[i][i + 1] = -r;
    }
    a[i][n] = rhs[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    for (std::size_t i = c + 1; i < n; ++i) {
      if (std::fabs(a[i][c]) > std::fabs(a[pivot][c])) pivot = i;
    }
    std::swap(a[c], a[pivot]);
    for (std::size_t i = c + 1; i < n; ++i) {
      const long double f = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<long double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    long double s = a[i][n];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

}  // namespace

TEST_CASE("constants are fixed points") {
  const Domain1D d(3.0, 31);
  const auto u = diffusion_substep(ScalarField::constant(d, -0.7), 0.01);
  for (double x : u.values()) CHECK(x == doctest::Approx(-0.7).epsilon(1e-15));
}

TEST_CASE("Thomas solve matches the dense solve at n = 17") {
  const Domain1D d(1.0, 17);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> rhs(d.nodes());
  for (auto& x : rhs) x = dist(rng);
  const auto dense = dense_heat_solve(d, 0.003, rhs);
  const auto fast = diffusion_substep(ScalarField(d, rhs), 0.003);
  for (std::size_t i = 0; i < d.nodes(); ++i) {
    CHECK(fast[i] == doctest::Approx(static_cast<double>(dense[i])).epsilon(1e-13));
  }
}

TEST_CASE("cosine mode decays by 1/(1 + dt lambda_h)") {
  const Domain1D d(1.0, 17);
  const double dt = 0.002;
  const auto mode = ScalarField::sample(d, [](double x) { return std::cos(std::numbers::pi * x); });
  const long double lambda =
      2.0L / (static_cast<long double>(d.h()) * d.h()) * (1.0L - std::cos(std::numbers::pi_v<long double> * d.h()));
  CHECK(neumann_eigenvalue(d, 1) == doctest::Approx(static_cast<double>(lambda)).epsilon(1e-14));

  const std::vector<double> rhs(mode.values().begin(), mode.values().end());
  const auto dense = dense_heat_solve(d, dt, rhs);
  const long double factor = 1.0L / (1.0L + dt * lambda);
  for (std::size_t i = 0; i < d.nodes(); ++i) {
    CHECK(static_cast<double>(dense[i]) == doctest::Approx(static_cast<double>(factor * rhs[i])).epsilon(1e-14));
  }

  ScalarField u = mode;
  const NeumannHeatStep step(d, dt);
  std::vector<double> work(u.values().begin(), u.values().end());
  for (int n = 0; n < 50; ++n) step.apply(work);
  const double amplitude = static_cast<double>(std::pow(factor, 50));
  for (std::size_t i = 0; i < d.nodes(); ++i) {
    CHECK(work[i] == doctest::Approx(amplitude * mode[i]).epsilon(1e-12));
  }
}

TEST_CASE("mass is conserved and positivity preserved") {
  const Domain1D d(2.0, 41);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(0.0, 2.0);
  std::vector<double> v(d.nodes());
  for (auto& x : v) x = dist(rng);
  ScalarField u(d, v);
  const double m0 = integrate(u);
  for (int n = 0; n < 200; ++n) {
    u = diffusion_substep(u, 0.01);
    CHECK(u.min() >= 0.0);
  }
  CHECK(std::abs(integrate(u) - m0) <= 1e-13 * m0);
}
