#include "shs/heat.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "shs/errors.hpp"

namespace shs {

NeumannHeatStep::NeumannHeatStep(const Domain1D& domain, double dt)
    : domain_(domain), dt_(dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("dt must be positive");
  const std::size_t n = domain.nodes();
  const double r = dt / (domain.h() * domain.h());
  const double diag = 1.0 + 2.0 * r;

  lower_.assign(n, -r);
  lower_[0] = 0.0;
  lower_[n - 1] = -2.0 * r;
  std::vector<double> upper(n, -r);
  upper[0] = -2.0 * r;
  upper[n - 1] = 0.0;

  upper_mod_.resize(n);
  inv_pivot_.resize(n);
  double prev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double m = diag - lower_[i] * prev;
    if (!(m > 0.0)) throw std::logic_error("heat matrix lost diagonal dominance");
    inv_pivot_[i] = 1.0 / m;
    prev = upper[i] * inv_pivot_[i];
    upper_mod_[i] = prev;
  }
}

void NeumannHeatStep::apply(std::span<double> u) const {
  const std::size_t n = inv_pivot_.size();
  if (u.size() != n) throw DomainError("field size does not match the heat operator");
  u[0] *= inv_pivot_[0];
  for (std::size_t i = 1; i < n; ++i) {
    u[i] = (u[i] - lower_[i] * u[i - 1]) * inv_pivot_[i];
  }
  for (std::size_t i = n - 1; i-- > 0;) {
    u[i] -= upper_mod_[i] * u[i + 1];
  }
}

ScalarField diffusion_substep(const ScalarField& u, double dt) {
  NeumannHeatStep step(u.domain(), dt);
  std::vector<double> values(u.values().begin(), u.values().end());
  step.apply(values);
  return ScalarField(u.domain(), std::move(values));
}

double neumann_eigenvalue(const Domain1D& domain, int k) {
  const double h = domain.h();
  return (2.0 / (h * h)) * (1.0 - std::cos(k * std::numbers::pi * h / domain.length()));
}

}  // namespace shs
