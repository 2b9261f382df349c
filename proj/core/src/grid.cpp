#include "shs/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "shs/errors.hpp"

namespace shs {

Domain1D::Domain1D(double length, std::size_t nodes) : length_(length), nodes_(nodes) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw DomainError("domain length must be positive and finite");
  }
  if (nodes < 3) {
    throw DomainError("domain needs at least 3 nodes");
  }
  h_ = length / static_cast<double>(nodes - 1);
}

ScalarField::ScalarField(Domain1D domain, std::vector<double> values)
    : domain_(domain), values_(std::move(values)) {
  if (values_.size() != domain_.nodes()) {
    throw DomainError("field has " + std::to_string(values_.size()) + " values for " +
                      std::to_string(domain_.nodes()) + " nodes");
  }
  require_finite(values_, 0.0);
}

ScalarField ScalarField::constant(const Domain1D& domain, double value) {
  return ScalarField(domain, std::vector<double>(domain.nodes(), value));
}

ScalarField ScalarField::sample(const Domain1D& domain,
                                const std::function<double(double)>& f) {
  std::vector<double> v(domain.nodes());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(domain.x(i));
  return ScalarField(domain, std::move(v));
}

double ScalarField::min() const noexcept {
  return *std::min_element(values_.begin(), values_.end());
}

double ScalarField::max() const noexcept {
  return *std::max_element(values_.begin(), values_.end());
}

void require_finite(std::span<const double> values, double t) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw NumericalFailure("non-finite value at node " + std::to_string(i), i, t);
    }
  }
}

double integrate(const Domain1D& domain, std::span<const double> values) {
  const std::size_t n = values.size();
  double interior = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) interior += values[i];
  return domain.h() * (interior + 0.5 * (values[0] + values[n - 1]));
}

double integrate(const ScalarField& f) { return integrate(f.domain(), f.values()); }

TimeGrid::TimeGrid(double dt, double horizon, std::size_t record_every)
    : dt_(dt), horizon_(horizon), record_every_(record_every) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("dt must be positive");
  if (!(horizon > 0.0) || !std::isfinite(horizon)) throw DomainError("horizon must be positive");
  if (dt > horizon) throw DomainError("dt must not exceed the horizon");
  if (record_every == 0) throw DomainError("record_every must be positive");
  // Guard against T/dt landing a hair above an integer through rounding.
  const double ratio = horizon / dt;
  const double rounded = std::round(ratio);
  steps_ = std::abs(ratio - rounded) <= 1e-9 * rounded ? static_cast<std::size_t>(rounded)
                                                       : static_cast<std::size_t>(std::ceil(ratio));
}

double TimeGrid::time_at(std::size_t k) const noexcept {
  if (k >= steps_) return horizon_;
  return static_cast<double>(k) * dt_;
}

double TimeGrid::step_size(std::size_t k) const noexcept {
  if (k + 1 < steps_) return dt_;
  return horizon_ - time_at(k);
}

}  // namespace shs
