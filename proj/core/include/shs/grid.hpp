#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace shs {

/// Uniform 1D grid on (0, L) with homogeneous Neumann data at both ends.
/// Nodes sit at x_i = i*h, h = L/(nodes-1), endpoints included.
class Domain1D {
 public:
  Domain1D(double length, std::size_t nodes);

  double length() const noexcept { return length_; }
  std::size_t nodes() const noexcept { return nodes_; }
  double h() const noexcept { return h_; }
  double x(std::size_t i) const noexcept { return static_cast<double>(i) * h_; }

  /// Trapezoid weights: h in the interior, h/2 at the two boundary nodes.
  double weight(std::size_t i) const noexcept {
    return (i == 0 || i + 1 == nodes_) ? 0.5 * h_ : h_;
  }

  friend bool operator==(const Domain1D& a, const Domain1D& b) noexcept {
    return a.length_ == b.length_ && a.nodes_ == b.nodes_;
  }

 private:
  double length_;
  std::size_t nodes_;
  double h_;
};

/// Nodal values of one scalar quantity. Every value is finite.
class ScalarField {
 public:
  ScalarField(Domain1D domain, std::vector<double> values);

  static ScalarField constant(const Domain1D& domain, double value);
  static ScalarField sample(const Domain1D& domain,
                            const std::function<double(double)>& f);

  const Domain1D& domain() const noexcept { return domain_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }

  double min() const noexcept;
  double max() const noexcept;

 private:
  Domain1D domain_;
  std::vector<double> values_;
};

/// Throws NumericalFailure naming the first non-finite entry.
void require_finite(std::span<const double> values, double t);

/// Composite trapezoid rule over the domain.
double integrate(const ScalarField& f);
double integrate(const Domain1D& domain, std::span<const double> values);

/// Fixed-step schedule. The step count is ceil(T/dt); the last step is
/// shortened so that the final time equals the horizon exactly.
class TimeGrid {
 public:
  TimeGrid(double dt, double horizon, std::size_t record_every = 1);

  double dt() const noexcept { return dt_; }
  double horizon() const noexcept { return horizon_; }
  std::size_t record_every() const noexcept { return record_every_; }
  std::size_t steps() const noexcept { return steps_; }

  /// Time after `k` completed steps.
  double time_at(std::size_t k) const noexcept;
  /// Length of step k (0-based): exactly dt except possibly for the last step.
  double step_size(std::size_t k) const noexcept;
  /// Whether the state after step k+1 is recorded (stride hits or final step).
  bool records_after(std::size_t k) const noexcept {
    return (k + 1) % record_every_ == 0 || k + 1 == steps_;
  }

 private:
  double dt_;
  double horizon_;
  std::size_t record_every_;
  std::size_t steps_;
};

}  // namespace shs
