#pragma once

// Internal: heat-step factorizations for a TimeGrid.

#include <optional>
#include <span>

#include "shs/heat.hpp"

namespace shs::detail {

// Holds one factorization for the regular dt and one for a shortened last step.
class HeatSchedule {
 public:
  HeatSchedule(const Domain1D& domain, const TimeGrid& time)
      : domain_(domain), regular_(domain, time.dt()) {}

  void apply(std::span<double> u, double dt) {
    if (dt == regular_.dt()) {
      regular_.apply(u);
      return;
    }
    if (!last_ || last_->dt() != dt) last_.emplace(domain_, dt);
    last_->apply(u);
  }

 private:
  Domain1D domain_;
  NeumannHeatStep regular_;
  std::optional<NeumannHeatStep> last_;
};

}  // namespace shs::detail
