#pragma once

#include <string>
#include <variant>
#include <vector>

#include "shs/grid.hpp"

namespace shs {

struct ConstantProfile {
  double value = 0.0;
};

/// left_value on [0, split_fraction L], right_value beyond.
struct StepProfile {
  double left_value = 0.0;
  double right_value = 0.0;
  double split_fraction = 0.5;
};

/// mean + amplitude cos(2 pi x / period)
struct CosineProfile {
  double mean = 0.0;
  double amplitude = 0.0;
  double period = 1.0;
};

/// Localized Gaussian depression: mean - depth exp(-((x - center)/width)^2).
struct BumpProfile {
  double mean = 0.0;
  double depth = 0.0;
  double center = 0.0;
  double width = 1.0;
};

/// Explicit nodal values; only valid on a grid with matching node count.
struct TableProfile {
  std::vector<double> values;
};

using Profile = std::variant<ConstantProfile, StepProfile, CosineProfile, BumpProfile, TableProfile>;

ScalarField sample(const Profile& profile, const Domain1D& domain);

/// Smallest value the profile can take (exact for the analytic shapes).
double profile_min(const Profile& profile);

/// Largest value the profile can take (exact for the analytic shapes).
double profile_max(const Profile& profile);

std::string describe(const Profile& profile);

}  // namespace shs
