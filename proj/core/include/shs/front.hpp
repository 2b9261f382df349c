#pragma once

#include <span>

#include "shs/grid.hpp"

namespace shs {

/// Position of the rightmost descending crossing of a burned-fraction profile
/// through 1/2: the last i with f[i] >= 1/2 > f[i+1]. With `interpolate` the
/// crossing is placed by linear interpolation inside the cell, otherwise at
/// the cell midpoint. NaN when no such cell exists (nothing or everything burned).
double front_position(const Domain1D& domain, std::span<const double> burned_fraction,
                      bool interpolate);

}  // namespace shs
