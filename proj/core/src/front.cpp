#include "shs/front.hpp"

#include <limits>

namespace shs {

double front_position(const Domain1D& domain, std::span<const double> f, bool interpolate) {
  for (std::size_t i = f.size() - 1; i-- > 0;) {
    if (f[i] >= 0.5 && f[i + 1] < 0.5) {
      if (!interpolate) return domain.x(i) + 0.5 * domain.h();
      return domain.x(i) + domain.h() * (f[i] - 0.5) / (f[i] - f[i + 1]);
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace shs
