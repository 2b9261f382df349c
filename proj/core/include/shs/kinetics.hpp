#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shs {

enum class KineticsVariant { matkowsky_sivashinsky, threshold, tabulated };

std::string_view to_string(KineticsVariant v) noexcept;

/// Piecewise-linear rate table; constant extension outside [z.front(), z.back()].
struct KineticsTable {
  std::vector<double> z;
  std::vector<double> g;
};

/// Reaction-rate family g_eps. Immutable once built; sweeps construct one
/// instance per epsilon (see with_epsilon).
///
///   matkowsky_sivashinsky: g(z) = exp((1 - 1/(z+1))/eps) for z > -1, else 0
///   threshold:             g(z) = exp((z/(kappa z + 1))/eps) for z > theta_bar - 1, else 0
///   tabulated:             linear interpolation of a user table
///
/// Exponents are clamped at exp_clamp so that g never overflows.
class KineticsFamily {
 public:
  static constexpr double kDefaultExpClamp = 700.0;

  static KineticsFamily matkowsky_sivashinsky(double epsilon,
                                              double exp_clamp = kDefaultExpClamp);
  static KineticsFamily threshold(double epsilon, double kappa, double theta_bar,
                                  double exp_clamp = kDefaultExpClamp);
  static KineticsFamily tabulated(double epsilon, KineticsTable table);

  KineticsFamily with_epsilon(double epsilon) const;

  KineticsVariant variant() const noexcept { return variant_; }
  double epsilon() const noexcept { return epsilon_; }
  double kappa() const noexcept { return kappa_; }
  double theta_bar() const noexcept { return theta_bar_; }
  double exp_clamp() const noexcept { return exp_clamp_; }
  const KineticsTable& table() const noexcept { return table_; }

  /// Jump point z0 below which (inclusive) g vanishes; none for tables.
  std::optional<double> cutoff() const noexcept;

  /// Constant in g(z) <= C_eps (1 + |z|). Built-in families are bounded:
  /// e^{1/eps} (MS) and e^{1/(kappa eps)} (threshold), both capped by the clamp.
  double growth_constant() const noexcept;

 private:
  KineticsFamily() = default;

  KineticsVariant variant_ = KineticsVariant::matkowsky_sivashinsky;
  double epsilon_ = 1.0;
  double kappa_ = 1.0;
  double theta_bar_ = 0.5;
  double exp_clamp_ = kDefaultExpClamp;
  KineticsTable table_;
};

/// Counts clamped exponent evaluations. Owned by one run (one thread).
struct ClampCounter {
  std::uint64_t events = 0;
};

/// g_eps(z) >= 0. Never overflows; clamp events are added to `counter`.
double eval_g(const KineticsFamily& family, double z, ClampCounter* counter = nullptr);

/// Decreasing epsilon sequence used when a study does not supply its own.
inline constexpr std::array<double, 5> kDefaultEpsSequence{0.1, 0.05, 0.02, 0.01, 0.005};

struct Interval {
  double lo;
  double hi;
};

/// 1000 uniform interior points plus both endpoints.
std::vector<double> sample_interval(Interval k);

/// Outcome of one structural-assumption check over an epsilon sequence.
struct AssumptionReport {
  std::string name;
  std::vector<double> eps;
  std::vector<double> values;  // s_eps (cold) or d_eps (hot) per epsilon
  double tol = 0.0;
  bool passed = false;
};

/// Cold-side vanishing: s_eps = max_K g_eps / eps. Passes iff the final
/// s_eps < tol and the last three values are non-increasing. K must lie in
/// (-inf, 0).
AssumptionReport verify_assumption_cold(const KineticsFamily& family,
                                        std::span<const double> eps_sequence, Interval k,
                                        double tol);

/// Hot-side saturation: d_eps = max_K (c_K - min(g_eps, c_K)). Passes iff the
/// final d_eps < tol. K must lie in (0, +inf).
AssumptionReport verify_assumption_hot(const KineticsFamily& family,
                                       std::span<const double> eps_sequence, Interval k,
                                       double c_k, double tol);

/// Structure check on a bounded interval: g >= 0, g vanishes at and below the
/// cutoff, and g(z) <= C_eps (1 + |z|). `values` holds max g/(1+|z|) per eps.
AssumptionReport verify_assumption_growth(const KineticsFamily& family,
                                          std::span<const double> eps_sequence, Interval k);

}  // namespace shs
