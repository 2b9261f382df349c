#include "shs/kinetics.hpp"

#include <algorithm>
#include <cmath>

#include "shs/errors.hpp"

namespace shs {

namespace {

void require_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("epsilon must be positive and finite");
  }
}

double clamped_exp(double exponent, double clamp, ClampCounter* counter) {
  if (exponent > clamp) {
    if (counter) ++counter->events;
    exponent = clamp;
  }
  return std::exp(exponent);
}

double table_lookup(const KineticsTable& t, double z) {
  if (z <= t.z.front()) return t.g.front();
  if (z >= t.z.back()) return t.g.back();
  const auto it = std::upper_bound(t.z.begin(), t.z.end(), z);
  const std::size_t j = static_cast<std::size_t>(it - t.z.begin());
  const double s = (z - t.z[j - 1]) / (t.z[j] - t.z[j - 1]);
  return t.g[j - 1] + s * (t.g[j] - t.g[j - 1]);
}

void require_strictly_decreasing(std::span<const double> eps) {
  if (eps.empty()) throw DomainError("epsilon sequence is empty");
  for (std::size_t i = 0; i < eps.size(); ++i) {
    require_epsilon(eps[i]);
    if (i > 0 && !(eps[i] < eps[i - 1])) {
      throw DomainError("epsilon sequence must be strictly decreasing");
    }
  }
}

void require_interval(Interval k) {
  if (!std::isfinite(k.lo) || !std::isfinite(k.hi) || k.lo > k.hi) {
    throw DomainError("interval must be finite with lo <= hi");
  }
}

}  // namespace

std::string_view to_string(KineticsVariant v) noexcept {
  switch (v) {
    case KineticsVariant::matkowsky_sivashinsky:
      return "matkowsky_sivashinsky";
    case KineticsVariant::threshold:
      return "threshold";
    case KineticsVariant::tabulated:
      return "tabulated";
  }
  return "unknown";
}

KineticsFamily KineticsFamily::matkowsky_sivashinsky(double epsilon, double exp_clamp) {
  require_epsilon(epsilon);
  if (!(exp_clamp > 0.0)) throw DomainError("exp_clamp must be positive");
  KineticsFamily f;
  f.variant_ = KineticsVariant::matkowsky_sivashinsky;
  f.epsilon_ = epsilon;
  f.exp_clamp_ = exp_clamp;
  return f;
}

KineticsFamily KineticsFamily::threshold(double epsilon, double kappa, double theta_bar,
                                         double exp_clamp) {
  require_epsilon(epsilon);
  if (!(kappa > 0.0 && kappa <= 1.0)) throw DomainError("kappa must lie in (0, 1]");
  if (!(theta_bar > 0.0 && theta_bar < 1.0)) throw DomainError("theta_bar must lie in (0, 1)");
  if (!(exp_clamp > 0.0)) throw DomainError("exp_clamp must be positive");
  KineticsFamily f;
  f.variant_ = KineticsVariant::threshold;
  f.epsilon_ = epsilon;
  f.kappa_ = kappa;
  f.theta_bar_ = theta_bar;
  f.exp_clamp_ = exp_clamp;
  return f;
}

KineticsFamily KineticsFamily::tabulated(double epsilon, KineticsTable table) {
  require_epsilon(epsilon);
  if (table.z.size() < 2 || table.z.size() != table.g.size()) {
    throw DomainError("rate table needs at least two (z, g) pairs of equal length");
  }
  for (std::size_t j = 0; j < table.z.size(); ++j) {
    if (!std::isfinite(table.z[j]) || !std::isfinite(table.g[j])) {
      throw DomainError("rate table entries must be finite");
    }
    if (table.g[j] < 0.0) throw DomainError("rate table values must be nonnegative");
    if (j > 0 && !(table.z[j] > table.z[j - 1])) {
      throw DomainError("rate table abscissae must be strictly increasing");
    }
  }
  KineticsFamily f;
  f.variant_ = KineticsVariant::tabulated;
  f.epsilon_ = epsilon;
  f.table_ = std::move(table);
  return f;
}

KineticsFamily KineticsFamily::with_epsilon(double epsilon) const {
  require_epsilon(epsilon);
  KineticsFamily f = *this;
  f.epsilon_ = epsilon;
  return f;
}

std::optional<double> KineticsFamily::cutoff() const noexcept {
  switch (variant_) {
    case KineticsVariant::matkowsky_sivashinsky:
      return -1.0;
    case KineticsVariant::threshold:
      return theta_bar_ - 1.0;
    case KineticsVariant::tabulated:
      return std::nullopt;
  }
  return std::nullopt;
}

double KineticsFamily::growth_constant() const noexcept {
  switch (variant_) {
    case KineticsVariant::matkowsky_sivashinsky:
      return std::exp(std::min(1.0 / epsilon_, exp_clamp_));
    case KineticsVariant::threshold:
      return std::exp(std::min(1.0 / (kappa_ * epsilon_), exp_clamp_));
    case KineticsVariant::tabulated:
      return *std::max_element(table_.g.begin(), table_.g.end());
  }
  return 0.0;
}

double eval_g(const KineticsFamily& family, double z, ClampCounter* counter) {
  switch (family.variant()) {
    case KineticsVariant::matkowsky_sivashinsky:
      if (z <= -1.0) return 0.0;
      return clamped_exp((1.0 - 1.0 / (z + 1.0)) / family.epsilon(), family.exp_clamp(), counter);
    case KineticsVariant::threshold:
      if (z <= family.theta_bar() - 1.0) return 0.0;
      return clamped_exp((z / (family.kappa() * z + 1.0)) / family.epsilon(),
                         family.exp_clamp(), counter);
    case KineticsVariant::tabulated:
      return table_lookup(family.table(), z);
  }
  return 0.0;
}

std::vector<double> sample_interval(Interval k) {
  constexpr std::size_t kIntervals = 1001;
  std::vector<double> z(kIntervals + 1);
  for (std::size_t j = 0; j <= kIntervals; ++j) {
    z[j] = k.lo + (k.hi - k.lo) * static_cast<double>(j) / static_cast<double>(kIntervals);
  }
  z.back() = k.hi;
  return z;
}

AssumptionReport verify_assumption_cold(const KineticsFamily& family,
                                        std::span<const double> eps_sequence, Interval k,
                                        double tol) {
  require_interval(k);
  if (!(k.hi < 0.0)) throw DomainError("cold interval must lie inside (-inf, 0)");
  require_strictly_decreasing(eps_sequence);

  AssumptionReport report{"assumption_1_cold", {}, {}, tol, false};
  const auto zs = sample_interval(k);
  for (double eps : eps_sequence) {
    const auto fam = family.with_epsilon(eps);
    double s = 0.0;
    for (double z : zs) s = std::max(s, eval_g(fam, z) / eps);
    report.eps.push_back(eps);
    report.values.push_back(s);
  }
  const auto& v = report.values;
  bool tail_non_increasing = true;
  const std::size_t first = v.size() >= 3 ? v.size() - 3 : 0;
  for (std::size_t i = first + 1; i < v.size(); ++i) {
    if (v[i] > v[i - 1]) tail_non_increasing = false;
  }
  report.passed = v.back() < tol && tail_non_increasing;
  return report;
}

AssumptionReport verify_assumption_hot(const KineticsFamily& family,
                                       std::span<const double> eps_sequence, Interval k,
                                       double c_k, double tol) {
  require_interval(k);
  if (!(k.lo > 0.0)) throw DomainError("hot interval must lie inside (0, +inf)");
  if (!(c_k >= 0.0)) throw DomainError("c_K must be nonnegative");
  require_strictly_decreasing(eps_sequence);

  AssumptionReport report{"assumption_2_hot", {}, {}, tol, false};
  const auto zs = sample_interval(k);
  for (double eps : eps_sequence) {
    const auto fam = family.with_epsilon(eps);
    double d = 0.0;
    for (double z : zs) d = std::max(d, c_k - std::min(eval_g(fam, z), c_k));
    report.eps.push_back(eps);
    report.values.push_back(d);
  }
  report.passed = report.values.back() < tol;
  return report;
}

AssumptionReport verify_assumption_growth(const KineticsFamily& family,
                                          std::span<const double> eps_sequence, Interval k) {
  require_interval(k);
  require_strictly_decreasing(eps_sequence);

  AssumptionReport report{"assumption_0_structure", {}, {}, 0.0, true};
  const auto zs = sample_interval(k);
  for (double eps : eps_sequence) {
    const auto fam = family.with_epsilon(eps);
    const double bound = fam.growth_constant();
    double ratio = 0.0;
    for (double z : zs) {
      const double g = eval_g(fam, z);
      if (!(g >= 0.0)) report.passed = false;
      ratio = std::max(ratio, g / (1.0 + std::abs(z)));
    }
    if (ratio > bound) report.passed = false;
    if (const auto z0 = fam.cutoff()) {
      if (eval_g(fam, *z0) != 0.0 || eval_g(fam, std::nextafter(*z0, -2.0)) != 0.0) {
        report.passed = false;
      }
    }
    report.eps.push_back(eps);
    report.values.push_back(ratio);
  }
  return report;
}

}  // namespace shs
