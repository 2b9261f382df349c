#include "shs/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "shs/errors.hpp"

namespace shs {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

ScalarField sample(const Profile& profile, const Domain1D& domain) {
  return std::visit(
      overloaded{
          [&](const ConstantProfile& p) { return ScalarField::constant(domain, p.value); },
          [&](const StepProfile& p) {
            // Nodes within a rounding hair of the split belong to the left part.
            const double split = p.split_fraction * domain.length() + 1e-9 * domain.h();
            return ScalarField::sample(
                domain, [&](double x) { return x <= split ? p.left_value : p.right_value; });
          },
          [&](const CosineProfile& p) {
            return ScalarField::sample(domain, [&](double x) {
              return p.mean + p.amplitude * std::cos(2.0 * std::numbers::pi * x / p.period);
            });
          },
          [&](const BumpProfile& p) {
            return ScalarField::sample(domain, [&](double x) {
              const double s = (x - p.center) / p.width;
              return p.mean - p.depth * std::exp(-s * s);
            });
          },
          [&](const TableProfile& p) {
            if (p.values.size() != domain.nodes()) {
              throw DomainError("table profile has " + std::to_string(p.values.size()) +
                                " values but the grid has " + std::to_string(domain.nodes()) +
                                " nodes");
            }
            return ScalarField(domain, p.values);
          },
      },
      profile);
}

double profile_min(const Profile& profile) {
  return std::visit(
      overloaded{
          [](const ConstantProfile& p) { return p.value; },
          [](const StepProfile& p) { return std::min(p.left_value, p.right_value); },
          [](const CosineProfile& p) { return p.mean - std::abs(p.amplitude); },
          [](const BumpProfile& p) { return std::min(p.mean, p.mean - p.depth); },
          [](const TableProfile& p) {
            return p.values.empty() ? 0.0 : *std::min_element(p.values.begin(), p.values.end());
          },
      },
      profile);
}

double profile_max(const Profile& profile) {
  return std::visit(
      overloaded{
          [](const ConstantProfile& p) { return p.value; },
          [](const StepProfile& p) { return std::max(p.left_value, p.right_value); },
          [](const CosineProfile& p) { return p.mean + std::abs(p.amplitude); },
          [](const BumpProfile& p) { return std::max(p.mean, p.mean - p.depth); },
          [](const TableProfile& p) {
            return p.values.empty() ? 0.0 : *std::max_element(p.values.begin(), p.values.end());
          },
      },
      profile);
}

std::string describe(const Profile& profile) {
  return std::visit(overloaded{
                        [](const ConstantProfile&) { return std::string("constant"); },
                        [](const StepProfile&) { return std::string("step"); },
                        [](const CosineProfile&) { return std::string("cosine"); },
                        [](const BumpProfile&) { return std::string("bump"); },
                        [](const TableProfile&) { return std::string("table"); },
                    },
                    profile);
}

}  // namespace shs
