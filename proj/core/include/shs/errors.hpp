#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shs {

/// Invalid argument outside the mathematical domain of an operation
/// (e.g. a cold interval that is not inside (-inf, 0)).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two trajectories that do not share a grid or a snapshot schedule.
class ComparisonError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rejected configuration document. `key` names the offending entry when known.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, std::string key = {})
      : std::runtime_error(what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// An output file or directory could not be written.
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state value became NaN or infinite.
class NumericalFailure : public std::runtime_error {
 public:
  NumericalFailure(const std::string& what, std::size_t node, double t)
      : std::runtime_error(what), node_(node), t_(t) {}
  std::size_t node() const noexcept { return node_; }
  double time() const noexcept { return t_; }

 private:
  std::size_t node_;
  double t_;
};

}  // namespace shs
