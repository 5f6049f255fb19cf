#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace nsiq {

/// Invalid or incomplete model parameters / configuration documents.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
  ConfigError(const std::string& key_path, const std::string& what)
      : std::runtime_error(key_path + ": " + what), key_path_(key_path) {}

  const std::string& key_path() const noexcept { return key_path_; }

 private:
  std::string key_path_;
};

/// An operation was called outside the parameter manifold it is defined on.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BasisMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Poles and zero denominators in closed-form expressions.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Numerical failure: non-finite input, step-size underflow, non-convergence.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
  NumericError(const std::string& what, double at_time)
      : std::runtime_error(what + " (t = " + std::to_string(at_time) + " s)"), time_(at_time) {}

  std::optional<double> time() const noexcept { return time_; }

 private:
  std::optional<double> time_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nsiq
