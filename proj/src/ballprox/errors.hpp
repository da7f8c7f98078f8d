#pragma once

#include <stdexcept>
#include <string>

namespace ballprox {

/// Raised when an operator description or argument is malformed. `field()`
/// names the offending input field when one can be identified.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what, std::string field = {})
      : std::invalid_argument(what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Raised when an iterative kernel fails to converge.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ballprox
