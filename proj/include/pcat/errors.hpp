#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcat {

/// Raised when a diagram or operator violates a structural precondition.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what, int point = 0)
      : std::invalid_argument(what), point_(point) {}

  /// Offending 1-based point, or 0 when the error is not tied to a point.
  int point() const noexcept { return point_; }

 private:
  int point_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class SignatureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace pcat
