#pragma once

#include <stdexcept>
#include <string>

namespace chow {

// Operands belong to different algebraic contexts (generator profiles or ring
// parameters do not match).
class ProfileError : public std::invalid_argument {
 public:
  explicit ProfileError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Malformed or out-of-range argument.
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Series inversion requested for a series whose constant coefficient is not 1.
class NonInvertibleError : public std::domain_error {
 public:
  explicit NonInvertibleError(const std::string& msg) : std::domain_error(msg) {}
};

// An internal invariant failed. Indicates a broken ring construction, not bad
// user input.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace chow
