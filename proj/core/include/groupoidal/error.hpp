#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace groupoidal {

// Raised when inputs violate a structural precondition (ground-set
// mismatch, invalid action, non-F~ input where F~ is required, ...).
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GrowthError : public std::runtime_error {
 public:
  GrowthError(const std::string& what, std::size_t partial_size)
      : std::runtime_error(what), partial_size_(partial_size) {}

  std::size_t partial_size() const noexcept { return partial_size_; }

 private:
  std::size_t partial_size_;
};

// A window-bounded search could not settle a predicate.
class UndecidedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class WindowTooSmallError : public UndecidedError {
 public:
  using UndecidedError::UndecidedError;
};

}  // namespace groupoidal
