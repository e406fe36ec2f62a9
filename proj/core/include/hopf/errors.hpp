#pragma once

#include <stdexcept>
#include <string>

namespace hopf {

/// A mathematical check failed: an axiom, a precondition of a construction,
/// or an internal consistency assertion on computed objects.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document or an I/O failure.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hopf
