#ifndef PARITY_ERRORS_HPP
#define PARITY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace parity {

// Malformed or inconsistent input (bad JSON, unknown edge, index mismatch...).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configurable resource guard was exceeded (vertex cap, basis-dimension
// cap, enumeration cap). Distinct from InputError so callers can retry with
// larger limits.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// The operation is well-posed but outside the supported fragment
// (e.g. labeling search on a compiled hypergraph with no weakly
// fundamental edge ordering).
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace parity

#endif  // PARITY_ERRORS_HPP
