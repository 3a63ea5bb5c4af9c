#ifndef RSBF_ERROR_HPP
#define RSBF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rsbf {

/// Input outside the mathematical domain of an operation (bad n, non-canonical
/// triple, composite where a prime is required, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds a configured size cap (truth-table variable count, power-of-3
/// exponent). The message names the cap and the override.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A self-check failed; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rsbf

#endif  // RSBF_ERROR_HPP
