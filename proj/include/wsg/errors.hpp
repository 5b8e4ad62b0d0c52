#ifndef WSG_ERRORS_HPP
#define WSG_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wsg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

/// Input does not describe a valid semigroup (gcd, generation, ...).
class InvalidSemigroup : public Error {
 public:
  using Error::Error;
};

class NotStrictlyGenerated : public InvalidSemigroup {
 public:
  using InvalidSemigroup::InvalidSemigroup;
};

/// A two-point strip breaks one of the structural axioms. The witness
/// list holds the offending quotient classes as (sum, residue) pairs.
class AxiomViolation : public Error {
 public:
  AxiomViolation(const std::string& what,
                 std::vector<std::pair<long long, long long>> witnesses = {})
      : Error(what), witnesses_(std::move(witnesses)) {}

  const std::vector<std::pair<long long, long long>>& witnesses() const noexcept {
    return witnesses_;
  }

 private:
  std::vector<std::pair<long long, long long>> witnesses_;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class WindowTooSmall : public Error {
 public:
  using Error::Error;
};

class UnknownCheck : public Error {
 public:
  using Error::Error;
};

/// Malformed or unsupported external input (JSON, CLI arguments).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace wsg

#endif  // WSG_ERRORS_HPP
