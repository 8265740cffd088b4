#pragma once

#include <stdexcept>
#include <string>

namespace gqaoa {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Caller violated a documented precondition (e.g. non-zero mean passed to ep).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Request exceeds a configured size guard (qubit count, depth).
class ResourceLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Objective produced a non-finite value during numerical work.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, int coordinate)
      : std::runtime_error(what), coordinate_(coordinate) {}
  int coordinate() const noexcept { return coordinate_; }

 private:
  int coordinate_;
};

// Internal consistency check failed (e.g. complex residual of a real mean).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gqaoa
