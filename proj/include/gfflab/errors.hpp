#pragma once

#include <stdexcept>
#include <string>

namespace gfflab {

// Argument outside a documented precondition (t <= 0, point outside the
// absorbing interval, sets touching, ...).
class precondition_error : public std::invalid_argument {
 public:
  explicit precondition_error(const std::string& what)
      : std::invalid_argument(what) {}
};

// A series did not reach the requested tolerance within the term cap.
// Carries the partial sum so a caller can decide whether it is usable.
class truncation_error : public std::runtime_error {
 public:
  truncation_error(const std::string& what, double partial)
      : std::runtime_error(what), partial_sum(partial) {}
  double partial_sum;
};

// Adaptive quadrature failed to converge.
class integration_error : public std::runtime_error {
 public:
  explicit integration_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Evaluation at or beyond a pole of an analytically continued transform.
class pole_error : public std::domain_error {
 public:
  explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

// Linear solver / factorization failure on the lattice.
class solver_error : public std::runtime_error {
 public:
  explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

// Inverse-CDF bracketing or other sampling-level numeric failure.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gfflab
