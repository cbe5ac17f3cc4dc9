#pragma once

#include <stdexcept>
#include <string>

namespace ctinv {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative method (root polish, quadrature, forward solve) did not
/// reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation requested too close to a zero of the Wronskian, where the
/// kernel and the potential blow up.
class SingularityError : public std::runtime_error {
 public:
  SingularityError(const std::string& what, double x, double nearest_root)
      : std::runtime_error(what), x_(x), nearest_root_(nearest_root) {}

  double x() const noexcept { return x_; }
  /// Closest located Wronskian root, NaN when none was found.
  double nearest_root() const noexcept { return nearest_root_; }

 private:
  double x_;
  double nearest_root_;
};

}  // namespace ctinv
