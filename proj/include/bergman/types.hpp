#pragma once

#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace bergman {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// A point of the bidisk or of the symmetrized bidisk, (z1, z2).
using Point2 = Eigen::Vector2cd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline const Complex kI{0.0, 1.0};

/// Input outside the mathematical domain of an operation (pole hit, bad parameter).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative numerical method failed to deliver its accuracy contract.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite value encountered while summing a quadrature rule.
class QuadratureError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Open interval (lower, upper) of exponents p.
struct Interval {
  double lower = 1.0;
  double upper = kInf;
  bool conjugate = false;

  bool contains(double p) const { return lower < p && p < upper; }
  bool empty() const { return !(lower < upper); }
  double conjugacy_defect() const { return std::abs(1.0 / lower + 1.0 / upper - 1.0); }
};

/// Conjugate exponent q with 1/p + 1/q = 1.
inline double conjugate_exponent(double p) { return p / (p - 1.0); }

/// Builds an interval and sets the conjugacy flag from the endpoints.
inline Interval make_interval(double lower, double upper, double tol = 1e-12) {
  Interval out{lower, upper, false};
  out.conjugate = out.conjugacy_defect() < tol;
  return out;
}

}  // namespace bergman
