#pragma once

#include <cmath>
#include <complex>

#include "bergman/types.hpp"

namespace bergman {

/// Point (p1, ..., pn) of the symmetrized polydisk, given by elementary
/// symmetric values of some w in the polydisk.
struct SymmetrizedPoint {
  ComplexVector coords;

  Eigen::Index dimension() const { return coords.size(); }
};

/// Default tolerance for closure (as opposed to strict interior) queries.
inline constexpr double kClosureTolerance = 1e-9;

template <typename Scalar>
bool is_finite(const std::complex<Scalar>& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

template <typename Scalar>
bool in_unit_disk(const std::complex<Scalar>& z) {
  return std::norm(z) < Scalar(1);
}

template <typename Scalar>
bool in_upper_halfplane(const std::complex<Scalar>& z) {
  return z.imag() > Scalar(0);
}

/// Cayley transform (i - z) / (i + z), upper half-plane onto the unit disk.
template <typename Scalar>
std::complex<Scalar> cayley(const std::complex<Scalar>& z) {
  const std::complex<Scalar> i{0, 1};
  if (z == -i) throw DomainError("cayley: pole at -i");
  return (i - z) / (i + z);
}

/// Complex derivative of the Cayley transform, -2i / (i + z)^2.
template <typename Scalar>
std::complex<Scalar> cayley_derivative(const std::complex<Scalar>& z) {
  const std::complex<Scalar> i{0, 1};
  if (z == -i) throw DomainError("cayley_derivative: pole at -i");
  const auto d = i + z;
  return Scalar(-2) * i / (d * d);
}

/// Inverse Cayley transform i (1 - w) / (1 + w), unit disk onto the upper half-plane.
template <typename Scalar>
std::complex<Scalar> cayley_inverse(const std::complex<Scalar>& w) {
  const std::complex<Scalar> i{0, 1};
  if (w == std::complex<Scalar>(-1)) throw DomainError("cayley_inverse: pole at -1");
  return i * (Scalar(1) - w) / (Scalar(1) + w);
}

template <typename Scalar>
bool in_hartogs_triangle(const std::complex<Scalar>& z1, const std::complex<Scalar>& z2,
                         Scalar gamma) {
  if (!(gamma > 0)) throw DomainError("in_hartogs_triangle: gamma must be positive");
  const Scalar r2 = std::abs(z2);
  return std::pow(std::abs(z1), gamma) < r2 && r2 < Scalar(1);
}

/// Largest root modulus of w^n - p1 w^(n-1) + ... + (-1)^n pn.
double symmetrized_root_radius(const SymmetrizedPoint& s);

/// Strict interior test for the symmetrized polydisk. Throws NumericalError
/// if the root finder fails; never reports failure as `false`.
bool in_symmetrized_polydisk(const SymmetrizedPoint& s);

/// Closure test: every root has modulus at most 1 + tol.
bool in_symmetrized_polydisk_closure(const SymmetrizedPoint& s,
                                     double tol = kClosureTolerance);

}  // namespace bergman
