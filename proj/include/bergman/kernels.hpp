#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "bergman/domains.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/types.hpp"

namespace bergman {

/// 1 / (pi (1 - z conj(w))^2) on the unit disk.
Complex kernel_disk(const Complex& z, const Complex& w);

/// -1 / (pi (z - conj(w))^2) on the upper half-plane.
Complex kernel_halfplane(const Complex& z, const Complex& w);

/// Product of disk kernels on the bidisk.
Complex kernel_bidisk(const Point2& z, const Point2& w);

/// Index of the basis of the symmetric subspace of A^2(D^2, nu), j > k >= 0.
struct BasisIndex {
  int j = 1;
  int k = 0;

  int degree() const { return j + k; }
  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

/// Throws DomainError unless j > k >= 0.
void check_index(const BasisIndex& idx);

/// All indices with j + k <= max_degree, ordered by degree then j.
std::vector<BasisIndex> basis_indices(int max_degree);

/// (z1^j z2^k - z1^k z2^j) / (z1 - z2), evaluated as
/// (z1 z2)^k * sum_{t < j-k} z1^t z2^(j-k-1-t); exact on the diagonal.
template <typename Scalar>
Scalar basis_quotient(const BasisIndex& idx, const Scalar& z1, const Scalar& z2) {
  const int d = idx.j - idx.k;
  Scalar h(0), p1(1);
  for (int t = 0; t < d; ++t) {
    Scalar term = p1;
    for (int u = 0; u < d - 1 - t; ++u) term *= z2;
    h += term;
    p1 *= z1;
  }
  Scalar prod(1);
  for (int u = 0; u < idx.k; ++u) prod *= z1 * z2;
  return prod * h;
}

/// sqrt((k+1)(j+1) / (2 pi^2)).
double basis_normalization(const BasisIndex& idx);

/// Orthonormal basis element of A^2(D^2, nu) restricted to swap-invariant functions,
/// nu(z) = |z1 - z2|^2.
Complex basis_nu(const BasisIndex& idx, const Point2& z);

/// nu(z) = |z1 - z2|^2.
inline double nu_weight(const Point2& z) { return std::norm(z[0] - z[1]); }

/// Integral over D^2 of |z1^j z2^k - z1^k z2^j|^2 by a tensor polar rule.
double basis_norm_integral(const BasisIndex& idx, const DiskQuadrature& quad = {16, 32});

/// Partial sum of the kernel series over j > k, j + k <= N.
Complex kernel_nu_series(const Point2& z, const Point2& zeta, int N = 60);

/// Weighted kernel in closed form,
///   (1 / 2 pi^2) [1/(A^2) - 1/(B^2)] / ((z1 - z2)(conj(zeta1) - conj(zeta2))),
/// A = (1 - z1 conj(zeta1))(1 - z2 conj(zeta2)), B = (1 - z1 conj(zeta2))(1 - z2 conj(zeta1)).
/// Since B - A = (z1 - z2)(conj(zeta1) - conj(zeta2)), this is evaluated as
/// (A + B) / (2 pi^2 A^2 B^2), which is regular on the diagonal.
Complex kernel_nu_closed(const Point2& z, const Point2& zeta);

struct KernelComparison {
  Point2 z;
  Point2 zeta;
  Complex series_value;
  Complex closed_value;
  int truncation_degree = 0;
  double abs_error = 0.0;
};

KernelComparison compare_kernels(const Point2& z, const Point2& zeta, int N = 60);

/// Finite sum f(z) = sum a_{j,k} (z1^j z2^k - z1^k z2^j) / (z1 - z2) in the
/// unnormalized quotient basis.
struct SymmetricBergmanElement {
  std::vector<std::pair<BasisIndex, Complex>> terms;

  Complex operator()(const Point2& z) const;
  /// Coefficient of index idx (summed over repeats).
  Complex coefficient(const BasisIndex& idx) const;
  int max_degree() const;
};

/// Tensor product of one polar disk rule with itself, as weights over D^2.
struct BidiskRule {
  QuadratureRule disk;

  /// sum over the product rule of w f(zeta).
  template <typename F>
  Complex integrate(F&& f) const {
    return tensor_integrate<Complex>(disk, disk, std::forward<F>(f));
  }
};

BidiskRule bidisk_rule(const DiskQuadrature& quad);

/// |int B_nu(z, .) f nu dV - f(z)|.
double reproducing_check(const SymmetricBergmanElement& f, const Point2& z,
                         const DiskQuadrature& quad = {16, 64});

/// Representative (z1, z2) in D^2 with (z1 + z2, z1 z2) = s. Throws DomainError
/// when s is not in the symmetrized bidisk.
Point2 fiber_representative(const SymmetrizedPoint& s);

/// Bergman kernel of the symmetrized bidisk, 2 B_nu(z, zeta) at fiber representatives.
Complex kernel_G(const SymmetrizedPoint& s, const SymmetrizedPoint& t);
/// The same kernel with D^2 representatives given directly.
Complex kernel_G_lifted(const Point2& z, const Point2& zeta);

/// |int_G K_G(s, .) g dV - g(s)| with the integral over G written as
/// (1/2) int_{D^2} (. o Phi) nu dV.
double reproducing_check_G(const std::function<Complex(const Point2&)>& g_lifted, const Point2& z,
                           const DiskQuadrature& quad = {16, 64});

}  // namespace bergman
