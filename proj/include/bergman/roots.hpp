#pragma once

#include <vector>

#include "bergman/types.hpp"

namespace bergman {

struct RootCluster {
  Complex value;
  int multiplicity = 1;
};

/// Roots of a complex polynomial, with repetition in `roots` and grouped by
/// multiplicity in `clusters`.
struct PolynomialRoots {
  std::vector<Complex> roots;
  std::vector<RootCluster> clusters;

  double max_modulus() const;
};

/// Horner evaluation; `coeffs` in ascending order c0 + c1 z + ... + cn z^n.
Complex evaluate_polynomial(const ComplexVector& coeffs, const Complex& z);

/// Roots of c0 + c1 z + ... + cn z^n (cn != 0, degree <= 32).
///
/// Degrees 1 and 2 use closed forms; higher degrees use the eigenvalues of the
/// companion matrix followed by Newton polishing. Clusters of computed roots
/// whose centroid is a root to working precision are snapped to a single
/// multiple root, which recovers multiple roots far beyond the sqrt(eps)
/// accuracy of the raw eigenvalues.
///
/// Throws DomainError for non-finite or degenerate input, NumericalError when
/// the eigen solver fails or a root cannot be polished to a small residual.
PolynomialRoots polynomial_roots(const ComplexVector& coeffs);

/// Ascending coefficients of w^n - p1 w^(n-1) + p2 w^(n-2) - ... + (-1)^n pn.
ComplexVector symmetrized_polynomial(const ComplexVector& elementary);

}  // namespace bergman
