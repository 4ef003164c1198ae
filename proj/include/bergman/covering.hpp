#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bergman/domains.hpp"
#include "bergman/roots.hpp"
#include "bergman/types.hpp"

namespace bergman {

/// The rational proper maps handled by the library.
///
///  - Symmetrization(n): polydisk onto the symmetrized polydisk, w -> (p1(w), ..., pn(w)).
///  - Hartogs(m, n): disk x punctured disk onto the Hartogs triangle with exponent m/n,
///    (w1, w2) -> (w1 w2^n, w2^m), gcd(m, n) = 1.
///  - CayleyProduct(n): the product Cayley transform from the upper half-plane
///    polydomain onto the polydisk.
struct CoveringMap {
  enum class Kind { Symmetrization, Hartogs, CayleyProduct };

  Kind kind = Kind::Symmetrization;
  int n = 1;
  int m = 1;

  static CoveringMap symmetrization(int n);
  static CoveringMap hartogs(int m, int n);
  static CoveringMap cayley_product(int n);

  /// Number of complex variables.
  int dimension() const { return kind == Kind::Hartogs ? 2 : n; }
  std::string name() const;
};

/// Elementary symmetric polynomials (p1(w), ..., pn(w)) by incremental
/// expansion of prod (t + w_j).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> elementary_symmetric(
    const Eigen::MatrixBase<Derived>& w) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = w.size();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> e = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(n + 1);
  e[0] = Scalar(1);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = j + 1; k >= 1; --k) e[k] += w[j] * e[k - 1];
  return e.tail(n);
}

inline SymmetrizedPoint symmetrize(const ComplexVector& w) {
  if (w.size() < 1) throw DomainError("symmetrize: need n >= 1");
  return {elementary_symmetric(w)};
}

/// prod_{j<k} (w_j - w_k); equals 1 for n = 1.
template <typename Derived>
typename Derived::Scalar vandermonde_jacobian(const Eigen::MatrixBase<Derived>& w) {
  using Scalar = typename Derived::Scalar;
  Scalar out(1);
  for (Eigen::Index j = 0; j < w.size(); ++j)
    for (Eigen::Index k = j + 1; k < w.size(); ++k) out *= w[j] - w[k];
  return out;
}

/// Applies the covering map to w.
ComplexVector apply_map(const CoveringMap& map, const ComplexVector& w);

/// Closed-form complex Jacobian determinant of the map at w.
Complex jacobian_det(const CoveringMap& map, const ComplexVector& w);

struct JacobianEstimate {
  Complex det;
  double rcond = 0.0;          // reciprocal condition estimate of the difference matrix
  bool ill_conditioned = false;
};

/// Determinant of the central-difference matrix of complex partials,
/// dF_i/dw_k ~ (F(w + h e_k) - F(w - h e_k)) / 2h. Requires h in [1e-7, 1e-3].
JacobianEstimate numeric_jacobian_det(const CoveringMap& map, const ComplexVector& w, double h);

/// (w1 w2^n, w2^m). Rejects w2 = 0 and gcd(m, n) != 1.
std::pair<Complex, Complex> hartogs_cover(const Complex& w1, const Complex& w2, int m, int n);

struct Fiber {
  std::vector<Complex> roots;         // with repetition
  std::vector<RootCluster> clusters;  // distinct roots and multiplicities
  std::uint64_t cardinality = 0;      // n! / prod(mult!)
};

/// Preimage of s under Symmetrization(n): the root multiset of the associated
/// monic polynomial. Every ordering of `roots` is a point of the fiber.
Fiber fiber_of_symmetrization(const SymmetrizedPoint& s);

/// Where a factor of the pulled-back Jacobian weight Q sits, as a function of
/// the remaining variables.
enum class CenterKind { Constant, OtherVariable, CayleyPole, CayleyZero };

struct FactorSpec {
  int variable = 1;       // 1-based
  CenterKind kind = CenterKind::Constant;
  int other = 0;          // 1-based, for OtherVariable
  Complex constant{0.0};  // for Constant
  int multiplicity = 1;   // > 0: zero of Q, < 0: pole of Q

  Complex center(const ComplexVector& z) const;
  std::string describe() const;
};

struct VariableFactorization {
  int variable = 1;
  std::vector<FactorSpec> factors;
};

/// Factors of Q = J(Psi) * (J(Phi) o Psi) seen as a function of each variable
/// separately; constants are dropped.
struct QFactorization {
  CoveringMap map;
  std::vector<VariableFactorization> variables;
};

QFactorization q_weight_factorization(const CoveringMap& map);

/// Q(z) = J(Psi)(z) * J(Phi)(Psi(z)) on the upper half-plane polydomain.
Complex q_weight(const CoveringMap& map, const ComplexVector& z);

/// prod |z_j - center|^mult over all factors, each factor shared between two
/// variables counted once.
double factored_modulus(const QFactorization& fact, const ComplexVector& z);

/// |Q(z)| / factored_modulus(z); constant in z for a correct factorization.
double estimate_constant(const QFactorization& fact, const ComplexVector& z);

}  // namespace bergman
