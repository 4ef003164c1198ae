#include "bergman/covering.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/LU>

namespace bergman {

CoveringMap CoveringMap::symmetrization(int n) {
  if (n < 1) throw DomainError("symmetrization map needs n >= 1");
  return {Kind::Symmetrization, n, 1};
}

CoveringMap CoveringMap::hartogs(int m, int n) {
  if (m < 1 || n < 1) throw DomainError("hartogs map needs positive m, n");
  if (std::gcd(m, n) != 1) throw DomainError("hartogs map needs gcd(m, n) = 1");
  return {Kind::Hartogs, n, m};
}

CoveringMap CoveringMap::cayley_product(int n) {
  if (n < 1) throw DomainError("cayley product needs n >= 1");
  return {Kind::CayleyProduct, n, 1};
}

std::string CoveringMap::name() const {
  switch (kind) {
    case Kind::Symmetrization:
      return "sym(" + std::to_string(n) + ")";
    case Kind::Hartogs:
      return "hartogs(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case Kind::CayleyProduct:
      return "cayley(" + std::to_string(n) + ")";
  }
  return "unknown";
}

namespace {

void check_dimension(const CoveringMap& map, const ComplexVector& w) {
  if (w.size() != map.dimension())
    throw DomainError(map.name() + ": expected " + std::to_string(map.dimension()) +
                      " coordinates, got " + std::to_string(w.size()));
}

}  // namespace

ComplexVector apply_map(const CoveringMap& map, const ComplexVector& w) {
  check_dimension(map, w);
  switch (map.kind) {
    case CoveringMap::Kind::Symmetrization:
      return elementary_symmetric(w);
    case CoveringMap::Kind::Hartogs: {
      ComplexVector out(2);
      out << w[0] * std::pow(w[1], map.n), std::pow(w[1], map.m);
      return out;
    }
    case CoveringMap::Kind::CayleyProduct:
      return w.unaryExpr([](const Complex& z) { return cayley(z); });
  }
  return {};
}

Complex jacobian_det(const CoveringMap& map, const ComplexVector& w) {
  check_dimension(map, w);
  switch (map.kind) {
    case CoveringMap::Kind::Symmetrization:
      return vandermonde_jacobian(w);
    case CoveringMap::Kind::Hartogs:
      return double(map.m) * std::pow(w[1], map.n + map.m - 1);
    case CoveringMap::Kind::CayleyProduct: {
      Complex out = 1.0;
      for (Eigen::Index j = 0; j < w.size(); ++j) out *= cayley_derivative(w[j]);
      return out;
    }
  }
  return {};
}

JacobianEstimate numeric_jacobian_det(const CoveringMap& map, const ComplexVector& w, double h) {
  if (!(h >= 1e-7 && h <= 1e-3)) throw DomainError("numeric_jacobian_det: h must lie in [1e-7, 1e-3]");
  check_dimension(map, w);
  const Eigen::Index n = w.size();
  ComplexMatrix jac(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    ComplexVector plus = w, minus = w;
    plus[k] += h;
    minus[k] -= h;
    jac.col(k) = (apply_map(map, plus) - apply_map(map, minus)) / (2.0 * h);
  }
  Eigen::FullPivLU<ComplexMatrix> lu(jac);
  JacobianEstimate out;
  out.det = lu.determinant();
  out.rcond = lu.rcond();
  out.ill_conditioned = !(out.rcond > 1e-10);
  return out;
}

std::pair<Complex, Complex> hartogs_cover(const Complex& w1, const Complex& w2, int m, int n) {
  const auto map = CoveringMap::hartogs(m, n);
  if (w2 == Complex(0.0)) throw DomainError("hartogs_cover: w2 = 0 is not in the punctured disk");
  ComplexVector w(2);
  w << w1, w2;
  const ComplexVector z = apply_map(map, w);
  return {z[0], z[1]};
}

Fiber fiber_of_symmetrization(const SymmetrizedPoint& s) {
  const auto n = s.dimension();
  if (n < 1) throw DomainError("fiber_of_symmetrization: need n >= 1");
  if (n > 20) throw DomainError("fiber_of_symmetrization: n! overflows for n > 20");
  auto roots = polynomial_roots(symmetrized_polynomial(s.coords));
  Fiber out;
  out.roots = std::move(roots.roots);
  out.clusters = std::move(roots.clusters);
  const auto factorial = [](int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= std::uint64_t(i);
    return f;
  };
  out.cardinality = factorial(int(n));
  for (const auto& cl : out.clusters) out.cardinality /= factorial(cl.multiplicity);
  return out;
}

Complex FactorSpec::center(const ComplexVector& z) const {
  switch (kind) {
    case CenterKind::Constant:
      return constant;
    case CenterKind::OtherVariable:
      return z[other - 1];
    case CenterKind::CayleyPole:
      return -kI;
    case CenterKind::CayleyZero:
      return kI;
  }
  return {};
}

std::string FactorSpec::describe() const {
  std::ostringstream os;
  os << (multiplicity > 0 ? "zero" : "pole") << "@";
  switch (kind) {
    case CenterKind::Constant:
      os << constant;
      break;
    case CenterKind::OtherVariable:
      os << "z" << other;
      break;
    case CenterKind::CayleyPole:
      os << "-i";
      break;
    case CenterKind::CayleyZero:
      os << "+i";
      break;
  }
  os << " x" << std::abs(multiplicity);
  return os.str();
}

QFactorization q_weight_factorization(const CoveringMap& map) {
  QFactorization out{map, {}};
  switch (map.kind) {
    case CoveringMap::Kind::Symmetrization:
      // psi(a) - psi(b) = 2i (b - a) / ((i + a)(i + b)) and psi' = -2i / (i + z)^2.
      for (int j = 1; j <= map.n; ++j) {
        VariableFactorization var{j, {}};
        for (int k = 1; k <= map.n; ++k)
          if (k != j) var.factors.push_back({j, CenterKind::OtherVariable, k, {}, 1});
        var.factors.push_back({j, CenterKind::CayleyPole, 0, {}, -(map.n + 1)});
        out.variables.push_back(std::move(var));
      }
      break;
    case CoveringMap::Kind::Hartogs: {
      // Q = psi'(z1) psi'(z2) m psi(z2)^(n+m-1).
      const int d = map.n + map.m - 1;
      out.variables.push_back({1, {{1, CenterKind::CayleyPole, 0, {}, -2}}});
      out.variables.push_back(
          {2, {{2, CenterKind::CayleyZero, 0, {}, d}, {2, CenterKind::CayleyPole, 0, {}, -(d + 2)}}});
      break;
    }
    case CoveringMap::Kind::CayleyProduct:
      for (int j = 1; j <= map.n; ++j)
        out.variables.push_back({j, {{j, CenterKind::CayleyPole, 0, {}, -2}}});
      break;
  }
  return out;
}

Complex q_weight(const CoveringMap& map, const ComplexVector& z) {
  check_dimension(map, z);
  const ComplexVector w = z.unaryExpr([](const Complex& x) { return cayley(x); });
  Complex jpsi = 1.0;
  for (Eigen::Index j = 0; j < z.size(); ++j) jpsi *= cayley_derivative(z[j]);
  return jpsi * jacobian_det(map, w);
}

double factored_modulus(const QFactorization& fact, const ComplexVector& z) {
  double out = 1.0;
  for (const auto& var : fact.variables)
    for (const auto& f : var.factors) {
      if (f.kind == CenterKind::OtherVariable && f.other < f.variable) continue;
      out *= std::pow(std::abs(z[f.variable - 1] - f.center(z)), double(f.multiplicity));
    }
  return out;
}

double estimate_constant(const QFactorization& fact, const ComplexVector& z) {
  return std::abs(q_weight(fact.map, z)) / factored_modulus(fact, z);
}

}  // namespace bergman
