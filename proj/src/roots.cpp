#include "bergman/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "bergman/domains.hpp"

namespace bergman {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Sum |c_i| |z|^i, the scale of the rounding error in Horner evaluation.
double evaluation_scale(const ComplexVector& coeffs, const Complex& z) {
  const double r = std::abs(z);
  double scale = 0.0;
  for (Eigen::Index i = coeffs.size() - 1; i >= 0; --i) scale = scale * r + std::abs(coeffs[i]);
  return scale;
}

ComplexVector derivative(const ComplexVector& coeffs) {
  if (coeffs.size() <= 1) return ComplexVector::Zero(1);
  ComplexVector out(coeffs.size() - 1);
  for (Eigen::Index i = 1; i < coeffs.size(); ++i) out[i - 1] = double(i) * coeffs[i];
  return out;
}

Complex newton_polish(const ComplexVector& coeffs, const ComplexVector& dcoeffs, Complex z,
                      int max_iter = 8) {
  double best = std::abs(evaluate_polynomial(coeffs, z));
  for (int it = 0; it < max_iter && best > 0.0; ++it) {
    const Complex d = evaluate_polynomial(dcoeffs, z);
    if (d == Complex(0.0)) break;
    const Complex next = z - evaluate_polynomial(coeffs, z) / d;
    const double val = std::abs(evaluate_polynomial(coeffs, next));
    if (!(val < best)) break;
    best = val;
    z = next;
  }
  return z;
}

std::vector<Complex> quadratic_roots(const Complex& a, const Complex& b, const Complex& c) {
  Complex d = std::sqrt(b * b - 4.0 * a * c);
  if ((std::conj(b) * d).real() < 0.0) d = -d;
  const Complex q = -0.5 * (b + d);
  if (q == Complex(0.0)) return {Complex(0.0), Complex(0.0)};
  return {q / a, c / q};
}

std::vector<Complex> companion_roots(const ComplexVector& coeffs) {
  const Eigen::Index n = coeffs.size() - 1;
  const Complex lead = coeffs[n];
  ComplexMatrix companion = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) companion(i, n - 1) = -coeffs[i] / lead;
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(companion, false);
  if (solver.info() != Eigen::Success)
    throw NumericalError("polynomial_roots: companion eigenvalue iteration did not converge");
  const ComplexVector& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

// Groups roots by single linkage within a relative radius, then snaps each
// group whose refined centroid is a root to working precision.
std::vector<RootCluster> cluster_roots(const ComplexVector& coeffs, std::vector<Complex>& roots) {
  const std::size_t n = roots.size();
  std::vector<int> label(n);
  std::iota(label.begin(), label.end(), 0);
  const auto find = [&](int i) {
    while (label[i] != i) i = label[i] = label[label[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double radius = 1e-4 * std::max({1.0, std::abs(roots[i]), std::abs(roots[j])});
      if (std::abs(roots[i] - roots[j]) < radius) label[find(int(i))] = find(int(j));
    }

  std::vector<RootCluster> clusters;
  std::vector<int> seen(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const int root = find(int(i));
    if (seen[root] < 0) {
      seen[root] = int(clusters.size());
      clusters.push_back({roots[i], 0});
      clusters.back().value = 0.0;
    }
    auto& cl = clusters[seen[root]];
    cl.value += roots[i];
    cl.multiplicity += 1;
  }

  std::vector<RootCluster> out;
  std::vector<Complex> snapped;
  for (auto& cl : clusters) {
    cl.value /= double(cl.multiplicity);
    if (cl.multiplicity == 1) {
      out.push_back(cl);
      snapped.push_back(cl.value);
      continue;
    }
    // An m-fold root is a simple root of the (m-1)-th derivative.
    ComplexVector dk = coeffs;
    for (int k = 0; k < cl.multiplicity - 1; ++k) dk = derivative(dk);
    const Complex centre = newton_polish(dk, derivative(dk), cl.value, 20);
    const double residual = std::abs(evaluate_polynomial(coeffs, centre));
    if (residual <= 64.0 * kEps * evaluation_scale(coeffs, centre)) {
      out.push_back({centre, cl.multiplicity});
      for (int k = 0; k < cl.multiplicity; ++k) snapped.push_back(centre);
    } else {
      // Genuinely distinct close roots: keep the individual values.
      for (std::size_t i = 0; i < n; ++i)
        if (seen[find(int(i))] == int(&cl - clusters.data())) {
          out.push_back({roots[i], 1});
          snapped.push_back(roots[i]);
        }
    }
  }
  roots = std::move(snapped);
  return out;
}

}  // namespace

double PolynomialRoots::max_modulus() const {
  double r = 0.0;
  for (const auto& z : roots) r = std::max(r, std::abs(z));
  return r;
}

Complex evaluate_polynomial(const ComplexVector& coeffs, const Complex& z) {
  Complex acc = 0.0;
  for (Eigen::Index i = coeffs.size() - 1; i >= 0; --i) acc = acc * z + coeffs[i];
  return acc;
}

PolynomialRoots polynomial_roots(const ComplexVector& coeffs) {
  if (coeffs.size() < 2) throw DomainError("polynomial_roots: degree must be at least 1");
  if (coeffs.size() > 33) throw DomainError("polynomial_roots: degree above 32 unsupported");
  for (Eigen::Index i = 0; i < coeffs.size(); ++i)
    if (!is_finite(coeffs[i])) throw DomainError("polynomial_roots: non-finite coefficient");
  const Eigen::Index n = coeffs.size() - 1;
  if (coeffs[n] == Complex(0.0)) throw DomainError("polynomial_roots: zero leading coefficient");

  std::vector<Complex> roots;
  if (n == 1) {
    roots = {-coeffs[0] / coeffs[1]};
  } else if (n == 2) {
    roots = quadratic_roots(coeffs[2], coeffs[1], coeffs[0]);
  } else {
    roots = companion_roots(coeffs);
    const ComplexVector d = derivative(coeffs);
    for (auto& r : roots) r = newton_polish(coeffs, d, r);
  }

  for (const auto& r : roots) {
    if (!is_finite(r)) throw NumericalError("polynomial_roots: non-finite root");
    const double residual = std::abs(evaluate_polynomial(coeffs, r));
    if (residual > 1e-6 * std::max(1.0, evaluation_scale(coeffs, r)))
      throw NumericalError("polynomial_roots: root residual too large after polishing");
  }

  PolynomialRoots out;
  out.clusters = cluster_roots(coeffs, roots);
  out.roots = std::move(roots);
  return out;
}

ComplexVector symmetrized_polynomial(const ComplexVector& elementary) {
  const Eigen::Index n = elementary.size();
  ComplexVector coeffs(n + 1);
  coeffs[n] = 1.0;
  double sign = -1.0;
  for (Eigen::Index k = 1; k <= n; ++k, sign = -sign) coeffs[n - k] = sign * elementary[k - 1];
  return coeffs;
}

double symmetrized_root_radius(const SymmetrizedPoint& s) {
  if (s.dimension() < 1) throw DomainError("symmetrized point must have n >= 1");
  return polynomial_roots(symmetrized_polynomial(s.coords)).max_modulus();
}

bool in_symmetrized_polydisk(const SymmetrizedPoint& s) { return symmetrized_root_radius(s) < 1.0; }

bool in_symmetrized_polydisk_closure(const SymmetrizedPoint& s, double tol) {
  return symmetrized_root_radius(s) <= 1.0 + tol;
}

}  // namespace bergman
