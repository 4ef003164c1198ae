#include "bergman/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "bergman/covering.hpp"

namespace bergman {

Complex kernel_disk(const Complex& z, const Complex& w) {
  if (!in_unit_disk(z) || !in_unit_disk(w)) throw DomainError("kernel_disk: points must lie in the unit disk");
  const Complex d = 1.0 - z * std::conj(w);
  return 1.0 / (kPi * d * d);
}

Complex kernel_halfplane(const Complex& z, const Complex& w) {
  if (!in_upper_halfplane(z) || !in_upper_halfplane(w))
    throw DomainError("kernel_halfplane: points must lie in the upper half-plane");
  const Complex d = z - std::conj(w);
  return -1.0 / (kPi * d * d);
}

Complex kernel_bidisk(const Point2& z, const Point2& w) { return kernel_disk(z[0], w[0]) * kernel_disk(z[1], w[1]); }

void check_index(const BasisIndex& idx) {
  if (!(idx.k >= 0 && idx.j > idx.k))
    throw DomainError("basis index needs j > k >= 0, got (" + std::to_string(idx.j) + "," + std::to_string(idx.k) + ")");
}

std::vector<BasisIndex> basis_indices(int max_degree) {
  std::vector<BasisIndex> out;
  for (int d = 1; d <= max_degree; ++d)
    for (int j = d; 2 * j > d; --j) out.push_back({j, d - j});
  std::sort(out.begin(), out.end(), [](const BasisIndex& a, const BasisIndex& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a.j < b.j;
  });
  return out;
}

double basis_normalization(const BasisIndex& idx) {
  check_index(idx);
  return std::sqrt((idx.k + 1.0) * (idx.j + 1.0) / (2.0 * kPi * kPi));
}

Complex basis_nu(const BasisIndex& idx, const Point2& z) {
  return basis_normalization(idx) * basis_quotient(idx, z[0], z[1]);
}

BidiskRule bidisk_rule(const DiskQuadrature& quad) { return {disk_rule(quad)}; }

double basis_norm_integral(const BasisIndex& idx, const DiskQuadrature& quad) {
  check_index(idx);
  const auto rule = bidisk_rule(quad);
  return rule
      .integrate([&](const Point2& z) {
        const Complex v = std::pow(z[0], idx.j) * std::pow(z[1], idx.k) - std::pow(z[0], idx.k) * std::pow(z[1], idx.j);
        return Complex(std::norm(v));
      })
      .real();
}

Complex kernel_nu_series(const Point2& z, const Point2& zeta, int N) {
  if (N < 1) throw DomainError("kernel_nu_series: truncation degree must be >= 1");
  // h_d(x, y) = sum_{t <= d} x^t y^(d-t) by h_d = x^d + y h_{d-1}; the quotient
  // for (j, k) is (x y)^k h_{j-k-1}.
  const auto complete = [N](const Complex& x, const Complex& y) {
    std::vector<Complex> h(std::size_t(N) + 1);
    Complex xd = 1.0;
    h[0] = 1.0;
    for (int d = 1; d <= N; ++d) {
      xd *= x;
      h[std::size_t(d)] = xd + y * h[std::size_t(d) - 1];
    }
    return h;
  };
  const auto hz = complete(z[0], z[1]);
  const auto hw = complete(std::conj(zeta[0]), std::conj(zeta[1]));
  const Complex pz = z[0] * z[1], pw = std::conj(zeta[0] * zeta[1]);
  Complex acc = 0.0;
  Complex pk = 1.0;  // (pz pw)^k
  for (int k = 0; 2 * k + 1 <= N; ++k) {
    for (int j = k + 1; j + k <= N; ++j) {
      const std::size_t d = std::size_t(j - k - 1);
      acc += ((k + 1.0) * (j + 1.0)) * pk * hz[d] * hw[d];
    }
    pk *= pz * pw;
  }
  return acc / (2.0 * kPi * kPi);
}

Complex kernel_nu_closed(const Point2& z, const Point2& zeta) {
  if (!in_unit_disk(z[0]) || !in_unit_disk(z[1]) || !in_unit_disk(zeta[0]) || !in_unit_disk(zeta[1]))
    throw DomainError("kernel_nu_closed: points must lie in the bidisk");
  const Complex c1 = std::conj(zeta[0]), c2 = std::conj(zeta[1]);
  const Complex A = (1.0 - z[0] * c1) * (1.0 - z[1] * c2);
  const Complex B = (1.0 - z[0] * c2) * (1.0 - z[1] * c1);
  return (A + B) / (2.0 * kPi * kPi * A * A * B * B);
}

KernelComparison compare_kernels(const Point2& z, const Point2& zeta, int N) {
  KernelComparison out{z, zeta, kernel_nu_series(z, zeta, N), kernel_nu_closed(z, zeta), N, 0.0};
  out.abs_error = std::abs(out.series_value - out.closed_value);
  return out;
}

Complex SymmetricBergmanElement::operator()(const Point2& z) const {
  Complex acc = 0.0;
  for (const auto& [idx, a] : terms) {
    check_index(idx);
    acc += a * basis_quotient(idx, z[0], z[1]);
  }
  return acc;
}

Complex SymmetricBergmanElement::coefficient(const BasisIndex& idx) const {
  Complex acc = 0.0;
  for (const auto& [i, a] : terms)
    if (i == idx) acc += a;
  return acc;
}

int SymmetricBergmanElement::max_degree() const {
  int d = 0;
  for (const auto& t : terms) d = std::max(d, t.first.degree());
  return d;
}

double reproducing_check(const SymmetricBergmanElement& f, const Point2& z, const DiskQuadrature& quad) {
  if (f.terms.empty()) return 0.0;
  const auto rule = bidisk_rule(quad);
  const Complex value =
      rule.integrate([&](const Point2& zeta) { return kernel_nu_closed(z, zeta) * f(zeta) * nu_weight(zeta); });
  return std::abs(value - f(z));
}

Point2 fiber_representative(const SymmetrizedPoint& s) {
  if (s.dimension() != 2) throw DomainError("fiber_representative: expected a point of the symmetrized bidisk");
  if (!in_symmetrized_polydisk(s)) throw DomainError("fiber_representative: point is not in the symmetrized bidisk");
  const auto fiber = fiber_of_symmetrization(s);
  Point2 out;
  out << fiber.roots[0], fiber.roots[1];
  return out;
}

Complex kernel_G_lifted(const Point2& z, const Point2& zeta) { return 2.0 * kernel_nu_closed(z, zeta); }

Complex kernel_G(const SymmetrizedPoint& s, const SymmetrizedPoint& t) {
  return kernel_G_lifted(fiber_representative(s), fiber_representative(t));
}

double reproducing_check_G(const std::function<Complex(const Point2&)>& g_lifted, const Point2& z,
                           const DiskQuadrature& quad) {
  const auto rule = bidisk_rule(quad);
  const Complex value = rule.integrate(
      [&](const Point2& zeta) { return 0.5 * kernel_G_lifted(z, zeta) * g_lifted(zeta) * nu_weight(zeta); });
  return std::abs(value - g_lifted(z));
}

}  // namespace bergman
