#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

#include "bergman/types.hpp"

namespace bergman {

/// Nodes and weights of the n-point Gauss-Legendre rule on [a, b].
struct GaussLegendre {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

GaussLegendre gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// A nodes + weights scheme over a planar region, with the resolution it was
/// built at.
struct QuadratureRule {
  ComplexVector nodes;
  Eigen::VectorXd weights;
  int radial_order = 0;
  int angular_order = 0;

  Eigen::Index size() const { return nodes.size(); }

  template <typename F>
  auto integrate(F&& f) const {
    using T = decltype(f(nodes[0]));
    T acc = T(0);
    for (Eigen::Index i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

/// Resolution of a polar disk rule.
struct DiskQuadrature {
  int radial = 64;
  int angular = 128;
};

/// Polar rule on the disk |z - center| < radius: Gauss-Legendre in r times the
/// uniform (periodic trapezoid) rule in the angle. Integrates z^a conj(z)^b
/// exactly for a + b < 2 * radial - 1 and |a - b| < angular.
QuadratureRule disk_rule(const DiskQuadrature& q, Complex center = 0.0, double radius = 1.0);

/// Tensor-product Gauss-Legendre rule on [x0, x1] x [y0, y1] with panels graded
/// geometrically toward (focus_x, y0): panel widths shrink by `ratio` toward the
/// focus, down to `min_width`.
struct BoxQuadrature {
  double x0 = -8.0, x1 = 8.0, y0 = 1e-3, y1 = 8.0;
  double focus_x = 0.0;
  int order = 6;
  double ratio = 0.5;
  double min_width = 5e-3;
  double max_width = 1.0;
};

QuadratureRule box_rule(const BoxQuadrature& q);

/// Number of worker threads, capped by BERGMAN_LAB_THREADS when set.
unsigned thread_count();

/// Evaluates part(i) for i in [0, n), possibly on several threads, and sums
/// the parts in index order so the result does not depend on the thread count.
template <typename T, typename F>
T ordered_sum(std::size_t n, F&& part, const T& zero = T(0)) {
  std::vector<T> parts(n, zero);
  const unsigned workers = std::min<std::size_t>(thread_count(), n == 0 ? 1 : n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) parts[i] = part(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < n; i += workers) parts[i] = part(i);
      });
    for (auto& th : pool) th.join();
  }
  T acc = zero;
  for (const auto& p : parts) acc += p;
  return acc;
}

/// Sum over the tensor product of two planar rules of w_i w_j f(z_i, z_j).
template <typename T, typename F>
T tensor_integrate(const QuadratureRule& first, const QuadratureRule& second, F&& f,
                   const T& zero = T(0)) {
  return ordered_sum<T>(std::size_t(first.size()), [&](std::size_t i) {
    T row = zero;
    Point2 z;
    z[0] = first.nodes[Eigen::Index(i)];
    for (Eigen::Index j = 0; j < second.size(); ++j) {
      z[1] = second.nodes[j];
      row += second.weights[j] * f(z);
    }
    return T(first.weights[Eigen::Index(i)] * row);
  }, zero);
}

}  // namespace bergman
