#include "bergman/quadrature.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace bergman {

GaussLegendre gauss_legendre(int n, double a, double b) {
  if (n < 1) throw DomainError("gauss_legendre: need at least one node");
  GaussLegendre out{Eigen::VectorXd(n), Eigen::VectorXd(n)};
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      dp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    {
      // Recompute the derivative at the converged node for the weight.
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      dp = n * (z * p1 - p2) / (z * z - 1.0);
    }
    const double w = 2.0 * half / ((1.0 - z * z) * dp * dp);
    out.nodes[i] = mid - half * z;
    out.nodes[n - 1 - i] = mid + half * z;
    out.weights[i] = out.weights[n - 1 - i] = w;
  }
  return out;
}

QuadratureRule disk_rule(const DiskQuadrature& q, Complex center, double radius) {
  if (q.radial < 1 || q.angular < 1) throw DomainError("disk_rule: orders must be positive");
  if (!(radius > 0.0)) throw DomainError("disk_rule: radius must be positive");
  const auto gl = gauss_legendre(q.radial, 0.0, radius);
  QuadratureRule rule;
  rule.radial_order = q.radial;
  rule.angular_order = q.angular;
  rule.nodes.resize(Eigen::Index(q.radial) * q.angular);
  rule.weights.resize(rule.nodes.size());
  const double dtheta = 2.0 * kPi / q.angular;
  Eigen::Index idx = 0;
  for (int i = 0; i < q.radial; ++i)
    for (int k = 0; k < q.angular; ++k, ++idx) {
      rule.nodes[idx] = center + std::polar(gl.nodes[i], k * dtheta);
      rule.weights[idx] = gl.weights[i] * gl.nodes[i] * dtheta;
    }
  return rule;
}

namespace {

// Breakpoints of [lo, hi] with widths growing geometrically away from `focus`.
std::vector<double> graded_breaks(double lo, double hi, double focus, double ratio, double min_width,
                                  double max_width) {
  focus = std::clamp(focus, lo, hi);
  std::vector<double> left, right;
  double w = min_width;
  for (double x = focus; x > lo;) {
    x = std::max(lo, x - w);
    left.push_back(x);
    w = std::min(max_width, w / ratio);
  }
  w = min_width;
  for (double x = focus; x < hi;) {
    x = std::min(hi, x + w);
    right.push_back(x);
    w = std::min(max_width, w / ratio);
  }
  std::vector<double> out(left.rbegin(), left.rend());
  out.push_back(focus);
  out.insert(out.end(), right.begin(), right.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

QuadratureRule box_rule(const BoxQuadrature& q) {
  if (!(q.x1 > q.x0 && q.y1 > q.y0)) throw DomainError("box_rule: empty box");
  if (!(q.ratio > 0.0 && q.ratio < 1.0)) throw DomainError("box_rule: ratio must lie in (0, 1)");
  const auto xb = graded_breaks(q.x0, q.x1, q.focus_x, q.ratio, q.min_width, q.max_width);
  const auto yb = graded_breaks(q.y0, q.y1, q.y0, q.ratio, q.min_width, q.max_width);
  const auto ref = gauss_legendre(q.order, 0.0, 1.0);

  std::vector<double> xs, wx, ys, wy;
  for (std::size_t p = 0; p + 1 < xb.size(); ++p)
    for (int i = 0; i < q.order; ++i) {
      xs.push_back(xb[p] + (xb[p + 1] - xb[p]) * ref.nodes[i]);
      wx.push_back((xb[p + 1] - xb[p]) * ref.weights[i]);
    }
  for (std::size_t p = 0; p + 1 < yb.size(); ++p)
    for (int i = 0; i < q.order; ++i) {
      ys.push_back(yb[p] + (yb[p + 1] - yb[p]) * ref.nodes[i]);
      wy.push_back((yb[p + 1] - yb[p]) * ref.weights[i]);
    }

  QuadratureRule rule;
  rule.radial_order = q.order;
  rule.angular_order = q.order;
  rule.nodes.resize(Eigen::Index(xs.size() * ys.size()));
  rule.weights.resize(rule.nodes.size());
  Eigen::Index idx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j, ++idx) {
      rule.nodes[idx] = Complex(xs[i], ys[j]);
      rule.weights[idx] = wx[i] * wy[j];
    }
  return rule;
}

unsigned thread_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BERGMAN_LAB_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) n = std::min<unsigned>(n, unsigned(cap));
    } catch (const std::exception&) {
    }
  }
  return n;
}

}  // namespace bergman
