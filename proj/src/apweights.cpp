#include "bergman/apweights.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "bergman/quadrature.hpp"

namespace bergman {

PowerWeight PowerWeight::power(Complex center, double exponent, double prefactor) {
  if (!(prefactor > 0.0)) throw DomainError("PowerWeight: prefactor must be positive");
  return {prefactor, {{center, exponent}}};
}

PowerWeight PowerWeight::pow(double t) const {
  PowerWeight out{std::pow(prefactor, t), factors};
  for (auto& f : out.factors) f.exponent *= t;
  return out;
}

PowerWeight PowerWeight::scaled(double c) const {
  if (!(c > 0.0)) throw DomainError("PowerWeight::scaled: factor must be positive");
  PowerWeight out = *this;
  out.prefactor *= c;
  return out;
}

PowerWeight PowerWeight::normalized() const {
  PowerWeight out{prefactor, {}};
  for (const auto& f : factors) {
    auto it = std::find_if(out.factors.begin(), out.factors.end(),
                           [&](const PowerFactor& g) { return g.center == f.center; });
    if (it == out.factors.end())
      out.factors.push_back(f);
    else
      it->exponent += f.exponent;
  }
  std::erase_if(out.factors, [](const PowerFactor& f) { return f.exponent == 0.0; });
  return out;
}

PowerWeight operator*(const PowerWeight& a, const PowerWeight& b) {
  PowerWeight out{a.prefactor * b.prefactor, a.factors};
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

double weight_eval(const PowerWeight& mu, const Complex& z) {
  double out = mu.prefactor;
  for (const auto& f : mu.factors) {
    if (f.exponent == 0.0) continue;
    const double d = std::abs(z - f.center);
    if (d == 0.0 && f.exponent < 0.0) throw DomainError("weight_eval: evaluation at a singular center");
    out *= std::pow(d, f.exponent);
  }
  return out;
}

HalfDiskQuadrature HalfDiskQuadrature::refined() const {
  HalfDiskQuadrature out = *this;
  out.radial_order *= 2;
  out.angular_order *= 2;
  out.smooth_radial *= 2;
  out.smooth_angular *= 2;
  return out;
}

namespace {

double dot(const Complex& a, const Complex& b) { return (a * std::conj(b)).real(); }

// {z : dot(z, normal) <= offset}, |normal| = 1.
struct HalfPlane {
  Complex normal;
  double offset;
};

struct Anchor {
  Complex point;
  bool exact = false;
  double exact_exponent = 0.0;
  double nearest = kInf;  // distance of the closest center outside the half-disk
  std::vector<std::size_t> exact_factors;
};

Complex project_to_half_disk(const Complex& c, const DiskSpec& disk) {
  const Complex x{disk.center_x, 0.0};
  const double R = disk.radius;
  if (c.imag() >= 0.0 && std::abs(c - x) <= R) return c;
  Complex best{std::clamp(c.real(), disk.center_x - R, disk.center_x + R), 0.0};
  if (c != x) {
    const Complex arc = x + R * (c - x) / std::abs(c - x);
    if (arc.imag() >= 0.0 && std::abs(c - arc) < std::abs(c - best)) best = arc;
  }
  return best;
}

class HalfDiskIntegrator {
 public:
  HalfDiskIntegrator(const PowerWeight& mu, const DiskSpec& disk, const HalfDiskQuadrature& quad)
      : mu_(mu.normalized()),
        disk_(disk),
        quad_(quad),
        x_(disk.center_x, 0.0),
        radial_(gauss_legendre(quad.radial_order, 0.0, 1.0)),
        angular_(gauss_legendre(quad.angular_order, 0.0, 1.0)) {
    log_prefactor_ = std::log(mu_.prefactor);
  }

  HalfDiskIntegral run() {
    const double R = disk_.radius;
    std::vector<Anchor> anchors;
    for (std::size_t j = 0; j < mu_.factors.size(); ++j) {
      const auto& f = mu_.factors[j];
      const Complex a = project_to_half_disk(f.center, disk_);
      const double d = std::abs(f.center - a);
      if (d == 0.0 && f.exponent <= -2.0) return {kInf, true};
      if (d >= quad_.anchor_reach * R) continue;
      auto it = std::find_if(anchors.begin(), anchors.end(),
                             [&](const Anchor& A) { return std::abs(A.point - a) <= 1e-12 * R; });
      if (it == anchors.end()) {
        Anchor fresh;
        fresh.point = a;
        anchors.push_back(fresh);
        it = anchors.end() - 1;
      }
      if (d == 0.0) {
        it->point = f.center;
        it->exact = true;
        it->exact_exponent += f.exponent;
        it->exact_factors.push_back(j);
      } else {
        it->nearest = std::min(it->nearest, d);
      }
    }
    // Exact factors that cancelled out leave a plain anchor.
    for (auto& A : anchors)
      if (A.exact && A.exact_exponent == 0.0) A.exact = false;

    double total = 0.0;
    if (anchors.empty()) {
      total = smooth_rule();
    } else {
      for (std::size_t k = 0; k < anchors.size(); ++k) total += cell(anchors, k);
    }
    if (!std::isfinite(total)) throw QuadratureError("integrate_half_disk: non-finite quadrature sum");
    return {total, false};
  }

 private:
  double log_weight(const Complex& z, const std::vector<std::size_t>& skip) const {
    double acc = log_prefactor_;
    for (std::size_t j = 0; j < mu_.factors.size(); ++j) {
      if (!skip.empty() && std::find(skip.begin(), skip.end(), j) != skip.end()) continue;
      acc += mu_.factors[j].exponent * std::log(std::abs(z - mu_.factors[j].center));
    }
    return acc;
  }

  double smooth_rule() const {
    const double R = disk_.radius;
    const auto gr = gauss_legendre(quad_.smooth_radial, 0.0, R);
    const auto gt = gauss_legendre(quad_.smooth_angular, 0.0, kPi);
    double acc = 0.0;
    for (int i = 0; i < gr.nodes.size(); ++i) {
      double row = 0.0;
      for (int k = 0; k < gt.nodes.size(); ++k)
        row += gt.weights[k] * std::exp(log_weight(x_ + std::polar(gr.nodes[i], gt.nodes[k]), {}));
      acc += gr.weights[i] * gr.nodes[i] * row;
    }
    return acc;
  }

  double exit_distance(const Complex& a, const Complex& e, const std::vector<HalfPlane>& planes) const {
    const double R = disk_.radius;
    const Complex ax = a - x_;
    const double beta = dot(ax, e);
    const double disc = beta * beta - (std::norm(ax) - R * R);
    double rho = disc > 0.0 ? std::max(0.0, -beta + std::sqrt(disc)) : 0.0;
    for (const auto& h : planes) {
      const double rate = dot(e, h.normal);
      if (rate <= 0.0) continue;
      const double gap = std::max(0.0, h.offset - dot(a, h.normal));
      rho = std::min(rho, gap / rate);
    }
    return rho;
  }

  std::vector<double> corner_angles(const Complex& a, const std::vector<HalfPlane>& planes) const {
    const double R = disk_.radius;
    const double tol = 1e-10 * R;
    const auto feasible = [&](const Complex& v) {
      if (std::abs(v - x_) > R + tol) return false;
      for (const auto& h : planes)
        if (dot(v, h.normal) > h.offset + tol) return false;
      return true;
    };
    std::vector<Complex> vertices;
    for (std::size_t i = 0; i < planes.size(); ++i) {
      const auto& h = planes[i];
      // line with circle
      const Complex p0 = h.offset * h.normal, dir = kI * h.normal;
      const double b = dot(p0 - x_, dir), c = std::norm(p0 - x_) - R * R;
      const double disc = b * b - c;
      if (disc >= 0.0)
        for (double sgn : {-1.0, 1.0}) vertices.push_back(p0 + (-b + sgn * std::sqrt(disc)) * dir);
      // line with line
      for (std::size_t j = i + 1; j < planes.size(); ++j) {
        const auto& g = planes[j];
        const double det = h.normal.real() * g.normal.imag() - h.normal.imag() * g.normal.real();
        if (std::abs(det) < 1e-14) continue;
        const double vx = (h.offset * g.normal.imag() - g.offset * h.normal.imag()) / det;
        const double vy = (h.normal.real() * g.offset - g.normal.real() * h.offset) / det;
        vertices.emplace_back(vx, vy);
      }
    }
    std::vector<double> angles;
    const auto add = [&](const Complex& dir) {
      double t = std::arg(dir);
      if (t < 0.0) t += 2.0 * kPi;
      angles.push_back(t);
    };
    for (const auto& v : vertices)
      if (feasible(v) && std::abs(v - a) > 1e-12 * R) add(v - a);
    for (const auto& h : planes)
      if (std::abs(dot(a, h.normal) - h.offset) <= 1e-12 * R) {
        add(kI * h.normal);
        add(-kI * h.normal);
      }
    if (std::abs(std::abs(a - x_) - R) <= 1e-12 * R && a != x_) {
      add(kI * (a - x_));
      add(-kI * (a - x_));
    }
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end(),
                             [](double u, double v) { return std::abs(u - v) < 1e-13; }),
                 angles.end());
    return angles;
  }

  double cell(const std::vector<Anchor>& anchors, std::size_t k) const {
    const double R = disk_.radius;
    const Anchor& A = anchors[k];
    const Complex a = A.point;
    std::vector<HalfPlane> planes{{-kI, 0.0}};
    for (std::size_t l = 0; l < anchors.size(); ++l) {
      if (l == k) continue;
      const Complex diff = anchors[l].point - a;
      const Complex n = diff / std::abs(diff);
      planes.push_back({n, dot(0.5 * (a + anchors[l].point), n)});
    }

    auto angles = corner_angles(a, planes);
    std::vector<std::pair<double, double>> segments;
    if (angles.empty()) {
      segments.emplace_back(0.0, 2.0 * kPi);
    } else {
      for (std::size_t i = 0; i < angles.size(); ++i) {
        const double lo = angles[i];
        const double hi = i + 1 < angles.size() ? angles[i + 1] : angles[0] + 2.0 * kPi;
        if (hi - lo > 1e-14) segments.emplace_back(lo, hi);
      }
    }

    const double ratio = quad_.grading_ratio;
    int levels = 0;
    if (A.exact) levels = quad_.grading_levels;
    const std::vector<std::size_t>& skip = A.exact_factors;
    const double s = A.exact ? A.exact_exponent : 0.0;

    // The exit distance along a line at distance g from the anchor is
    // g / cos(theta - arg(normal)); its poles sit a quarter turn either side.
    std::vector<double> poles;
    for (const auto& h : planes)
      if (h.offset - dot(a, h.normal) > 1e-12 * R)
        for (double side : {-0.5, 0.5}) poles.push_back(std::arg(h.normal) + side * kPi);
    // On the circle the exit distance vanishes at the tangent directions.
    if (std::abs(std::abs(a - x_) - R) <= 1e-12 * R && a != x_)
      for (double side : {-0.5, 0.5}) poles.push_back(std::arg(a - x_) + side * kPi);
    std::vector<std::pair<double, double>> pieces;
    for (const auto& [lo, hi] : segments) split_angular(lo, hi, poles, pieces, 0);

    double acc = 0.0;
    for (const auto& [t0, t1] : pieces) {
      const double width = t1 - t0;
      {
        for (int q = 0; q < angular_.nodes.size(); ++q) {
          const Complex e = std::polar(1.0, t0 + width * angular_.nodes[q]);
          const double rho = exit_distance(a, e, planes);
          if (rho <= 1e-15 * R) continue;
          int L = levels;
          if (std::isfinite(A.nearest) && A.nearest < rho) {
            const int near_levels = int(std::ceil(std::log(rho / (0.5 * A.nearest)) / std::log(1.0 / ratio)));
            L = std::max(L, std::min(60, near_levels));
          }
          acc += width * angular_.weights[q] * radial_integral(a, e, rho, L, s, skip);
        }
      }
    }
    return acc;
  }

  // Halves [lo, hi] until each piece is shorter than its angular distance to
  // every pole, which keeps the Gauss-Legendre convergence rate uniform.
  static void split_angular(double lo, double hi, const std::vector<double>& poles,
                            std::vector<std::pair<double, double>>& out, int depth) {
    double gap = kInf;
    for (double p : poles) {
      for (double shift : {-2.0 * kPi, 0.0, 2.0 * kPi, 4.0 * kPi}) {
        const double t = p + shift;
        // A pole inside the piece belongs to a constraint that is inactive there.
        if (t <= lo) gap = std::min(gap, lo - t);
        if (t >= hi) gap = std::min(gap, t - hi);
      }
    }
    if (depth < 48 && (hi - lo > 0.25 * kPi || hi - lo > gap)) {
      const double mid = 0.5 * (lo + hi);
      split_angular(lo, mid, poles, out, depth + 1);
      split_angular(mid, hi, poles, out, depth + 1);
      return;
    }
    out.emplace_back(lo, hi);
  }

  // int_0^rho mu(a + r e) r dr, where mu = |z - a|^s * (factors not in skip).
  double radial_integral(const Complex& a, const Complex& e, double rho, int levels, double s,
                         const std::vector<std::size_t>& skip) const {
    const double ratio = quad_.grading_ratio;
    double acc = 0.0;
    double hi = rho;
    for (int k = 0; k < levels; ++k) {
      const double lo = hi * ratio;
      double part = 0.0;
      for (int i = 0; i < radial_.nodes.size(); ++i) {
        const double r = lo + (hi - lo) * radial_.nodes[i];
        part += radial_.weights[i] * std::exp(log_weight(a + r * e, skip) + (s + 1.0) * std::log(r));
      }
      acc += (hi - lo) * part;
      hi = lo;
    }
    double inner = 0.0;
    if (s != 0.0) {
      // r = hi * u^(1/(s+2)) turns r^(s+1) dr into hi^(s+2)/(s+2) du.
      const double beta = 1.0 / (s + 2.0);
      for (int i = 0; i < radial_.nodes.size(); ++i) {
        const double r = hi * std::pow(radial_.nodes[i], beta);
        inner += radial_.weights[i] * std::exp(log_weight(a + r * e, skip));
      }
      inner *= std::pow(hi, s + 2.0) * beta;
    } else {
      for (int i = 0; i < radial_.nodes.size(); ++i) {
        const double r = hi * radial_.nodes[i];
        inner += radial_.weights[i] * std::exp(log_weight(a + r * e, skip)) * r;
      }
      inner *= hi;
    }
    return acc + inner;
  }

  PowerWeight mu_;
  DiskSpec disk_;
  HalfDiskQuadrature quad_;
  Complex x_;
  GaussLegendre radial_;
  GaussLegendre angular_;
  double log_prefactor_ = 0.0;
};

}  // namespace

HalfDiskIntegral integrate_half_disk(const PowerWeight& mu, const DiskSpec& disk,
                                     const HalfDiskQuadrature& quad) {
  if (!(disk.radius > 0.0)) throw DomainError("integrate_half_disk: radius must be positive");
  if (!(mu.prefactor > 0.0)) throw DomainError("integrate_half_disk: prefactor must be positive");
  return HalfDiskIntegrator(mu, disk, quad).run();
}

double n_d_functional(const PowerWeight& mu, double p, const DiskSpec& disk,
                      const HalfDiskQuadrature& quad) {
  if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("n_d_functional: p must lie in (1, inf)");
  const double area = kPi * disk.radius * disk.radius;
  const auto first = integrate_half_disk(mu, disk, quad);
  if (first.divergent) return kInf;
  // mu^(-q/p) = mu^(-1/(p-1)); the outer power p/q = p - 1.
  const auto second = integrate_half_disk(mu.pow(-1.0 / (p - 1.0)), disk, quad);
  if (second.divergent) return kInf;
  return (first.value / area) * std::pow(second.value / area, p - 1.0);
}

std::vector<DiskSpec> DiskFamily::disks() const {
  if (!(x_step > 0.0) || x_max < x_min || log2r_max < log2r_min)
    throw DomainError("DiskFamily: empty or malformed family");
  std::vector<DiskSpec> out;
  const int steps = int(std::floor((x_max - x_min) / x_step + 1e-9));
  for (int i = 0; i <= steps; ++i)
    for (int e = log2r_min; e <= log2r_max; ++e) out.push_back({x_min + i * x_step, std::ldexp(1.0, e)});
  return out;
}

ApReport ap_sweep(const PowerWeight& mu, double p, const std::vector<DiskSpec>& family,
                  const HalfDiskQuadrature& quad) {
  if (family.empty()) throw DomainError("ap_sweep: empty disk family");
  ApReport report;
  report.p = p;
  report.entries.resize(family.size());
  ordered_sum<int>(family.size(), [&](std::size_t i) {
    report.entries[i] = {family[i], n_d_functional(mu, p, family[i], quad)};
    return 0;
  });

  std::map<double, std::vector<DiskValue>> by_center;
  for (const auto& e : report.entries) {
    report.sup_nd = std::max(report.sup_nd, e.value);
    if (std::isinf(e.value)) ++report.divergent_disks;
    by_center[e.disk.center_x].push_back(e);
  }
  report.growth_flag = report.divergent_disks > 0;
  for (auto& [x, column] : by_center) {
    std::sort(column.begin(), column.end(),
              [](const DiskValue& a, const DiskValue& b) { return a.disk.radius > b.disk.radius; });
    for (std::size_t i = 0; i < column.size(); ++i)
      for (std::size_t j = i + 1; j < column.size(); ++j)
        if (column[j].disk.radius <= column[i].disk.radius / 100.0 * (1.0 + 1e-12) &&
            column[j].value > 10.0 * column[i].value)
          report.growth_flag = true;
  }
  return report;
}

PowerWeight zero_factor_weight(Complex w, double alpha, double theta, double p) {
  if (!(alpha > 0.0) || !(theta > 0.0 && theta <= 1.0))
    throw DomainError("zero_factor_weight: need alpha > 0 and theta in (0, 1]");
  return PowerWeight::power(w, alpha * (2.0 - p) / theta);
}

PowerWeight pole_factor_weight(Complex w, double beta, double sigma, double p) {
  if (!(sigma > 0.0 && sigma <= 1.0) || !(beta > 2.0 * sigma))
    throw DomainError("pole_factor_weight: need sigma in (0, 1] and beta > 2 sigma");
  return PowerWeight::power(w, -beta * (2.0 - p) / sigma);
}

Interval prop_mu1_range(double alpha, double theta) {
  if (!(alpha > 0.0)) throw DomainError("prop_mu1_range: alpha must be positive");
  if (!(theta > 0.0 && theta <= 1.0)) throw DomainError("prop_mu1_range: theta must lie in (0, 1]");
  const double num = 2.0 * alpha + 2.0 * theta;
  return make_interval(num / (alpha + 2.0 * theta), num / alpha);
}

Interval prop_mu2_range(double beta, double sigma) {
  if (!(sigma > 0.0 && sigma <= 1.0)) throw DomainError("prop_mu2_range: sigma must lie in (0, 1]");
  if (!(beta > 2.0 * sigma)) throw DomainError("prop_mu2_range: need beta > 2 sigma");
  const double num = 2.0 * beta - 2.0 * sigma;
  return make_interval(num / beta, num / (beta - 2.0 * sigma));
}

}  // namespace bergman
