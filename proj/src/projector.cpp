#include "bergman/projector.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <sstream>

#include "bergman/roots.hpp"

namespace bergman {

SampledFunction polynomial_function(std::vector<Complex> coeffs) {
  std::ostringstream name;
  name << "poly(deg " << (coeffs.empty() ? 0 : coeffs.size() - 1) << ")";
  const ComplexVector c = Eigen::Map<const ComplexVector>(coeffs.data(), Eigen::Index(coeffs.size()));
  SampledFunction out;
  out.eval = [c](const Complex& z) { return c.size() == 0 ? Complex(0.0) : evaluate_polynomial(c, z); };
  out.name = name.str();
  out.polynomial = std::move(coeffs);
  return out;
}

SampledFunction project_disk(const SampledFunction& f, const DiskQuadrature& quad) {
  const auto rule = disk_rule(quad);
  const int N = std::min(quad.radial, quad.angular / 2);
  if (N < 1) throw DomainError("project_disk: need angular order >= 2");
  // c_n = ((n + 1) / pi) <f, z^n>; the rule is exact for z^m conj(z)^n with m, n < N,
  // so the truncated sum is an orthogonal projection for the discrete inner product.
  std::vector<Complex> coeffs(std::size_t(N), 0.0);
  for (Eigen::Index i = 0; i < rule.size(); ++i) {
    const Complex v = f(rule.nodes[i]);
    if (!std::isfinite(std::abs(v))) throw QuadratureError("project_disk: non-finite sample of f");
    const Complex cz = std::conj(rule.nodes[i]);
    Complex pw = rule.weights[i] * v;
    for (int n = 0; n < N; ++n, pw *= cz) coeffs[std::size_t(n)] += pw;
  }
  for (int n = 0; n < N; ++n) coeffs[std::size_t(n)] *= (n + 1) / kPi;
  auto out = polynomial_function(coeffs);
  out.name = "B(" + f.name + ")";
  return out;
}

Complex inner_product_disk(const SampledFunction& f, const SampledFunction& g, const DiskQuadrature& quad) {
  const auto rule = disk_rule(quad);
  return rule.integrate([&](const Complex& z) { return f(z) * std::conj(g(z)); });
}

BellResidual bell_transform_residual(const SampledFunction2& h, const std::vector<Point2>& grid,
                                     const DiskQuadrature& quad) {
  const auto rule = disk_rule(quad);
  const Eigen::Index M = rule.size();
  // h o Phi on the product rule.
  ComplexMatrix hphi(M, M);
  for (Eigen::Index i = 0; i < M; ++i)
    for (Eigen::Index j = 0; j < M; ++j) {
      const Complex a = rule.nodes[i], b = rule.nodes[j];
      Point2 st;
      st << a + b, a * b;
      hphi(i, j) = h(st);
    }
  if (!hphi.allFinite()) throw QuadratureError("bell_transform_residual: non-finite samples of h");

  BellResidual out;
  for (const auto& z : grid) {
    const Complex jac = z[0] - z[1];
    const auto sums = ordered_sum<Eigen::Vector2cd>(
        std::size_t(M),
        [&](std::size_t ii) {
          const auto i = Eigen::Index(ii);
          Eigen::Vector2cd row = Eigen::Vector2cd::Zero();
          Point2 zeta;
          zeta[0] = rule.nodes[i];
          const Complex k1 = kernel_disk(z[0], zeta[0]);
          for (Eigen::Index j = 0; j < M; ++j) {
            zeta[1] = rule.nodes[j];
            const Complex w = rule.weights[j] * hphi(i, j);
            row[0] += w * k1 * kernel_disk(z[1], zeta[1]) * (zeta[0] - zeta[1]);
            row[1] += w * kernel_G_lifted(z, zeta) * 0.5 * nu_weight(zeta);
          }
          return Eigen::Vector2cd(rule.weights[i] * row);
        },
        Eigen::Vector2cd::Zero());
    const Complex lhs = sums[0], rhs = jac * sums[1];
    out.residual = std::max(out.residual, std::abs(lhs - rhs));
    out.lhs_scale = std::max(out.lhs_scale, std::abs(lhs));
  }
  return out;
}

std::vector<Point2> bidisk_grid(int count, double radius, std::uint64_t seed) {
  if (count < 1 || !(radius > 0.0 && radius < 1.0)) throw DomainError("bidisk_grid: need count >= 1, radius in (0, 1)");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Point2> out;
  for (int i = 0; i < count; ++i) {
    Point2 z;
    z << std::polar(radius * std::sqrt(u(rng)), 2.0 * kPi * u(rng)),
        std::polar(radius * std::sqrt(u(rng)), 2.0 * kPi * u(rng));
    out.push_back(z);
  }
  return out;
}

double NormRatioReport::max_ratio() const {
  double m = 0.0;
  for (const auto& e : entries)
    if (!e.divergent) m = std::max(m, e.ratio);
  return m;
}

std::string describe(const PowerWeight& mu) {
  std::ostringstream os;
  os.precision(10);
  os << mu.prefactor;
  for (const auto& f : mu.factors) os << " |z - (" << f.center.real() << "," << f.center.imag() << ")|^" << f.exponent;
  return os.str();
}

NormRatioReport weighted_norm_ratio(double p, const PowerWeight& mu, const std::vector<SampledFunction>& fs,
                                    const BoxQuadrature& box) {
  if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("weighted_norm_ratio: p must lie in (1, inf)");
  if (!(box.y0 > 0.0)) throw DomainError("weighted_norm_ratio: the box must stay above the real axis");
  NormRatioReport report;
  report.p = p;
  report.weight = describe(mu);
  report.box = box;

  const PowerWeight weight = mu.normalized();
  bool divergent = false;
  double total_exponent = 0.0;
  for (const auto& f : weight.factors) {
    total_exponent += f.exponent;
    const Complex c = f.center;
    const bool in_box = c.real() >= box.x0 && c.real() <= box.x1 && c.imag() >= 0.0 && c.imag() <= box.y1;
    // The box reaches down to y0; a center on or near the real axis below it
    // still sits on the closure of the domain being probed.
    if (in_box && f.exponent <= -2.0) divergent = true;
  }

  const auto rule = box_rule(box);
  const Eigen::Index N = rule.size();
  report.nodes = std::size_t(N);
  Eigen::VectorXd mu_at(N);
  for (Eigen::Index i = 0; i < N; ++i) mu_at[i] = weight_eval(weight, rule.nodes[i]);
  const double R0 = std::min({box.x1, -box.x0, box.y1});

  for (const auto& f : fs) {
    NormRatioEntry e;
    e.function = f.name;
    e.divergent = divergent;
    ComplexVector fv(N);
    double l1 = 0.0, fmax = 0.0;
    for (Eigen::Index i = 0; i < N; ++i) {
      fv[i] = f(rule.nodes[i]);
      l1 += rule.weights[i] * std::abs(fv[i]);
      fmax = std::max(fmax, std::abs(fv[i]));
    }
    if (!fv.allFinite()) throw QuadratureError("weighted_norm_ratio: non-finite samples of " + f.name);
    if (divergent) {
      e.numerator = e.denominator = e.ratio = kInf;
      report.entries.push_back(e);
      continue;
    }
    // Nodes where f is negligible do not contribute to B f.
    std::vector<Eigen::Index> support;
    for (Eigen::Index i = 0; i < N; ++i)
      if (std::abs(fv[i]) > 1e-17 * fmax) support.push_back(i);

    const double num = ordered_sum<double>(std::size_t(N), [&](std::size_t ii) {
      const auto i = Eigen::Index(ii);
      Complex bf = 0.0;
      for (const auto j : support) bf += rule.weights[j] * kernel_halfplane(rule.nodes[i], rule.nodes[j]) * fv[j];
      return rule.weights[i] * std::pow(std::abs(bf), p) * mu_at[i];
    });
    double den = 0.0;
    for (Eigen::Index i = 0; i < N; ++i) den += rule.weights[i] * std::pow(std::abs(fv[i]), p) * mu_at[i];
    e.numerator = std::pow(num, 1.0 / p);
    e.denominator = std::pow(den, 1.0 / p);
    e.ratio = e.denominator > 0.0 ? e.numerator / e.denominator : 0.0;
    const double C = l1 / kPi;
    const double decay = 2.0 * p - total_exponent - 2.0;
    e.tail_estimate = decay > 0.0 ? kPi * std::pow(C, p) * std::pow(R0, -decay) / decay * weight.prefactor : kInf;
    report.entries.push_back(e);
  }
  return report;
}

SampledFunction gaussian_bump(Complex center, double width) {
  if (!(width > 0.0)) throw DomainError("gaussian_bump: width must be positive");
  std::ostringstream name;
  name << "gauss(" << center.real() << "," << center.imag() << ";" << width << ")";
  return {[center, width](const Complex& z) { return Complex(std::exp(-std::norm(z - center) / (2.0 * width * width))); },
          name.str(), std::nullopt};
}

SampledFunction concentrating_reciprocal(Complex w0, double eps) {
  if (!(eps > 0.0)) throw DomainError("concentrating_reciprocal: eps must be positive");
  std::ostringstream name;
  name << "recip(eps=" << eps << ")";
  return {[w0, eps](const Complex& z) { return std::exp(-std::norm(z - w0)) / (z - w0 + eps * kI); }, name.str(),
          std::nullopt};
}

std::vector<SampledFunction> standard_test_family() {
  auto windowed = SampledFunction{
      [](const Complex& z) { return (z * z - 1.0) * std::exp(-2.0 * std::norm(z - Complex(0.0, 3.0))); },
      "poly-window", std::nullopt};
  return {gaussian_bump({0.0, 3.0}, 0.5), gaussian_bump({1.5, 2.5}, 0.4), windowed};
}

}  // namespace bergman
