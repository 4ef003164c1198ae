#include "bergman/friedrichs.hpp"

#include <algorithm>
#include <cmath>

#include "bergman/parse.hpp"

namespace bergman {

namespace {

// Sampled w_i w_j conj(f) nu on the product rule, dropping nodes with nu = 0.
struct WeightedSamples {
  std::vector<Point2> nodes;
  std::vector<Complex> values;
};

WeightedSamples sample(const SymmetricBergmanElement& f, const DiskQuadrature& quad, double scale) {
  const auto rule = disk_rule(quad);
  WeightedSamples out;
  for (Eigen::Index i = 0; i < rule.size(); ++i)
    for (Eigen::Index j = 0; j < rule.size(); ++j) {
      Point2 zeta;
      zeta << rule.nodes[i], rule.nodes[j];
      const double nu = nu_weight(zeta);
      if (nu == 0.0) continue;
      out.nodes.push_back(zeta);
      out.values.push_back(scale * rule.weights[i] * rule.weights[j] * std::conj(f(zeta)) * nu);
    }
  return out;
}

FriedrichsValue apply(const WeightedSamples& s, const std::vector<Point2>& grid, double kernel_scale) {
  if (grid.empty()) throw DomainError("friedrichs: empty evaluation grid");
  FriedrichsValue out;
  for (const auto& z : grid) {
    const Complex v = ordered_sum<Complex>(s.nodes.size(), [&](std::size_t i) {
      return kernel_scale * kernel_nu_closed(z, s.nodes[i]) * s.values[i];
    });
    if (!std::isfinite(std::abs(v))) throw QuadratureError("friedrichs: non-finite quadrature sum");
    out.values.push_back(v);
  }
  Complex mean = 0.0;
  for (const auto& v : out.values) mean += v;
  out.value = mean / double(out.values.size());
  for (const auto& v : out.values) out.variation = std::max(out.variation, std::abs(v - out.value));
  return out;
}

}  // namespace

FriedrichsValue friedrichs_nu(const SymmetricBergmanElement& f, const std::vector<Point2>& grid,
                              const DiskQuadrature& quad) {
  return apply(sample(f, quad, 1.0), grid, 1.0);
}

Complex coefficient_a10(const SymmetricBergmanElement& f) { return f(Point2::Zero()); }

Complex friedrichs_G(const SymmetricBergmanElement& f) { return std::conj(coefficient_a10(f)); }

FriedrichsValue friedrichs_G_quadrature(const SymmetricBergmanElement& f, const std::vector<Point2>& grid,
                                        const DiskQuadrature& quad) {
  // K_G = 2 B_nu against the measure (1/2) nu dV.
  return apply(sample(f, quad, 0.5), grid, 2.0);
}

double l2_norm_G(const SymmetricBergmanElement& f, const DiskQuadrature& quad) {
  const auto rule = bidisk_rule(quad);
  const double sq = rule.integrate([&](const Point2& z) { return Complex(std::norm(f(z)) * nu_weight(z)); }).real();
  return std::sqrt(0.5 * std::max(0.0, sq));
}

LinfBound linfty_bound_check(const SymmetricBergmanElement& f, const DiskQuadrature& quad) {
  LinfBound out;
  out.linf = std::abs(friedrichs_G(f));
  out.l2 = l2_norm_G(f, quad);
  out.ratio = out.l2 > 0.0 ? out.linf / out.l2 : 0.0;
  out.bound = std::sqrt(kernel_G_lifted(Point2::Zero(), Point2::Zero()).real());
  return out;
}

SymmetricBergmanElement random_element(std::mt19937_64& rng, int max_degree, int terms) {
  const auto indices = basis_indices(max_degree);
  if (indices.empty() || terms < 1) throw DomainError("random_element: need max_degree >= 1 and terms >= 1");
  std::uniform_int_distribution<std::size_t> pick(0, indices.size() - 1);
  std::normal_distribution<double> g(0.0, 1.0);
  SymmetricBergmanElement out;
  for (int t = 0; t < terms; ++t) out.terms.push_back({indices[pick(rng)], Complex(g(rng), g(rng))});
  return out;
}

SymmetricBergmanElement parse_element(const std::string& text) {
  SymmetricBergmanElement out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    start = end + 1;
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto open = item.find('('), comma = item.find(','), close = item.find(')'), colon = item.find(':', close);
    if (open == std::string::npos || comma == std::string::npos || close == std::string::npos ||
        colon == std::string::npos || !(open < comma && comma < close))
      throw DomainError("malformed coefficient '" + item + "', expected (j,k):a");
    BasisIndex idx;
    try {
      idx.j = std::stoi(item.substr(open + 1, comma - open - 1));
      idx.k = std::stoi(item.substr(comma + 1, close - comma - 1));
    } catch (const std::exception&) {
      throw DomainError("malformed index in '" + item + "'");
    }
    check_index(idx);
    out.terms.push_back({idx, parse_complex(item.substr(colon + 1))});
  }
  if (out.terms.empty()) throw DomainError("no coefficients given");
  return out;
}

}  // namespace bergman
