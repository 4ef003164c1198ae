#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bergman/apweights.hpp"
#include "bergman/kernels.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/types.hpp"

namespace bergman {

/// A function on a planar domain, with optional holomorphic polynomial
/// coefficients (ascending) when it is one.
struct SampledFunction {
  std::function<Complex(const Complex&)> eval;
  std::string name;
  std::optional<std::vector<Complex>> polynomial;

  Complex operator()(const Complex& z) const { return eval(z); }
};

/// A function on the bidisk or on the symmetrized bidisk.
struct SampledFunction2 {
  std::function<Complex(const Point2&)> eval;
  std::string name;

  Complex operator()(const Point2& z) const { return eval(z); }
};

SampledFunction polynomial_function(std::vector<Complex> coeffs);

/// Bergman projection on the unit disk by a polar rule: the kernel series
/// K(z, zeta) = sum (n + 1) (z conj(zeta))^n / pi is cut at n < N with
/// N = min(radial, angular / 2), the largest degree for which the rule is
/// exact, so the result is the polynomial sum_{n<N} ((n + 1) / pi) <f, zeta^n> z^n.
SampledFunction project_disk(const SampledFunction& f, const DiskQuadrature& quad = {32, 64});

/// <f, g> over the unit disk with the same rule.
Complex inner_product_disk(const SampledFunction& f, const SampledFunction& g, const DiskQuadrature& quad = {32, 64});

/// Max over the grid of
///   |B_{D^2}((z1 - z2) h o Phi)(z) - (z1 - z2) (B_G h)(Phi(z))|,
/// both projections by the tensor rule, the right side through kernel_G with
/// int_G = (1/2) int_{D^2} (. o Phi) nu.
struct BellResidual {
  double residual = 0.0;
  double lhs_scale = 0.0;  // max |left side| over the grid
};

BellResidual bell_transform_residual(const SampledFunction2& h, const std::vector<Point2>& grid,
                                     const DiskQuadrature& quad = {16, 64});

/// Points (r1 e^{i a}, r2 e^{i b}) with radii up to `radius`; deterministic.
std::vector<Point2> bidisk_grid(int count, double radius = 0.5, std::uint64_t seed = 0);

struct NormRatioEntry {
  std::string function;
  double numerator = 0.0;    // ||B f||_{L^p(mu)} on the box
  double denominator = 0.0;  // ||f||_{L^p(mu)} on the box
  double ratio = 0.0;
  bool divergent = false;
  double tail_estimate = 0.0;
};

struct NormRatioReport {
  double p = 2.0;
  std::string weight;
  BoxQuadrature box;
  std::size_t nodes = 0;
  std::vector<NormRatioEntry> entries;

  double max_ratio() const;
};

/// ||B f||_{L^p(mu)} / ||f||_{L^p(mu)} on the truncation box, B the half-plane
/// projection restricted to the box. A weight factor with exponent <= -2
/// centered in the closed box marks the entry divergent. The tail estimate
/// bounds the omitted part of ||B f||^p outside the box by
/// pi C^p R0^(s + 2 - 2p) / (2p - s - 2), C = (1/pi) int |f|, R0 the distance
/// from the origin to the box exterior, s the total exponent of mu.
NormRatioReport weighted_norm_ratio(double p, const PowerWeight& mu, const std::vector<SampledFunction>& fs,
                                    const BoxQuadrature& box = {});

std::string describe(const PowerWeight& mu);

/// exp(-|z - c|^2 / (2 width^2)).
SampledFunction gaussian_bump(Complex center, double width);
/// exp(-|z - w0|^2) / (z - w0 + i eps).
SampledFunction concentrating_reciprocal(Complex w0, double eps);
/// The fixed L^2 test family: two Gaussian bumps and a windowed polynomial.
std::vector<SampledFunction> standard_test_family();

}  // namespace bergman
