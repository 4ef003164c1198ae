#pragma once

#include <vector>

#include "bergman/types.hpp"

namespace bergman {

struct PowerFactor {
  Complex center;
  double exponent = 0.0;
};

/// prefactor * prod_j |z - center_j|^exponent_j, a weight on the upper half-plane.
struct PowerWeight {
  double prefactor = 1.0;
  std::vector<PowerFactor> factors;

  static PowerWeight unit() { return {}; }
  static PowerWeight power(Complex center, double exponent, double prefactor = 1.0);

  /// mu^t.
  PowerWeight pow(double t) const;
  /// c * mu, c > 0.
  PowerWeight scaled(double c) const;
  /// Coincident centers merged, zero exponents dropped.
  PowerWeight normalized() const;

  friend PowerWeight operator*(const PowerWeight& a, const PowerWeight& b);
};

/// Pointwise value. Throws DomainError at a center carrying a negative exponent.
double weight_eval(const PowerWeight& mu, const Complex& z);

/// Disk D(x, R) centered on the real axis.
struct DiskSpec {
  double center_x = 0.0;
  double radius = 1.0;
};

/// Resolution of the half-disk integrator.
///
/// Singular or nearly singular centers (within `anchor_reach * R` of the
/// closed half-disk) become anchors. The half-disk is split into the Voronoi
/// cells of the anchors; each cell is integrated in polar coordinates about its
/// anchor, with Gauss-Legendre angular pieces between the cell's corner
/// directions and a radial mesh graded geometrically toward the anchor. The
/// innermost radial piece absorbs an exact |z - a|^s factor by the substitution
/// u = r^(s+2). Without anchors a plain polar Gauss-Legendre product rule is used.
struct HalfDiskQuadrature {
  int radial_order = 12;
  int angular_order = 16;
  int grading_levels = 12;
  double grading_ratio = 0.25;
  int smooth_radial = 32;
  int smooth_angular = 48;
  double anchor_reach = 1.0;

  /// Roughly four times the nodes of *this.
  HalfDiskQuadrature refined() const;
};

struct HalfDiskIntegral {
  double value = 0.0;
  bool divergent = false;
};

/// Integral of mu over D(x, R) intersected with the upper half-plane. A center
/// in the closed half-disk with exponent <= -2 makes the integral divergent.
HalfDiskIntegral integrate_half_disk(const PowerWeight& mu, const DiskSpec& disk,
                                     const HalfDiskQuadrature& quad = {});

/// The A_p^+ functional
///   N_D(mu) = (avg_D mu) * (avg_D mu^(-q/p))^(p/q),
/// with averages over D intersected with the upper half-plane normalized by pi R^2.
/// Returns +infinity when either integral diverges.
double n_d_functional(const PowerWeight& mu, double p, const DiskSpec& disk,
                      const HalfDiskQuadrature& quad = {});

/// Centers x_min..x_max in steps of x_step, radii 2^log2r_min..2^log2r_max.
struct DiskFamily {
  double x_min = -5.0;
  double x_max = 5.0;
  double x_step = 0.5;
  int log2r_min = -10;
  int log2r_max = 3;

  std::vector<DiskSpec> disks() const;
};

struct DiskValue {
  DiskSpec disk;
  double value = 0.0;
};

struct ApReport {
  double p = 2.0;
  double sup_nd = 0.0;
  std::vector<DiskValue> entries;
  bool growth_flag = false;
  std::size_t divergent_disks = 0;
};

/// Evaluates N_D over the family. growth_flag is set when some disk diverges or
/// when, at a fixed center, N_D grows by more than 10x while R shrinks by at
/// least two decades (a heuristic blow-up indicator).
ApReport ap_sweep(const PowerWeight& mu, double p, const std::vector<DiskSpec>& family,
                  const HalfDiskQuadrature& quad = {});

/// |z - w|^(alpha (2 - p) / theta).
PowerWeight zero_factor_weight(Complex w, double alpha, double theta, double p);
/// |z - w|^(-beta (2 - p) / sigma).
PowerWeight pole_factor_weight(Complex w, double beta, double sigma, double p);

/// ((2a + 2t) / (a + 2t), (2a + 2t) / a): the p-range for the zero factor.
Interval prop_mu1_range(double alpha, double theta);
/// ((2b - 2s) / b, (2b - 2s) / (b - 2s)): the p-range for the pole factor, b > 2s.
Interval prop_mu2_range(double beta, double sigma);

}  // namespace bergman
