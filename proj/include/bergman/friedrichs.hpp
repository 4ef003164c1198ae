#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bergman/kernels.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/types.hpp"

namespace bergman {

/// Values of a Friedrichs operator image over a grid of points.
struct FriedrichsValue {
  Complex value;                // mean over the grid
  double variation = 0.0;       // max |value(z) - mean|
  std::vector<Complex> values;  // per grid point
};

/// F_nu(f)(z) = int_{D^2} B_nu(z, zeta) conj(f(zeta)) nu(zeta) dV(zeta) over a
/// tensor polar rule; nodes where nu vanishes are skipped. The uniform angular
/// rule must have enough points to resolve the kernel at the grid radius
/// (angular order 64 is ample for |z_i| <= 0.5).
FriedrichsValue friedrichs_nu(const SymmetricBergmanElement& f, const std::vector<Point2>& grid,
                              const DiskQuadrature& quad = {8, 64});

/// f(0), which is the (1, 0) coefficient: the (1, 0) quotient is 1 and every
/// other quotient vanishes at the origin.
Complex coefficient_a10(const SymmetricBergmanElement& f);

/// F_G(g) = conj(g(0)) for g on G with pullback g o Phi = f.
Complex friedrichs_G(const SymmetricBergmanElement& f);

/// F_G(g)(s) by quadrature over G written on D^2,
/// int_G K_G(s, t) conj(g(t)) dV(t) = (1/2) int_{D^2} K_G(z, zeta) conj(f(zeta)) nu dV.
FriedrichsValue friedrichs_G_quadrature(const SymmetricBergmanElement& f, const std::vector<Point2>& grid,
                                        const DiskQuadrature& quad = {8, 64});

/// ||g||_{L^2(G)} = ((1/2) int_{D^2} |f|^2 nu dV)^(1/2).
double l2_norm_G(const SymmetricBergmanElement& f, const DiskQuadrature& quad = {12, 32});

struct LinfBound {
  double linf = 0.0;   // ||F_G(g)||_inf = |g(0)|
  double l2 = 0.0;     // ||g||_{L^2(G)}
  double ratio = 0.0;  // linf / l2
  double bound = 0.0;  // sqrt(K_G(0, 0))
};

LinfBound linfty_bound_check(const SymmetricBergmanElement& f, const DiskQuadrature& quad = {12, 32});

/// Random element with `terms` coefficients on indices of degree <= max_degree.
SymmetricBergmanElement random_element(std::mt19937_64& rng, int max_degree, int terms);

/// Parses "(j,k):a" items separated by ';', a a real or complex literal such
/// as 2, -1.5i or 3+2i.
SymmetricBergmanElement parse_element(const std::string& text);

}  // namespace bergman
