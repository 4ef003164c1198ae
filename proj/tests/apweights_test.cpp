#include <gtest/gtest.h>

#include <random>

#include "bergman/apweights.hpp"
#include "bergman/quadrature.hpp"

using namespace bergman;

namespace {

// Integral of |z - w|^s over D(x, R) cut by Im z > 0, in polar coordinates
// about w: (1 / (s + 2)) * int rho(phi)^(s+2) dphi, rho the distance from w to
// the boundary in direction phi. The angle range is split where rho has kinks.
double polar_oracle(Complex w, double s, const DiskSpec& d) {
  const Complex c(d.center_x, 0.0);
  const double R = d.radius;
  auto rho = [&](double phi) {
    const Complex e = std::polar(1.0, phi);
    const Complex v = w - c;
    const double b = (v * std::conj(e)).real();
    double r = -b + std::sqrt(b * b - (std::norm(v) - R * R));  // exit through the circle
    if (e.imag() < 0.0) r = std::min(r, w.imag() / -e.imag());  // exit through the real axis
    return r;
  };
  std::vector<double> cuts{std::arg(c - R - w), std::arg(c + R - w)};
  for (auto& t : cuts)
    if (t < 0.0) t += 2.0 * kPi;
  std::sort(cuts.begin(), cuts.end());
  // On the axis rho vanishes beyond pi/2 at the right corner and before it at the left one.
  std::vector<std::pair<double, double>> pieces;
  if (w.imag() > 0.0)
    pieces = {{cuts[0], cuts[1]}, {cuts[1], cuts[0] + 2.0 * kPi}};
  else
    pieces = {{0.0, kPi / 2.0}, {kPi / 2.0, kPi}};
  double total = 0.0;
  const auto gl = gauss_legendre(20);
  for (const auto& [a, b] : pieces)
    for (int panel = 0; panel < 400; ++panel) {
      const double lo = a + (b - a) * panel / 400.0, half = 0.5 * (b - a) / 400.0;
      for (int i = 0; i < 20; ++i) total += half * gl.weights[i] * std::pow(rho(lo + half * (1.0 + gl.nodes[i])), s + 2.0);
    }
  return total / (s + 2.0);
}

DiskFamily canonical_family() { return DiskFamily{}; }

}  // namespace

TEST(WeightEval, Examples) {
  EXPECT_EQ(weight_eval(PowerWeight::power(kI, 0.0, 2.5), Complex(3.0, 1.0)), 2.5);
  EXPECT_NEAR(weight_eval(PowerWeight::power(0.0, 2.0), 2.0 * kI), 4.0, 1e-15);
  const auto mu = PowerWeight::power(kI, 1.0) * PowerWeight::power(-kI, -1.0);
  EXPECT_NEAR(weight_eval(mu, Complex(1.0)), 1.0, 1e-15);
  EXPECT_THROW(weight_eval(PowerWeight::power(kI, -1.0), kI), DomainError);
  EXPECT_EQ(weight_eval(PowerWeight::power(kI, 2.0), kI), 0.0);
}

TEST(WeightAlgebra, PowScaleNormalize) {
  const auto mu = PowerWeight::power(0.5, 1.5, 3.0) * PowerWeight::power(0.5, -0.5);
  const auto n = mu.normalized();
  ASSERT_EQ(n.factors.size(), 1u);
  EXPECT_NEAR(n.factors[0].exponent, 1.0, 1e-15);
  const Complex z(0.2, 0.7);
  EXPECT_NEAR(weight_eval(mu.pow(-0.7), z), std::pow(weight_eval(mu, z), -0.7), 1e-13);
  EXPECT_NEAR(weight_eval(mu.scaled(4.0), z), 4.0 * weight_eval(mu, z), 1e-14);
}

TEST(HalfDisk, PowerAtTheCenter) {
  for (double s : {-1.9, -1.0, -0.3, 0.0, 0.7, 2.5}) {
    const DiskSpec d{0.0, 1.7};
    const auto r = integrate_half_disk(PowerWeight::power(0.0, s), d);
    EXPECT_FALSE(r.divergent);
    const double exact = kPi * std::pow(d.radius, s + 2.0) / (s + 2.0);
    EXPECT_NEAR(r.value, exact, 1e-10 * exact) << "s=" << s;
  }
}

TEST(HalfDisk, MatchesPolarOracle) {
  const DiskSpec d{0.25, 1.0};
  const Complex near = Complex(0.25, 0.0) + std::polar(1.0 - 1e-3, 1.0);
  const Complex centers[] = {Complex(0.3, 0.0),  Complex(0.3, 0.2),    Complex(-0.5, 0.05), Complex(0.9, 0.1),
                             Complex(1.25, 0.0), Complex(-0.75, 0.0), Complex(1.249, 0.0), near};
  for (const auto& w : centers)
    for (double s : {-1.5, -0.5, 1.3}) {
      const double got = integrate_half_disk(PowerWeight::power(w, s), d).value;
      const double want = polar_oracle(w, s, d);
      EXPECT_NEAR(got, want, 1e-7 * want) << w << " s=" << s;
    }
}

TEST(HalfDisk, ExteriorCenterMatchesFineRule) {
  // Smooth integrand: a fine polar Gauss-Legendre rule about the disk center.
  const DiskSpec d{0.25, 1.0};
  const auto gr = gauss_legendre(300, 0.0, d.radius), ga = gauss_legendre(300, 0.0, kPi);
  for (const Complex w : {Complex(0.1, -0.3), Complex(2.0, 0.5), Complex(-1.0, 0.4)})
    for (double s : {-1.5, 1.3}) {
      double want = 0.0;
      for (int i = 0; i < 300; ++i)
        for (int k = 0; k < 300; ++k)
          want += gr.weights[i] * ga.weights[k] * gr.nodes[i] *
                  std::pow(std::abs(Complex(d.center_x) + std::polar(gr.nodes[i], ga.nodes[k]) - w), s);
      const double got = integrate_half_disk(PowerWeight::power(w, s), d).value;
      EXPECT_NEAR(got, want, 1e-8 * want) << w << " s=" << s;
    }
}

TEST(HalfDisk, Divergence) {
  EXPECT_TRUE(integrate_half_disk(PowerWeight::power(0.2, -2.0), {0.0, 1.0}).divergent);
  EXPECT_TRUE(integrate_half_disk(PowerWeight::power(Complex(0.0, 1.0), -2.5), {0.0, 1.0}).divergent);
  EXPECT_FALSE(integrate_half_disk(PowerWeight::power(Complex(0.0, -0.1), -2.5), {0.0, 1.0}).divergent);
  EXPECT_FALSE(integrate_half_disk(PowerWeight::power(Complex(3.0, 0.0), -4.0), {0.0, 1.0}).divergent);
}

TEST(NdFunctional, UnitWeight) {
  for (double p : {1.3, 2.0, 3.7})
    for (const DiskSpec& d : {DiskSpec{0.0, 1.0}, DiskSpec{-3.5, 0.01}, DiskSpec{2.0, 8.0}}) {
      const double q = conjugate_exponent(p);
      EXPECT_NEAR(n_d_functional(PowerWeight::unit(), p, d), std::pow(0.5, 1.0 + p / q), 1e-12);
    }
}

TEST(NdFunctional, ModulusOnUnitDisk) {
  // avg |z| = 1/3 and avg |z|^-1 = 1 over the upper half of the unit disk.
  EXPECT_NEAR(n_d_functional(PowerWeight::power(0.0, 1.0), 2.0, {0.0, 1.0}), 1.0 / 3.0, 1e-10);
}

TEST(NdFunctional, FarDiskBounds) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> s_dist(-3.0, 3.0), p_dist(1.2, 4.0), ang(0.0, 2.0 * kPi);
  for (int trial = 0; trial < 40; ++trial) {
    const double s = s_dist(rng), p = p_dist(rng);
    const DiskSpec d{0.5, 0.3};
    const double L = 3.0 + 5.0 * double(trial % 4);
    const Complex w = Complex(d.center_x, 0.0) + std::polar(L, ang(rng));
    const double v = n_d_functional(PowerWeight::power(w, s), p, d);
    const double base = std::pow(0.5, p);
    EXPECT_GE(v, base * std::pow(9.0 / 11.0, std::abs(s)));
    EXPECT_LE(v, base * std::pow(11.0 / 9.0, std::abs(s)));
  }
}

TEST(NdFunctional, ScaleInvariance) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> cx(-3.0, 3.0), lr(-6.0, 3.0), c_dist(-8.0, 8.0);
  const PowerWeight mu = PowerWeight::power(Complex(0.3, 0.2), 0.8) * PowerWeight::power(-kI, -1.5);
  for (int trial = 0; trial < 100; ++trial) {
    const DiskSpec d{cx(rng), std::exp2(lr(rng))};
    const double c = std::pow(10.0, c_dist(rng));
    for (double p : {1.6, 2.4}) {
      const double a = n_d_functional(mu, p, d), b = n_d_functional(mu.scaled(c), p, d);
      EXPECT_NEAR(a, b, 1e-12 * a);
    }
  }
}

TEST(NdFunctional, HolderPerDisk) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> cx(-3.0, 3.0), lr(-5.0, 2.0), e(-1.2, 1.2);
  const PowerWeight mu1 = PowerWeight::power(Complex(0.4, 0.3), 1.1) * PowerWeight::power(-kI, -0.8);
  const PowerWeight mu2 = PowerWeight::power(Complex(-1.0, 0.0), -0.9) * PowerWeight::power(Complex(2.0, 1.0), 0.6);
  for (int trial = 0; trial < 50; ++trial) {
    const DiskSpec d{cx(rng), std::exp2(lr(rng))};
    for (double theta : {0.25, 0.5, 0.75})
      for (double p : {1.7, 2.3}) {
        const auto mix = (mu1.pow(theta) * mu2.pow(1.0 - theta)).normalized();
        const double lhs = n_d_functional(mix, p, d);
        const double rhs = std::pow(n_d_functional(mu1, p, d), theta) * std::pow(n_d_functional(mu2, p, d), 1.0 - theta);
        EXPECT_LE(lhs, rhs * (1.0 + 1e-10) + 1e-8) << "theta=" << theta << " p=" << p;
      }
  }
}

TEST(Ranges, Examples) {
  auto iv = prop_mu1_range(1.0, 0.5);
  EXPECT_NEAR(iv.lower, 1.5, 1e-15);
  EXPECT_NEAR(iv.upper, 3.0, 1e-15);
  EXPECT_TRUE(iv.conjugate);
  iv = prop_mu1_range(1.0, 1.0);
  EXPECT_NEAR(iv.lower, 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(iv.upper, 4.0, 1e-15);
  iv = prop_mu2_range(3.0, 0.5);
  EXPECT_NEAR(iv.lower, 5.0 / 3.0, 1e-15);
  EXPECT_NEAR(iv.upper, 2.5, 1e-15);
  EXPECT_TRUE(iv.conjugate);
  EXPECT_THROW(prop_mu2_range(1.0, 0.5), DomainError);
  EXPECT_THROW(prop_mu1_range(-1.0, 0.5), DomainError);
  EXPECT_THROW(prop_mu1_range(1.0, 0.0), DomainError);
}

TEST(Ranges, PoleRangeReproducesFirstSymmetrizedInterval) {
  for (int n = 2; n <= 6; ++n) {
    const double theta1 = 0.4;
    const auto iv = prop_mu2_range(n + 1.0, theta1);
    EXPECT_NEAR(iv.lower, (2.0 * (n + 1) - 2.0 * theta1) / (n + 1), 1e-14);
    EXPECT_NEAR(iv.upper, (2.0 * (n + 1) - 2.0 * theta1) / (n + 1 - 2.0 * theta1), 1e-14);
  }
}

TEST(Ranges, MonotoneInShare) {
  // Shrinking a share strictly shrinks the interval.
  const double h = 1e-6;
  for (double t : {0.1, 0.3, 0.6, 0.9}) {
    const auto a = prop_mu1_range(1.5, t), b = prop_mu1_range(1.5, t - h);
    EXPECT_GT(b.lower, a.lower);
    EXPECT_LT(b.upper, a.upper);
  }
  for (double s : {0.1, 0.3, 0.45}) {
    const auto a = prop_mu2_range(3.0, s), b = prop_mu2_range(3.0, s - h);
    EXPECT_GT(b.lower, a.lower);
    EXPECT_LT(b.upper, a.upper);
  }
}

TEST(Sweep, UnitWeightIsFlat) {
  DiskFamily fam;
  fam.x_step = 2.5;
  const auto r = ap_sweep(PowerWeight::unit(), 2.7, fam.disks());
  EXPECT_FALSE(r.growth_flag);
  for (const auto& e : r.entries) EXPECT_NEAR(e.value, r.sup_nd, 1e-12);
}

TEST(Sweep, CanonicalFamily) {
  const auto disks = canonical_family().disks();
  EXPECT_EQ(disks.size(), 21u * 14u);
  EXPECT_DOUBLE_EQ(disks.front().radius, std::exp2(-10));
}

TEST(Sweep, ZeroFactorInsideAndOutside) {
  const double alpha = 1.0, theta = 0.5;
  const Complex w(0.3, 0.2);
  const auto iv = prop_mu1_range(alpha, theta);
  const auto disks = canonical_family().disks();
  for (double p : {iv.lower + 0.05, 2.0, 2.5, iv.upper - 0.05}) {
    const auto mu = zero_factor_weight(w, alpha, theta, p);
    const auto coarse = ap_sweep(mu, p, disks);
    const auto fine = ap_sweep(mu, p, disks, HalfDiskQuadrature{}.refined());
    EXPECT_FALSE(coarse.growth_flag) << "p=" << p;
    EXPECT_TRUE(std::isfinite(coarse.sup_nd));
    EXPECT_LT(std::abs(fine.sup_nd - coarse.sup_nd), 0.05 * coarse.sup_nd) << "p=" << p;
  }
  for (double p : {iv.lower - 0.05, iv.upper + 0.05}) {
    const auto r = ap_sweep(zero_factor_weight(w, alpha, theta, p), p, disks);
    EXPECT_TRUE(r.growth_flag || r.divergent_disks > 0) << "p=" << p;
  }
}

TEST(Sweep, PoleFactorInsideAndOutside) {
  const double beta = 3.0, sigma = 0.5;
  const Complex w(0.0);
  const auto iv = prop_mu2_range(beta, sigma);
  const auto disks = canonical_family().disks();
  for (double p : {iv.lower + 0.05, 2.2, iv.upper - 0.05}) {
    const auto mu = pole_factor_weight(w, beta, sigma, p);
    const auto coarse = ap_sweep(mu, p, disks);
    const auto fine = ap_sweep(mu, p, disks, HalfDiskQuadrature{}.refined());
    EXPECT_FALSE(coarse.growth_flag) << "p=" << p;
    EXPECT_LT(std::abs(fine.sup_nd - coarse.sup_nd), 0.05 * coarse.sup_nd) << "p=" << p;
  }
  for (double p : {iv.lower - 0.05, iv.upper + 0.05}) {
    const auto r = ap_sweep(pole_factor_weight(w, beta, sigma, p), p, disks);
    EXPECT_TRUE(r.growth_flag || r.divergent_disks > 0) << "p=" << p;
  }
}

TEST(Sweep, SupremumRecordsEveryDisk) {
  DiskFamily fam;
  fam.x_step = 1.0;
  const auto r = ap_sweep(zero_factor_weight(Complex(0.5, 0.0), 1.0, 0.5, 2.4), 2.4, fam.disks());
  double mx = 0.0;
  for (const auto& e : r.entries) mx = std::max(mx, e.value);
  EXPECT_EQ(mx, r.sup_nd);
}

TEST(Sweep, UniformInCenter) {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double p = 2.5;
  const auto disks = canonical_family().disks();
  double lo = kInf, hi = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const Complex w = std::polar(10.0 * std::sqrt(u(rng)), 2.0 * kPi * u(rng));
    const double sup = ap_sweep(zero_factor_weight(w, 1.0, 0.5, p), p, disks).sup_nd;
    lo = std::min(lo, sup);
    hi = std::max(hi, sup);
  }
  EXPECT_LT(hi / lo, 3.0);
}
