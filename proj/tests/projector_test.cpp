#include <gtest/gtest.h>

#include <random>

#include "bergman/projector.hpp"

using namespace bergman;

namespace {

std::vector<Complex> test_points() {
  return {0.0, Complex(0.3, 0.1), Complex(-0.5, 0.2), Complex(0.1, -0.6), Complex(0.7, 0.0)};
}

SampledFunction fn(std::function<Complex(const Complex&)> f, std::string name) { return {std::move(f), std::move(name), {}}; }

// h(s, p) = s^a p^b conj(s)^c conj(p)^d.
SampledFunction2 monomial(int a, int b, int c, int d) {
  return {[=](const Point2& x) {
            return std::pow(x[0], a) * std::pow(x[1], b) * std::pow(std::conj(x[0]), c) * std::pow(std::conj(x[1]), d);
          },
          "s^" + std::to_string(a) + " p^" + std::to_string(b) + " conj(s)^" + std::to_string(c) + " conj(p)^" +
              std::to_string(d)};
}

}  // namespace

TEST(ProjectDisk, FixesHolomorphicPolynomials) {
  const auto f = polynomial_function({1.0, Complex(0.0, 2.0), -0.5, Complex(0.3, 0.3)});
  const auto Bf = project_disk(f);
  for (const auto& z : test_points()) EXPECT_LT(std::abs(Bf(z) - f(z)), 1e-8);
}

TEST(ProjectDisk, Examples) {
  const auto conj_z = project_disk(fn([](const Complex& z) { return std::conj(z); }, "conj"));
  const auto mod2 = project_disk(fn([](const Complex& z) { return Complex(std::norm(z)); }, "mod2"));
  for (const auto& z : test_points()) {
    EXPECT_LT(std::abs(conj_z(z)), 1e-8);
    EXPECT_LT(std::abs(mod2(z) - 0.5), 1e-8);
  }
}

TEST(ProjectDisk, Idempotent) {
  const auto f = fn([](const Complex& z) { return std::exp(std::conj(z)) * z + std::norm(z) * z * z; }, "mixed");
  const auto Bf = project_disk(f);
  const auto BBf = project_disk(Bf);
  for (const auto& z : test_points()) EXPECT_LT(std::abs(BBf(z) - Bf(z)), 1e-6);
}

TEST(ProjectDisk, SelfAdjoint) {
  const auto f = fn([](const Complex& z) { return std::conj(z) * z * z + 1.0; }, "f");
  const auto g = fn([](const Complex& z) { return std::cos(z) + std::conj(z) * std::norm(z); }, "g");
  const Complex lhs = inner_product_disk(project_disk(f), g), rhs = inner_product_disk(f, project_disk(g));
  EXPECT_LT(std::abs(lhs - rhs), 1e-6);
  EXPECT_GT(std::abs(lhs), 1e-3);
}

TEST(Bell, ConstantAndHolomorphic) {
  const auto grid = bidisk_grid(6);
  const SampledFunction2 one{[](const Point2&) { return Complex(1.0); }, "1"};
  const auto r = bell_transform_residual(one, grid);
  EXPECT_LT(r.residual, 1e-6);
  EXPECT_GT(r.lhs_scale, 0.0);
  EXPECT_LT(bell_transform_residual(monomial(1, 0, 0, 0), grid).residual, 1e-6);
  EXPECT_LT(bell_transform_residual(monomial(0, 0, 1, 0), grid).residual, 1e-6);
}

TEST(Bell, AllMonomialsUpToDegreeThree) {
  const auto grid = bidisk_grid(4, 0.5, 3);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b)
      for (int c = 0; a + b + c <= 3; ++c)
        for (int d = 0; a + b + c + d <= 3; ++d) {
          const auto h = monomial(a, b, c, d);
          EXPECT_LT(bell_transform_residual(h, grid).residual, 1e-6) << h.name;
        }
}

TEST(Bell, Grid) {
  const auto a = bidisk_grid(10, 0.5, 4), b = bidisk_grid(10, 0.5, 4);
  ASSERT_EQ(a.size(), 10u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i], b[i]);
    EXPECT_LE(std::abs(a[i][0]), 0.5);
    EXPECT_LE(std::abs(a[i][1]), 0.5);
  }
}

TEST(NormRatio, UnitWeightContracts) {
  const auto r = weighted_norm_ratio(2.0, PowerWeight::unit(), standard_test_family());
  ASSERT_EQ(r.entries.size(), 3u);
  for (const auto& e : r.entries) {
    EXPECT_FALSE(e.divergent);
    EXPECT_GE(e.ratio, 0.0);
    EXPECT_GT(e.denominator, 0.0);
  }
  EXPECT_LE(r.max_ratio(), 1.0 + 1e-3);
}

TEST(NormRatio, DivergentWeightIsReported) {
  const auto r = weighted_norm_ratio(2.0, PowerWeight::power(Complex(0.0, 1.0), -2.5), {gaussian_bump(2.0 * kI, 0.5)});
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_TRUE(r.entries[0].divergent);
}

TEST(NormRatio, TestFunctions) {
  const auto g = gaussian_bump(Complex(1.0, 2.0), 0.5);
  EXPECT_NEAR(g(Complex(1.0, 2.0)).real(), 1.0, 1e-15);
  EXPECT_NEAR(g(Complex(1.5, 2.0)).real(), std::exp(-0.5), 1e-15);
  const auto f = concentrating_reciprocal(Complex(0.0), 0.1);
  EXPECT_LT(std::abs(f(Complex(0.0, 1.0)) - std::exp(-1.0) / Complex(0.0, 1.1)), 1e-15);
}

TEST(Describe, Weight) {
  EXPECT_EQ(describe(PowerWeight::unit()), "1");
}
