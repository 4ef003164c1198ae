#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "bergman/covering.hpp"

using namespace bergman;

namespace {

Complex random_in_disk(std::mt19937_64& rng, double rmax) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(rmax * std::sqrt(u(rng)), 2.0 * kPi * u(rng));
}

ComplexVector random_polydisk(std::mt19937_64& rng, int n, double rmax = 0.95) {
  ComplexVector w(n);
  for (int j = 0; j < n; ++j) w[j] = random_in_disk(rng, rmax);
  return w;
}

ComplexVector vec(std::initializer_list<Complex> xs) {
  ComplexVector v(Eigen::Index(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v[i++] = x;
  return v;
}

// Coefficients of prod (t - w_j), ascending, by direct expansion.
ComplexVector expand_roots(const ComplexVector& w) {
  ComplexVector c = ComplexVector::Zero(w.size() + 1);
  c[0] = 1.0;
  for (Eigen::Index j = 0; j < w.size(); ++j) {
    ComplexVector next = ComplexVector::Zero(w.size() + 1);
    for (Eigen::Index k = 0; k <= j; ++k) {
      next[k + 1] += c[k];
      next[k] -= w[j] * c[k];
    }
    c = next;
  }
  return c;
}

bool same_multiset(std::vector<Complex> a, std::vector<Complex> b, double tol) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    auto it = std::min_element(b.begin(), b.end(),
                               [&](const Complex& u, const Complex& v) { return std::abs(u - x) < std::abs(v - x); });
    if (std::abs(*it - x) > tol) return false;
    b.erase(it);
  }
  return true;
}

}  // namespace

TEST(Symmetrize, Examples) {
  const Complex a(0.3, -0.2), b(-0.7, 0.1);
  const auto s = symmetrize(vec({a, b}));
  EXPECT_LT(std::abs(s.coords[0] - (a + b)), 1e-15);
  EXPECT_LT(std::abs(s.coords[1] - a * b), 1e-15);

  const auto t = symmetrize(vec({1.0, 1.0, 1.0}));
  EXPECT_EQ(t.coords[0], Complex(3.0));
  EXPECT_EQ(t.coords[1], Complex(3.0));
  EXPECT_EQ(t.coords[2], Complex(1.0));
}

TEST(Symmetrize, MatchesExpandedProduct) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto w = random_polydisk(rng, 4);
    const auto s = symmetrize(w);
    const auto c = expand_roots(w);  // c[4 - k] = (-1)^k p_k
    for (int k = 1; k <= 4; ++k) {
      const double sign = k % 2 ? -1.0 : 1.0;
      EXPECT_LT(std::abs(sign * s.coords[k - 1] - c[4 - k]), 1e-14);
    }
  }
}

TEST(Symmetrize, PermutationInvariant) {
  std::mt19937_64 rng(12);
  for (int n = 2; n <= 6; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      auto w = random_polydisk(rng, n);
      const auto s = symmetrize(w);
      std::vector<Complex> v(w.data(), w.data() + n);
      std::shuffle(v.begin(), v.end(), rng);
      const auto t = symmetrize(Eigen::Map<ComplexVector>(v.data(), n));
      EXPECT_LT((s.coords - t.coords).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Symmetrize, RejectsEmpty) { EXPECT_THROW(symmetrize(ComplexVector(0)), DomainError); }

TEST(Jacobian, VandermondeExamples) {
  EXPECT_EQ(vandermonde_jacobian(vec({Complex(0.4, 0.1)})), Complex(1.0));
  const Complex a(0.2, 0.5), b(-0.3, 0.1);
  EXPECT_LT(std::abs(vandermonde_jacobian(vec({a, b})) - (a - b)), 1e-15);
  EXPECT_LT(std::abs(vandermonde_jacobian(vec({0.1, 0.2, 0.3})) - (-0.002)), 1e-15);
}

TEST(Jacobian, NumericExamples) {
  const auto sym2 = numeric_jacobian_det(CoveringMap::symmetrization(2), vec({0.3, Complex(0.0, -0.1)}), 1e-5);
  EXPECT_LT(std::abs(sym2.det - Complex(0.3, 0.1)), 1e-8);

  const Complex w1(0.3, 0.2), w2(-0.4, 0.5);
  const auto h11 = numeric_jacobian_det(CoveringMap::hartogs(1, 1), vec({w1, w2}), 1e-5);
  EXPECT_LT(std::abs(h11.det - w2), 1e-8);

  const auto sym3 = numeric_jacobian_det(CoveringMap::symmetrization(3), vec({0.1, 0.2, 0.3}), 1e-5);
  EXPECT_LT(std::abs(sym3.det - (-0.002)), 1e-8);

  EXPECT_THROW(numeric_jacobian_det(CoveringMap::symmetrization(2), vec({0.1, 0.2}), 1e-2), DomainError);
}

TEST(Jacobian, VandermondeMatchesFiniteDifferences) {
  std::mt19937_64 rng(13);
  for (int n = 2; n <= 5; ++n) {
    const auto map = CoveringMap::symmetrization(n);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto w = random_polydisk(rng, n, 1.0);
      const Complex J = vandermonde_jacobian(w);
      const auto est = numeric_jacobian_det(map, w, 1e-5);
      EXPECT_LT(std::abs(J - est.det), 1e-6 * (1.0 + std::abs(J))) << "n=" << n;
      EXPECT_LT(std::abs(jacobian_det(map, w) - J), 1e-14);
    }
  }
}

TEST(Jacobian, Vandermonde5MatchesTo1e8) {
  std::mt19937_64 rng(14);
  const auto w = random_polydisk(rng, 5);
  const auto est = numeric_jacobian_det(CoveringMap::symmetrization(5), w, 1e-5);
  EXPECT_LT(std::abs(est.det - vandermonde_jacobian(w)), 1e-8);
}

TEST(Hartogs, CoverExamples) {
  auto [a, b] = hartogs_cover(0.5, 0.8, 1, 1);
  EXPECT_LT(std::abs(a - 0.4), 1e-15);
  EXPECT_LT(std::abs(b - 0.8), 1e-15);
  EXPECT_TRUE(in_hartogs_triangle(a, b, 1.0));

  std::tie(a, b) = hartogs_cover(0.9, 0.5, 2, 3);
  EXPECT_LT(std::abs(a - 0.1125), 1e-15);
  EXPECT_LT(std::abs(b - 0.25), 1e-15);
  EXPECT_TRUE(in_hartogs_triangle(a, b, 2.0 / 3.0));

  EXPECT_THROW(hartogs_cover(0.5, 0.0, 1, 1), DomainError);
  EXPECT_THROW(hartogs_cover(0.5, 0.5, 2, 4), DomainError);
}

TEST(Hartogs, ImageLiesInTriangle) {
  std::mt19937_64 rng(15);
  const std::pair<int, int> exps[] = {{1, 1}, {2, 3}, {3, 2}, {1, 4}, {5, 3}};
  for (const auto& [m, n] : exps)
    for (int trial = 0; trial < 2000; ++trial) {
      const Complex w1 = random_in_disk(rng, 0.999);
      Complex w2 = random_in_disk(rng, 0.999);
      if (std::abs(w2) < 1e-3) w2 = 0.5;
      const auto [z1, z2] = hartogs_cover(w1, w2, m, n);
      EXPECT_TRUE(in_hartogs_triangle(z1, z2, double(m) / n)) << m << "," << n;
    }
}

TEST(Fiber, Examples) {
  auto f = fiber_of_symmetrization({vec({0.0, -1.0})});
  EXPECT_TRUE(same_multiset(f.roots, {1.0, -1.0}, 1e-14));
  EXPECT_EQ(f.cardinality, 2u);

  f = fiber_of_symmetrization({vec({0.0, 0.0})});
  EXPECT_TRUE(same_multiset(f.roots, {0.0, 0.0}, 1e-14));
  EXPECT_EQ(f.cardinality, 1u);

  f = fiber_of_symmetrization(symmetrize(vec({0.1, 0.2, 0.3})));
  EXPECT_TRUE(same_multiset(f.roots, {0.1, 0.2, 0.3}, 1e-12));
  EXPECT_EQ(f.cardinality, 6u);
}

TEST(Fiber, RoundTrip) {
  std::mt19937_64 rng(16);
  for (int n = 2; n <= 6; ++n)
    for (int trial = 0; trial < 50; ++trial) {
      ComplexVector w;
      bool separated = false;
      while (!separated) {
        w = random_polydisk(rng, n);
        separated = true;
        for (int j = 0; j < n; ++j)
          for (int k = j + 1; k < n; ++k) separated = separated && std::abs(w[j] - w[k]) > 0.05;
      }
      const auto f = fiber_of_symmetrization(symmetrize(w));
      EXPECT_TRUE(same_multiset(f.roots, std::vector<Complex>(w.data(), w.data() + n), 1e-8)) << "n=" << n;
      EXPECT_EQ(f.cardinality, [&] {
        std::uint64_t fact = 1;
        for (int k = 2; k <= n; ++k) fact *= k;
        return fact;
      }());
    }
}

TEST(QFactorization, Symmetrization2) {
  const auto q = q_weight_factorization(CoveringMap::symmetrization(2));
  ASSERT_EQ(q.variables.size(), 2u);
  const auto& z1 = q.variables[0].factors;
  ASSERT_EQ(z1.size(), 2u);
  int zeros = 0, poles = 0;
  for (const auto& f : z1) {
    if (f.multiplicity > 0) {
      ++zeros;
      EXPECT_EQ(f.kind, CenterKind::OtherVariable);
      EXPECT_EQ(f.other, 2);
      EXPECT_EQ(f.multiplicity, 1);
    } else {
      ++poles;
      EXPECT_EQ(f.kind, CenterKind::CayleyPole);
      EXPECT_EQ(f.multiplicity, -3);
    }
  }
  EXPECT_EQ(zeros, 1);
  EXPECT_EQ(poles, 1);
}

TEST(QFactorization, SymmetrizationPoleOrder) {
  for (int n = 1; n <= 6; ++n) {
    const auto q = q_weight_factorization(CoveringMap::symmetrization(n));
    for (const auto& var : q.variables) {
      int zeros = 0;
      for (const auto& f : var.factors) {
        if (f.multiplicity < 0) {
          EXPECT_EQ(f.multiplicity, -(n + 1));
        } else {
          ++zeros;
        }
      }
      EXPECT_EQ(zeros, n - 1);
    }
  }
}

TEST(QFactorization, Hartogs11) {
  const auto q = q_weight_factorization(CoveringMap::hartogs(1, 1));
  ASSERT_EQ(q.variables.size(), 2u);
  ASSERT_EQ(q.variables[0].factors.size(), 1u);
  EXPECT_EQ(q.variables[0].factors[0].kind, CenterKind::CayleyPole);
  EXPECT_EQ(q.variables[0].factors[0].multiplicity, -2);
  bool zero = false, pole = false;
  for (const auto& f : q.variables[1].factors) {
    if (f.kind == CenterKind::CayleyZero && f.multiplicity == 1) zero = true;
    if (f.kind == CenterKind::CayleyPole && f.multiplicity == -3) pole = true;
  }
  EXPECT_TRUE(zero);
  EXPECT_TRUE(pole);
}

TEST(QFactorization, HartogsOrders) {
  const auto q = q_weight_factorization(CoveringMap::hartogs(2, 3));
  for (const auto& f : q.variables[1].factors) {
    if (f.kind == CenterKind::CayleyZero) {
      EXPECT_EQ(f.multiplicity, 4);
    } else {
      EXPECT_EQ(f.kind, CenterKind::CayleyPole);
      EXPECT_EQ(f.multiplicity, -6);
    }
  }
}

TEST(QFactorization, FactoredModulusMatchesUpToConstant) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> x(-5.0, 5.0), y(0.05, 5.0);
  const CoveringMap maps[] = {CoveringMap::symmetrization(2), CoveringMap::symmetrization(3),
                              CoveringMap::symmetrization(4), CoveringMap::hartogs(1, 1),
                              CoveringMap::hartogs(2, 3), CoveringMap::hartogs(3, 1)};
  for (const auto& map : maps) {
    const auto fact = q_weight_factorization(map);
    const int d = map.dimension();
    double reference = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      ComplexVector z(d);
      for (int j = 0; j < d; ++j) z[j] = Complex(x(rng), y(rng));
      const double c = estimate_constant(fact, z);
      if (trial == 0)
        reference = c;
      else
        EXPECT_LT(std::abs(c - reference), 1e-9 * reference) << map.name();
    }
  }
}
