#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bergman/covering.hpp"
#include "bergman/types.hpp"

namespace bergman {

/// Multiplicities of the factors of Q in one variable: alpha for each zero,
/// beta for each pole.
struct VariableExponents {
  std::vector<double> zeros;
  std::vector<double> poles;

  std::size_t size() const { return zeros.size() + poles.size(); }
};

VariableExponents variable_exponents(const VariableFactorization& var);

/// Hoelder shares of the factors. `constant_share` is the share given to the
/// constant weight when the factor shares alone cannot reach 1.
struct ThetaAllocation {
  std::vector<double> zero_thetas;
  std::vector<double> pole_sigmas;
  double constant_share = 0.0;

  double total() const;
};

/// Largest share a pole of order beta may take: min(1, beta / 2) - margin.
double pole_share_cap(double beta, double margin = 1e-6);

/// Intersection of the per-factor intervals
///   ((2a + 2t) / (a + 2t), (2a + 2t) / a) for zeros and
///   ((2b - 2s) / b, (2b - 2s) / (b - 2s)) for poles.
/// The constant share contributes (1, inf). Throws DomainError on a size
/// mismatch, a share outside (0, 1], b <= 2s, or shares not summing to 1.
Interval interval_for_allocation(const VariableExponents& ex, const ThetaAllocation& alloc);

enum class AllocationMethod {
  Level,    // water-filling on the common lower endpoint
  Simplex,  // Nelder-Mead on softmax coordinates
};

struct OptimizerOptions {
  AllocationMethod method = AllocationMethod::Level;
  std::uint64_t seed = 0;
  int max_iterations = 10000;
  double tolerance = 1e-12;
  double pole_margin = 1e-6;
};

struct AllocationResult {
  ThetaAllocation allocation;
  Interval interval;
  int iterations = 0;
};

/// Minimizes the largest lower endpoint over all admissible allocations.
AllocationResult optimize_allocation(const VariableExponents& ex, const OptimizerOptions& opt = {});

struct PRangeResult {
  std::string map;
  std::vector<VariableExponents> exponents;
  std::vector<AllocationResult> per_variable;
  Interval interval;
};

/// Per-variable optima and their intersection.
PRangeResult optimize_allocation(const QFactorization& fact, const OptimizerOptions& opt = {});

/// ((sqrt(n^2-1) + n - 1) / sqrt(n^2-1), (sqrt(n^2-1) + n - 1) / (n - 1)), n >= 2.
Interval prange_symmetrized_closed_form(int n);

/// Common share of the n - 1 zero factors at the optimum, n >= 2.
double theta_star(int n);

PRangeResult prange_symmetrized(int n, const OptimizerOptions& opt = {});
PRangeResult prange_hartogs(int m, int n, const OptimizerOptions& opt = {});

}  // namespace bergman
