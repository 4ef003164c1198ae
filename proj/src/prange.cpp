#include "bergman/prange.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace bergman {

VariableExponents variable_exponents(const VariableFactorization& var) {
  VariableExponents out;
  for (const auto& f : var.factors) {
    if (f.multiplicity > 0)
      out.zeros.push_back(double(f.multiplicity));
    else if (f.multiplicity < 0)
      out.poles.push_back(double(-f.multiplicity));
  }
  return out;
}

double ThetaAllocation::total() const {
  double s = constant_share;
  for (double t : zero_thetas) s += t;
  for (double t : pole_sigmas) s += t;
  return s;
}

double pole_share_cap(double beta, double margin) { return std::min(1.0, 0.5 * beta) - margin; }

namespace {

double zero_lower(double alpha, double theta) { return (2.0 * alpha + 2.0 * theta) / (alpha + 2.0 * theta); }
double pole_lower(double beta, double sigma) { return (2.0 * beta - 2.0 * sigma) / beta; }

// Share needed for the factor's lower endpoint to reach lambda in (1, 2).
double zero_need(double alpha, double lambda) { return alpha * (2.0 - lambda) / (2.0 * (lambda - 1.0)); }
double pole_need(double beta, double lambda) { return beta * (2.0 - lambda) / 2.0; }

void check_exponents(const VariableExponents& ex) {
  if (ex.size() == 0) throw DomainError("prange: a variable without factors");
  for (double a : ex.zeros)
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("prange: zero orders must be positive");
  for (double b : ex.poles)
    if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("prange: pole orders must be positive");
}

double cap_total(const VariableExponents& ex, double margin) {
  double s = double(ex.zeros.size());
  for (double b : ex.poles) s += pole_share_cap(b, margin);
  return s;
}

ThetaAllocation capped_allocation(const VariableExponents& ex, double margin) {
  ThetaAllocation out;
  out.zero_thetas.assign(ex.zeros.size(), 1.0);
  for (double b : ex.poles) out.pole_sigmas.push_back(pole_share_cap(b, margin));
  out.constant_share = std::max(0.0, 1.0 - out.total());
  return out;
}

AllocationResult level_allocation(const VariableExponents& ex, const OptimizerOptions& opt) {
  const double margin = opt.pole_margin;
  const auto shares_at = [&](double lambda) {
    ThetaAllocation a;
    for (double alpha : ex.zeros) a.zero_thetas.push_back(std::min(1.0, zero_need(alpha, lambda)));
    for (double beta : ex.poles)
      a.pole_sigmas.push_back(std::min(pole_share_cap(beta, margin), pole_need(beta, lambda)));
    return a;
  };
  // The demand is continuous and decreasing in lambda, from the cap total
  // near 1 down to 0 at 2.
  double lo = 1.0, hi = 2.0;
  int it = 0;
  for (; it < 200 && hi - lo > 4e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (shares_at(mid).total() > 1.0)
      lo = mid;
    else
      hi = mid;
  }
  AllocationResult out;
  out.allocation = shares_at(hi);
  out.iterations = it;
  // Put the bisection residue on the largest uncapped share.
  const double residue = 1.0 - out.allocation.total();
  double* largest = nullptr;
  for (auto& t : out.allocation.zero_thetas)
    if (t < 1.0 && (!largest || t > *largest)) largest = &t;
  for (std::size_t j = 0; j < ex.poles.size(); ++j) {
    double& s = out.allocation.pole_sigmas[j];
    if (s < pole_share_cap(ex.poles[j], margin) && (!largest || s > *largest)) largest = &s;
  }
  if (largest) *largest += residue;
  out.interval = interval_for_allocation(ex, out.allocation);
  return out;
}

// max over factors of the lower endpoint, with a penalty for pole shares over
// their cap.
double minimax_objective(const VariableExponents& ex, const std::vector<double>& shares, double margin) {
  double worst = 1.0, excess = 0.0;
  const std::size_t k = ex.zeros.size();
  for (std::size_t j = 0; j < k; ++j) worst = std::max(worst, zero_lower(ex.zeros[j], shares[j]));
  for (std::size_t j = 0; j < ex.poles.size(); ++j) {
    const double cap = pole_share_cap(ex.poles[j], margin);
    const double s = std::min(shares[k + j], cap);
    excess += std::max(0.0, shares[k + j] - cap);
    worst = std::max(worst, pole_lower(ex.poles[j], s));
  }
  return worst + 10.0 * excess;
}

std::vector<double> softmax(const Eigen::VectorXd& free) {
  std::vector<double> x(std::size_t(free.size()) + 1, 0.0);
  for (Eigen::Index i = 0; i < free.size(); ++i) x[std::size_t(i) + 1] = free[i];
  const double top = *std::max_element(x.begin(), x.end());
  double sum = 0.0;
  for (auto& v : x) sum += (v = std::exp(v - top));
  for (auto& v : x) v /= sum;
  return x;
}

AllocationResult simplex_allocation(const VariableExponents& ex, const OptimizerOptions& opt) {
  const std::size_t k = ex.size();
  const Eigen::Index dim = Eigen::Index(k) - 1;
  AllocationResult out;
  const auto finish = [&](const std::vector<double>& shares) {
    ThetaAllocation a;
    a.zero_thetas.assign(shares.begin(), shares.begin() + std::ptrdiff_t(ex.zeros.size()));
    a.pole_sigmas.assign(shares.begin() + std::ptrdiff_t(ex.zeros.size()), shares.end());
    for (std::size_t j = 0; j < ex.poles.size(); ++j)
      a.pole_sigmas[j] = std::min(a.pole_sigmas[j], pole_share_cap(ex.poles[j], opt.pole_margin));
    a.constant_share = std::max(0.0, 1.0 - a.total());
    out.allocation = a;
    out.interval = interval_for_allocation(ex, a);
  };
  if (dim == 0) {
    finish({1.0});
    return out;
  }

  const auto f = [&](const Eigen::VectorXd& v) { return minimax_objective(ex, softmax(v), opt.pole_margin); };
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> jitter(-0.05, 0.05);

  Eigen::VectorXd best = Eigen::VectorXd::Zero(dim);
  double best_value = f(best);
  int used = 0;
  // Restarts shrink the initial simplex around the incumbent; minimax
  // objectives tend to stall a single run on a kink.
  for (double step = 1.0; step > 1e-9 && used < opt.max_iterations; step *= 0.1) {
    std::vector<Eigen::VectorXd> pts(std::size_t(dim) + 1, best);
    for (Eigen::Index i = 0; i < dim; ++i) {
      pts[std::size_t(i) + 1][i] += step;
      for (Eigen::Index j = 0; j < dim; ++j) pts[std::size_t(i) + 1][j] += step * jitter(rng);
    }
    std::vector<double> vals;
    for (const auto& p : pts) vals.push_back(f(p));
    for (; used < opt.max_iterations; ++used) {
      std::vector<std::size_t> order(pts.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
      const std::size_t b = order.front(), w = order.back(), sw = order[order.size() - 2];
      if (vals[w] - vals[b] <= opt.tolerance * 1e-2) break;
      Eigen::VectorXd centroid = Eigen::VectorXd::Zero(dim);
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (i != w) centroid += pts[i];
      centroid /= double(dim);
      const Eigen::VectorXd refl = centroid + (centroid - pts[w]);
      const double fr = f(refl);
      if (fr < vals[b]) {
        const Eigen::VectorXd exp = centroid + 2.0 * (centroid - pts[w]);
        const double fe = f(exp);
        if (fe < fr) {
          pts[w] = exp;
          vals[w] = fe;
        } else {
          pts[w] = refl;
          vals[w] = fr;
        }
      } else if (fr < vals[sw]) {
        pts[w] = refl;
        vals[w] = fr;
      } else {
        const bool outside = fr < vals[w];
        const Eigen::VectorXd con = outside ? Eigen::VectorXd(centroid + 0.5 * (refl - centroid))
                                            : Eigen::VectorXd(centroid + 0.5 * (pts[w] - centroid));
        const double fc = f(con);
        if (fc < std::min(fr, vals[w])) {
          pts[w] = con;
          vals[w] = fc;
        } else {
          for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i == b) continue;
            pts[i] = pts[b] + 0.5 * (pts[i] - pts[b]);
            vals[i] = f(pts[i]);
          }
        }
      }
    }
    const auto it = std::min_element(vals.begin(), vals.end());
    if (*it < best_value) {
      best_value = *it;
      best = pts[std::size_t(it - vals.begin())];
    }
  }
  finish(softmax(best));
  out.iterations = used;
  return out;
}

}  // namespace

Interval interval_for_allocation(const VariableExponents& ex, const ThetaAllocation& alloc) {
  check_exponents(ex);
  if (alloc.zero_thetas.size() != ex.zeros.size() || alloc.pole_sigmas.size() != ex.poles.size())
    throw DomainError("interval_for_allocation: allocation does not match the factors");
  if (!(alloc.constant_share >= 0.0)) throw DomainError("interval_for_allocation: negative constant share");
  if (std::abs(alloc.total() - 1.0) > 1e-9) throw DomainError("interval_for_allocation: shares must sum to 1");
  double lower = 1.0, upper = kInf;
  for (std::size_t j = 0; j < ex.zeros.size(); ++j) {
    const double a = ex.zeros[j], t = alloc.zero_thetas[j];
    if (!(t > 0.0 && t <= 1.0)) throw DomainError("interval_for_allocation: zero share outside (0, 1]");
    lower = std::max(lower, zero_lower(a, t));
    upper = std::min(upper, (2.0 * a + 2.0 * t) / a);
  }
  for (std::size_t j = 0; j < ex.poles.size(); ++j) {
    const double b = ex.poles[j], s = alloc.pole_sigmas[j];
    if (!(s > 0.0 && s <= 1.0)) throw DomainError("interval_for_allocation: pole share outside (0, 1]");
    if (!(b > 2.0 * s)) throw DomainError("interval_for_allocation: pole share too large for its order");
    lower = std::max(lower, pole_lower(b, s));
    upper = std::min(upper, (2.0 * b - 2.0 * s) / (b - 2.0 * s));
  }
  return make_interval(lower, upper);
}

AllocationResult optimize_allocation(const VariableExponents& ex, const OptimizerOptions& opt) {
  check_exponents(ex);
  if (!(opt.pole_margin > 0.0 && opt.pole_margin < 0.5)) throw DomainError("optimize_allocation: bad pole margin");
  if (cap_total(ex, opt.pole_margin) <= 1.0) {
    // Every factor sits at its cap; the constant weight takes the rest.
    AllocationResult out;
    out.allocation = capped_allocation(ex, opt.pole_margin);
    out.interval = interval_for_allocation(ex, out.allocation);
    return out;
  }
  return opt.method == AllocationMethod::Level ? level_allocation(ex, opt) : simplex_allocation(ex, opt);
}

PRangeResult optimize_allocation(const QFactorization& fact, const OptimizerOptions& opt) {
  PRangeResult out;
  out.map = fact.map.name();
  double lower = 1.0, upper = kInf;
  for (const auto& var : fact.variables) {
    out.exponents.push_back(variable_exponents(var));
    out.per_variable.push_back(optimize_allocation(out.exponents.back(), opt));
    lower = std::max(lower, out.per_variable.back().interval.lower);
    upper = std::min(upper, out.per_variable.back().interval.upper);
  }
  out.interval = make_interval(lower, upper);
  if (!(out.interval.contains(2.0))) throw NumericalError("optimize_allocation: interval misses p = 2");
  return out;
}

Interval prange_symmetrized_closed_form(int n) {
  if (n < 2) throw DomainError("prange_symmetrized_closed_form: n must be >= 2");
  const double r = std::sqrt(double(n) * n - 1.0);
  const double num = r + n - 1.0;
  auto out = make_interval(num / r, num / (n - 1.0));
  if (!out.conjugate) throw NumericalError("prange_symmetrized_closed_form: endpoints not conjugate");
  return out;
}

double theta_star(int n) {
  if (n < 2) throw DomainError("theta_star: n must be >= 2");
  const double r = std::sqrt(double(n) * n - 1.0);
  return (r - n + 1.0) / (2.0 * n - 2.0);
}

PRangeResult prange_symmetrized(int n, const OptimizerOptions& opt) {
  if (n < 2) throw DomainError("prange_symmetrized: n must be >= 2");
  return optimize_allocation(q_weight_factorization(CoveringMap::symmetrization(n)), opt);
}

PRangeResult prange_hartogs(int m, int n, const OptimizerOptions& opt) {
  return optimize_allocation(q_weight_factorization(CoveringMap::hartogs(m, n)), opt);
}

}  // namespace bergman
