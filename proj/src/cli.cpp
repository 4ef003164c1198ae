#include "bergman/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "bergman/covering.hpp"
#include "bergman/domains.hpp"
#include "bergman/friedrichs.hpp"
#include "bergman/kernels.hpp"
#include "bergman/parse.hpp"
#include "bergman/prange.hpp"
#include "bergman/projector.hpp"
#include "bergman/report.hpp"

namespace bergman {

namespace {

void add_disk_quadrature(CLI::App* app, DiskQuadrature& q, const std::string& prefix) {
  app->add_option("--" + prefix + "radial", q.radial, "Gauss-Legendre radial order")->check(CLI::Range(1, 4096));
  app->add_option("--" + prefix + "angular", q.angular, "uniform angular order")->check(CLI::Range(1, 8192));
}

std::string timestamp_utc() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

PowerWeight parse_factors(const std::vector<std::string>& items) {
  PowerWeight mu;
  for (const auto& item : items) {
    const auto colon = item.rfind(':');
    if (colon == std::string::npos) throw UsageError("factor '" + item + "' must look like center:exponent");
    double e = 0.0;
    try {
      std::size_t used = 0;
      e = std::stod(item.substr(colon + 1), &used);
      if (used != item.size() - colon - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw UsageError("bad exponent in factor '" + item + "'");
    }
    mu = mu * PowerWeight::power(parse_complex(item.substr(0, colon)), e);
  }
  return mu;
}

// Points of the bidisk with both coordinates of modulus <= radius.
std::vector<Point2> grid_for(const RunConfig& c) { return bidisk_grid(c.points, c.radius, c.seed); }

struct Outcome {
  Json body;
  bool contract_ok = true;
  std::string csv;
};

Outcome run_prange(const RunConfig& c) {
  OptimizerOptions opt;
  opt.seed = c.seed;
  if (c.method == "level")
    opt.method = AllocationMethod::Level;
  else if (c.method == "simplex")
    opt.method = AllocationMethod::Simplex;
  else
    throw UsageError("--method must be level or simplex");

  Outcome out;
  PRangeResult r;
  if (c.map == "sym") {
    r = prange_symmetrized(c.n, opt);
    const auto closed = prange_symmetrized_closed_form(c.n);
    out.body["closed_form"] = to_json(closed);
    out.body["theta_star"] = theta_star(c.n);
    out.body["closed_form_deviation"] =
        std::max(std::abs(r.interval.lower - closed.lower), std::abs(r.interval.upper - closed.upper));
  } else if (c.map == "hartogs") {
    r = prange_hartogs(c.m, c.n, opt);
  } else {
    throw UsageError("--map must be sym or hartogs");
  }
  const auto result = to_json(r);
  for (auto it = result.begin(); it != result.end(); ++it) out.body[it.key()] = it.value();
  out.contract_ok = r.interval.conjugate && r.interval.contains(2.0);
  out.body["tolerances"] = {{"conjugacy", 1e-12}, {"pole_margin", opt.pole_margin}, {"optimizer", opt.tolerance}};
  out.body["parameters"] = {{"map", c.map}, {"n", c.n}, {"m", c.m}, {"method", c.method}, {"seed", c.seed}};
  return out;
}

Outcome run_apsweep(const RunConfig& c) {
  const Complex w = parse_complex(c.w);
  PowerWeight mu;
  std::optional<Interval> range;
  if (c.weight == "zero") {
    mu = zero_factor_weight(w, c.alpha, c.theta, c.p);
    range = prop_mu1_range(c.alpha, c.theta);
  } else if (c.weight == "pole") {
    mu = pole_factor_weight(w, c.beta, c.sigma, c.p);
    range = prop_mu2_range(c.beta, c.sigma);
  } else if (c.weight == "unit") {
    mu = PowerWeight::unit();
  } else if (c.weight == "custom") {
    mu = parse_factors(c.factors);
  } else {
    throw UsageError("--weight must be zero, pole, unit or custom");
  }
  const auto report = ap_sweep(mu, c.p, c.family.disks(), c.halfdisk);
  Outcome out;
  out.body = to_json(report);
  out.body["weight"] = to_json(mu);
  if (range) {
    out.body["interval"] = to_json(*range);
    out.body["p_inside_interval"] = range->contains(c.p);
  }
  out.body["heuristic_growth_threshold"] = "10x over two decades of R";
  out.body["quadrature"] = to_json(c.halfdisk);
  out.body["parameters"] = {{"weight", c.weight}, {"alpha", c.alpha},     {"theta", c.theta},
                            {"beta", c.beta},     {"sigma", c.sigma},     {"w", complex_json(w)},
                            {"p", c.p},           {"factors", c.factors}, {"x_min", c.family.x_min},
                            {"x_max", c.family.x_max}, {"x_step", c.family.x_step},
                            {"log2r_min", c.family.log2r_min}, {"log2r_max", c.family.log2r_max}};
  out.csv = ap_report_csv(report);
  return out;
}

Outcome run_kernel_check(const RunConfig& c) {
  if (!(c.radius > 0.0 && c.radius < 1.0)) throw UsageError("--radius must lie in (0, 1)");
  if (c.pairs < 1) throw UsageError("--pairs must be positive");
  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto draw = [&] { return std::polar(c.radius * std::sqrt(u(rng)), 2.0 * kPi * u(rng)); };
  std::vector<KernelComparison> rows;
  double worst = 0.0;
  for (int i = 0; i < c.pairs; ++i) {
    Point2 z, zeta;
    z << draw(), draw();
    zeta << draw(), draw();
    rows.push_back(compare_kernels(z, zeta, c.truncation));
    worst = std::max(worst, rows.back().abs_error);
  }
  Outcome out;
  Json table = Json::array();
  for (const auto& r : rows) table.push_back(to_json(r));
  out.body = {{"comparisons", table}, {"max_abs_error", worst}, {"pass", worst < c.kernel_tolerance}};
  out.body["tolerances"] = {{"abs_error", c.kernel_tolerance}};
  out.body["parameters"] = {{"pairs", c.pairs}, {"radius", c.radius}, {"truncation", c.truncation}, {"seed", c.seed}};
  out.contract_ok = worst < c.kernel_tolerance;
  out.csv = kernel_comparisons_csv(rows);
  return out;
}

Outcome run_project(const RunConfig& c) {
  SampledFunction f;
  std::function<Complex(const Complex&)> expected;
  if (c.function == "poly") {
    f = polynomial_function(parse_complex_list(c.coeffs));
    expected = f.eval;
  } else if (c.function == "conj") {
    f = {[](const Complex& z) { return std::conj(z); }, "conj(z)", std::nullopt};
    expected = [](const Complex&) { return Complex(0.0); };
  } else if (c.function == "abs2") {
    f = {[](const Complex& z) { return Complex(std::norm(z)); }, "|z|^2", std::nullopt};
    expected = [](const Complex&) { return Complex(0.5); };
  } else {
    throw UsageError("--function must be poly, conj or abs2");
  }
  if (!(c.radius > 0.0 && c.radius < 1.0)) throw UsageError("--radius must lie in (0, 1)");
  const auto bf = project_disk(f, c.disk);
  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Json rows = Json::array();
  double worst = 0.0;
  for (int i = 0; i < c.points; ++i) {
    const Complex z = std::polar(c.radius * std::sqrt(u(rng)), 2.0 * kPi * u(rng));
    const Complex v = bf(z), e = expected(z);
    worst = std::max(worst, std::abs(v - e));
    rows.push_back({{"z", complex_json(z)}, {"projection", complex_json(v)}, {"expected", complex_json(e)}});
  }
  Outcome out;
  out.body = {{"function", f.name}, {"points", rows}, {"max_residual", worst}, {"pass", worst < 1e-8}};
  out.body["quadrature"] = to_json(c.disk);
  out.body["tolerances"] = {{"residual", 1e-8}};
  out.body["parameters"] = {{"function", c.function}, {"coeffs", c.coeffs}, {"points", c.points},
                            {"radius", c.radius},     {"seed", c.seed}};
  out.contract_ok = worst < 1e-8;
  return out;
}

std::vector<SampledFunction2> bell_catalogue(const std::string& which) {
  using P = Point2;
  std::vector<SampledFunction2> all{
      {[](const P&) { return Complex(1.0); }, "1"},
      {[](const P& x) { return x[0]; }, "s"},
      {[](const P& x) { return x[1]; }, "p"},
      {[](const P& x) { return x[0] * x[0]; }, "s^2"},
      {[](const P& x) { return x[0] * x[1]; }, "s p"},
      {[](const P& x) { return x[1] * x[1] * x[0] - x[1]; }, "s p^2 - p"},
      {[](const P& x) { return std::pow(x[0], 3); }, "s^3"},
      {[](const P& x) { return std::conj(x[0]); }, "conj(s)"},
      {[](const P& x) { return std::norm(x[0]) + 0.0 * kI; }, "|s|^2"},
      {[](const P& x) { return x[0] * std::conj(x[1]); }, "s conj(p)"},
      {[](const P& x) { return std::conj(x[0] * x[0]) * x[1]; }, "conj(s)^2 p"},
  };
  if (which == "all") return all;
  for (const auto& h : all)
    if (h.name == which) return {h};
  throw UsageError("unknown --func '" + which + "'");
}

Outcome run_bell_check(const RunConfig& c) {
  const auto grid = grid_for(c);
  Json rows = Json::array();
  double worst = 0.0;
  for (const auto& h : bell_catalogue(c.h)) {
    const auto r = bell_transform_residual(h, grid, c.bidisk);
    worst = std::max(worst, r.residual);
    rows.push_back({{"h", h.name}, {"residual", r.residual}, {"lhs_scale", r.lhs_scale}});
  }
  Outcome out;
  out.body = {{"map", "sym(2)"}, {"results", rows}, {"max_residual", worst}, {"pass", worst < 1e-6}};
  Json pts = Json::array();
  for (const auto& z : grid) pts.push_back(point_json(z));
  out.body["grid"] = pts;
  out.body["quadrature"] = to_json(c.bidisk);
  out.body["tolerances"] = {{"residual", 1e-6}};
  out.body["parameters"] = {{"h", c.h}, {"points", c.points}, {"radius", c.radius}, {"seed", c.seed}};
  out.contract_ok = worst < 1e-6;
  return out;
}

Outcome run_pnorm_probe(const RunConfig& c) {
  BoxQuadrature box = c.box;
  Outcome out;
  if (c.probe_weight == "unit") {
    const auto r = weighted_norm_ratio(c.p, PowerWeight::unit(), standard_test_family(), box);
    out.body = to_json(r);
    out.body["max_ratio"] = r.max_ratio();
    if (c.p == 2.0) {
      out.body["contraction_pass"] = r.max_ratio() <= 1.0 + 1e-3;
      out.contract_ok = r.max_ratio() <= 1.0 + 1e-3;
    }
  } else if (c.probe_weight == "g2-slice") {
    const Complex w0 = parse_complex(c.w0);
    if (!(w0.imag() >= 0.0)) throw UsageError("--w0 must lie in the closed upper half-plane");
    const auto pr = prange_symmetrized(2);
    const double theta1 = pr.per_variable[0].allocation.pole_sigmas[0];
    const double theta2 = pr.per_variable[0].allocation.zero_thetas[0];
    const PowerWeight mu =
        PowerWeight::power(Complex(0.0, -1.0), -3.0 * (2.0 - c.p) / theta1) * PowerWeight::power(w0, (2.0 - c.p) / theta2);
    box.focus_x = w0.real();
    std::vector<SampledFunction> fs;
    for (double e : c.eps) fs.push_back(concentrating_reciprocal(w0, e));
    const auto r = weighted_norm_ratio(c.p, mu, fs, box);
    out.body = to_json(r);
    out.body["interval"] = to_json(pr.interval);
    out.body["p_inside_interval"] = pr.interval.contains(c.p);
    out.body["theta1"] = theta1;
    out.body["theta2"] = theta2;
    const auto& es = r.entries;
    const bool finite = !es.empty() && std::all_of(es.begin(), es.end(), [](const auto& e) { return !e.divergent; });
    out.body["trend"] = finite ? number_json(es.back().ratio / es.front().ratio) : Json("divergent");
    out.body["heuristic"] = "ratio trend along eps; not a proof of (un)boundedness";
  } else {
    throw UsageError("--weight must be unit or g2-slice");
  }
  out.body["parameters"] = {{"p", c.p}, {"weight", c.probe_weight}, {"w0", c.w0}, {"eps", c.eps}, {"seed", c.seed}};
  out.body["tolerances"] = {{"contraction", 1e-3}};
  return out;
}

Outcome run_friedrichs(const RunConfig& c) {
  const auto f = parse_element(c.coeff);
  const auto grid = grid_for(c);
  const auto v = friedrichs_nu(f, grid, c.friedrichs_quad);
  const auto g = friedrichs_G_quadrature(f, grid, c.friedrichs_quad);
  const Complex expected = friedrichs_G(f);
  const double error = std::abs(v.value - expected);
  const bool pass = error < 1e-6 && v.variation < 1e-8;
  Outcome out;
  out.body = {{"input_coefficients", to_json(f)},
              {"value", complex_json(v.value)},
              {"variation", v.variation},
              {"expected", complex_json(expected)},
              {"a10", complex_json(coefficient_a10(f))},
              {"error", error},
              {"rank_one_pass", pass},
              {"friedrichs_nu", to_json(v)},
              {"friedrichs_G_quadrature", to_json(g)},
              {"linf_bound", to_json(linfty_bound_check(f))}};
  out.body["quadrature"] = to_json(c.friedrichs_quad);
  out.body["tolerances"] = {{"value", 1e-6}, {"variation", 1e-8}};
  out.body["parameters"] = {{"coeff", c.coeff}, {"points", c.points}, {"radius", c.radius}, {"seed", c.seed}};
  out.contract_ok = pass;
  return out;
}

Outcome run_membership(const RunConfig& c) {
  if (c.point.empty()) throw UsageError("--point is required");
  const auto pts = parse_complex_list(c.point);
  const double tol = c.closure_tolerance;
  Outcome out;
  bool member = false, closure = false;
  if (c.domain == "symdisk") {
    SymmetrizedPoint s{Eigen::Map<const ComplexVector>(pts.data(), Eigen::Index(pts.size()))};
    const double radius = symmetrized_root_radius(s);
    member = radius < 1.0;
    closure = radius <= 1.0 + tol;
    const auto fiber = fiber_of_symmetrization(s);
    Json roots = Json::array();
    for (const auto& r : fiber.roots) roots.push_back(complex_json(r));
    out.body["roots"] = roots;
    out.body["root_radius"] = radius;
  } else if (c.domain == "disk" || c.domain == "polydisk") {
    if (c.domain == "disk" && pts.size() != 1) throw UsageError("disk membership takes one coordinate");
    member = closure = true;
    for (const auto& z : pts) {
      member = member && in_unit_disk(z);
      closure = closure && std::abs(z) <= 1.0 + tol;
    }
  } else if (c.domain == "halfplane") {
    if (pts.size() != 1) throw UsageError("halfplane membership takes one coordinate");
    member = in_upper_halfplane(pts[0]);
    closure = pts[0].imag() >= -tol;
  } else if (c.domain == "hartogs") {
    if (pts.size() != 2) throw UsageError("hartogs membership takes two coordinates");
    member = in_hartogs_triangle(pts[0], pts[1], c.gamma);
    closure = std::pow(std::abs(pts[0]), c.gamma) <= std::abs(pts[1]) + tol && std::abs(pts[1]) <= 1.0 + tol;
  } else {
    throw UsageError("--domain must be symdisk, disk, polydisk, halfplane or hartogs");
  }
  Json coords = Json::array();
  for (const auto& z : pts) coords.push_back(complex_json(z));
  out.body["member"] = member;
  out.body["in_closure"] = closure;
  out.body["tolerances"] = {{"closure", tol}};
  out.body["parameters"] = {{"domain", c.domain}, {"point", coords}, {"gamma", c.gamma}};
  return out;
}

}  // namespace

RunConfig parse_args(int argc, const char* const* argv, std::string* help) {
  RunConfig c;
  CLI::App app{"Numerical probes for Bergman projections on quotient domains", "bergman-lab"};
  app.require_subcommand(1);
  const auto common = [&](CLI::App* s) {
    s->add_option("--seed", c.seed, "random seed");
    s->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    s->add_option("-o,--output", c.output, "output path (default: stdout)");
  };

  auto* prange = app.add_subcommand("prange", "p-interval from the covering map");
  prange->add_option("--map", c.map, "sym or hartogs");
  prange->add_option("--n", c.n, "dimension / Hartogs exponent n");
  prange->add_option("--m", c.m, "Hartogs exponent m");
  prange->add_option("--method", c.method, "level or simplex");
  common(prange);

  auto* ap = app.add_subcommand("apsweep", "A_p^+ functional over a disk family");
  ap->add_option("--weight", c.weight, "zero, pole, unit or custom");
  ap->add_option("--alpha", c.alpha);
  ap->add_option("--theta", c.theta);
  ap->add_option("--beta", c.beta);
  ap->add_option("--sigma", c.sigma);
  ap->add_option("--w", c.w, "weight center (complex)");
  ap->add_option("--p", c.p);
  ap->add_option("--factor", c.factors, "center:exponent, repeatable (custom weight)");
  ap->add_option("--x-min", c.family.x_min);
  ap->add_option("--x-max", c.family.x_max);
  ap->add_option("--x-step", c.family.x_step);
  ap->add_option("--log2r-min", c.family.log2r_min);
  ap->add_option("--log2r-max", c.family.log2r_max);
  ap->add_option("--radial-order", c.halfdisk.radial_order)->check(CLI::Range(2, 512));
  ap->add_option("--angular-order", c.halfdisk.angular_order)->check(CLI::Range(2, 512));
  ap->add_option("--grading-levels", c.halfdisk.grading_levels)->check(CLI::Range(0, 60));
  common(ap);

  auto* kc = app.add_subcommand("kernel-check", "series vs closed-form weighted kernel");
  kc->add_option("--pairs", c.pairs);
  kc->add_option("--radius", c.radius);
  kc->add_option("--truncation", c.truncation);
  kc->add_option("--tolerance", c.kernel_tolerance);
  common(kc);

  auto* pr = app.add_subcommand("project", "Bergman projection on the disk");
  pr->add_option("--function", c.function, "poly, conj or abs2");
  pr->add_option("--coeffs", c.coeffs, "polynomial coefficients, ascending");
  pr->add_option("--points", c.points);
  pr->add_option("--radius", c.radius);
  add_disk_quadrature(pr, c.disk, "");
  common(pr);

  auto* bell = app.add_subcommand("bell-check", "Bell transformation law for the symmetrized bidisk");
  bell->add_option("--func", c.h, "test function name or 'all'");
  bell->add_option("--points", c.points);
  bell->add_option("--radius", c.radius);
  add_disk_quadrature(bell, c.bidisk, "");
  common(bell);

  auto* pn = app.add_subcommand("pnorm-probe", "weighted L^p ratio of the half-plane projection");
  pn->add_option("--p", c.p);
  pn->add_option("--weight", c.probe_weight, "unit or g2-slice");
  pn->add_option("--w0", c.w0);
  pn->add_option("--eps", c.eps);
  pn->add_option("--box-x0", c.box.x0);
  pn->add_option("--box-x1", c.box.x1);
  pn->add_option("--box-y0", c.box.y0);
  pn->add_option("--box-y1", c.box.y1);
  pn->add_option("--box-order", c.box.order);
  pn->add_option("--box-min-width", c.box.min_width);
  common(pn);

  auto* fr = app.add_subcommand("friedrichs", "Friedrichs operator on the symmetrized bidisk");
  fr->add_option("--coeff", c.coeff, "items (j,k):a separated by ';'");
  fr->add_option("--points", c.points);
  fr->add_option("--radius", c.radius);
  add_disk_quadrature(fr, c.friedrichs_quad, "");
  common(fr);

  auto* mem = app.add_subcommand("membership", "domain membership of a point");
  mem->add_option("--domain", c.domain, "symdisk, disk, polydisk, halfplane or hartogs");
  mem->add_option("--point", c.point, "comma-separated complex coordinates");
  mem->add_option("--gamma", c.gamma);
  mem->add_option("--closure-tol", c.closure_tolerance);
  common(mem);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    if (help) *help = app.help();
    return RunConfig{};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  if (c.format == "csv" && c.subcommand != "apsweep" && c.subcommand != "kernel-check")
    throw UsageError("csv output is available for apsweep and kernel-check only");
  return c;
}

RunResult run(const RunConfig& config) {
  static const std::map<std::string, std::function<Outcome(const RunConfig&)>> table{
      {"prange", run_prange},         {"apsweep", run_apsweep},       {"kernel-check", run_kernel_check},
      {"project", run_project},       {"bell-check", run_bell_check}, {"pnorm-probe", run_pnorm_probe},
      {"friedrichs", run_friedrichs}, {"membership", run_membership}};
  const auto it = table.find(config.subcommand);
  if (it == table.end()) return {1, Json{{"schema", kSchema}, {"error", "unknown subcommand '" + config.subcommand + "'"}}.dump(2) + "\n"};

  const auto start = std::chrono::steady_clock::now();
  const std::string started = timestamp_utc();
  Outcome outcome;
  int code = 0;
  try {
    outcome = it->second(config);
    code = outcome.contract_ok ? 0 : 2;
  } catch (const UsageError& e) {
    outcome.body = {{"error", e.what()}, {"kind", "usage"}};
    code = 1;
  } catch (const DomainError& e) {
    outcome.body = {{"error", e.what()}, {"kind", "domain"}};
    code = 1;
  } catch (const NumericalError& e) {
    outcome.body = {{"error", e.what()}, {"kind", "numerical"}};
    code = 2;
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (config.format == "csv" && code == 0) {
    std::ostringstream os;
    os << "# schema=" << kSchema << " subcommand=" << config.subcommand << " seed=" << config.seed << '\n'
       << outcome.csv;
    return {code, os.str()};
  }
  Json doc = outcome.body;
  doc["schema"] = kSchema;
  doc["subcommand"] = config.subcommand;
  doc["exit_status"] = code;
  doc["wall_clock"] = {{"started_utc", started}, {"elapsed_seconds", elapsed}};
  doc["threads"] = thread_count();
  return {code, doc.dump(2) + "\n"};
}

void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(std::random_device{}());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    os << content;
    os.flush();
    if (!os) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot move report into " + path + ": " + ec.message());
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::string help;
  try {
    config = parse_args(argc, argv, &help);
  } catch (const UsageError& e) {
    err << "bergman-lab: " << e.what() << "\n";
    return 1;
  }
  if (config.subcommand.empty()) {
    out << help;
    return 0;
  }
  const auto result = run(config);
  try {
    if (config.output.empty())
      out << result.document;
    else
      write_atomically(config.output, result.document);
  } catch (const std::exception& e) {
    err << "bergman-lab: " << e.what() << "\n";
    return 1;
  }
  if (result.exit_code != 0) err << "bergman-lab: " << config.subcommand << " exited with status " << result.exit_code << "\n";
  return result.exit_code;
}

}  // namespace bergman
