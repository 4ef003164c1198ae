#include "bergman/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace bergman {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json number_json(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

Json complex_json(const Complex& z) { return {{"re", number_json(z.real())}, {"im", number_json(z.imag())}}; }

Json point_json(const Point2& z) { return Json::array({complex_json(z[0]), complex_json(z[1])}); }

Json to_json(const Interval& iv) {
  return {{"lower", number_json(iv.lower)},
          {"upper", number_json(iv.upper)},
          {"conjugate", iv.conjugate},
          {"conjugacy_defect", number_json(iv.conjugacy_defect())}};
}

Json to_json(const ThetaAllocation& a) {
  Json zeros = Json::array(), poles = Json::array();
  for (double t : a.zero_thetas) zeros.push_back(number_json(t));
  for (double s : a.pole_sigmas) poles.push_back(number_json(s));
  return {{"zero_thetas", zeros}, {"pole_sigmas", poles}, {"constant_share", number_json(a.constant_share)}};
}

Json to_json(const PRangeResult& r) {
  Json vars = Json::array();
  for (std::size_t v = 0; v < r.per_variable.size(); ++v) {
    const auto& ex = r.exponents[v];
    vars.push_back({{"variable", v + 1},
                    {"zero_orders", ex.zeros},
                    {"pole_orders", ex.poles},
                    {"allocation", to_json(r.per_variable[v].allocation)},
                    {"interval", to_json(r.per_variable[v].interval)},
                    {"iterations", r.per_variable[v].iterations}});
  }
  return {{"map", r.map}, {"per_variable_allocations", vars}, {"interval", to_json(r.interval)}};
}

Json to_json(const DiskSpec& d) { return {{"center_x", d.center_x}, {"radius", d.radius}}; }

Json to_json(const HalfDiskQuadrature& q) {
  return {{"radial_order", q.radial_order},     {"angular_order", q.angular_order},
          {"grading_levels", q.grading_levels}, {"grading_ratio", q.grading_ratio},
          {"smooth_radial", q.smooth_radial},   {"smooth_angular", q.smooth_angular},
          {"anchor_reach", q.anchor_reach}};
}

Json to_json(const DiskQuadrature& q) { return {{"radial", q.radial}, {"angular", q.angular}}; }

Json to_json(const BoxQuadrature& q) {
  return {{"x0", q.x0},       {"x1", q.x1},         {"y0", q.y0},
          {"y1", q.y1},       {"focus_x", q.focus_x}, {"order", q.order},
          {"ratio", q.ratio}, {"min_width", q.min_width}, {"max_width", q.max_width}};
}

Json to_json(const PowerWeight& mu) {
  Json factors = Json::array();
  for (const auto& f : mu.factors)
    factors.push_back({{"center", complex_json(f.center)}, {"exponent", number_json(f.exponent)}});
  return {{"prefactor", mu.prefactor}, {"factors", factors}};
}

Json to_json(const ApReport& r) {
  Json rows = Json::array();
  for (const auto& e : r.entries)
    rows.push_back({{"center_x", e.disk.center_x}, {"radius", e.disk.radius}, {"n_d", number_json(e.value)}});
  return {{"p", r.p},
          {"sup_nd", number_json(r.sup_nd)},
          {"growth_flag", r.growth_flag},
          {"divergent_disks", r.divergent_disks},
          {"disks", rows}};
}

Json to_json(const KernelComparison& c) {
  return {{"z", point_json(c.z)},
          {"zeta", point_json(c.zeta)},
          {"series_value", complex_json(c.series_value)},
          {"closed_value", complex_json(c.closed_value)},
          {"truncation_degree", c.truncation_degree},
          {"abs_error", number_json(c.abs_error)}};
}

Json to_json(const NormRatioReport& r) {
  Json rows = Json::array();
  for (const auto& e : r.entries)
    rows.push_back({{"function", e.function},
                    {"numerator", number_json(e.numerator)},
                    {"denominator", number_json(e.denominator)},
                    {"ratio", number_json(e.ratio)},
                    {"divergent", e.divergent},
                    {"tail_estimate", number_json(e.tail_estimate)}});
  return {{"p", r.p}, {"weight", r.weight}, {"box", to_json(r.box)}, {"nodes", r.nodes}, {"entries", rows}};
}

Json to_json(const FriedrichsValue& v) {
  Json values = Json::array();
  for (const auto& x : v.values) values.push_back(complex_json(x));
  return {{"value", complex_json(v.value)}, {"variation", number_json(v.variation)}, {"grid_values", values}};
}

Json to_json(const LinfBound& b) {
  return {{"linf", number_json(b.linf)},
          {"l2", number_json(b.l2)},
          {"ratio", number_json(b.ratio)},
          {"bound", number_json(b.bound)}};
}

Json to_json(const SymmetricBergmanElement& f) {
  Json terms = Json::array();
  for (const auto& [idx, a] : f.terms) terms.push_back({{"j", idx.j}, {"k", idx.k}, {"coefficient", complex_json(a)}});
  return terms;
}

std::string ap_report_csv(const ApReport& r) {
  std::ostringstream os;
  os << "center_x,radius,n_d\n";
  for (const auto& e : r.entries)
    os << format_double(e.disk.center_x) << ',' << format_double(e.disk.radius) << ',' << format_double(e.value)
       << '\n';
  return os.str();
}

std::string kernel_comparisons_csv(const std::vector<KernelComparison>& rows) {
  std::ostringstream os;
  os << "z1_re,z1_im,z2_re,z2_im,zeta1_re,zeta1_im,zeta2_re,zeta2_im,series_re,series_im,closed_re,closed_im,"
        "truncation_degree,abs_error\n";
  for (const auto& c : rows) {
    for (const Complex& v : {c.z[0], c.z[1], c.zeta[0], c.zeta[1], c.series_value, c.closed_value})
      os << format_double(v.real()) << ',' << format_double(v.imag()) << ',';
    os << c.truncation_degree << ',' << format_double(c.abs_error) << '\n';
  }
  return os.str();
}

}  // namespace bergman
