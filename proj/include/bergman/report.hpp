#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bergman/apweights.hpp"
#include "bergman/friedrichs.hpp"
#include "bergman/kernels.hpp"
#include "bergman/prange.hpp"
#include "bergman/projector.hpp"

namespace bergman {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "bergman-lab/1";

/// Finite numbers as numbers; infinities and NaN as the strings "inf", "-inf", "nan".
Json number_json(double x);
/// {"re": x, "im": y}.
Json complex_json(const Complex& z);
Json point_json(const Point2& z);

Json to_json(const Interval& iv);
Json to_json(const ThetaAllocation& a);
Json to_json(const PRangeResult& r);
Json to_json(const DiskSpec& d);
Json to_json(const HalfDiskQuadrature& q);
Json to_json(const DiskQuadrature& q);
Json to_json(const BoxQuadrature& q);
Json to_json(const PowerWeight& mu);
Json to_json(const ApReport& r);
Json to_json(const KernelComparison& c);
Json to_json(const NormRatioReport& r);
Json to_json(const FriedrichsValue& v);
Json to_json(const LinfBound& b);
Json to_json(const SymmetricBergmanElement& f);

std::string format_double(double x);
std::string ap_report_csv(const ApReport& r);
std::string kernel_comparisons_csv(const std::vector<KernelComparison>& rows);

}  // namespace bergman
