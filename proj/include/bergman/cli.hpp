#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "bergman/apweights.hpp"
#include "bergman/quadrature.hpp"

namespace bergman {

/// Malformed flags, unknown subcommand or unsupported option combination.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every flag of every subcommand; each subcommand reads its own subset.
struct RunConfig {
  std::string subcommand;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string output;  // empty: standard output

  // prange
  std::string map = "sym";
  int n = 2;
  int m = 1;
  std::string method = "level";

  // apsweep
  std::string weight = "zero";  // zero | pole | unit | custom
  double alpha = 1.0, theta = 0.5, beta = 3.0, sigma = 0.5;
  std::string w = "0";
  double p = 2.5;
  std::vector<std::string> factors;  // "center:exponent"
  DiskFamily family;
  HalfDiskQuadrature halfdisk;

  // kernel-check
  int pairs = 1000;
  double radius = 0.5;
  int truncation = 60;
  double kernel_tolerance = 1e-8;

  // project, bell-check, friedrichs
  std::string function = "poly";
  std::string coeffs = "0,1";
  int points = 8;
  DiskQuadrature disk{32, 64};
  std::string h = "all";
  DiskQuadrature bidisk{16, 64};
  std::string coeff = "(1,0):1";
  DiskQuadrature friedrichs_quad{8, 64};

  // pnorm-probe
  std::string probe_weight = "unit";  // unit | g2-slice
  std::string w0 = "0";
  std::vector<double> eps{0.1, 0.05, 0.025};
  BoxQuadrature box;

  // membership
  std::string domain = "symdisk";
  std::string point;
  double gamma = 1.0;
  double closure_tolerance = 1e-9;
};

struct RunResult {
  int exit_code = 0;     // 0 ok, 1 usage error, 2 numerical-contract violation
  std::string document;  // JSON or CSV report
};

/// Parses argv into a RunConfig. Throws UsageError; help requests are
/// reported through `help` with an empty subcommand.
RunConfig parse_args(int argc, const char* const* argv, std::string* help = nullptr);

/// Runs one subcommand and renders its report. Library errors become exit
/// codes: DomainError and UsageError give 1, NumericalError gives 2.
RunResult run(const RunConfig& config);

/// Writes `content` to a temporary file next to `path` and renames it into place.
void write_atomically(const std::string& path, const std::string& content);

/// parse_args + run + output; returns the process exit status.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bergman
