#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thetalab/cli/report.hpp"
#include "thetalab/error.hpp"
#include "thetalab/theta/types.hpp"

namespace thetalab::cli {

/// Bad user input; the driver maps it to exit code 2.
THETALAB_DEFINE_ERROR(InvalidInput);

inline constexpr double kDefaultTol = 1e-12;
inline constexpr const char* kTolEnv = "THETA_LAB_TOL";

struct RunConfig {
  std::string command;  // echo for the report
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  int samples = 50;
  Format format = Format::md;
  std::optional<std::string> output_path;
};

/// "a+bi", "a-bi", "bi" or "a", decimal components.
theta::cplx parse_complex(std::string_view text);
/// {"re": [[x11, x12], [x12, x22]], "im": [[y11, y12], [y12, y22]]}; only the
/// upper triangle is read. InvalidInput on malformed text, NotSiegel if Im Z is
/// not positive definite.
theta::PeriodMatrix parse_period_matrix(const std::string& json_text);
/// Flag, then environment, then default. InvalidInput unless positive.
double resolve_tol(std::optional<double> flag, const char* env_value);

Report cmd_verify_surface(const RunConfig& cfg, const theta::PeriodMatrix& Z);
Report cmd_product_case(const RunConfig& cfg, theta::cplx tau1, theta::cplx tau2);

enum class KleinAction { enumerate, classify, complement };
Report cmd_klein(const RunConfig& cfg, int genus, KleinAction action,
                 const std::vector<std::string>& classes = {});

Report cmd_decompose(const RunConfig& cfg);
Report cmd_feasible_genera(const RunConfig& cfg, int g_max);

struct TraceOutput {
  Report report;
  std::string csv;  // v1_re,v1_im,v2_re,v2_im,abs_theta,grad_norm
};
TraceOutput cmd_trace_curve(const RunConfig& cfg, const theta::PeriodMatrix& Z, int grid);

/// Whole command line: parse, run, write. Returns the exit code
/// (0 every check passed, 1 some check failed, 2 invalid input).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace thetalab::cli
