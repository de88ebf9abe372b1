#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gft/radii.hpp"

namespace gft::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kVerifyFailed = 2 };

/// Malformed command-line input that is not a parameter-range error.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// %.12g, with "-0" normalized to "0".
std::string format_number(double x);
/// x rounded to 12 significant digits, so the shortest round-trip form
/// prints at most 12 digits.
double round_sig(double x);

/// lo:hi:step, or a single number. Values are lo + i*step for i = 0.. while
/// <= hi (1e-9 relative slack), each rounded to 12 significant digits.
/// Throws UsageError.
std::vector<double> parse_range(std::string_view spec);

struct OutputRecord {
  TargetClass cls = TargetClass::StarlikeOrder;
  double alpha = 0.0;
  double beta = 0.0;
  double lambda = 0.0;
  RadiusResult result;
  std::optional<double> oracle_radius;
  std::optional<double> residual;
};

OutputRecord make_record(TargetClass c, const ClassParams& p);

/// class,alpha,beta,lambda,radius,branch,case,oracle_radius,residual
std::string csv_header();
std::string csv_row(const OutputRecord& r);
/// RFC-4180 quoting when the field contains a comma, quote or line break.
std::string csv_field(std::string_view s);

/// One JSON object on one line, keys in a fixed order.
std::string record_json(const OutputRecord& r);
std::string record_text(const OutputRecord& r);

/// Entry point of gft-radii. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gft::cli
