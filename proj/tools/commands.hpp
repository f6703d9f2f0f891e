#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace csusy::cli {

enum ExitCode { kOk = 0, kVerificationFailure = 1, kInvalidConfig = 2 };

/// Runs the command line `args` (without the program name). Reports go to
/// --out when given, otherwise to `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "0.5", "0.3+0.4i", "-0.2i", "0.3,0.4". Throws std::invalid_argument.
std::complex<double> parse_complex(std::string_view text);

struct Grid {
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;
  std::vector<double> points() const;
};

/// "lo:hi:count" with count >= 1 and lo <= hi.
Grid parse_grid(std::string_view text);

}  // namespace csusy::cli
