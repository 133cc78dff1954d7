// Command-line front end shared by the sgetool binary and the tests.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sge {

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitDimension = 3,
  kExitTolerance = 4,
  kExitBadArgs = 5,
};

enum class OutputFormat { json, csv, pretty };

struct RunConfig {
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  int samples = 100;
  OutputFormat format = OutputFormat::pretty;
};

/// Environment variable that overrides the default tolerance.
inline constexpr const char* kToleranceEnv = "SGE_TOL";

/// Defaults with the environment override applied. Throws
/// std::invalid_argument if the variable is set but not a positive number.
RunConfig default_config();

/// Runs one command line (args excludes the program name). Matrix files go to
/// the -o path or to out; reports go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sge
