#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mmatrix/matrixgen.hpp"

namespace mmatrix::cli {

enum class Command { Gen, Analyze, Design, Graph, Verify, Scan };
enum class Format { Text, Json, Csv, Dot };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Default upper bound on n accepted by scan.
inline constexpr int kDefaultScanCap = 501;

struct RunConfig {
  Command command = Command::Gen;
  GeneratorRule rule = GeneratorRule::Type3CyclicSum;
  int n_lo = 0;
  int n_hi = 0;
  SignConvention convention = SignConvention::OddPlus;
  Format format = Format::Text;
  std::optional<std::string> out;
  std::string view = "adjacency";  ///< graph: adjacency | levi
  std::string show = "both";       ///< gen: base | sign | incidence | both | all
  int cap = kDefaultScanCap;
};

/// Parses "7" or "3..41". Throws UsageError.
std::pair<int, int> parse_range(const std::string& text);

/// Parses argv (program name first). Throws UsageError on bad usage.
/// Returns std::nullopt when help was requested; the help text goes to `help`.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& help);

/// Executes a parsed configuration, writing the report to `out` and
/// diagnostics to `err`. Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run + --out handling.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mmatrix::cli
