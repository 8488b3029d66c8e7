#pragma once

#include <string>
#include <vector>

#include "mmatrix/matrixgen.hpp"

namespace mmatrix {

enum class ClaimStatus { Pass, Fail, Skip };

std::string_view to_string(ClaimStatus status);

/// Outcome of one named property over a range of orders.
struct ClaimResult {
  std::string claim;        ///< short label, e.g. "Prop 2.2"
  std::string description;  ///< what is checked
  ClaimStatus status = ClaimStatus::Skip;
  int checked = 0;          ///< orders the claim applied to
  std::string detail;       ///< first failure, or why it was skipped
};

/// Every order in [lo, hi] that the rule accepts.
std::vector<int> admissible_orders(GeneratorRule rule, int lo, int hi);

/// Runs the property suite on each admissible order in [lo, hi].
/// Claims stated for type 3 under odd-plus are skipped for other inputs.
std::vector<ClaimResult> verify_claims(GeneratorRule rule, SignConvention convention, int lo, int hi);

bool all_passed(const std::vector<ClaimResult>& results);

/// One line of the scan table.
struct ScanRow {
  int n = 0;
  int type = 0;
  std::string convention;
  std::string det;
  std::string det_predicted;  ///< empty when no closed form applies
  std::string det_match;      ///< "true", "false" or empty
  std::vector<int> distinct_g;
  std::string design_kind;
  int m_classes = 0;
  bool scheme_valid = false;
};

ScanRow scan_order(GeneratorRule rule, SignConvention convention, int n);

/// Rows for every admissible order in [lo, hi], ordered by n. Orders are
/// evaluated concurrently.
std::vector<ScanRow> scan_range(GeneratorRule rule, SignConvention convention, int lo, int hi);

}  // namespace mmatrix
