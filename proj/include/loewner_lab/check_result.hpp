#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace loewner {

struct TrialMeta {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::optional<double> alpha;
  std::optional<double> p;
  std::optional<double> q;
  std::vector<std::string> functions;
};

/// Outcome of one inequality check.
///
/// `slack` is normalized by max(1, |lhs|, |rhs|) (matrix sides measured in
/// the spectral norm) and is the minimum over all sub-inequalities, indices
/// and probes; slack >= 0 means the inequality holds. `raw_slack` is the
/// unnormalized margin of that same worst sub-inequality.
struct CheckResult {
  std::string check_id;
  double slack = 0.0;
  double raw_slack = 0.0;
  double constant_used = 1.0;
  bool hypotheses_met = true;
  /// Attained constant for checks that have one (e.g. the largest
  /// eigenvalue of (A#B)^{-1/2}(A nabla B)(A#B)^{-1/2} for the reverse Young check).
  std::optional<double> attained_ratio;
  TrialMeta meta;

  bool passes(double tol) const noexcept { return slack >= -tol; }
};

}  // namespace loewner
