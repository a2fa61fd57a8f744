#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "loewner_lab/checkers.hpp"
#include "loewner_lab/generators.hpp"

namespace loewner {

inline constexpr const char* kToolName = "loewner_lab";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchemaVersion = "1.0";

enum class ReportFormat { Json, Csv, Text };

struct CampaignConfig {
  std::vector<std::string> suites{"all"};
  std::vector<std::size_t> dims{2, 3, 5, 8};
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  double tol_matrix = kMatrixTol;
  double tol_scalar = kScalarTol;
  Spectrum spectrum{0.1, 10.0};
  std::vector<std::pair<double, double>> exponents{{2.0, 2.0}, {3.0, 1.5}, {1.25, 5.0}, {4.0, 4.0 / 3.0}};
  std::size_t probes = 16;
  /// 0 = hardware concurrency; LOEWNER_LAB_THREADS caps either way.
  unsigned threads = 0;
  bool timing = false;
  std::optional<std::string> out;
  ReportFormat format = ReportFormat::Json;
};

/// ConfigError on invalid dims, trials, tolerances, spectrum, exponents or suites.
void validate(const CampaignConfig& config);

/// Expands "all" and checks every id against the registry.
std::vector<std::string> resolve_suites(const std::vector<std::string>& suites);

/// A function (or special form) exercised by a check. `function` is empty
/// for checks that take no function.
struct Variant {
  std::string name;
  std::string function;
};

/// Variants cycled by trial index (trial i uses variants[i % size]).
std::vector<Variant> variants_for(const std::string& check_id);

/// Per-trial seed: seed XOR trial index, mixed with a stream key of (check, n).
std::uint64_t trial_seed(std::uint64_t seed, const std::string& check_id, std::size_t n, std::size_t trial);

/// Generates the instance of one trial and runs the check. Instances that
/// miss the theorem's hypotheses are regenerated from derived seeds (up to
/// 64 times); any other error propagates.
CheckResult run_trial(const std::string& check_id, std::size_t n, std::size_t trial, const CampaignConfig& config);

struct SlackStats {
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::optional<double> min_slack;
};

struct CheckAggregate {
  std::string check_id;
  CheckKind kind = CheckKind::Matrix;
  double tolerance = 0.0;
  std::size_t trials = 0;
  std::size_t failures = 0;  ///< slack < -tol, plus errors
  std::size_t errors = 0;
  std::optional<double> min_slack;
  std::uint64_t argmin_seed = 0;
  std::size_t argmin_n = 0;
  std::size_t argmin_trial = 0;
  std::string argmin_variant;
  double constant_min = 0.0;
  double constant_max = 0.0;
  double constant_mean = 0.0;
  /// young: max attained ratio; reverse_young: max attained ratio / c.
  std::optional<double> worst_ratio;
  std::vector<std::string> error_samples;  ///< first few error messages
  std::vector<std::pair<std::string, SlackStats>> variants;
  std::vector<std::pair<std::size_t, SlackStats>> by_dim;

  bool passed() const noexcept { return failures == 0; }
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<std::string> suites;
  std::vector<CheckAggregate> checks;
  std::optional<double> wall_seconds;
  unsigned threads_used = 1;

  bool passed() const noexcept;
  std::size_t total_trials() const noexcept;
  std::size_t total_failures() const noexcept;
};

CampaignReport run_campaign(const CampaignConfig& config);

nlohmann::ordered_json report_to_json(const CampaignReport& report);
std::string report_to_csv(const CampaignReport& report);

/// 0 when every check passed, 1 otherwise.
int exit_code(const CampaignReport& report) noexcept;

/// Thread count after applying LOEWNER_LAB_THREADS.
unsigned effective_threads(unsigned requested);

// ---------------------------------------------------------------------------
// Constants table

struct ConstantsTableConfig {
  std::vector<double> h{0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
  std::vector<double> r{0.6};
  std::vector<double> w{1.0, 2.0, 4.0, 10.0, 100.0};
  std::vector<double> alpha{0.25, 0.5, 0.75};
};

struct KantorovichRow {
  double h;
  double r;
  double k;
  double k_r;
  double specht;
  double diff;  ///< K^R(h) - S(h)
};

struct GenKantorovichRow {
  double w;
  double alpha;
  double k;
};

struct ConstantsTable {
  std::vector<KantorovichRow> kantorovich;
  std::vector<GenKantorovichRow> generalized;
};

/// Grid rows plus the reference rows (h, R) = (0.01, 0.6), (5, 0.6), (1, 0.6),
/// deduplicated and sorted by (R, h). ConfigError on invalid grid values.
ConstantsTable constants_table(const ConstantsTableConfig& config);
/// Text uses %.6g columns; CSV has a `table` column (kantorovich | generalized).
std::string format_constants_table(const ConstantsTable& table, ReportFormat format);

}  // namespace loewner
