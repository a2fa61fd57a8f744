// loewner_lab: run inequality campaigns and print constant tables.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "loewner_lab/campaign.hpp"

namespace {

constexpr int kExitConfigError = 2;

std::vector<std::pair<double, double>> parse_pq(const std::vector<std::string>& items) {
  std::vector<std::pair<double, double>> out;
  for (const auto& item : items) {
    const auto colon = item.find(':');
    try {
      std::size_t used = 0;
      const double p = std::stod(item.substr(0, colon), &used);
      if (used != (colon == std::string::npos ? item.size() : colon)) throw std::invalid_argument(item);
      double q = p / (p - 1.0);
      if (colon != std::string::npos) {
        const std::string rest = item.substr(colon + 1);
        q = std::stod(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(item);
      }
      out.emplace_back(p, q);
    } catch (const std::logic_error&) {
      throw loewner::LabError(loewner::ErrorKind::ConfigError, "--pq expects p:q or p, got '" + item + "'");
    }
  }
  return out;
}

void write_output(const std::optional<std::string>& path, const std::string& text) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw loewner::LabError(loewner::ErrorKind::IoError, "cannot open '" + *path + "' for writing");
  file << text;
  if (!file) throw loewner::LabError(loewner::ErrorKind::IoError, "write to '" + *path + "' failed");
}

void print_summary(const loewner::CampaignReport& report, std::ostream& os) {
  char line[256];
  for (const auto& c : report.checks) {
    std::snprintf(line, sizeof line, "%-30s %-6s trials=%-6zu failures=%-5zu min_slack=%-12.4g %s\n",
                  c.check_id.c_str(), c.kind == loewner::CheckKind::Matrix ? "matrix" : "scalar", c.trials,
                  c.failures, c.min_slack.value_or(0.0), c.passed() ? "PASS" : "FAIL");
    os << line;
  }
  os << (report.passed() ? "all checks passed" : "inequality violations found") << " (" << report.total_trials()
     << " trials)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Property-test campaigns for operator Aczel-type inequalities"};
  app.set_version_flag("--version", std::string(loewner::kToolVersion));

  loewner::CampaignConfig config;
  std::vector<std::string> pq;
  std::vector<double> spectrum;
  double spectrum_lo = config.spectrum.lo;
  double spectrum_hi = config.spectrum.hi;
  std::string format = "json";
  std::string out;

  app.add_option("--suites", config.suites, "check ids or 'all'")->delimiter(',')->capture_default_str();
  app.add_option("--dims", config.dims, "matrix dimensions (scalar checks: number of terms)")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--trials", config.trials, "trials per (suite, dim)")->capture_default_str();
  app.add_option("--seed", config.seed, "campaign seed")->capture_default_str();
  app.add_option("--tol-matrix", config.tol_matrix, "tolerance of matrix checks")->capture_default_str();
  app.add_option("--tol-scalar", config.tol_scalar, "tolerance of scalar checks")->capture_default_str();
  auto* lo_opt = app.add_option("--spectrum-lo", spectrum_lo, "lower end of generated spectra")->capture_default_str();
  auto* hi_opt = app.add_option("--spectrum-hi", spectrum_hi, "upper end of generated spectra")->capture_default_str();
  app.add_option("--spectrum", spectrum, "LO HI")->expected(2)->excludes(lo_opt)->excludes(hi_opt);
  app.add_option("--pq", pq, "conjugate exponents as p:q or p")->delimiter(',');
  app.add_option("--probes", config.probes, "probe vectors per matrix trial")->capture_default_str();
  app.add_option("--threads", config.threads, "worker threads (0 = all cores)")->capture_default_str();
  app.add_option("--out", out, "report path (default: stdout)");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_flag("--timing", config.timing, "record wall time in the report");

  auto* constants = app.add_subcommand("constants", "print K(h), K^R(h), S(h) and K(w, alpha) tables");
  loewner::ConstantsTableConfig table_config;
  std::string table_format = "text";
  std::string table_out;
  constants->add_option("--h-grid", table_config.h, "h grid")->delimiter(',')->capture_default_str();
  constants->add_option("--r-grid", table_config.r, "exponent grid for K^R")->delimiter(',')->capture_default_str();
  constants->add_option("--w-grid", table_config.w, "condition ratio grid")->delimiter(',')->capture_default_str();
  constants->add_option("--alpha-grid", table_config.alpha, "weight grid")->delimiter(',')->capture_default_str();
  constants->add_option("--format", table_format, "table format")
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();
  constants->add_option("--out", table_out, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  try {
    if (*constants) {
      const auto table = loewner::constants_table(table_config);
      const auto fmt = table_format == "csv" ? loewner::ReportFormat::Csv : loewner::ReportFormat::Text;
      write_output(table_out.empty() ? std::nullopt : std::optional<std::string>(table_out),
                   loewner::format_constants_table(table, fmt));
      return 0;
    }

    if (spectrum.size() == 2) {
      spectrum_lo = spectrum[0];
      spectrum_hi = spectrum[1];
    }
    config.spectrum = {spectrum_lo, spectrum_hi};
    if (!pq.empty()) config.exponents = parse_pq(pq);
    config.format = format == "csv" ? loewner::ReportFormat::Csv : loewner::ReportFormat::Json;
    if (!out.empty()) config.out = out;

    const auto report = loewner::run_campaign(config);
    const std::string text = config.format == loewner::ReportFormat::Csv
                                 ? loewner::report_to_csv(report)
                                 : loewner::report_to_json(report).dump(2) + "\n";
    write_output(config.out, text);
    if (config.out) print_summary(report, std::cout);
    return loewner::exit_code(report);
  } catch (const loewner::LabError& e) {
    std::cerr << "loewner_lab: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "loewner_lab: " << e.what() << "\n";
    return kExitConfigError;
  }
}
