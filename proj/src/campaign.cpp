#include "loewner_lab/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>
#include <thread>
#include <variant>

#include "loewner_lab/constants.hpp"

namespace loewner {

namespace {

constexpr int kMaxRegenerations = 64;
constexpr std::size_t kMaxErrorSamples = 5;
constexpr const char* kNormForm = "t_minus_1";
constexpr const char* kShiftedSum = "t_minus_1_over_m";

[[noreturn]] void config_error(const std::string& what) { throw LabError(ErrorKind::ConfigError, what); }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool on_positive_reals(const FunctionDescriptor& f) { return f.defined_on_positive_reals(); }

template <class Pred>
std::vector<Variant> functions_where(Pred pred) {
  std::vector<Variant> out;
  for (const auto& f : builtin_catalog())
    if (on_positive_reals(f) && pred(f)) out.push_back({f.name, f.name});
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Configuration

std::vector<std::string> resolve_suites(const std::vector<std::string>& suites) {
  if (suites.empty()) config_error("no suites requested");
  std::set<std::string> wanted;
  bool all = false;
  for (const auto& s : suites) {
    if (s == "all") {
      all = true;
      continue;
    }
    bool known = false;
    for (const auto& info : check_registry()) known = known || info.id == s;
    if (!known) config_error("unknown suite '" + s + "'");
    wanted.insert(s);
  }
  std::vector<std::string> out;
  for (const auto& info : check_registry())
    if (all || wanted.count(std::string(info.id))) out.emplace_back(info.id);
  return out;
}

void validate(const CampaignConfig& config) {
  resolve_suites(config.suites);
  if (config.dims.empty()) config_error("no dimensions requested");
  for (std::size_t n : config.dims)
    if (n < kMinDimension || n > kMaxDimension)
      config_error("dimension " + std::to_string(n) + " outside [2, 32]");
  if (config.trials < 1) config_error("trials must be at least 1");
  if (!(config.tol_matrix > 0.0) || !(config.tol_scalar > 0.0)) config_error("tolerances must be positive");
  if (!(config.spectrum.lo > 0.0 && config.spectrum.lo < config.spectrum.hi && std::isfinite(config.spectrum.hi)))
    config_error("spectrum must satisfy 0 < lo < hi");
  if (config.exponents.empty()) config_error("no exponent pairs given");
  for (const auto& [p, q] : config.exponents) {
    try {
      MeanWeight::conjugate(p, q);
    } catch (const LabError& e) {
      config_error(std::string("exponent pair ") + fmt(p) + ":" + fmt(q) + ": " + e.what());
    }
  }
  if (config.probes < 1) config_error("probes must be at least 1");
}

std::vector<Variant> variants_for(const std::string& check_id) {
  const auto inc_opmono = [](const FunctionDescriptor& f) { return f.flags.increasing && f.flags.operator_monotone; };
  if (check_id == "check_lemma_gdec")
    return functions_where([](const FunctionDescriptor& f) { return f.flags.decreasing && f.flags.operator_monotone; });
  if (check_id == "check_lemma_fmono" || check_id == "check_aczel_variant") return functions_where(inc_opmono);
  if (check_id == "check_commuting_product") {
    auto v = functions_where(inc_opmono);
    v.push_back({kNormForm, kNormForm});
    return v;
  }
  if (check_id == "check_eig_doubly_concave" || check_id == "check_unitary_form_concave")
    return functions_where([](const FunctionDescriptor& f) { return f.flags.increasing && f.doubly_concave(); });
  if (check_id == "check_aczel_gen_kantorovich") {
    auto v = functions_where(
        [](const FunctionDescriptor& f) { return f.flags.increasing && f.flags.operator_monotone && f.doubly_concave(); });
    v.push_back({kNormForm, kNormForm});
    return v;
  }
  if (check_id == "check_eig_doubly_convex" || check_id == "check_reverse_aczel")
    return functions_where([](const FunctionDescriptor& f) { return f.flags.increasing && f.doubly_convex(); });
  if (check_id == "check_eig_dec_geoconvex")
    return functions_where([](const FunctionDescriptor& f) { return f.flags.decreasing && f.flags.geo_convex; });
  if (check_id == "check_reverse_aczel_dec")
    return functions_where([](const FunctionDescriptor& f) { return f.flags.decreasing && f.doubly_convex(); });
  if (check_id == "check_sum_counterpart") {
    auto v = functions_where([](const FunctionDescriptor& f) { return f.flags.increasing; });
    v.push_back({kShiftedSum, ""});
    return v;
  }
  return {{"none", ""}};
}

std::uint64_t trial_seed(std::uint64_t seed, const std::string& check_id, std::size_t n, std::size_t trial) {
  const std::uint64_t stream = fnv1a(check_id) ^ (static_cast<std::uint64_t>(n) * 0x9e3779b97f4a7c15ULL);
  return derive_seed(seed ^ static_cast<std::uint64_t>(trial), stream);
}

// ---------------------------------------------------------------------------
// Trials

namespace {

struct Draws {
  MeanWeight weight{0.5};
  MeanWeight conjugate = MeanWeight::conjugate(2.0, 2.0);
  double s_target = 1.0;
  double t_target = 1.0;
  std::uint64_t instance_seed = 0;
  std::uint64_t probe_seed = 0;
};

Draws draw(std::uint64_t seed, const CampaignConfig& config) {
  Rng rng(seed);
  Draws d;
  d.weight = MeanWeight(rng.uniform());
  const auto& [p, q] = config.exponents[rng.index(config.exponents.size())];
  d.conjugate = MeanWeight::conjugate(p, q);
  d.s_target = rng.log_uniform(0.1, 1.0);
  d.t_target = rng.log_uniform(1.0, 10.0);
  d.instance_seed = rng.next();
  d.probe_seed = rng.next();
  return d;
}

/// Positive sequence with head^r > sum of tail^r.
Vector aczel_sequence(std::size_t n, double r, Rng& rng) {
  Vector v(n);
  double tail = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    v[i] = rng.uniform(0.1, 1.0);
    tail += std::pow(v[i], r);
  }
  v[0] = std::pow(tail, 1.0 / r) * rng.uniform(1.01, 3.0);
  return v;
}

CheckResult attempt(const std::string& id, std::size_t n, const Variant& variant, std::uint64_t seed,
                    const CampaignConfig& config) {
  const Draws d = draw(seed, config);
  const Spectrum spec = config.spectrum;
  const auto probes = rand_probes(n, config.probes, d.probe_seed);
  const auto fn = [&]() -> const FunctionDescriptor& { return catalog_entry(variant.function); };
  const auto sandwich = [&] { return rand_sandwich_pair(n, d.s_target, d.t_target, d.instance_seed, spec); };
  const auto power = [&](const SandwichPair& pq) { return power_pair_from(pq.a, pq.b, d.conjugate); };

  if (id == "check_gmean_identities") {
    const auto pr = sandwich();
    return gmean_identities_check(pr.a, pr.b, d.weight);
  }
  if (id == "check_young") {
    const auto pr = sandwich();
    return check_young(pr.a, pr.b, d.weight);
  }
  if (id == "check_reverse_young") {
    const auto pr = sandwich();
    return check_reverse_young(pr.a, pr.b, d.weight);
  }
  if (id == "check_lemma_gdec") {
    const auto pr = sandwich();
    return check_lemma_gdec(pr.a, pr.b, d.weight, fn());
  }
  if (id == "check_lemma_fmono") {
    const auto pr = sandwich();
    return check_lemma_fmono(pr.a, pr.b, d.weight, fn());
  }
  if (id == "check_aczel_variant") {
    const auto pp = power(sandwich());
    return check_aczel_variant(pp.a, pp.b, d.conjugate, fn(), probes);
  }
  if (id == "check_scalar_sandwich") {
    const auto pr = sandwich();
    return check_scalar_sandwich(pr.a, pr.b, d.weight, probes);
  }
  if (id == "check_eig_doubly_concave") {
    const auto pr = sandwich();
    return check_eig_doubly_concave(pr.a, pr.b, d.weight, fn());
  }
  if (id == "check_unitary_form_concave") {
    const auto pr = sandwich();
    return check_unitary_form_concave(pr.a, pr.b, d.weight, fn());
  }
  if (id == "check_aczel_gen_kantorovich") {
    if (variant.name == kNormForm) {
      const auto cp = rand_commuting_pair(n, d.instance_seed, {1.1, 10.0});
      const auto pp = power_pair_from(cp.a, cp.b, d.conjugate);
      return check_aczel_gen_kantorovich(pp.a, pp.b, d.conjugate, fn(), probes);
    }
    const auto pp = power(rand_sandwich_straddle(n, d.instance_seed, spec));
    return check_aczel_gen_kantorovich(pp.a, pp.b, d.conjugate, fn(), probes);
  }
  if (id == "check_eig_doubly_convex") {
    const auto gi = rand_gimage_sandwich(n, fn(), d.s_target, d.t_target, d.instance_seed, spec);
    return check_eig_doubly_convex(gi.a, gi.b, d.weight, fn());
  }
  if (id == "check_reverse_aczel") {
    const auto gi = rand_gimage_sandwich(n, fn(), d.s_target, d.t_target, d.instance_seed, spec);
    const auto pp = gimage_power_pair_from(gi.a, gi.b, d.conjugate, fn());
    return check_reverse_aczel(pp.a, pp.b, d.conjugate, fn(), probes);
  }
  if (id == "check_eig_dec_geoconvex") {
    const auto pr = sandwich();
    return check_eig_dec_geoconvex(pr.a, pr.b, d.weight, fn());
  }
  if (id == "check_reverse_aczel_dec") {
    const auto pp = power(sandwich());
    return check_reverse_aczel_dec(pp.a, pp.b, d.conjugate, fn(), probes);
  }
  if (id == "check_commuting_product") {
    const Spectrum range = variant.name == kNormForm ? Spectrum{1.1, 10.0} : spec;
    const auto cp = rand_commuting_pair(n, d.instance_seed, range);
    const auto pp = power_pair_from(cp.a, cp.b, d.conjugate);
    return check_commuting_product(pp.a, pp.b, d.conjugate, fn(), probes);
  }
  if (id == "check_aczel_classic") {
    Rng rng(d.instance_seed);
    const Vector a = aczel_sequence(n, 2.0, rng);
    const Vector b = aczel_sequence(n, 2.0, rng);
    return check_aczel_classic(a, b);
  }
  if (id == "check_popoviciu") {
    Rng rng(d.instance_seed);
    const double p = d.conjugate.p_value(), q = d.conjugate.q_value();
    const Vector a = aczel_sequence(n, p, rng);
    const Vector b = aczel_sequence(n, q, rng);
    return check_popoviciu(a, b, p, q);
  }
  if (id == "check_sum_counterpart") {
    const auto inst = rand_scalar_instance(n, d.conjugate.p_value(), d.instance_seed);
    if (variant.name == kShiftedSum) {
      const double shift = 1.0 / static_cast<double>(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double lowest = std::min({inst.a[i] * inst.b[i], std::pow(inst.a[i], inst.p), std::pow(inst.b[i], inst.q)});
        if (!(lowest > shift)) throw LabError(ErrorKind::HypothesisUnsatisfied, "term below the shift 1/m");
      }
      FunctionDescriptor f = shifted_identity(shift);
      f.name = kShiftedSum;
      return check_sum_counterpart(inst, f);
    }
    return check_sum_counterpart(inst, fn());
  }
  if (id == "check_aczel_counterpart") {
    ScalarInstanceOptions opts;
    opts.counterpart_head = true;
    return check_aczel_counterpart(rand_scalar_instance(n - 1, d.conjugate.p_value(), d.instance_seed, opts));
  }
  config_error("unknown check id '" + id + "'");
}

}  // namespace

CheckResult run_trial(const std::string& check_id, std::size_t n, std::size_t trial, const CampaignConfig& config) {
  const auto variants = variants_for(check_id);
  const Variant& variant = variants[trial % variants.size()];
  const std::uint64_t base = trial_seed(config.seed, check_id, n, trial);
  for (int k = 0;; ++k) {
    const std::uint64_t seed = k == 0 ? base : derive_seed(base, static_cast<std::uint64_t>(k));
    try {
      CheckResult r = attempt(check_id, n, variant, seed, config);
      r.meta.seed = seed;
      r.meta.n = n;
      if (r.meta.functions.empty() && !variant.function.empty()) r.meta.functions = {variant.function};
      if (variant.name == kShiftedSum) r.meta.functions = {kShiftedSum};
      return r;
    } catch (const LabError& e) {
      if (e.kind() != ErrorKind::HypothesisUnsatisfied || k + 1 >= kMaxRegenerations) throw;
    }
  }
}

// ---------------------------------------------------------------------------
// Campaign

unsigned effective_threads(unsigned requested) {
  unsigned n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  if (const char* env = std::getenv("LOEWNER_LAB_THREADS")) {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return std::max(1u, n);
}

bool CampaignReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckAggregate& c) { return c.passed(); });
}

std::size_t CampaignReport::total_trials() const noexcept {
  std::size_t t = 0;
  for (const auto& c : checks) t += c.trials;
  return t;
}

std::size_t CampaignReport::total_failures() const noexcept {
  std::size_t t = 0;
  for (const auto& c : checks) t += c.failures;
  return t;
}

int exit_code(const CampaignReport& report) noexcept { return report.passed() ? 0 : 1; }

namespace {

struct Task {
  std::size_t check;
  std::size_t n;
  std::size_t trial;
};

using Outcome = std::variant<CheckResult, std::string>;

void update(SlackStats& stats, const Outcome& o, double tol) {
  ++stats.trials;
  if (const auto* r = std::get_if<CheckResult>(&o)) {
    if (!r->passes(tol)) ++stats.failures;
    if (!stats.min_slack || r->slack < *stats.min_slack) stats.min_slack = r->slack;
  } else {
    ++stats.failures;
  }
}

}  // namespace

CampaignReport run_campaign(const CampaignConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  CampaignReport report;
  report.config = config;
  report.suites = resolve_suites(config.suites);

  std::vector<Task> tasks;
  for (std::size_t c = 0; c < report.suites.size(); ++c)
    for (std::size_t n : config.dims)
      for (std::size_t t = 0; t < config.trials; ++t) tasks.push_back({c, n, t});

  std::vector<Outcome> outcomes(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& task = tasks[i];
      try {
        outcomes[i] = run_trial(report.suites[task.check], task.n, task.trial, config);
      } catch (const std::exception& e) {
        std::ostringstream msg;
        msg << "n=" << task.n << " trial=" << task.trial << ": " << e.what();
        outcomes[i] = msg.str();
      }
    }
  };
  report.threads_used = std::min<unsigned>(effective_threads(config.threads), std::max<std::size_t>(1, tasks.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < report.threads_used; ++k) pool.emplace_back(worker);
    worker();
  }

  // Ordered reduction: identical results for any thread count.
  std::size_t i = 0;
  for (std::size_t c = 0; c < report.suites.size(); ++c) {
    CheckAggregate agg;
    agg.check_id = report.suites[c];
    agg.kind = check_info(agg.check_id).kind;
    agg.tolerance = agg.kind == CheckKind::Matrix ? config.tol_matrix : config.tol_scalar;
    const auto variants = variants_for(agg.check_id);
    for (const auto& v : variants) agg.variants.push_back({v.name, {}});
    for (std::size_t n : config.dims) agg.by_dim.push_back({n, {}});
    double constant_sum = 0.0;
    std::size_t constant_count = 0;

    for (std::size_t d = 0; d < config.dims.size(); ++d) {
      for (std::size_t t = 0; t < config.trials; ++t, ++i) {
        const Outcome& o = outcomes[i];
        const std::size_t vi = t % variants.size();
        ++agg.trials;
        update(agg.variants[vi].second, o, agg.tolerance);
        update(agg.by_dim[d].second, o, agg.tolerance);
        if (const auto* err = std::get_if<std::string>(&o)) {
          ++agg.errors;
          ++agg.failures;
          if (agg.error_samples.size() < kMaxErrorSamples) agg.error_samples.push_back(*err);
          continue;
        }
        const CheckResult& r = std::get<CheckResult>(o);
        if (!r.passes(agg.tolerance)) ++agg.failures;
        if (!agg.min_slack || r.slack < *agg.min_slack) {
          agg.min_slack = r.slack;
          agg.argmin_seed = r.meta.seed;
          agg.argmin_n = r.meta.n;
          agg.argmin_trial = t;
          agg.argmin_variant = variants[vi].name;
        }
        if (constant_count == 0) {
          agg.constant_min = agg.constant_max = r.constant_used;
        } else {
          agg.constant_min = std::min(agg.constant_min, r.constant_used);
          agg.constant_max = std::max(agg.constant_max, r.constant_used);
        }
        constant_sum += r.constant_used;
        ++constant_count;
        if (r.attained_ratio) {
          const double ratio = agg.check_id == "check_reverse_young" ? *r.attained_ratio / r.constant_used
                                                                     : *r.attained_ratio;
          agg.worst_ratio = agg.worst_ratio ? std::max(*agg.worst_ratio, ratio) : ratio;
        }
      }
    }
    if (constant_count > 0) agg.constant_mean = constant_sum / static_cast<double>(constant_count);
    report.checks.push_back(std::move(agg));
  }
  if (config.timing)
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

nlohmann::ordered_json opt(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

nlohmann::ordered_json stats_json(const SlackStats& s) {
  nlohmann::ordered_json j;
  j["trials"] = s.trials;
  j["failures"] = s.failures;
  j["min_slack"] = opt(s.min_slack);
  return j;
}

const char* kind_name(CheckKind k) { return k == CheckKind::Matrix ? "matrix" : "scalar"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_number(const std::optional<double>& v) { return v && std::isfinite(*v) ? fmt(*v) : ""; }

}  // namespace

nlohmann::ordered_json report_to_json(const CampaignReport& report) {
  const CampaignConfig& c = report.config;
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};

  nlohmann::ordered_json cfg;
  cfg["suites"] = report.suites;
  cfg["dims"] = c.dims;
  cfg["trials"] = c.trials;
  cfg["seed"] = c.seed;
  cfg["tol_matrix"] = c.tol_matrix;
  cfg["tol_scalar"] = c.tol_scalar;
  cfg["spectrum"] = {{"lo", c.spectrum.lo}, {"hi", c.spectrum.hi}};
  nlohmann::ordered_json pq = nlohmann::ordered_json::array();
  for (const auto& [p, q] : c.exponents) pq.push_back({{"p", p}, {"q", q}});
  cfg["exponents"] = pq;
  cfg["probes"] = c.probes;
  j["config"] = cfg;

  j["summary"] = {{"checks", report.checks.size()},
                  {"trials", report.total_trials()},
                  {"failures", report.total_failures()},
                  {"passed", report.passed()},
                  {"exit_code", exit_code(report)}};

  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& a : report.checks) {
    nlohmann::ordered_json cj;
    cj["check_id"] = a.check_id;
    cj["kind"] = kind_name(a.kind);
    cj["tolerance"] = a.tolerance;
    cj["trials"] = a.trials;
    cj["failures"] = a.failures;
    cj["errors"] = a.errors;
    cj["min_slack"] = opt(a.min_slack);
    if (a.min_slack)
      cj["argmin"] = {{"seed", a.argmin_seed}, {"n", a.argmin_n}, {"trial", a.argmin_trial}, {"variant", a.argmin_variant}};
    else
      cj["argmin"] = nullptr;
    cj["constant"] = {{"min", a.constant_min}, {"max", a.constant_max}, {"mean", a.constant_mean}};
    cj["worst_ratio"] = opt(a.worst_ratio);
    cj["passed"] = a.passed();
    nlohmann::ordered_json vj = nlohmann::ordered_json::array();
    for (const auto& [name, s] : a.variants) {
      auto e = stats_json(s);
      e["variant"] = name;
      vj.push_back(e);
    }
    cj["variants"] = vj;
    nlohmann::ordered_json dj = nlohmann::ordered_json::array();
    for (const auto& [n, s] : a.by_dim) {
      nlohmann::ordered_json e;
      e["n"] = n;
      e.update(stats_json(s));
      dj.push_back(e);
    }
    cj["by_dim"] = dj;
    cj["error_samples"] = a.error_samples;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  if (report.wall_seconds) {
    j["wall_time_seconds"] = *report.wall_seconds;
    j["threads"] = report.threads_used;
  }
  return j;
}

std::string report_to_csv(const CampaignReport& report) {
  std::ostringstream out;
  out << "check_id,kind,tolerance,trials,failures,errors,min_slack,argmin_seed,argmin_n,argmin_variant,"
         "constant_min,constant_max,constant_mean,worst_ratio,passed\r\n";
  for (const auto& a : report.checks) {
    out << csv_field(a.check_id) << ',' << kind_name(a.kind) << ',' << fmt(a.tolerance) << ',' << a.trials << ','
        << a.failures << ',' << a.errors << ',' << csv_number(a.min_slack) << ',';
    if (a.min_slack)
      out << a.argmin_seed << ',' << a.argmin_n << ',' << csv_field(a.argmin_variant);
    else
      out << ",,";
    out << ',' << fmt(a.constant_min) << ',' << fmt(a.constant_max) << ',' << fmt(a.constant_mean) << ','
        << csv_number(a.worst_ratio) << ',' << (a.passed() ? "true" : "false") << "\r\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Constants table

ConstantsTable constants_table(const ConstantsTableConfig& config) {
  for (double h : config.h)
    if (!(h > 0.0 && std::isfinite(h))) config_error("h grid values must be positive, got " + fmt(h));
  for (double r : config.r)
    if (!(r >= 0.0 && r <= 1.0)) config_error("R grid values must lie in [0, 1], got " + fmt(r));
  for (double w : config.w)
    if (!(w > 0.0 && std::isfinite(w))) config_error("w grid values must be positive, got " + fmt(w));
  for (double a : config.alpha)
    if (!(a >= 0.0 && a <= 1.0)) config_error("alpha grid values must lie in [0, 1], got " + fmt(a));

  std::set<std::pair<double, double>> rh;
  for (double r : config.r)
    for (double h : config.h) rh.insert({r, h});
  for (double h : {0.01, 1.0, 5.0}) rh.insert({0.6, h});

  ConstantsTable table;
  for (const auto& [r, h] : rh) {
    const double k = kantorovich(h);
    const double kr = std::pow(k, r);
    const double s = specht(h);
    table.kantorovich.push_back({h, r, k, kr, s, kr - s});
  }
  for (double w : config.w)
    for (double a : config.alpha) table.generalized.push_back({w, a, kantorovich_gen(w, a)});
  return table;
}

std::string format_constants_table(const ConstantsTable& table, ReportFormat format) {
  std::ostringstream out;
  char buf[256];
  if (format == ReportFormat::Csv) {
    out << "table,h,R,K,K^R,S,K^R-S,w,alpha,K(w;alpha)\r\n";
    for (const auto& row : table.kantorovich)
      out << "kantorovich," << fmt(row.h) << ',' << fmt(row.r) << ',' << fmt(row.k) << ',' << fmt(row.k_r) << ','
          << fmt(row.specht) << ',' << fmt(row.diff) << ",,,\r\n";
    for (const auto& row : table.generalized)
      out << "generalized,,,,,,," << fmt(row.w) << ',' << fmt(row.alpha) << ',' << fmt(row.k) << "\r\n";
    return out.str();
  }
  out << "Kantorovich constant vs Specht ratio\n";
  std::snprintf(buf, sizeof buf, "%12s %6s %14s %14s %14s %14s\n", "h", "R", "K(h)", "K^R(h)", "S(h)", "K^R-S");
  out << buf;
  for (const auto& row : table.kantorovich) {
    std::snprintf(buf, sizeof buf, "%12.6g %6.6g %14.6g %14.6g %14.6g %14.6g\n", row.h, row.r, row.k, row.k_r,
                  row.specht, row.diff);
    out << buf;
  }
  out << "\nGeneralized Kantorovich constant\n";
  std::snprintf(buf, sizeof buf, "%12s %6s %14s\n", "w", "alpha", "K(w,alpha)");
  out << buf;
  for (const auto& row : table.generalized) {
    std::snprintf(buf, sizeof buf, "%12.6g %6.6g %14.6g\n", row.w, row.alpha, row.k);
    out << buf;
  }
  return out.str();
}

}  // namespace loewner
