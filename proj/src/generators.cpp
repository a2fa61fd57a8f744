#include "loewner_lab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace loewner {

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t state = seed + stream * 0x9e3779b97f4a7c15ULL;
  return splitmix64(state);
}

Rng::Rng(std::uint64_t seed) noexcept {
  std::uint64_t state = seed;
  for (auto& word : s_) word = splitmix64(state);
}

static inline std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

std::uint64_t Rng::next() noexcept {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

double Rng::log_uniform(double lo, double hi) noexcept {
  if (lo == hi) {
    (void)next();  // keep the stream position independent of the range
    return lo;
  }
  const double log_lo = std::log(lo);
  return std::exp(log_lo + uniform() * (std::log(hi) - log_lo));
}

double Rng::normal() noexcept {
  double u1 = uniform();
  const double u2 = uniform();
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::size_t Rng::index(std::size_t bound) noexcept {
  return static_cast<std::size_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
}

// ---------------------------------------------------------------------------

Matrix random_orthogonal(std::size_t n, Rng& rng) {
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.normal();

  // Householder QR, accumulating Q = H_0 H_1 ... H_{n-2}.
  Matrix q = Matrix::identity(n);
  std::vector<double> r_diag(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double norm = 0.0;
    for (std::size_t i = k; i < n; ++i) norm += g(i, k) * g(i, k);
    norm = std::sqrt(norm);
    const double alpha = g(k, k) > 0.0 ? -norm : norm;
    r_diag[k] = alpha;
    if (k + 1 == n || norm == 0.0) {
      r_diag[k] = g(k, k);
      continue;
    }
    Vector v(n, 0.0);
    v[k] = g(k, k) - alpha;
    for (std::size_t i = k + 1; i < n; ++i) v[i] = g(i, k);
    double vnorm2 = 0.0;
    for (std::size_t i = k; i < n; ++i) vnorm2 += v[i] * v[i];
    if (vnorm2 == 0.0) continue;
    for (std::size_t j = k; j < n; ++j) {
      double proj = 0.0;
      for (std::size_t i = k; i < n; ++i) proj += v[i] * g(i, j);
      proj = 2.0 * proj / vnorm2;
      for (std::size_t i = k; i < n; ++i) g(i, j) -= proj * v[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
      double proj = 0.0;
      for (std::size_t j = k; j < n; ++j) proj += q(i, j) * v[j];
      proj = 2.0 * proj / vnorm2;
      for (std::size_t j = k; j < n; ++j) q(i, j) -= proj * v[j];
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (r_diag[j] < 0.0)
      for (std::size_t i = 0; i < n; ++i) q(i, j) = -q(i, j);
  }
  return q;
}

SymMatrix with_spectrum(const Matrix& basis, std::span<const double> values) {
  return SpectralDecomp{basis, Vector(values.begin(), values.end())}.reconstruct(values);
}

static void check_spectrum(Spectrum spectrum) {
  if (!(spectrum.lo > 0.0 && spectrum.lo <= spectrum.hi && std::isfinite(spectrum.hi))) {
    std::ostringstream msg;
    msg << "spectrum range [" << spectrum.lo << ", " << spectrum.hi << "] is not 0 < lo <= hi";
    throw LabError(ErrorKind::InvalidRange, msg.str());
  }
}

SymMatrix rand_spd(std::size_t n, Spectrum spectrum, Rng& rng) {
  check_spectrum(spectrum);
  const Matrix q = random_orthogonal(n, rng);
  Vector values(n);
  for (auto& v : values) v = rng.log_uniform(spectrum.lo, spectrum.hi);
  return with_spectrum(q, values);
}

SymMatrix rand_spd(std::size_t n, Spectrum spectrum, std::uint64_t seed) {
  Rng rng(seed);
  return rand_spd(n, spectrum, rng);
}

SandwichBounds measure_sandwich(const SymMatrix& a, const SymMatrix& b) {
  const auto da = eig_sym(a);
  if (!is_strictly_positive(da)) throw LabError(ErrorKind::NotPositiveDefinite, "sandwich base is not strictly positive");
  const SymMatrix inv_half = mpow(da, -0.5);
  const auto inner = eig_sym(congruence(inv_half.matrix(), b));
  if (!(inner.lambda_min() > 0.0)) throw LabError(ErrorKind::NotPositiveDefinite, "sandwiched operand is not strictly positive");
  return SandwichBounds::make(inner.lambda_min(), inner.lambda_max());
}

static SymMatrix pinned_ratio_matrix(std::size_t n, double s_target, double t_target, Rng& rng) {
  const Matrix q = random_orthogonal(n, rng);
  Vector values(n);
  for (auto& v : values) v = rng.log_uniform(s_target, t_target);
  values[0] = s_target;
  values[1] = t_target;
  return with_spectrum(q, values);
}

static void check_targets(double s_target, double t_target) {
  if (!(s_target > 0.0 && s_target <= t_target && std::isfinite(t_target))) {
    std::ostringstream msg;
    msg << "sandwich targets s = " << s_target << ", t = " << t_target << " are not 0 < s <= t";
    throw LabError(ErrorKind::InvalidRange, msg.str());
  }
}

SandwichPair rand_sandwich_pair(std::size_t n, double s_target, double t_target, std::uint64_t seed,
                                Spectrum spectrum) {
  check_targets(s_target, t_target);
  Rng rng(seed);
  SymMatrix a = rand_spd(n, spectrum, rng);
  const SymMatrix c = pinned_ratio_matrix(n, s_target, t_target, rng);
  SymMatrix b = congruence(mpow(a, 0.5).matrix(), c);
  const SandwichBounds bounds = measure_sandwich(a, b);
  return {std::move(a), std::move(b), bounds};
}

SandwichPair rand_sandwich_straddle(std::size_t n, std::uint64_t seed, Spectrum spectrum) {
  Rng rng(seed);
  const double s_target = rng.log_uniform(0.2, 0.9);
  const double t_target = rng.log_uniform(1.1, 5.0);
  return rand_sandwich_pair(n, s_target, t_target, rng.next(), spectrum);
}

CommutingPair rand_commuting_pair(std::size_t n, std::uint64_t seed, Spectrum spectrum_a,
                                  std::optional<Spectrum> spectrum_b) {
  const Spectrum range_b = spectrum_b.value_or(spectrum_a);
  check_spectrum(spectrum_a);
  check_spectrum(range_b);
  Rng rng(seed);
  CommutingPair out;
  out.basis = random_orthogonal(n, rng);
  out.a_eigs.resize(n);
  out.b_eigs.resize(n);
  for (auto& v : out.a_eigs) v = rng.log_uniform(spectrum_a.lo, spectrum_a.hi);
  for (auto& v : out.b_eigs) v = rng.log_uniform(range_b.lo, range_b.hi);
  out.a = with_spectrum(out.basis, out.a_eigs);
  out.b = with_spectrum(out.basis, out.b_eigs);
  return out;
}

GImagePair rand_gimage_sandwich(std::size_t n, const FunctionDescriptor& g, double s_target, double t_target,
                                std::uint64_t seed, Spectrum spectrum) {
  if (!g.flags.increasing) throw LabError(ErrorKind::NotInvertible, g.name + " is not flagged increasing");
  const SandwichPair images = rand_sandwich_pair(n, s_target, t_target, seed, spectrum);
  const auto inverse = [&g](double y) { return invert(g, y); };
  SymMatrix a = apply_fn(images.a, inverse);
  SymMatrix b = apply_fn(images.b, inverse);
  if (!is_strictly_positive(a) || !is_strictly_positive(b))
    throw LabError(ErrorKind::NotPositiveDefinite, "g-preimages are not strictly positive");
  const SandwichBounds bounds = measure_sandwich(apply_fn(a, g), apply_fn(b, g));
  return {std::move(a), std::move(b), bounds};
}

PowerPair power_pair_from(const SymMatrix& p_power, const SymMatrix& q_power, const MeanWeight& weight) {
  const double p = weight.p_value();
  const double q = weight.q_value();
  SymMatrix a = mpow(p_power, 1.0 / p);
  SymMatrix b = mpow(q_power, 1.0 / q);
  const SandwichBounds bounds = measure_sandwich(mpow(a, p), mpow(b, q));
  return {std::move(a), std::move(b), weight, bounds};
}

PowerPair gimage_power_pair_from(const SymMatrix& p_power, const SymMatrix& q_power, const MeanWeight& weight,
                                 const FunctionDescriptor& g) {
  const double p = weight.p_value();
  const double q = weight.q_value();
  SymMatrix a = mpow(p_power, 1.0 / p);
  SymMatrix b = mpow(q_power, 1.0 / q);
  const SandwichBounds bounds = measure_sandwich(apply_fn(mpow(a, p), g), apply_fn(mpow(b, q), g));
  return {std::move(a), std::move(b), weight, bounds};
}

Vector rand_probe(std::size_t n, Rng& rng) {
  Vector x(n);
  double nrm = 0.0;
  do {
    for (auto& v : x) v = rng.normal();
    nrm = norm2(x);
  } while (nrm == 0.0);
  for (auto& v : x) v /= nrm;
  return x;
}

Vector rand_probe(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return rand_probe(n, rng);
}

std::vector<Vector> rand_probes(std::size_t n, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vector> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(rand_probe(n, rng));
  return out;
}

SandwichBounds scalar_ratio_bounds(const ScalarInstance& inst) {
  const std::size_t first = inst.has_head ? 1 : 0;
  if (inst.a.size() != inst.b.size() || inst.a.size() <= first)
    throw LabError(ErrorKind::DimensionMismatch, "scalar instance sequences are empty or differ in length");
  const double x1 = inst.has_head ? inst.a[0] : 1.0;
  const double y1 = inst.has_head ? inst.b[0] : 1.0;
  double s = std::numeric_limits<double>::infinity();
  double t = 0.0;
  for (std::size_t i = first; i < inst.a.size(); ++i) {
    const double r = std::pow(inst.b[i] / y1, inst.q) / std::pow(inst.a[i] / x1, inst.p);
    s = std::min(s, r);
    t = std::max(t, r);
  }
  return SandwichBounds::make(s, t);
}

ScalarInstance rand_scalar_instance(std::size_t n_terms, double p, std::uint64_t seed,
                                    const ScalarInstanceOptions& options) {
  const MeanWeight weight = MeanWeight::conjugate(p);
  if (n_terms == 0) throw LabError(ErrorKind::InvalidRange, "scalar instance needs at least one term");
  Rng rng(seed);
  const double s_target = options.s_target.value_or(rng.log_uniform(0.1, 1.0));
  const double t_target = options.t_target.value_or(rng.log_uniform(1.0, 10.0));
  check_targets(s_target, t_target);

  ScalarInstance inst;
  inst.p = weight.p_value();
  inst.q = weight.q_value();
  Vector tail_a(n_terms);
  Vector tail_b(n_terms);
  for (std::size_t i = 0; i < n_terms; ++i) {
    tail_a[i] = rng.log_uniform(0.5, 2.0);
    const double ratio = rng.log_uniform(s_target, t_target);
    tail_b[i] = std::pow(ratio * std::pow(tail_a[i], inst.p), 1.0 / inst.q);
  }

  if (!options.counterpart_head) {
    inst.a = std::move(tail_a);
    inst.b = std::move(tail_b);
  } else {
    // Head x_1 = (sum a^p)^{1/p} u, y_1 = (sum b^q)^{1/q} v with u, v in [0.3, 1],
    // then both shrunk together until x_1 y_1 <= sum a_i b_i.
    double sum_ap = 0.0, sum_bq = 0.0, sum_ab = 0.0;
    for (std::size_t i = 0; i < n_terms; ++i) {
      sum_ap += std::pow(tail_a[i], inst.p);
      sum_bq += std::pow(tail_b[i], inst.q);
      sum_ab += tail_a[i] * tail_b[i];
    }
    double x1 = std::pow(sum_ap, 1.0 / inst.p) * rng.uniform(0.3, 1.0);
    double y1 = std::pow(sum_bq, 1.0 / inst.q) * rng.uniform(0.3, 1.0);
    if (x1 * y1 > sum_ab) {
      const double shrink = std::sqrt(sum_ab / (x1 * y1));
      x1 *= shrink;
      y1 *= shrink;
    }
    inst.has_head = true;
    inst.a.assign(1, x1);
    inst.b.assign(1, y1);
    inst.a.insert(inst.a.end(), tail_a.begin(), tail_a.end());
    inst.b.insert(inst.b.end(), tail_b.begin(), tail_b.end());
  }
  const SandwichBounds realized = scalar_ratio_bounds(inst);
  inst.s = realized.s;
  inst.t = realized.t;
  return inst;
}

}  // namespace loewner
