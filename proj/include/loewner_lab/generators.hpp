#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "loewner_lab/constants.hpp"
#include "loewner_lab/funcatalog.hpp"
#include "loewner_lab/matcore.hpp"
#include "loewner_lab/means.hpp"

namespace loewner {

/// splitmix64 step: advances `state` and returns the next output.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// xoshiro256** seeded by four splitmix64 outputs of the seed.
///
/// Sampling conventions (fixed, so seeds reproduce bit-for-bit):
///   uniform()      = (next() >> 11) * 2^-53, in [0, 1)
///   normal()       = Box-Muller on two fresh uniforms, cosine branch only
///   log_uniform()  = exp(log(lo) + uniform() * (log(hi) - log(lo)))
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept;

  std::uint64_t next() noexcept;
  double uniform() noexcept;
  double uniform(double lo, double hi) noexcept;
  double log_uniform(double lo, double hi) noexcept;
  double normal() noexcept;
  /// Uniform index in [0, bound) by multiply-shift (bound > 0).
  std::size_t index(std::size_t bound) noexcept;

 private:
  std::array<std::uint64_t, 4> s_{};
};

/// Independent child seed: splitmix64 of (seed + stream * golden ratio).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

struct Spectrum {
  double lo = 0.1;
  double hi = 10.0;
};

/// Haar-distributed orthogonal matrix: Householder QR of a Gaussian matrix
/// with the signs of diag(R) folded into Q.
Matrix random_orthogonal(std::size_t n, Rng& rng);

/// Q diag(values) Q^T.
SymMatrix with_spectrum(const Matrix& basis, std::span<const double> values);

/// Eigenvalues i.i.d. log-uniform in [lo, hi] on a random orthogonal basis.
/// InvalidRange unless 0 < lo <= hi.
SymMatrix rand_spd(std::size_t n, Spectrum spectrum, std::uint64_t seed);
SymMatrix rand_spd(std::size_t n, Spectrum spectrum, Rng& rng);

/// Realized tightest constants of sA <= B <= tA: the extreme eigenvalues of
/// A^{-1/2} B A^{-1/2}.
SandwichBounds measure_sandwich(const SymMatrix& a, const SymMatrix& b);

/// A, B strictly positive with realized (tightest) sandwich bounds.
struct SandwichPair {
  SymMatrix a;
  SymMatrix b;
  SandwichBounds bounds;
};

/// A from rand_spd; C with extreme eigenvalues pinned to s_target and
/// t_target (interior ones log-uniform between); B = A^{1/2} C A^{1/2}.
SandwichPair rand_sandwich_pair(std::size_t n, double s_target, double t_target, std::uint64_t seed,
                                Spectrum spectrum = {});

/// rand_sandwich_pair with s_target ~ log-U[0.2, 0.9], t_target ~ log-U[1.1, 5],
/// so the realized bounds straddle 1.
SandwichPair rand_sandwich_straddle(std::size_t n, std::uint64_t seed, Spectrum spectrum = {});

/// A, B sharing one random orthogonal eigenbasis.
struct CommutingPair {
  SymMatrix a;
  SymMatrix b;
  Matrix basis;
  Vector a_eigs;  ///< eigenvalue of A on basis column k
  Vector b_eigs;
};

CommutingPair rand_commuting_pair(std::size_t n, std::uint64_t seed, Spectrum spectrum_a = {},
                                  std::optional<Spectrum> spectrum_b = std::nullopt);

/// Pair whose sandwich holds on the g-images: s g(A) <= g(B) <= t g(A).
struct GImagePair {
  SymMatrix a;
  SymMatrix b;
  SandwichBounds image_bounds;  ///< measured on (g(A), g(B))
};

/// Draws X, Y with sX <= Y <= tX (X spectrum in `spectrum`), returns
/// A = g^{-1}(X), B = g^{-1}(Y). NotInvertible unless g is increasing.
GImagePair rand_gimage_sandwich(std::size_t n, const FunctionDescriptor& g, double s_target, double t_target,
                                std::uint64_t seed, Spectrum spectrum = {});

/// Operands of the Aczel-type checks: the theorem constrains (A^p, B^q)
/// (or their g-images), so `bounds` are measured on that pair.
struct PowerPair {
  SymMatrix a;
  SymMatrix b;
  MeanWeight weight;  ///< conjugate exponents, alpha = 1/q
  SandwichBounds bounds;
};

/// Builds A = P^{1/p}, B = Q^{1/q} and measures bounds on (A^p, B^q).
PowerPair power_pair_from(const SymMatrix& p_power, const SymMatrix& q_power, const MeanWeight& weight);
/// As power_pair_from, but bounds measured on (g(A^p), g(B^q)).
PowerPair gimage_power_pair_from(const SymMatrix& p_power, const SymMatrix& q_power, const MeanWeight& weight,
                                 const FunctionDescriptor& g);

/// Gaussian vector normalized to unit length.
Vector rand_probe(std::size_t n, std::uint64_t seed);
Vector rand_probe(std::size_t n, Rng& rng);
std::vector<Vector> rand_probes(std::size_t n, std::size_t count, std::uint64_t seed);

/// Positive sequences for the scalar Aczel-type checks.
///
/// Without a head: a_i, b_i (i = 1..m) with ratios b_i^q / a_i^p in [s, t].
/// With a head (x_1, y_1) stored at index 0: the tail (index >= 1) carries the
/// ratios of (y_i/y_1)^q to (x_i/x_1)^p and s, t are measured on the tail.
struct ScalarInstance {
  Vector a;
  Vector b;
  double p = 2.0;
  double q = 2.0;
  double s = 1.0;
  double t = 1.0;
  bool has_head = false;
};

struct ScalarInstanceOptions {
  std::optional<double> s_target;  ///< default: log-U[0.1, 1]
  std::optional<double> t_target;  ///< default: log-U[1, 10]
  /// Prepend head terms (x_1, y_1) with sum_{i>=2} x_i^p >= x_1^p,
  /// sum y_i^q >= y_1^q and sum x_i y_i >= x_1 y_1.
  bool counterpart_head = false;
};

/// a_i log-uniform in [0.5, 2], ratios r_i log-uniform in [s_target, t_target],
/// b_i = (r_i a_i^p)^{1/q}; realized s, t recorded. InvalidExponent for p <= 1.
ScalarInstance rand_scalar_instance(std::size_t n_terms, double p, std::uint64_t seed,
                                    const ScalarInstanceOptions& options = {});

/// min / max of b_i^q / a_i^p (tail ratios of the normalized sequences when
/// the instance has a head).
SandwichBounds scalar_ratio_bounds(const ScalarInstance& inst);

}  // namespace loewner
