#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loewner_lab/check_result.hpp"
#include "loewner_lab/constants.hpp"
#include "loewner_lab/funcatalog.hpp"
#include "loewner_lab/generators.hpp"
#include "loewner_lab/matcore.hpp"
#include "loewner_lab/means.hpp"

namespace loewner {

// Every checker returns the minimum normalized slack over its
// sub-inequalities (see CheckResult). Sandwich constants (s, t, w) are always
// measured from the operands, never taken from the caller, so hand-built
// inputs get the tightest constants too.
//
// Normalizations:
//   Loewner   X <= Y          lambda_min(Y - X) / max(1, ||X||_2, ||Y||_2)
//   eigen     l_k <= r_k      min_k (r_k - l_k) / max(1, max|l|, max|r|)
//   scalar    l <= r          (r - l) / max(1, |l|, |r|)
//
// Operands of the Aczel-type checks are (A, B) with the theorem acting on
// (A^p, B^q); `w` must carry conjugate exponents.

using Probes = std::span<const Vector>;

/// A#_a B <= A nabla_a B. attained_ratio = lambda_max((A nabla B)^{-1/2} (A#B) (A nabla B)^{-1/2}).
CheckResult check_young(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w);

/// A nabla_a B <= c (A#_a B), c = reverse_constant(s, t, R).
/// attained_ratio = lambda_max((A#B)^{-1/2} (A nabla B) (A#B)^{-1/2}).
CheckResult check_reverse_young(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w);

/// (1/c) g(M) <= g(cM) <= g(A) #_a g(B), M = A#_a B; g decreasing operator monotone.
CheckResult check_lemma_gdec(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w,
                             const FunctionDescriptor& g);

/// f(A) #_a f(B) <= f(cM) <= c f(M); f increasing operator monotone.
CheckResult check_lemma_fmono(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w,
                              const FunctionDescriptor& f);

/// (1/c) f(P) #_{1/q} f(Q) <= f(P #_{1/q} Q) with P = A^p, Q = B^q, plus
/// (1/c) <f(P)x,x>^{1/p} <f(Q)x,x>^{1/q} <= <f(P #_{1/q} Q)x,x> per probe.
CheckResult check_aczel_variant(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w,
                                const FunctionDescriptor& f, Probes probes);

/// <Mx,x> <= <Ax,x>^{1-a} <Bx,x>^a <= K(w,a)^{-1} <Mx,x> per probe.
CheckResult check_scalar_sandwich(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w, Probes probes);

/// lambda_k(f(A) #_a f(B)) <= lambda_k(f(K^{-1} M)) <= K^{-1} lambda_k(f(M)) for all k.
CheckResult check_eig_doubly_concave(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w,
                                     const FunctionDescriptor& f);

/// K U (f(A) #_a f(B)) U^T <= f(M) with U = aligned_unitary(f(M), f(A) #_a f(B)).
CheckResult check_unitary_form_concave(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w,
                                       const FunctionDescriptor& f);

/// For P = A^p, Q = B^q with s <= 1 <= t, alpha = 1/q, K = K(w, 1/q):
///   K U Y U^T <= X                                   (X = f(P#Q), Y = f(P)#f(Q))
///   K^2 <f(P)x,x>^{1/p} <f(Q)x,x>^{1/q} <= <X Ux, Ux>  per probe
/// and, when P and Q commute with spectra in (1, inf), the same probe
/// inequality for f(t) = t - 1 (the norm form). HypothesisUnsatisfied unless
/// the pair straddles 1.
CheckResult check_aczel_gen_kantorovich(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w,
                                        const FunctionDescriptor& f, Probes probes);

/// lambda_k(g(A #_a B)) <= K^{-1} lambda_k(g(A) #_a g(B)) with w measured on (g(A), g(B)).
CheckResult check_eig_doubly_convex(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w,
                                    const FunctionDescriptor& g);

/// X <= K^{-1} U Y U^T and <X Ux,Ux> <= K^{-1} <g(P)x,x>^{1/p} <g(Q)x,x>^{1/q},
/// X = g(P#_{1/q}Q), Y = g(P)#_{1/q}g(Q), w measured on (g(P), g(Q)).
CheckResult check_reverse_aczel(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w,
                                const FunctionDescriptor& g, Probes probes);

/// lambda_k(g(K^{-1} M)) <= lambda_k(g(A) #_a g(B)); g decreasing geometrically convex.
CheckResult check_eig_dec_geoconvex(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w,
                                    const FunctionDescriptor& g);

/// X <= U Y U^T and <X Ux,Ux> <= <g(P)x,x>^{1/p} <g(Q)x,x>^{1/q} with
/// X = g(K^{-1}(w, 1/q) P#_{1/q}Q), Y = g(P)#_{1/q}g(Q).
CheckResult check_reverse_aczel_dec(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w,
                                    const FunctionDescriptor& g, Probes probes);

/// (a1 b1 - sum a_i b_i)^2 >= (a1^2 - sum a_i^2)(b1^2 - sum b_i^2), sums over i >= 2.
CheckResult check_aczel_classic(std::span<const double> a, std::span<const double> b);

/// a1 b1 - sum a_i b_i >= (a1^p - sum a_i^p)^{1/p} (b1^q - sum b_i^q)^{1/q}.
CheckResult check_popoviciu(std::span<const double> a, std::span<const double> b, double p, double q);

/// sum f(a_i b_i) >= (1/c) (sum f(a_i^p))^{1/p} (sum f(b_i^q))^{1/q},
/// c = reverse_constant(s, t, max(1/p, 1/q)). Every f term must be >= 0.
CheckResult check_sum_counterpart(const ScalarInstance& inst, const FunctionDescriptor& f);

/// sum_{i>=2} x_i y_i - x1 y1 >= (1/c) (sum x_i^p - x1^p)^{1/p} (sum y_i^q - y1^q)^{1/q}
/// with s, t the ratio bounds of the normalized tails.
CheckResult check_aczel_counterpart(const ScalarInstance& inst);

/// Commuting A, B: (1/c) f(A^p)^{1/p} f(B^q)^{1/q} <= f(AB); when A^p, B^q > I also
/// (1/c) (<A^p x,x> - 1)^{1/p} (<B^q x,x> - 1)^{1/q} <= <ABx,x> - 1 per probe.
/// NotCommuting if ||AB - BA||_F > 1e-10 ||A||_F ||B||_F.
CheckResult check_commuting_product(const SymMatrix& a, const SymMatrix& b, const MeanWeight& w,
                                    const FunctionDescriptor& f, Probes probes);

enum class CheckKind { Matrix, Scalar };

struct CheckInfo {
  std::string_view id;
  CheckKind kind;
};

/// All check ids in report order.
std::span<const CheckInfo> check_registry();
const CheckInfo& check_info(std::string_view id);

inline constexpr double kMatrixTol = 1e-8;
inline constexpr double kScalarTol = 1e-12;
/// Relative commutator threshold for treating a pair as commuting.
inline constexpr double kCommuteTol = 1e-10;

}  // namespace loewner
