#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "ksl/expsums.hpp"
#include "ksl/interval.hpp"
#include "ksl/modarith.hpp"
#include "ksl/spectral.hpp"

namespace ksl {

// Complex weights alpha_{K+1}, ..., alpha_{K+M} on an interval.
struct WeightSequence {
  Interval interval;
  std::vector<cplx> values;
};

WeightSequence ones_weights(Interval iv);

// (sum |alpha|^sigma)^(1/sigma); sigma = INFINITY gives max |alpha|.
double seq_norm(const WeightSequence& w, double sigma);

// S_p(A, B; I, J) = sum_{m in I} sum_{n in J} alpha_m beta_n K_p(m*n, 1),
// by table lookup; O(M*N) after the table build.
cplx sum_S(const PrimeContext& ctx, const KloostermanTable& table,
           const WeightSequence& A, const WeightSequence& B);

// gamma_x = sum_{n in J} e_p(n*x) for x = 1..p-1 (closed geometric form).
std::vector<cplx> completed_gamma(const PrimeContext& ctx, Interval J);

// S_p(A, 1; I, J) by the completed route:
//   sum_{x=1}^{p-1} gamma_x * sum_{m in I} alpha_m e_p(m * inv(x)).
cplx sum_S_completed(const PrimeContext& ctx, const WeightSequence& A,
                     Interval J);

// sum_{m in I} K_p(m, 1)
double sum_SI(const KloostermanTable& table, Interval I);

// S with unit weights on both intervals; real up to tol.
double sum_SIJ(const PrimeContext& ctx, const KloostermanTable& table,
               Interval I, Interval J);

// Four-region split of t = sum_x min(M, p/|x|_p) * min(N, p/|inv(x)|_p):
//   s1 counts the x with |x|_p <= p/M and |inv(x)|_p <= p/N; s2, s3 sum
//   1/|inv(x)|_p resp. 1/|x|_p over the mixed regions; s4 sums the product
//   of reciprocals where both are large. By construction
//   t == M*N*s1 + M*p*s2 + N*p*s3 + p^2*s4 (same terms, regrouped).
struct DyadicDecomposition {
  double s1 = 0, s2 = 0, s3 = 0, s4 = 0;
  double t = 0;
  int i_max = 0;  // ceil(log p)
};

struct CompletionMajorant {
  // sharp variant with explicit 1/2 factors:
  //   sum_x min(M, p/(2|x|_p)) * min(N, p/(2|inv(x)|_p));
  // dominates |S_IJ| for every interval position.
  double t_half = 0;
  DyadicDecomposition decomp;
};

CompletionMajorant completion_majorant(const PrimeContext& ctx, int64_t M,
                                       int64_t N);

// --- Right-hand sides of the bounds under study -----------------------------
//
// Identifiers name the shape of the formula. Bounds whose statement carries
// an unspecified p^o(1) factor take a (log p)^c surrogate with caller-chosen
// c; those evaluators are flagged by bound_uses_surrogate and are reported
// as diagnostics, never hard-asserted.

enum class BoundId {
  trivial,       // 2 * |A|_1 * |B|_1 * sqrt(p)
  plogp,         // p * log p                                  (single sum)
  mnp14,         // M*N*p^(1/4) + sqrt(M*N) * p * (log p)^c
  p_plus_mn,     // (p + M*N) * (log p)^c
  l2np,          // |A|_2 * sqrt(N) * p
  inf_mp,        // |A|_inf * M * p * (log p)^c
  inf_m56n712,   // |A|_inf * M^(5/6) * N^(7/12) * p^(3/4) * (log p)^c
  inf_sqrtmnp,   // |A|_inf * sqrt(M*N) * p * (log p)^c
  burgess_h,     // M^(1-1/nu) * p^((2nu^2+nu+1)/(4nu^2)) * (log p)^(1/nu)
  burgess_f,     // M^(1-1/nu) * p^((2nu-1)/(4(nu-1))) * (log p)^2
};

struct BoundParams {
  double p = 0;
  double M = 0;
  double N = 0;
  double norm1_a = 0;
  double norm1_b = 0;
  double norm2_a = 0;
  double norminf_a = 0;
  int nu = 2;        // burgess_h: nu >= 1; burgess_f: nu >= 2
  double log_c = 2;  // exponent of the (log p)^c surrogate
};

double bound_rhs(BoundId id, const BoundParams& params);
bool bound_uses_surrogate(BoundId id);
const char* bound_name(BoundId id);
BoundId parse_bound_id(const std::string& name);

}  // namespace ksl
