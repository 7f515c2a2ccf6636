#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ksl/bilinear.hpp"
#include "ksl/modarith.hpp"
#include "ksl/spectral.hpp"

namespace ksl {

// --- Inverse-pair counting ---------------------------------------------------
//
// Number of integer pairs (x, y) with x*y == 1 (mod p), 1 <= |x| <= X,
// 1 <= |y| <= Y. Two independent algorithms that must agree exactly:
// the brute-force counter walks the signed x range; the divisor counter
// enumerates x*y = 1 + k*p over |k| <= (X*Y + 1)/p and factors |1 + k*p|.

uint64_t count_inverse_pairs_bruteforce(const PrimeContext& ctx, uint32_t X,
                                        uint32_t Y);
uint64_t count_inverse_pairs_divisor(const PrimeContext& ctx, uint32_t X,
                                     uint32_t Y);

// Same algorithm as the divisor counter with divisor lists memoized by k;
// used for complete-grid runs where every k repeats across (X, Y).
class InversePairDivisorCache {
 public:
  explicit InversePairDivisorCache(const PrimeContext& ctx) : ctx_(ctx) {}
  uint64_t count(uint32_t X, uint32_t Y);

 private:
  const PrimeContext& ctx_;
  std::map<int64_t, std::vector<uint64_t>> lists_;
};

// --- Double-sum inequality ---------------------------------------------------

struct VinogradovResult {
  double lhs = 0;  // |sum_u sum_v phi_u psi_v e_p(u*v)|
  double rhs = 0;  // sqrt(Phi * Psi * p)
  bool holds = false;
};

VinogradovResult vinogradov_check(const PrimeContext& ctx,
                                  const std::vector<uint32_t>& U,
                                  const std::vector<uint32_t>& V,
                                  const std::vector<cplx>& phi,
                                  const std::vector<cplx>& psi);

// --- Sweep harness -----------------------------------------------------------

enum class PositionPolicy { uniform, initial };
enum class WeightScheme { ones, unit_phase, unit_phase_pair };

const char* position_policy_name(PositionPolicy p);
const char* weight_scheme_name(WeightScheme s);
PositionPolicy parse_position_policy(const std::string& s);
WeightScheme parse_weight_scheme(const std::string& s);

struct SweepEntry {
  int64_t M = 1;
  int64_t N = 1;
  PositionPolicy policy = PositionPolicy::uniform;
  WeightScheme scheme = WeightScheme::ones;
};

// One experiment row. bounds/ratios hold (identifier, value) pairs in a
// fixed schema order; ratios[b] * bounds[b] == s_value up to rounding.
struct BoundReport {
  uint32_t p = 0;
  int64_t M = 0, N = 0, K = 0, L = 0;
  std::string scheme;
  double s_value = 0;
  std::vector<std::pair<std::string, double>> bounds;
  std::vector<std::pair<std::string, double>> ratios;
  uint64_t seed = 0;  // substream seed reproducing this row
};

struct SweepResult {
  std::vector<BoundReport> rows;
  std::vector<std::string> hard_violations;  // Weil / trivial / majorant
  std::vector<std::string> findings;         // reported, not asserted
};

// Deterministic for fixed (ctx, entries, seed, log_c): row i draws K, L and
// the weights from substream_seed(seed, i), independent of the worker count.
SweepResult run_sweep(const PrimeContext& ctx, const KloostermanTable& table,
                      const std::vector<SweepEntry>& entries, uint64_t seed,
                      double log_c, unsigned jobs = 0, double tol_scale = 1.0);

// 12 significant digits, trailing zeros kept; the one float format used in
// all human- and machine-readable output.
std::string format_sig12(double v);

// CSV (header + rows) and JSON-lines writers; UTF-8, LF, floats with 12
// significant digits. Column order matches the JSONL key order.
void write_reports_csv(const std::string& path,
                       const std::vector<BoundReport>& rows);
void write_reports_jsonl(const std::string& path,
                         const std::vector<BoundReport>& rows);
std::string reports_csv_string(const std::vector<BoundReport>& rows);
std::string reports_jsonl_string(const std::vector<BoundReport>& rows);

// --- Verification suites -----------------------------------------------------

struct VerifyOptions {
  uint64_t pmax = 0;     // 0 = suite default
  uint64_t seed = 1;
  uint64_t samples = 0;  // randomized instances where applicable; 0 = default
  double tol_scale = 1.0;
  unsigned jobs = 0;
};

struct VerifyResult {
  std::string suite;
  uint64_t checks = 0;
  std::vector<std::string> violations;
  std::vector<std::string> notes;  // reported diagnostics (ratio maxima etc.)
  bool ok() const { return violations.empty(); }
  void merge(const VerifyResult& other);
};

// |K_p(m,n)| <= 2*sqrt(p) + tol for all m, n in [1,p-1], p <= pmax (499).
VerifyResult verify_weil(const VerifyOptions& opt);

// Change of variable K_p(m*n, 1) == K_p(m, n), symmetry K_p(m,n) == K_p(n,m)
// (all m, n for p <= pmax (199), sampled at p = 10007), plus the closed
// forms: full-interval S_I == 1 and S_IJ == p-1 (p <= 499), full-interval
// H == 0 and |F| == p (p <= 199).
VerifyResult verify_identities(const VerifyOptions& opt);

// |tau_p(a; chi)| == sqrt(p) for nonprincipal chi, Gauss-sum character
// decomposition, and the quadratic completion identity; p <= pmax (199).
VerifyResult verify_characters(const VerifyOptions& opt);

// Brute-force vs divisor counting on the complete (X, Y) grid for
// p <= pmax (199) and on random spot checks at p = 10007.
VerifyResult verify_counting(const VerifyOptions& opt);

// Majorant decomposition identity, majorant domination of S_IJ, and the
// completed-path equivalence with gamma bounds; primes <= pmax (2003).
VerifyResult verify_completion(const VerifyOptions& opt);

// Double-sum inequality on seeded random instances at p in {101, 997, 10007}.
VerifyResult verify_vinogradov(const VerifyOptions& opt);

VerifyResult verify_all(const VerifyOptions& opt);

// Primes in [3, limit], ascending.
std::vector<uint32_t> primes_up_to(uint32_t limit);

}  // namespace ksl
