#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <numbers>
#include <set>
#include <unordered_set>

#include "ksl/boundslab.hpp"
#include "ksl/kernels.hpp"
#include "ksl/parallel.hpp"
#include "ksl/rng.hpp"

namespace ksl {

namespace {

constexpr size_t kMaxRecorded = 50;  // per prime / per part

void record(VerifyResult& r, const char* fmt, ...)
    __attribute__((format(printf, 2, 3)));

void record(VerifyResult& r, const char* fmt, ...) {
  if (r.violations.size() >= kMaxRecorded) return;
  char buf[320];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  r.violations.emplace_back(buf);
}

std::string note_fmt(const char* fmt, ...) __attribute__((format(printf, 1, 2)));

std::string note_fmt(const char* fmt, ...) {
  char buf[320];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

// context + spectral table per prime, built once and shared read-only
struct PrimeBundle {
  PrimeContext ctx;
  KloostermanTable table;
  explicit PrimeBundle(uint32_t p)
      : ctx(p), table(build_table(ctx, TableMethod::spectral)) {}
};

std::vector<std::unique_ptr<PrimeBundle>> build_bundles(
    const std::vector<uint32_t>& primes, unsigned jobs) {
  std::vector<std::unique_ptr<PrimeBundle>> out(primes.size());
  parallel_for(primes.size(), jobs,
               [&](size_t i) { out[i] = std::make_unique<PrimeBundle>(primes[i]); });
  return out;
}

}  // namespace

VerifyResult verify_weil(const VerifyOptions& opt) {
  VerifyResult res;
  res.suite = "weil";
  const uint32_t pmax = static_cast<uint32_t>(opt.pmax ? opt.pmax : 499);
  const auto primes = primes_up_to(pmax);
  std::vector<VerifyResult> per(primes.size());
  parallel_for(primes.size(), opt.jobs, [&](size_t i) {
    const uint32_t p = primes[i];
    const PrimeContext ctx(p);
    const double limit =
        2.0 * std::sqrt(static_cast<double>(p)) + tol(p) * opt.tol_scale;
    VerifyResult& r = per[i];
    for (uint32_t n = 1; n < p; ++n) {
      const auto shift = kloosterman_shift(ctx, n);
      for (uint32_t m = 1; m < p; ++m) {
        const double v = kloosterman_row(ctx, m, shift);
        ++r.checks;
        if (std::abs(v) > limit)
          record(r, "weil: p=%" PRIu32 " m=%" PRIu32 " n=%" PRIu32
                    " |K|=%.17g > %.17g", p, m, n, std::abs(v), limit);
      }
    }
  });
  for (const auto& r : per) res.merge(r);
  return res;
}

VerifyResult verify_identities(const VerifyOptions& opt) {
  VerifyResult res;
  res.suite = "identities";
  const uint32_t cv_pmax = static_cast<uint32_t>(opt.pmax ? opt.pmax : 199);
  const uint32_t si_pmax = static_cast<uint32_t>(opt.pmax ? opt.pmax : 499);
  const uint32_t hf_pmax = static_cast<uint32_t>(opt.pmax ? opt.pmax : 199);
  const uint64_t samples = opt.samples ? opt.samples : 10000;

  // change of variable K_p(mn,1) == K_p(m,n) and symmetry, all m and n
  {
    const auto primes = primes_up_to(cv_pmax);
    std::vector<VerifyResult> per(primes.size());
    parallel_for(primes.size(), opt.jobs, [&](size_t i) {
      const uint32_t p = primes[i];
      const PrimeContext ctx(p);
      const double tolv = tol(p) * opt.tol_scale;
      VerifyResult& r = per[i];
      std::vector<std::vector<double>> km(
          p - 1, std::vector<double>(p - 1, 0.0));
      for (uint32_t n = 1; n < p; ++n) {
        const auto shift = kloosterman_shift(ctx, n);
        for (uint32_t m = 1; m < p; ++m)
          km[n - 1][m - 1] = kloosterman_row(ctx, m, shift);
      }
      for (uint32_t n = 1; n < p; ++n) {
        for (uint32_t m = 1; m < p; ++m) {
          const double kmn = km[n - 1][m - 1];
          const size_t q = static_cast<size_t>(
              static_cast<uint64_t>(m) * n % p);
          ++r.checks;
          if (std::abs(kmn - km[0][q - 1]) > tolv)
            record(r, "chvar: p=%" PRIu32 " m=%" PRIu32 " n=%" PRIu32
                      " K(m,n)=%.17g K(mn,1)=%.17g", p, m, n, kmn, km[0][q - 1]);
          ++r.checks;
          if (std::abs(kmn - km[m - 1][n - 1]) > tolv)
            record(r, "symmetry: p=%" PRIu32 " m=%" PRIu32 " n=%" PRIu32
                      " K(m,n)=%.17g K(n,m)=%.17g",
                   p, m, n, kmn, km[m - 1][n - 1]);
        }
      }
    });
    for (const auto& r : per) res.merge(r);
  }

  // sampled triples at a large prime
  if (samples > 0) {
    const uint32_t p = 10007;
    const PrimeContext ctx(p);
    const double tolv = tol(p) * opt.tol_scale;
    const auto shift1 = kloosterman_shift(ctx, 1);
    SplitMix64 rng(substream_seed(opt.seed, 0xC3));
    for (uint64_t i = 0; i < samples; ++i) {
      const int64_t m = 1 + static_cast<int64_t>(rng.next_below(p - 1));
      const int64_t n = 1 + static_cast<int64_t>(rng.next_below(p - 1));
      const double kmn = kloosterman(ctx, m, n);
      const double ref = kloosterman_row(ctx, m * n % p, shift1);
      ++res.checks;
      if (std::abs(kmn - ref) > tolv)
        record(res, "chvar sample: p=%" PRIu32 " m=%" PRId64 " n=%" PRId64
                    " diff=%.17g", p, m, n, std::abs(kmn - ref));
      const double knm = kloosterman(ctx, n, m);
      ++res.checks;
      if (std::abs(kmn - knm) > tolv)
        record(res, "symmetry sample: p=%" PRIu32 " m=%" PRId64 " n=%" PRId64
                    " diff=%.17g", p, m, n, std::abs(kmn - knm));
    }
  }

  // full-interval closed forms S_I == 1, S_IJ == p-1
  {
    const auto primes = primes_up_to(si_pmax);
    std::vector<VerifyResult> per(primes.size());
    parallel_for(primes.size(), opt.jobs, [&](size_t i) {
      const uint32_t p = primes[i];
      const PrimeBundle b(p);
      const double tolv = tol(p) * opt.tol_scale;
      VerifyResult& r = per[i];
      const Interval full{0, p - 1};
      const double si = sum_SI(b.table, full);
      ++r.checks;
      if (std::abs(si - 1.0) > tolv)
        record(r, "S_I full: p=%" PRIu32 " value=%.17g", p, si);
      const double sij = sum_SIJ(b.ctx, b.table, full, full);
      ++r.checks;
      if (std::abs(sij - static_cast<double>(p - 1)) > tolv)
        record(r, "S_IJ full: p=%" PRIu32 " value=%.17g", p, sij);
    });
    for (const auto& r : per) res.merge(r);
  }

  // full-interval H == 0 (all k | p-1, all a) and |F| == p (all a, b)
  {
    const auto primes = primes_up_to(hf_pmax);
    std::vector<VerifyResult> per(primes.size());
    parallel_for(primes.size(), opt.jobs, [&](size_t i) {
      const uint32_t p = primes[i];
      const PrimeContext ctx(p);
      const double tolv = tol(p) * opt.tol_scale;
      VerifyResult& r = per[i];
      SplitMix64 rng(substream_seed(opt.seed, 0xF0 + i));

      for (uint64_t k : divisors(p - 1)) {
        const auto gtab = gauss_sum_all(ctx, k);
        for (int spot = 0; spot < 3; ++spot) {
          const int64_t c = static_cast<int64_t>(rng.next_below(p));
          ++r.checks;
          if (std::abs(gtab[static_cast<size_t>(c)] - gauss_sum(ctx, k, c)) >
              tolv)
            record(r, "gauss batch: p=%" PRIu32 " k=%" PRIu64 " c=%" PRId64, p,
                   k, c);
        }
        for (uint32_t a = 1; a < p; ++a) {
          kernels::KahanAcc re, im;
          for (uint32_t m = 1; m < p; ++m) {
            const cplx g = gtab[static_cast<uint64_t>(a) * m % p];
            re.add(g.real());
            im.add(g.imag());
          }
          const double h = std::abs(cplx{re.value(), im.value()});
          ++r.checks;
          if (h > tolv)
            record(r, "H full: p=%" PRIu32 " k=%" PRIu64 " a=%" PRIu32
                      " |H|=%.17g", p, k, a, h);
        }
      }

      // |F| over the full interval via the Legendre walk
      const double g2abs = std::abs(gauss_sum(ctx, 2, 1));
      std::vector<double> leg(p - 1);
      for (uint32_t m = 1; m < p; ++m)
        leg[m - 1] = (ctx.dlog(m) & 1u) ? -1.0 : 1.0;
      for (uint32_t a = 1; a < p; ++a) {
        const uint64_t inv4a = mod_inverse(4ull * a % p, p);
        for (uint32_t bq = 1; bq < p; ++bq) {
          const int64_t c = static_cast<int64_t>(
              (p - static_cast<uint64_t>(bq) * bq % p * inv4a % p) % p);
          const cplx walk = kernels::cis_dot_rw(
              ctx.cis_re(), ctx.cis_im(), leg.data(), leg.size(), c, c, p);
          const double f = g2abs * std::abs(walk);
          ++r.checks;
          if (std::abs(f - static_cast<double>(p)) > tolv)
            record(r, "F full: p=%" PRIu32 " a=%" PRIu32 " b=%" PRIu32
                      " |F|=%.17g", p, a, bq, f);
        }
      }

      // direct double-sum spot checks against the walk path
      for (int spot = 0; spot < 5; ++spot) {
        const int64_t a = 1 + static_cast<int64_t>(rng.next_below(p - 1));
        const int64_t bq = 1 + static_cast<int64_t>(rng.next_below(p - 1));
        const DualPath f = f_sum(ctx, a, bq, Interval{0, p - 1});
        ++r.checks;
        if (std::abs(std::abs(f.direct) - static_cast<double>(p)) > tolv ||
            std::abs(f.direct - f.companion) > tolv)
          record(r, "F direct spot: p=%" PRIu32 " a=%" PRId64 " b=%" PRId64
                    " |F|=%.17g", p, a, bq, std::abs(f.direct));
      }
    });
    for (const auto& r : per) res.merge(r);
  }

  return res;
}

VerifyResult verify_characters(const VerifyOptions& opt) {
  VerifyResult res;
  res.suite = "characters";
  const uint32_t pmax = static_cast<uint32_t>(opt.pmax ? opt.pmax : 199);
  const auto primes = primes_up_to(pmax);
  std::vector<VerifyResult> per(primes.size());
  parallel_for(primes.size(), opt.jobs, [&](size_t i) {
    const uint32_t p = primes[i];
    const PrimeContext ctx(p);
    const double tolv = tol(p) * opt.tol_scale;
    const double sqrtp = std::sqrt(static_cast<double>(p));
    VerifyResult& r = per[i];
    SplitMix64 rng(substream_seed(opt.seed, 0xA0 + i));

    // tau values for every nonprincipal character and every a
    std::vector<std::vector<cplx>> taus(p - 1);  // index j in [1, p-2]
    for (uint32_t j = 1; j + 1 < p; ++j) {
      const auto chi = character_table(ctx, j);
      taus[j].resize(p);
      for (uint32_t a = 1; a < p; ++a) {
        const cplx t = kernels::cis_dot_cw(ctx.cis_re(), ctx.cis_im(),
                                           chi.data(), chi.size(), a, a, p);
        taus[j][a] = t;
        ++r.checks;
        if (std::abs(std::abs(t) - sqrtp) > tolv)
          record(r, "tau modulus: p=%" PRIu32 " j=%" PRIu32 " a=%" PRIu32
                    " |tau|=%.17g", p, j, a, std::abs(t));
      }
    }

    // Gauss sum character decomposition, every k | p-1, every a
    for (uint64_t k : divisors(p - 1)) {
      const uint32_t stride = (p - 1) / static_cast<uint32_t>(k);
      for (uint32_t a = 1; a < p; ++a) {
        cplx via{0.0, 0.0};
        for (uint64_t j = stride; j < p - 1; j += stride) via += taus[j][a];
        const cplx direct = gauss_sum(ctx, k, a);
        ++r.checks;
        if (std::abs(via - direct) > tolv)
          record(r, "gauss decomposition: p=%" PRIu32 " k=%" PRIu64
                    " a=%" PRIu32 " |diff|=%.17g",
                 p, k, a, std::abs(via - direct));
      }
      // the standalone evaluator takes the same route; pin it on a sample
      const int64_t a = 1 + static_cast<int64_t>(rng.next_below(p - 1));
      ++r.checks;
      if (std::abs(gauss_via_characters(ctx, k, a) - gauss_sum(ctx, k, a)) >
          tolv)
        record(r, "gauss_via_characters: p=%" PRIu32 " k=%" PRIu64
                  " a=%" PRId64, p, k, a);
    }

    // quadratic completion identity, every (a, b)
    const cplx g2 = gauss_sum(ctx, 2, 1);
    for (uint32_t a = 1; a < p; ++a) {
      std::vector<int64_t> shift(p);
      for (uint64_t x = 0; x < p; ++x)
        shift[x] = static_cast<int64_t>(
            static_cast<uint64_t>(a) * (x * x % p) % p);
      const uint64_t inv4a = mod_inverse(4ull * a % p, p);
      const double lega = (ctx.dlog(a) & 1u) ? -1.0 : 1.0;
      for (uint32_t bq = 0; bq < p; ++bq) {
        const cplx direct =
            kernels::cis_shift_ap_sum(ctx.cis_re(), ctx.cis_im(), shift.data(),
                                      shift.size(), 0, bq, p);
        const uint64_t c =
            (p - static_cast<uint64_t>(bq) * bq % p * inv4a % p) % p;
        const cplx closed = lega * ctx.cis(c) * g2;
        ++r.checks;
        if (std::abs(direct - closed) > tolv)
          record(r, "quad completion: p=%" PRIu32 " a=%" PRIu32 " b=%" PRIu32
                    " |diff|=%.17g", p, a, bq, std::abs(direct - closed));
      }
    }
    // public entry points on a sample
    for (int spot = 0; spot < 3; ++spot) {
      const int64_t a = 1 + static_cast<int64_t>(rng.next_below(p - 1));
      const int64_t bq = static_cast<int64_t>(rng.next_below(p));
      ++r.checks;
      if (std::abs(quad_sum_complete(ctx, a, bq) -
                   quad_sum_closed_form(ctx, a, bq)) > tolv)
        record(r, "quad entry points: p=%" PRIu32 " a=%" PRId64 " b=%" PRId64,
               p, a, bq);
    }
  });
  for (const auto& r : per) res.merge(r);

  // short-interval cancellation ratios against the Burgess-type evaluators;
  // implied constants are unspecified, so these are reported, not asserted
  if (!primes.empty()) {
    const uint32_t p = primes.back();
    const PrimeContext ctx(p);
    SplitMix64 rng(substream_seed(opt.seed, 0xB0));
    const auto ks = divisors(p - 1);
    double max_h = 0.0, max_f = 0.0;
    for (int inst = 0; inst < 10; ++inst) {
      const uint64_t k = ks[1 + rng.next_below(ks.size() - 1)];
      const int64_t a = 1 + static_cast<int64_t>(rng.next_below(p - 1));
      const int64_t b = 1 + static_cast<int64_t>(rng.next_below(p - 1));
      const int64_t M =
          1 + static_cast<int64_t>(rng.next_below(std::min<uint64_t>(p - 1, 64)));
      const int64_t K = static_cast<int64_t>(rng.next_below(p - M));
      const Interval I{K, M};
      BoundParams bp;
      bp.p = p;
      bp.M = static_cast<double>(M);
      bp.nu = 2;
      max_h = std::max(max_h, std::abs(h_sum(ctx, k, a, I).companion) /
                                  bound_rhs(BoundId::burgess_h, bp));
      max_f = std::max(max_f, std::abs(f_sum(ctx, a, b, I).companion) /
                                  bound_rhs(BoundId::burgess_f, bp));
    }
    res.notes.push_back(note_fmt(
        "burgess diagnostics at p=%" PRIu32
        ": max |H|/burgess_h(nu=2) = %.6g, max |F|/burgess_f(nu=2) = %.6g",
        p, max_h, max_f));
  }
  return res;
}

VerifyResult verify_counting(const VerifyOptions& opt) {
  VerifyResult res;
  res.suite = "counting";
  const uint32_t pmax = static_cast<uint32_t>(opt.pmax ? opt.pmax : 199);
  const uint64_t samples = opt.samples ? opt.samples : 1000;
  const auto primes = primes_up_to(pmax);
  std::vector<VerifyResult> per(primes.size());
  parallel_for(primes.size(), opt.jobs, [&](size_t i) {
    const uint32_t p = primes[i];
    const PrimeContext ctx(p);
    VerifyResult& r = per[i];
    InversePairDivisorCache cache(ctx);
    for (uint32_t X = 1; X < p; ++X) {
      for (uint32_t Y = 1; Y < p; ++Y) {
        const uint64_t bf = count_inverse_pairs_bruteforce(ctx, X, Y);
        const uint64_t dv = cache.count(X, Y);
        ++r.checks;
        if (bf != dv)
          record(r, "counting mismatch: p=%" PRIu32 " X=%" PRIu32 " Y=%" PRIu32
                    " brute=%" PRIu64 " divisor=%" PRIu64, p, X, Y, bf, dv);
      }
    }
    // the memo-free entry point on a sample of the grid
    SplitMix64 rng(substream_seed(opt.seed, 0xD0 + i));
    for (int spot = 0; spot < 20; ++spot) {
      const uint32_t X = 1 + static_cast<uint32_t>(rng.next_below(p - 1));
      const uint32_t Y = 1 + static_cast<uint32_t>(rng.next_below(p - 1));
      ++r.checks;
      if (count_inverse_pairs_divisor(ctx, X, Y) !=
          count_inverse_pairs_bruteforce(ctx, X, Y))
        record(r, "divisor entry point: p=%" PRIu32 " X=%" PRIu32 " Y=%" PRIu32,
               p, X, Y);
    }
    // anchor: the all-of-range count has a closed form
    ++r.checks;
    if (count_inverse_pairs_bruteforce(ctx, p - 1, p - 1) !=
        4ull * (p - 1))
      record(r, "anchor 4(p-1): p=%" PRIu32, p);
  });
  for (const auto& r : per) res.merge(r);

  if (pmax >= 7) {
    const PrimeContext ctx7(7);
    ++res.checks;
    if (count_inverse_pairs_bruteforce(ctx7, 3, 3) != 6 ||
        count_inverse_pairs_divisor(ctx7, 3, 3) != 6)
      record(res, "anchor count(7,3,3) != 6");
  }

  // spot checks at a large prime
  if (samples > 0) {
    const uint32_t p = 10007;
    const PrimeContext ctx(p);
    InversePairDivisorCache cache(ctx);
    SplitMix64 rng(substream_seed(opt.seed, 0xD7));
    uint64_t max_ratio_num = 0;
    double max_ratio = 0.0;
    for (uint64_t s = 0; s < samples; ++s) {
      const uint32_t X = 1 + static_cast<uint32_t>(rng.next_below(p - 1));
      const uint32_t Y = 1 + static_cast<uint32_t>(rng.next_below(p - 1));
      const uint64_t bf = count_inverse_pairs_bruteforce(ctx, X, Y);
      const uint64_t dv = cache.count(X, Y);
      ++res.checks;
      if (bf != dv)
        record(res, "counting mismatch: p=%" PRIu32 " X=%" PRIu32 " Y=%" PRIu32
                    " brute=%" PRIu64 " divisor=%" PRIu64, p, X, Y, bf, dv);
      // symmetry
      ++res.checks;
      if (count_inverse_pairs_bruteforce(ctx, Y, X) != bf)
        record(res, "counting symmetry: p=%" PRIu32 " X=%" PRIu32 " Y=%" PRIu32,
               p, X, Y);
      const double ratio =
          static_cast<double>(bf) /
          (static_cast<double>(X) * Y / p + 1.0);
      if (ratio > max_ratio) {
        max_ratio = ratio;
        max_ratio_num = bf;
      }
      if (s % 97 == 0) {  // memo-free entry point now and then
        ++res.checks;
        if (count_inverse_pairs_divisor(ctx, X, Y) != bf)
          record(res, "divisor entry point: p=%" PRIu32 " X=%" PRIu32
                      " Y=%" PRIu32, p, X, Y);
      }
    }
    res.notes.push_back(note_fmt(
        "count/(XY/p + 1) max over %" PRIu64 " samples at p=%" PRIu32
        ": %.6g (count=%" PRIu64 "); the admissible growth factor is an"
        " unspecified p^o(1)", samples, p, max_ratio, max_ratio_num));
  }
  return res;
}

VerifyResult verify_completion(const VerifyOptions& opt) {
  VerifyResult res;
  res.suite = "completion";
  const uint32_t pmax = static_cast<uint32_t>(opt.pmax ? opt.pmax : 2003);
  const uint64_t samples = opt.samples ? opt.samples : 1000;
  const auto primes = primes_up_to(pmax);
  const auto bundles = build_bundles(primes, opt.jobs);

  // part 1: regrouping identity of the four-region decomposition
  {
    std::vector<VerifyResult> per(samples);
    parallel_for(samples, opt.jobs, [&](size_t i) {
      SplitMix64 rng(substream_seed(opt.seed, i));
      const auto& b = *bundles[rng.next_below(bundles.size())];
      const uint32_t p = b.ctx.p();
      const int64_t M = 1 + static_cast<int64_t>(rng.next_below(p - 1));
      const int64_t N = 1 + static_cast<int64_t>(rng.next_below(p - 1));
      const CompletionMajorant maj = completion_majorant(b.ctx, M, N);
      const double combo = M * N * maj.decomp.s1 +
                           M * static_cast<double>(p) * maj.decomp.s2 +
                           N * static_cast<double>(p) * maj.decomp.s3 +
                           static_cast<double>(p) * p * maj.decomp.s4;
      ++per[i].checks;
      if (std::abs(maj.decomp.t - combo) > 1e-12 * maj.decomp.t)
        record(per[i], "decomposition identity: p=%" PRIu32 " M=%" PRId64
                       " N=%" PRId64 " t=%.17g regrouped=%.17g",
               p, M, N, maj.decomp.t, combo);
    });
    for (const auto& r : per) res.merge(r);
  }

  // part 2: t_half dominates |S_IJ| at every interval position
  {
    std::vector<VerifyResult> per(samples);
    parallel_for(samples, opt.jobs, [&](size_t i) {
      SplitMix64 rng(substream_seed(opt.seed, (1ull << 40) + i));
      const auto& b = *bundles[rng.next_below(bundles.size())];
      const uint32_t p = b.ctx.p();
      const double tolv = tol(p) * opt.tol_scale;
      const int64_t M = 1 + static_cast<int64_t>(rng.next_below(p - 1));
      const int64_t N = 1 + static_cast<int64_t>(rng.next_below(p - 1));
      const int64_t K = static_cast<int64_t>(rng.next_below(p - M));
      const int64_t L = static_cast<int64_t>(rng.next_below(p - N));
      const double s =
          std::abs(sum_SIJ(b.ctx, b.table, Interval{K, M}, Interval{L, N}));
      const double t_half = completion_majorant(b.ctx, M, N).t_half;
      ++per[i].checks;
      if (s > t_half + tolv)
        record(per[i], "majorant: p=%" PRIu32 " M=%" PRId64 " N=%" PRId64
                       " K=%" PRId64 " L=%" PRId64 " |S|=%.17g t_half=%.17g",
               p, M, N, K, L, s, t_half);
    });
    for (const auto& r : per) res.merge(r);
  }

  // part 3: completed route equals the direct route; gamma within its bound
  {
    std::vector<VerifyResult> per(samples);
    parallel_for(samples, opt.jobs, [&](size_t i) {
      SplitMix64 rng(substream_seed(opt.seed, (2ull << 40) + i));
      const auto& b = *bundles[rng.next_below(bundles.size())];
      const uint32_t p = b.ctx.p();
      const double tolv = tol(p) * opt.tol_scale;
      const uint64_t cap = (i % 10 == 9) ? p - 1 : std::min<uint64_t>(p - 1, 256);
      const int64_t M = 1 + static_cast<int64_t>(rng.next_below(cap));
      const int64_t N = 1 + static_cast<int64_t>(rng.next_below(cap));
      const int64_t K = static_cast<int64_t>(rng.next_below(p - M));
      const int64_t L = static_cast<int64_t>(rng.next_below(p - N));
      WeightSequence A{{K, M}, {}};
      A.values.resize(static_cast<size_t>(M));
      for (auto& w : A.values) {
        const double theta = 2.0 * std::numbers::pi * rng.next_double();
        w = {std::cos(theta), std::sin(theta)};
      }
      const Interval J{L, N};
      const cplx direct = sum_S(b.ctx, b.table, A, ones_weights(J));
      const cplx completed = sum_S_completed(b.ctx, A, J);
      ++per[i].checks;
      if (std::abs(direct - completed) > tolv * static_cast<double>(std::max(M, N)))
        record(per[i], "completed path: p=%" PRIu32 " M=%" PRId64 " N=%" PRId64
                       " K=%" PRId64 " L=%" PRId64 " |diff|=%.17g",
               p, M, N, K, L, std::abs(direct - completed));
      const auto gamma = completed_gamma(b.ctx, J);
      bool gamma_ok = true;
      for (uint32_t x = 1; x < p && gamma_ok; ++x) {
        const double nx = static_cast<double>(std::min(x, p - x));
        const double cap_x =
            std::min(static_cast<double>(N), p / (2.0 * nx)) + tolv;
        if (std::abs(gamma[x - 1]) > cap_x) {
          gamma_ok = false;
          record(per[i], "gamma bound: p=%" PRIu32 " N=%" PRId64 " L=%" PRId64
                         " x=%" PRIu32 " |gamma|=%.17g cap=%.17g",
                 p, N, L, x, std::abs(gamma[x - 1]), cap_x);
        }
      }
      ++per[i].checks;
    });
    for (const auto& r : per) res.merge(r);
  }
  return res;
}

VerifyResult verify_vinogradov(const VerifyOptions& opt) {
  VerifyResult res;
  res.suite = "vinogradov";
  const uint64_t samples = opt.samples ? opt.samples : 1000;
  const std::vector<uint32_t> test_primes{101, 997, 10007};
  for (size_t pi = 0; pi < test_primes.size(); ++pi) {
    const uint32_t p = test_primes[pi];
    const PrimeContext ctx(p);
    std::vector<VerifyResult> per(samples);
    parallel_for(samples, opt.jobs, [&](size_t i) {
      SplitMix64 rng(substream_seed(opt.seed, (pi << 32) + i));
      auto draw_set = [&](std::vector<uint32_t>& idx, std::vector<cplx>& w) {
        const uint64_t size = 1 + rng.next_below(std::min<uint64_t>(p - 1, 200));
        std::unordered_set<uint32_t> seen;
        while (seen.size() < size)
          seen.insert(static_cast<uint32_t>(rng.next_below(p)));
        idx.assign(seen.begin(), seen.end());
        std::sort(idx.begin(), idx.end());
        w.resize(idx.size());
        for (auto& v : w) {
          const double r = rng.next_double();
          const double theta = 2.0 * std::numbers::pi * rng.next_double();
          v = {r * std::cos(theta), r * std::sin(theta)};
        }
      };
      std::vector<uint32_t> U, V;
      std::vector<cplx> phi, psi;
      draw_set(U, phi);
      draw_set(V, psi);
      const VinogradovResult vr = vinogradov_check(ctx, U, V, phi, psi);
      ++per[i].checks;
      if (!vr.holds)
        record(per[i], "vinogradov: p=%" PRIu32 " |U|=%zu |V|=%zu lhs=%.17g"
                       " rhs=%.17g", p, U.size(), V.size(), vr.lhs, vr.rhs);
    });
    for (const auto& r : per) res.merge(r);
  }
  return res;
}

VerifyResult verify_all(const VerifyOptions& opt) {
  VerifyResult res;
  res.suite = "all";
  res.merge(verify_weil(opt));
  res.merge(verify_identities(opt));
  res.merge(verify_characters(opt));
  res.merge(verify_counting(opt));
  res.merge(verify_completion(opt));
  res.merge(verify_vinogradov(opt));
  return res;
}

}  // namespace ksl
