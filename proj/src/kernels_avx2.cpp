#include "ksl/kernels.hpp"

// AVX2 variants: 4 int64 index lanes stepped by 4*step mod p, with one
// conditional subtract per update (all values stay below 2p < 2^32), and
// i64-indexed double gathers from the cis / value tables. Each lane keeps
// its own Kahan compensation; lanes are merged with a scalar Kahan pass,
// then the tail elements are added the same way.

#if defined(KSL_HAVE_AVX2_TU)

#include <immintrin.h>

namespace ksl::kernels::detail {

namespace {

inline void kahan_add4(__m256d& sum, __m256d& comp, __m256d v) {
  const __m256d y = _mm256_sub_pd(v, comp);
  const __m256d t = _mm256_add_pd(sum, y);
  comp = _mm256_sub_pd(_mm256_sub_pd(t, sum), y);
  sum = t;
}

// idx - p wherever idx >= p (inputs in [0, 2p))
inline __m256i wrap(__m256i idx, __m256i vp) {
  const __m256i lt = _mm256_cmpgt_epi64(vp, idx);  // -1 where idx < p
  return _mm256_sub_epi64(idx, _mm256_andnot_si256(lt, vp));
}

inline __m256i initial_indices(int64_t t0, int64_t step, int64_t p) {
  return _mm256_setr_epi64x(t0 % p, (t0 + step) % p, (t0 + 2 * step) % p,
                            (t0 + 3 * step) % p);
}

// merge 4 lanes of (sum, comp) plus a scalar tail into one accumulator
inline double merge_lanes(__m256d sum, __m256d comp, KahanAcc acc) {
  alignas(32) double s[4], c[4];
  _mm256_store_pd(s, sum);
  _mm256_store_pd(c, comp);
  for (int lane = 0; lane < 4; ++lane) {
    acc.add(s[lane]);
    acc.add(-c[lane]);
  }
  return acc.value();
}

// load 4 complex weights and split into re / im lanes; the lane order is
// permuted back to element order so it lines up with the gathered indices
inline void load_weights(const std::complex<double>* w, __m256d& re,
                         __m256d& im) {
  const double* d = reinterpret_cast<const double*>(w);
  const __m256d a = _mm256_loadu_pd(d);      // r0 i0 r1 i1
  const __m256d b = _mm256_loadu_pd(d + 4);  // r2 i2 r3 i3
  const __m256d lo = _mm256_unpacklo_pd(a, b);  // r0 r2 r1 r3
  const __m256d hi = _mm256_unpackhi_pd(a, b);  // i0 i2 i1 i3
  re = _mm256_permute4x64_pd(lo, _MM_SHUFFLE(3, 1, 2, 0));
  im = _mm256_permute4x64_pd(hi, _MM_SHUFFLE(3, 1, 2, 0));
}

}  // namespace

std::complex<double> cis_shift_ap_sum_avx2(const double* cis_re,
                                           const double* cis_im,
                                           const int64_t* shift, std::size_t n,
                                           int64_t t0, int64_t step,
                                           int64_t p) {
  const __m256i vp = _mm256_set1_epi64x(p);
  const __m256i vstep4 = _mm256_set1_epi64x((4 * (step % p)) % p);
  __m256i vt = initial_indices(t0, step % p, p);
  __m256d sre = _mm256_setzero_pd(), cre = _mm256_setzero_pd();
  __m256d sim = _mm256_setzero_pd(), cim = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i sh =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(shift + i));
    const __m256i idx = wrap(_mm256_add_epi64(vt, sh), vp);
    kahan_add4(sre, cre, _mm256_i64gather_pd(cis_re, idx, 8));
    kahan_add4(sim, cim, _mm256_i64gather_pd(cis_im, idx, 8));
    vt = wrap(_mm256_add_epi64(vt, vstep4), vp);
  }
  KahanAcc tre, tim;
  for (; i < n; ++i) {
    int64_t idx = (t0 % p + static_cast<int64_t>(i % static_cast<std::size_t>(p)) *
                              (step % p)) % p + shift[i];
    if (idx >= p) idx -= p;
    tre.add(cis_re[idx]);
    tim.add(cis_im[idx]);
  }
  return {merge_lanes(sre, cre, tre), merge_lanes(sim, cim, tim)};
}

std::complex<double> cis_dot_cw_avx2(const double* cis_re, const double* cis_im,
                                     const std::complex<double>* w,
                                     std::size_t n, int64_t t0, int64_t step,
                                     int64_t p) {
  const __m256i vp = _mm256_set1_epi64x(p);
  const __m256i vstep4 = _mm256_set1_epi64x((4 * (step % p)) % p);
  __m256i vt = initial_indices(t0, step % p, p);
  __m256d sre = _mm256_setzero_pd(), cre = _mm256_setzero_pd();
  __m256d sim = _mm256_setzero_pd(), cim = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d gr = _mm256_i64gather_pd(cis_re, vt, 8);
    const __m256d gi = _mm256_i64gather_pd(cis_im, vt, 8);
    __m256d wr, wi;
    load_weights(w + i, wr, wi);
    kahan_add4(sre, cre,
               _mm256_sub_pd(_mm256_mul_pd(wr, gr), _mm256_mul_pd(wi, gi)));
    kahan_add4(sim, cim,
               _mm256_add_pd(_mm256_mul_pd(wr, gi), _mm256_mul_pd(wi, gr)));
    vt = wrap(_mm256_add_epi64(vt, vstep4), vp);
  }
  KahanAcc tre, tim;
  for (; i < n; ++i) {
    const int64_t t = (t0 % p + static_cast<int64_t>(i % static_cast<std::size_t>(p)) *
                                  (step % p)) % p;
    const double wr = w[i].real(), wi = w[i].imag();
    tre.add(wr * cis_re[t] - wi * cis_im[t]);
    tim.add(wr * cis_im[t] + wi * cis_re[t]);
  }
  return {merge_lanes(sre, cre, tre), merge_lanes(sim, cim, tim)};
}

std::complex<double> cis_dot_rw_avx2(const double* cis_re, const double* cis_im,
                                     const double* w, std::size_t n, int64_t t0,
                                     int64_t step, int64_t p) {
  const __m256i vp = _mm256_set1_epi64x(p);
  const __m256i vstep4 = _mm256_set1_epi64x((4 * (step % p)) % p);
  __m256i vt = initial_indices(t0, step % p, p);
  __m256d sre = _mm256_setzero_pd(), cre = _mm256_setzero_pd();
  __m256d sim = _mm256_setzero_pd(), cim = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d wv = _mm256_loadu_pd(w + i);
    kahan_add4(sre, cre, _mm256_mul_pd(wv, _mm256_i64gather_pd(cis_re, vt, 8)));
    kahan_add4(sim, cim, _mm256_mul_pd(wv, _mm256_i64gather_pd(cis_im, vt, 8)));
    vt = wrap(_mm256_add_epi64(vt, vstep4), vp);
  }
  KahanAcc tre, tim;
  for (; i < n; ++i) {
    const int64_t t = (t0 % p + static_cast<int64_t>(i % static_cast<std::size_t>(p)) *
                                  (step % p)) % p;
    tre.add(w[i] * cis_re[t]);
    tim.add(w[i] * cis_im[t]);
  }
  return {merge_lanes(sre, cre, tre), merge_lanes(sim, cim, tim)};
}

std::complex<double> table_dot_cw_avx2(const double* table,
                                       const std::complex<double>* w,
                                       std::size_t n, int64_t t0, int64_t step,
                                       int64_t p) {
  const __m256i vp = _mm256_set1_epi64x(p);
  const __m256i vstep4 = _mm256_set1_epi64x((4 * (step % p)) % p);
  __m256i vt = initial_indices(t0, step % p, p);
  __m256d sre = _mm256_setzero_pd(), cre = _mm256_setzero_pd();
  __m256d sim = _mm256_setzero_pd(), cim = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d gv = _mm256_i64gather_pd(table, vt, 8);
    __m256d wr, wi;
    load_weights(w + i, wr, wi);
    kahan_add4(sre, cre, _mm256_mul_pd(wr, gv));
    kahan_add4(sim, cim, _mm256_mul_pd(wi, gv));
    vt = wrap(_mm256_add_epi64(vt, vstep4), vp);
  }
  KahanAcc tre, tim;
  for (; i < n; ++i) {
    const int64_t t = (t0 % p + static_cast<int64_t>(i % static_cast<std::size_t>(p)) *
                                  (step % p)) % p;
    tre.add(w[i].real() * table[t]);
    tim.add(w[i].imag() * table[t]);
  }
  return {merge_lanes(sre, cre, tre), merge_lanes(sim, cim, tim)};
}

}  // namespace ksl::kernels::detail

#endif  // KSL_HAVE_AVX2_TU
