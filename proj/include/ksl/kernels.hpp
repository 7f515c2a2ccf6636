#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

// Inner-loop kernels shared by the sum evaluators. Every kernel walks the
// index sequence t_i = (t0 + i*step) mod p (0 <= t0, step < p) and gathers
// from a table of length p, accumulating with compensated (Kahan) summation.
//
// Each kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant selected at runtime. The two variants sum in different orders and
// so differ by rounding noise only; the equivalence is pinned by tests.
// KSL_KERNELS=scalar|avx2 in the environment forces a backend.

namespace ksl::kernels {

enum class Backend { scalar, avx2 };

Backend active_backend();
void force_backend(Backend b);
const char* backend_name(Backend b);
bool avx2_supported();

// sum of cis[(shift[i] + t_i) mod p], shift[i] in [0, p-1]
std::complex<double> cis_shift_ap_sum(const double* cis_re, const double* cis_im,
                                      const int64_t* shift, std::size_t n,
                                      int64_t t0, int64_t step, int64_t p);

// sum of w[i] * cis[t_i], complex weights
std::complex<double> cis_dot_cw(const double* cis_re, const double* cis_im,
                                const std::complex<double>* w, std::size_t n,
                                int64_t t0, int64_t step, int64_t p);

// sum of w[i] * cis[t_i], real weights
std::complex<double> cis_dot_rw(const double* cis_re, const double* cis_im,
                                const double* w, std::size_t n,
                                int64_t t0, int64_t step, int64_t p);

// sum of w[i] * table[t_i], real table, complex weights
std::complex<double> table_dot_cw(const double* table,
                                  const std::complex<double>* w, std::size_t n,
                                  int64_t t0, int64_t step, int64_t p);

namespace detail {

std::complex<double> cis_shift_ap_sum_scalar(const double*, const double*,
                                             const int64_t*, std::size_t,
                                             int64_t, int64_t, int64_t);
std::complex<double> cis_dot_cw_scalar(const double*, const double*,
                                       const std::complex<double>*, std::size_t,
                                       int64_t, int64_t, int64_t);
std::complex<double> cis_dot_rw_scalar(const double*, const double*,
                                       const double*, std::size_t,
                                       int64_t, int64_t, int64_t);
std::complex<double> table_dot_cw_scalar(const double*,
                                         const std::complex<double>*, std::size_t,
                                         int64_t, int64_t, int64_t);

#if defined(KSL_HAVE_AVX2_TU)
std::complex<double> cis_shift_ap_sum_avx2(const double*, const double*,
                                           const int64_t*, std::size_t,
                                           int64_t, int64_t, int64_t);
std::complex<double> cis_dot_cw_avx2(const double*, const double*,
                                     const std::complex<double>*, std::size_t,
                                     int64_t, int64_t, int64_t);
std::complex<double> cis_dot_rw_avx2(const double*, const double*,
                                     const double*, std::size_t,
                                     int64_t, int64_t, int64_t);
std::complex<double> table_dot_cw_avx2(const double*,
                                       const std::complex<double>*, std::size_t,
                                       int64_t, int64_t, int64_t);
#endif

}  // namespace detail

// Compensated accumulator used by the scalar kernels and by callers that do
// their own small reductions.
struct KahanAcc {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

}  // namespace ksl::kernels
