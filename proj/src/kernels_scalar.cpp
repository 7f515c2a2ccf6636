#include "ksl/kernels.hpp"

// Scalar reference kernels. These are the semantics the SIMD variants are
// tested against; keep them simple and obviously correct.

namespace ksl::kernels::detail {

std::complex<double> cis_shift_ap_sum_scalar(const double* cis_re,
                                             const double* cis_im,
                                             const int64_t* shift,
                                             std::size_t n, int64_t t0,
                                             int64_t step, int64_t p) {
  KahanAcc re, im;
  int64_t t = t0 % p;
  const int64_t s = step % p;
  for (std::size_t i = 0; i < n; ++i) {
    int64_t idx = t + shift[i];
    if (idx >= p) idx -= p;
    re.add(cis_re[idx]);
    im.add(cis_im[idx]);
    t += s;
    if (t >= p) t -= p;
  }
  return {re.value(), im.value()};
}

std::complex<double> cis_dot_cw_scalar(const double* cis_re,
                                       const double* cis_im,
                                       const std::complex<double>* w,
                                       std::size_t n, int64_t t0, int64_t step,
                                       int64_t p) {
  KahanAcc re, im;
  int64_t t = t0 % p;
  const int64_t s = step % p;
  for (std::size_t i = 0; i < n; ++i) {
    const double cr = cis_re[t];
    const double ci = cis_im[t];
    const double wr = w[i].real();
    const double wi = w[i].imag();
    re.add(wr * cr - wi * ci);
    im.add(wr * ci + wi * cr);
    t += s;
    if (t >= p) t -= p;
  }
  return {re.value(), im.value()};
}

std::complex<double> cis_dot_rw_scalar(const double* cis_re,
                                       const double* cis_im, const double* w,
                                       std::size_t n, int64_t t0, int64_t step,
                                       int64_t p) {
  KahanAcc re, im;
  int64_t t = t0 % p;
  const int64_t s = step % p;
  for (std::size_t i = 0; i < n; ++i) {
    re.add(w[i] * cis_re[t]);
    im.add(w[i] * cis_im[t]);
    t += s;
    if (t >= p) t -= p;
  }
  return {re.value(), im.value()};
}

std::complex<double> table_dot_cw_scalar(const double* table,
                                         const std::complex<double>* w,
                                         std::size_t n, int64_t t0,
                                         int64_t step, int64_t p) {
  KahanAcc re, im;
  int64_t t = t0 % p;
  const int64_t s = step % p;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = table[t];
    re.add(w[i].real() * v);
    im.add(w[i].imag() * v);
    t += s;
    if (t >= p) t -= p;
  }
  return {re.value(), im.value()};
}

}  // namespace ksl::kernels::detail
