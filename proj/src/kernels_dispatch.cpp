#include "ksl/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace ksl::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(KSL_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend resolve_backend() {
  if (const char* env = std::getenv("KSL_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0) {
      if (!cpu_has_avx2())
        throw std::runtime_error("KSL_KERNELS=avx2 but CPU lacks AVX2/FMA");
      return Backend::avx2;
    }
  }
  return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<int> g_forced{-1};

}  // namespace

bool avx2_supported() { return cpu_has_avx2(); }

Backend active_backend() {
  const int forced = g_forced.load(std::memory_order_relaxed);
  if (forced >= 0) return static_cast<Backend>(forced);
  static const Backend resolved = resolve_backend();
  return resolved;
}

void force_backend(Backend b) {
  if (b == Backend::avx2 && !cpu_has_avx2())
    throw std::runtime_error("force_backend: CPU lacks AVX2/FMA");
  g_forced.store(static_cast<int>(b), std::memory_order_relaxed);
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
  }
  return "?";
}

std::complex<double> cis_shift_ap_sum(const double* cis_re, const double* cis_im,
                                      const int64_t* shift, std::size_t n,
                                      int64_t t0, int64_t step, int64_t p) {
#if defined(KSL_HAVE_AVX2_TU)
  if (active_backend() == Backend::avx2)
    return detail::cis_shift_ap_sum_avx2(cis_re, cis_im, shift, n, t0, step, p);
#endif
  return detail::cis_shift_ap_sum_scalar(cis_re, cis_im, shift, n, t0, step, p);
}

std::complex<double> cis_dot_cw(const double* cis_re, const double* cis_im,
                                const std::complex<double>* w, std::size_t n,
                                int64_t t0, int64_t step, int64_t p) {
#if defined(KSL_HAVE_AVX2_TU)
  if (active_backend() == Backend::avx2)
    return detail::cis_dot_cw_avx2(cis_re, cis_im, w, n, t0, step, p);
#endif
  return detail::cis_dot_cw_scalar(cis_re, cis_im, w, n, t0, step, p);
}

std::complex<double> cis_dot_rw(const double* cis_re, const double* cis_im,
                                const double* w, std::size_t n, int64_t t0,
                                int64_t step, int64_t p) {
#if defined(KSL_HAVE_AVX2_TU)
  if (active_backend() == Backend::avx2)
    return detail::cis_dot_rw_avx2(cis_re, cis_im, w, n, t0, step, p);
#endif
  return detail::cis_dot_rw_scalar(cis_re, cis_im, w, n, t0, step, p);
}

std::complex<double> table_dot_cw(const double* table,
                                  const std::complex<double>* w, std::size_t n,
                                  int64_t t0, int64_t step, int64_t p) {
#if defined(KSL_HAVE_AVX2_TU)
  if (active_backend() == Backend::avx2)
    return detail::table_dot_cw_avx2(table, w, n, t0, step, p);
#endif
  return detail::table_dot_cw_scalar(table, w, n, t0, step, p);
}

}  // namespace ksl::kernels
