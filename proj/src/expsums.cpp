#include "ksl/expsums.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "ksl/kernels.hpp"

namespace ksl {

namespace {

int64_t reduce(int64_t v, uint64_t p) {
  int64_t r = v % static_cast<int64_t>(p);
  if (r < 0) r += static_cast<int64_t>(p);
  return r;
}

void check_interval_args(const PrimeContext& ctx, Interval I) {
  validate_interval(I, ctx.p());
}

}  // namespace

cplx additive_char(int64_t z, uint64_t p) {
  const double theta =
      2.0 * std::numbers::pi * static_cast<double>(reduce(z, p)) /
      static_cast<double>(p);
  return {std::cos(theta), std::sin(theta)};
}

std::vector<int64_t> kloosterman_shift(const PrimeContext& ctx, int64_t n) {
  const uint32_t p = ctx.p();
  const int64_t nr = reduce(n, p);
  std::vector<int64_t> shift(p - 1);
  const auto& inv = ctx.inv_table();
  for (uint32_t x = 1; x < p; ++x)
    shift[x - 1] = nr * inv[x] % p;
  return shift;
}

double kloosterman_row(const PrimeContext& ctx, int64_t m,
                       const std::vector<int64_t>& shift) {
  const int64_t p = ctx.p();
  const int64_t mr = reduce(m, ctx.p());
  // sum over x = 1..p-1 of cis((m*x + n*inv(x)) mod p); indices walk the
  // arithmetic progression m*x with the precomputed n*inv(x) offsets
  const cplx s = kernels::cis_shift_ap_sum(ctx.cis_re(), ctx.cis_im(),
                                           shift.data(), shift.size(), mr, mr,
                                           p);
  if (std::abs(s.imag()) > tol(ctx.p()))
    throw std::logic_error("kloosterman: imaginary part exceeds tolerance");
  return s.real();
}

double kloosterman(const PrimeContext& ctx, int64_t m, int64_t n) {
  const auto shift = kloosterman_shift(ctx, n);
  return kloosterman_row(ctx, m, shift);
}

cplx char_value(const PrimeContext& ctx, uint32_t j, int64_t x) {
  const uint32_t p = ctx.p();
  const int64_t r = reduce(x, p);
  if (r == 0) return {0.0, 0.0};
  const double theta = 2.0 * std::numbers::pi *
                       static_cast<double>(j) * ctx.dlog(r) /
                       static_cast<double>(p - 1);
  return {std::cos(theta), std::sin(theta)};
}

std::vector<cplx> character_table(const PrimeContext& ctx, uint32_t j) {
  const uint32_t p = ctx.p();
  const uint32_t order = p - 1;
  // roots of unity of order p-1, indexed by j*dlog(x) mod (p-1)
  std::vector<cplx> roots(order);
  for (uint32_t k = 0; k < order; ++k) {
    const double theta =
        2.0 * std::numbers::pi * static_cast<double>(k) / order;
    roots[k] = {std::cos(theta), std::sin(theta)};
  }
  std::vector<cplx> table(order);
  for (uint32_t x = 1; x < p; ++x)
    table[x - 1] = roots[static_cast<uint64_t>(j) * ctx.dlog(x) % order];
  return table;
}

cplx tau_sum(const PrimeContext& ctx, int64_t a, uint32_t j) {
  const int64_t p = ctx.p();
  const int64_t ar = reduce(a, ctx.p());
  const auto chi = character_table(ctx, j);
  return kernels::cis_dot_cw(ctx.cis_re(), ctx.cis_im(), chi.data(),
                             chi.size(), ar, ar, p);
}

namespace {

void check_gauss_k(const PrimeContext& ctx, uint64_t k) {
  if (k < 1 || (ctx.p() - 1) % k != 0)
    throw std::domain_error("gauss_sum: k must satisfy k >= 1 and k | p-1");
}

}  // namespace

cplx gauss_sum(const PrimeContext& ctx, uint64_t k, int64_t a) {
  check_gauss_k(ctx, k);
  const uint32_t p = ctx.p();
  const uint64_t ar = static_cast<uint64_t>(reduce(a, p));
  kernels::KahanAcc re, im;
  for (uint32_t x = 0; x < p; ++x) {
    const uint64_t xk = pow_mod(x, k, p);
    const cplx v = ctx.cis(ar * xk % p);
    re.add(v.real());
    im.add(v.imag());
  }
  return {re.value(), im.value()};
}

cplx gauss_via_characters(const PrimeContext& ctx, uint64_t k, int64_t a) {
  check_gauss_k(ctx, k);
  const uint32_t p = ctx.p();
  if (reduce(a, p) == 0)
    throw std::domain_error("gauss_via_characters: requires p not dividing a");
  // chi^k principal iff the character index is a multiple of (p-1)/k
  const uint32_t stride = (p - 1) / static_cast<uint32_t>(k);
  cplx total{0.0, 0.0};
  for (uint64_t j = stride; j < p - 1; j += stride)
    total += tau_sum(ctx, a, static_cast<uint32_t>(j));
  return total;
}

std::vector<cplx> gauss_sum_all(const PrimeContext& ctx, uint64_t k) {
  check_gauss_k(ctx, k);
  const uint32_t p = ctx.p();
  // histogram of x^k over x in [0, p-1]; G(c) = sum_y cnt[y] e_p(c*y)
  std::vector<double> cnt(p, 0.0);
  for (uint32_t x = 0; x < p; ++x) cnt[pow_mod(x, k, p)] += 1.0;
  std::vector<cplx> out(p);
  for (uint32_t c = 0; c < p; ++c)
    out[c] = kernels::cis_dot_rw(ctx.cis_re(), ctx.cis_im(), cnt.data(), p, 0,
                                 c, p);
  return out;
}

namespace {

std::vector<int64_t> quad_shift(const PrimeContext& ctx, int64_t a) {
  const uint32_t p = ctx.p();
  const uint64_t ar = static_cast<uint64_t>(reduce(a, p));
  std::vector<int64_t> shift(p);
  for (uint64_t x = 0; x < p; ++x)
    shift[x] = static_cast<int64_t>(ar * (x * x % p) % p);
  return shift;
}

}  // namespace

cplx quad_sum_complete(const PrimeContext& ctx, int64_t a, int64_t b) {
  const uint32_t p = ctx.p();
  if (reduce(a, p) == 0)
    throw std::domain_error("quad_sum_complete: requires p not dividing a");
  const auto shift = quad_shift(ctx, a);
  const int64_t br = reduce(b, p);
  return kernels::cis_shift_ap_sum(ctx.cis_re(), ctx.cis_im(), shift.data(),
                                   shift.size(), 0, br, p);
}

cplx quad_sum_closed_form(const PrimeContext& ctx, int64_t a, int64_t b) {
  const uint32_t p = ctx.p();
  const int64_t ar = reduce(a, p);
  if (ar == 0)
    throw std::domain_error("quad_sum_closed_form: requires p not dividing a");
  const uint64_t inv4a = mod_inverse(4 * static_cast<uint64_t>(ar) % p, p);
  const uint64_t b2 = static_cast<uint64_t>(reduce(b, p));
  const uint64_t c = p - (b2 * b2 % p) * inv4a % p;  // -b^2/(4a), maybe == p
  const cplx phase = ctx.cis(c % p);
  const cplx g2 = gauss_sum(ctx, 2, 1);
  return static_cast<double>(legendre(a, p)) * phase * g2;
}

DualPath h_sum(const PrimeContext& ctx, uint64_t k, int64_t a, Interval I) {
  check_gauss_k(ctx, k);
  check_interval_args(ctx, I);
  const uint32_t p = ctx.p();
  const int64_t ar = reduce(a, p);
  if (ar == 0) throw std::domain_error("h_sum: requires p not dividing a");

  cplx direct{0.0, 0.0};
  for (int64_t m = I.first(); m <= I.last(); ++m)
    direct += gauss_sum(ctx, k, ar * m % p);

  // companion: sum over nonprincipal chi with chi^k principal of
  // tau(1; chi) * sum_{m in I} conj(chi)(a*m)
  cplx companion{0.0, 0.0};
  const uint32_t stride = (p - 1) / static_cast<uint32_t>(k);
  for (uint64_t j = stride; j < p - 1; j += stride) {
    const cplx tau1 = tau_sum(ctx, 1, static_cast<uint32_t>(j));
    const auto bar = character_table(ctx, static_cast<uint32_t>(p - 1 - j));
    cplx inner{0.0, 0.0};
    for (int64_t m = I.first(); m <= I.last(); ++m)
      inner += bar[static_cast<size_t>(ar * m % p) - 1];
    companion += tau1 * inner;
  }
  return {direct, companion};
}

DualPath f_sum(const PrimeContext& ctx, int64_t a, int64_t b, Interval I) {
  check_interval_args(ctx, I);
  const uint32_t p = ctx.p();
  const int64_t ar = reduce(a, p);
  if (ar == 0) throw std::domain_error("f_sum: requires p not dividing a");
  const int64_t br = reduce(b, p);

  cplx direct{0.0, 0.0};
  for (int64_t m = I.first(); m <= I.last(); ++m) {
    const auto shift = quad_shift(ctx, ar * m % p);
    direct += kernels::cis_shift_ap_sum(ctx.cis_re(), ctx.cis_im(),
                                        shift.data(), shift.size(), 0,
                                        br * m % p, p);
  }

  // companion: (a/p) G_{2,p}(1) sum_{m in I} (m/p) e_p(c*m)
  const uint64_t inv4a = mod_inverse(4 * static_cast<uint64_t>(ar) % p, p);
  const uint64_t b2 = static_cast<uint64_t>(br);
  const int64_t c =
      static_cast<int64_t>((p - (b2 * b2 % p) * inv4a % p) % p);
  std::vector<double> leg(static_cast<size_t>(I.length));
  for (int64_t m = I.first(); m <= I.last(); ++m)
    leg[static_cast<size_t>(m - I.first())] =
        (ctx.dlog(static_cast<uint64_t>(m)) & 1u) ? -1.0 : 1.0;
  const cplx walk =
      kernels::cis_dot_rw(ctx.cis_re(), ctx.cis_im(), leg.data(), leg.size(),
                          c * I.first() % p, c, p);
  const cplx companion = static_cast<double>(legendre(a, p)) *
                         gauss_sum(ctx, 2, 1) * walk;
  return {direct, companion};
}

}  // namespace ksl
