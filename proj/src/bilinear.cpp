#include "ksl/bilinear.hpp"

#include <cmath>
#include <stdexcept>

#include "ksl/kernels.hpp"

namespace ksl {

WeightSequence ones_weights(Interval iv) {
  return {iv, std::vector<cplx>(static_cast<size_t>(iv.length), cplx{1.0, 0.0})};
}

double seq_norm(const WeightSequence& w, double sigma) {
  if (std::isinf(sigma)) {
    double m = 0.0;
    for (const cplx& v : w.values) m = std::max(m, std::abs(v));
    return m;
  }
  if (!(sigma > 0.0)) throw std::domain_error("seq_norm: sigma must be > 0");
  kernels::KahanAcc acc;
  for (const cplx& v : w.values) acc.add(std::pow(std::abs(v), sigma));
  return std::pow(acc.value(), 1.0 / sigma);
}

namespace {

void check_weights(const PrimeContext& ctx, const WeightSequence& w) {
  validate_interval(w.interval, ctx.p());
  if (w.values.size() != static_cast<size_t>(w.interval.length))
    throw std::domain_error("weights: value count != interval length");
}

}  // namespace

cplx sum_S(const PrimeContext& ctx, const KloostermanTable& table,
           const WeightSequence& A, const WeightSequence& B) {
  check_weights(ctx, A);
  check_weights(ctx, B);
  if (table.p() != ctx.p()) throw std::domain_error("sum_S: table/ctx mismatch");
  const int64_t p = ctx.p();
  const double* values = table.padded().data();
  kernels::KahanAcc re, im;
  for (int64_t m = A.interval.first(); m <= A.interval.last(); ++m) {
    // inner indices m*n mod p walk an arithmetic progression in n; the
    // product is never 0 mod p for m, n in [1, p-1]
    const cplx row = kernels::table_dot_cw(
        values, B.values.data(), B.values.size(), m * B.interval.first() % p,
        m % p, p);
    const cplx alpha = A.values[static_cast<size_t>(m - A.interval.first())];
    re.add(alpha.real() * row.real() - alpha.imag() * row.imag());
    im.add(alpha.real() * row.imag() + alpha.imag() * row.real());
  }
  return {re.value(), im.value()};
}

std::vector<cplx> completed_gamma(const PrimeContext& ctx, Interval J) {
  validate_interval(J, ctx.p());
  const uint32_t p = ctx.p();
  const int64_t L = J.offset, N = J.length;
  std::vector<cplx> gamma(p - 1);
  for (int64_t x = 1; x < static_cast<int64_t>(p); ++x) {
    // geometric sum over n in [L+1, L+N]:  e_p((L+1)x) * (e_p(Nx)-1)/(e_p(x)-1)
    const cplx lead = ctx.cis(static_cast<uint64_t>((L + 1) * x % p));
    const cplx num = ctx.cis(static_cast<uint64_t>(N * x % p)) - cplx{1.0, 0.0};
    const cplx den = ctx.cis(static_cast<uint64_t>(x)) - cplx{1.0, 0.0};
    gamma[static_cast<size_t>(x - 1)] = lead * num / den;
  }
  return gamma;
}

cplx sum_S_completed(const PrimeContext& ctx, const WeightSequence& A,
                     Interval J) {
  check_weights(ctx, A);
  validate_interval(J, ctx.p());
  const int64_t p = ctx.p();
  const auto gamma = completed_gamma(ctx, J);
  const auto& inv = ctx.inv_table();
  kernels::KahanAcc re, im;
  for (int64_t x = 1; x < p; ++x) {
    const int64_t xb = inv[static_cast<size_t>(x)];
    const cplx inner = kernels::cis_dot_cw(
        ctx.cis_re(), ctx.cis_im(), A.values.data(), A.values.size(),
        A.interval.first() * xb % p, xb, p);
    const cplx g = gamma[static_cast<size_t>(x - 1)];
    re.add(g.real() * inner.real() - g.imag() * inner.imag());
    im.add(g.real() * inner.imag() + g.imag() * inner.real());
  }
  return {re.value(), im.value()};
}

double sum_SI(const KloostermanTable& table, Interval I) {
  validate_interval(I, table.p());
  kernels::KahanAcc acc;
  for (int64_t m = I.first(); m <= I.last(); ++m)
    acc.add(table.padded()[static_cast<size_t>(m)]);
  return acc.value();
}

double sum_SIJ(const PrimeContext& ctx, const KloostermanTable& table,
               Interval I, Interval J) {
  const cplx s = sum_S(ctx, table, ones_weights(I), ones_weights(J));
  if (std::abs(s.imag()) > tol(ctx.p()) * std::max(I.length, J.length))
    throw std::logic_error("sum_SIJ: imaginary part exceeds tolerance");
  return s.real();
}

CompletionMajorant completion_majorant(const PrimeContext& ctx, int64_t M,
                                       int64_t N) {
  const uint64_t p = ctx.p();
  if (M < 1 || N < 1 || static_cast<uint64_t>(M) > p - 1 ||
      static_cast<uint64_t>(N) > p - 1)
    throw std::domain_error("completion_majorant: need 1 <= M, N <= p-1");
  const auto& inv = ctx.inv_table();
  const double pd = static_cast<double>(p);

  kernels::KahanAcc t_half, t, s1, s2, s3, s4;
  for (uint64_t x = 1; x < p; ++x) {
    const uint64_t nx = std::min(x, p - x);
    const uint64_t xb = static_cast<uint64_t>(inv[x]);
    const uint64_t nxb = std::min(xb, p - xb);

    // integer predicates decide both the region and the min() branch, so the
    // four-region regrouping reproduces t exactly up to summation order
    const bool small_x = static_cast<uint64_t>(M) * nx <= p;
    const bool small_xb = static_cast<uint64_t>(N) * nxb <= p;
    const double fx = small_x ? static_cast<double>(M) : pd / static_cast<double>(nx);
    const double fxb = small_xb ? static_cast<double>(N) : pd / static_cast<double>(nxb);
    t.add(fx * fxb);
    if (small_x && small_xb)
      s1.add(1.0);
    else if (small_x)
      s2.add(1.0 / static_cast<double>(nxb));
    else if (small_xb)
      s3.add(1.0 / static_cast<double>(nx));
    else
      s4.add(1.0 / (static_cast<double>(nx) * static_cast<double>(nxb)));

    const double hx = 2 * static_cast<uint64_t>(M) * nx <= p
                          ? static_cast<double>(M)
                          : pd / (2.0 * static_cast<double>(nx));
    const double hxb = 2 * static_cast<uint64_t>(N) * nxb <= p
                           ? static_cast<double>(N)
                           : pd / (2.0 * static_cast<double>(nxb));
    t_half.add(hx * hxb);
  }

  CompletionMajorant out;
  out.t_half = t_half.value();
  out.decomp.s1 = s1.value();
  out.decomp.s2 = s2.value();
  out.decomp.s3 = s3.value();
  out.decomp.s4 = s4.value();
  out.decomp.t = t.value();
  out.decomp.i_max = static_cast<int>(std::ceil(std::log(pd)));
  return out;
}

double bound_rhs(BoundId id, const BoundParams& b) {
  const double lp = std::log(b.p);
  const double lc = std::pow(lp, b.log_c);
  switch (id) {
    case BoundId::trivial:
      return 2.0 * b.norm1_a * b.norm1_b * std::sqrt(b.p);
    case BoundId::plogp:
      return b.p * lp;
    case BoundId::mnp14:
      return b.M * b.N * std::pow(b.p, 0.25) +
             std::sqrt(b.M * b.N) * b.p * lc;
    case BoundId::p_plus_mn:
      return (b.p + b.M * b.N) * lc;
    case BoundId::l2np:
      return b.norm2_a * std::sqrt(b.N) * b.p;
    case BoundId::inf_mp:
      return b.norminf_a * b.M * b.p * lc;
    case BoundId::inf_m56n712:
      return b.norminf_a * std::pow(b.M, 5.0 / 6.0) *
             std::pow(b.N, 7.0 / 12.0) * std::pow(b.p, 0.75) * lc;
    case BoundId::inf_sqrtmnp:
      return b.norminf_a * std::sqrt(b.M * b.N) * b.p * lc;
    case BoundId::burgess_h: {
      if (b.nu < 1) throw std::domain_error("bound_rhs: burgess_h needs nu >= 1");
      const double nu = b.nu;
      return std::pow(b.M, 1.0 - 1.0 / nu) *
             std::pow(b.p, (2.0 * nu * nu + nu + 1.0) / (4.0 * nu * nu)) *
             std::pow(lp, 1.0 / nu);
    }
    case BoundId::burgess_f: {
      if (b.nu < 2) throw std::domain_error("bound_rhs: burgess_f needs nu >= 2");
      const double nu = b.nu;
      return std::pow(b.M, 1.0 - 1.0 / nu) *
             std::pow(b.p, (2.0 * nu - 1.0) / (4.0 * (nu - 1.0))) * lp * lp;
    }
  }
  throw std::domain_error("bound_rhs: unknown bound");
}

bool bound_uses_surrogate(BoundId id) {
  switch (id) {
    case BoundId::mnp14:
    case BoundId::p_plus_mn:
    case BoundId::inf_mp:
    case BoundId::inf_m56n712:
    case BoundId::inf_sqrtmnp:
      return true;
    default:
      return false;
  }
}

const char* bound_name(BoundId id) {
  switch (id) {
    case BoundId::trivial: return "trivial";
    case BoundId::plogp: return "plogp";
    case BoundId::mnp14: return "mnp14";
    case BoundId::p_plus_mn: return "p_plus_mn";
    case BoundId::l2np: return "l2np";
    case BoundId::inf_mp: return "inf_mp";
    case BoundId::inf_m56n712: return "inf_m56n712";
    case BoundId::inf_sqrtmnp: return "inf_sqrtmnp";
    case BoundId::burgess_h: return "burgess_h";
    case BoundId::burgess_f: return "burgess_f";
  }
  return "?";
}

BoundId parse_bound_id(const std::string& name) {
  for (BoundId id : {BoundId::trivial, BoundId::plogp, BoundId::mnp14,
                     BoundId::p_plus_mn, BoundId::l2np, BoundId::inf_mp,
                     BoundId::inf_m56n712, BoundId::inf_sqrtmnp,
                     BoundId::burgess_h, BoundId::burgess_f}) {
    if (name == bound_name(id)) return id;
  }
  throw std::domain_error("unknown bound identifier: " + name);
}

}  // namespace ksl
