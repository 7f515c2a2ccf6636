#include "ksl/boundslab.hpp"

#include <cmath>
#include <stdexcept>

#include "ksl/kernels.hpp"

namespace ksl {

namespace {

void check_xy(const PrimeContext& ctx, uint32_t X, uint32_t Y) {
  if (X < 1 || Y < 1 || X > ctx.p() - 1 || Y > ctx.p() - 1)
    throw std::domain_error("count_inverse_pairs: need 1 <= X, Y <= p-1");
}

uint64_t count_for_divisor_list(const std::vector<uint64_t>& divs,
                                uint64_t abs_n, uint32_t X, uint32_t Y) {
  // each admissible divisor pair (d, abs_n/d) yields one all-positive and
  // one all-negative solution when n > 0, or the two mixed-sign solutions
  // when n < 0; either way it contributes 2
  uint64_t c = 0;
  for (uint64_t d : divs) {
    if (d > X) break;  // divs ascending
    if (abs_n / d <= Y) c += 2;
  }
  return c;
}

}  // namespace

uint64_t count_inverse_pairs_bruteforce(const PrimeContext& ctx, uint32_t X,
                                        uint32_t Y) {
  check_xy(ctx, X, Y);
  const uint32_t p = ctx.p();
  const auto& inv = ctx.inv_table();
  uint64_t count = 0;
  for (uint32_t ax = 1; ax <= X; ++ax) {
    // x = +ax and x = -ax; y runs over the two representatives of inv(x)
    // with |y| < p, namely inv(x) and inv(x) - p
    for (int sign = 0; sign < 2; ++sign) {
      const uint32_t r = sign == 0 ? ax : p - ax;
      const uint64_t xb = static_cast<uint64_t>(inv[r]);
      if (xb <= Y) ++count;
      if (p - xb <= Y) ++count;
    }
  }
  return count;
}

uint64_t count_inverse_pairs_divisor(const PrimeContext& ctx, uint32_t X,
                                     uint32_t Y) {
  check_xy(ctx, X, Y);
  const int64_t p = ctx.p();
  // x*y = 1 + k*p and |x*y| <= X*Y force |k| <= (X*Y + 1)/p
  const int64_t kmax = static_cast<int64_t>(
      (static_cast<uint64_t>(X) * static_cast<uint64_t>(Y) + 1) /
      static_cast<uint64_t>(p));
  uint64_t count = 0;
  for (int64_t k = -kmax; k <= kmax; ++k) {
    const int64_t n = 1 + k * p;
    const uint64_t abs_n = static_cast<uint64_t>(n < 0 ? -n : n);
    count += count_for_divisor_list(divisors(abs_n), abs_n, X, Y);
  }
  return count;
}

uint64_t InversePairDivisorCache::count(uint32_t X, uint32_t Y) {
  check_xy(ctx_, X, Y);
  const int64_t p = ctx_.p();
  const int64_t kmax = static_cast<int64_t>(
      (static_cast<uint64_t>(X) * static_cast<uint64_t>(Y) + 1) /
      static_cast<uint64_t>(p));
  uint64_t total = 0;
  for (int64_t k = -kmax; k <= kmax; ++k) {
    auto it = lists_.find(k);
    if (it == lists_.end()) {
      const int64_t n = 1 + k * p;
      const uint64_t abs_n = static_cast<uint64_t>(n < 0 ? -n : n);
      it = lists_.emplace(k, divisors(abs_n)).first;
    }
    const int64_t n = 1 + k * p;
    const uint64_t abs_n = static_cast<uint64_t>(n < 0 ? -n : n);
    total += count_for_divisor_list(it->second, abs_n, X, Y);
  }
  return total;
}

VinogradovResult vinogradov_check(const PrimeContext& ctx,
                                  const std::vector<uint32_t>& U,
                                  const std::vector<uint32_t>& V,
                                  const std::vector<cplx>& phi,
                                  const std::vector<cplx>& psi) {
  const uint32_t p = ctx.p();
  if (U.size() != phi.size() || V.size() != psi.size())
    throw std::domain_error("vinogradov_check: weight/index length mismatch");
  for (uint32_t u : U)
    if (u >= p) throw std::domain_error("vinogradov_check: index out of range");
  for (uint32_t v : V)
    if (v >= p) throw std::domain_error("vinogradov_check: index out of range");

  kernels::KahanAcc re, im;
  for (size_t iu = 0; iu < U.size(); ++iu) {
    kernels::KahanAcc ire, iim;
    for (size_t iv = 0; iv < V.size(); ++iv) {
      const cplx w =
          ctx.cis(static_cast<uint64_t>(U[iu]) * V[iv] % p);
      ire.add(psi[iv].real() * w.real() - psi[iv].imag() * w.imag());
      iim.add(psi[iv].real() * w.imag() + psi[iv].imag() * w.real());
    }
    const cplx inner{ire.value(), iim.value()};
    re.add(phi[iu].real() * inner.real() - phi[iu].imag() * inner.imag());
    im.add(phi[iu].real() * inner.imag() + phi[iu].imag() * inner.real());
  }

  kernels::KahanAcc phi2, psi2;
  for (const cplx& w : phi) phi2.add(std::norm(w));
  for (const cplx& w : psi) psi2.add(std::norm(w));

  VinogradovResult out;
  out.lhs = std::abs(cplx{re.value(), im.value()});
  out.rhs = std::sqrt(phi2.value() * psi2.value() * static_cast<double>(p));
  out.holds = out.lhs <= out.rhs + tol(p);
  return out;
}

std::vector<uint32_t> primes_up_to(uint32_t limit) {
  std::vector<uint32_t> out;
  if (limit < 3) return out;
  std::vector<bool> sieve(limit + 1, true);
  for (uint32_t i = 3; i <= limit; i += 2) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (uint64_t j = static_cast<uint64_t>(i) * i; j <= limit; j += 2ull * i)
      sieve[static_cast<size_t>(j)] = false;
  }
  return out;
}

void VerifyResult::merge(const VerifyResult& other) {
  checks += other.checks;
  violations.insert(violations.end(), other.violations.begin(),
                    other.violations.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

}  // namespace ksl
