#include "ksl/modarith.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "ksl/interval.hpp"

namespace ksl {

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod) {
  if (mod == 1) return 0;
  uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

namespace {

// (a*b) mod m without overflow for 64-bit m
uint64_t mul_mod_128(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

uint64_t pow_mod_128(uint64_t base, uint64_t exp, uint64_t mod) {
  uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mul_mod_128(result, base, mod);
    base = mul_mod_128(base, base, mod);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // deterministic witness set for all n < 2^64
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = pow_mod_128(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < r - 1; ++i) {
      x = mul_mod_128(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

uint64_t mod_inverse(uint64_t x, uint64_t p) {
  const uint64_t r = x % p;
  if (r == 0) throw std::domain_error("mod_inverse: x is 0 mod p, no inverse");
  // extended Euclid on (r, p)
  int64_t t = 0, new_t = 1;
  int64_t a = static_cast<int64_t>(p), b = static_cast<int64_t>(r);
  while (b != 0) {
    const int64_t q = a / b;
    t = std::exchange(new_t, t - q * new_t);
    a = std::exchange(b, a - q * b);
  }
  if (a != 1) throw std::domain_error("mod_inverse: modulus not prime");
  if (t < 0) t += static_cast<int64_t>(p);
  return static_cast<uint64_t>(t);
}

uint32_t find_primitive_root(uint32_t p) {
  if (p == 2) throw std::domain_error("find_primitive_root: p = 2 unsupported");
  if (!is_prime(p)) throw std::domain_error("find_primitive_root: p not prime");
  // prime factors of p-1 by trial division
  std::vector<uint64_t> factors;
  uint64_t m = p - 1;
  for (uint64_t q = 2; q * q <= m; q += (q == 2 ? 1 : 2)) {
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) factors.push_back(m);
  for (uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (uint64_t q : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("find_primitive_root: no generator found");
}

int legendre(int64_t a, uint64_t p) {
  int64_t r = a % static_cast<int64_t>(p);
  if (r < 0) r += static_cast<int64_t>(p);
  if (r == 0) return 0;
  const uint64_t e = pow_mod(static_cast<uint64_t>(r), (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

uint64_t dist_to_zero(int64_t u, uint64_t p) {
  int64_t r = u % static_cast<int64_t>(p);
  if (r < 0) r += static_cast<int64_t>(p);
  return std::min<uint64_t>(static_cast<uint64_t>(r),
                            p - static_cast<uint64_t>(r));
}

namespace {

// primes up to 2^16; enough to fully factor any n < 2^32 and to cover the
// desk-scale counting loads without resorting to raw odd trial division
const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> table = [] {
    const uint32_t limit = 1u << 16;
    std::vector<bool> sieve(limit, true);
    std::vector<uint32_t> out;
    for (uint32_t i = 2; i < limit; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (uint64_t j = static_cast<uint64_t>(i) * i; j < limit; j += i)
        sieve[static_cast<size_t>(j)] = false;
    }
    return out;
  }();
  return table;
}

}  // namespace

std::vector<uint64_t> divisors(uint64_t n) {
  if (n == 0) throw std::domain_error("divisors: n = 0");
  std::vector<std::pair<uint64_t, int>> factorization;
  uint64_t m = n;
  for (uint32_t q : small_primes()) {
    if (static_cast<uint64_t>(q) * q > m) break;
    if (m % q == 0) {
      int e = 0;
      while (m % q == 0) {
        m /= q;
        ++e;
      }
      factorization.emplace_back(q, e);
    }
  }
  if (m > 1) {
    // cofactor beyond the sieve: prime unless a larger trial divisor hits
    const uint64_t start = small_primes().back() + 2;
    if (!is_prime(m)) {
      for (uint64_t q = start; q * q <= m; q += 2) {
        if (m % q == 0) {
          int e = 0;
          while (m % q == 0) {
            m /= q;
            ++e;
          }
          factorization.emplace_back(q, e);
          if (is_prime(m)) break;
        }
      }
    }
    if (m > 1) factorization.emplace_back(m, 1);
  }
  std::vector<uint64_t> out{1};
  for (const auto& [q, e] : factorization) {
    const size_t base = out.size();
    uint64_t qe = 1;
    for (int i = 0; i < e; ++i) {
      qe *= q;
      for (size_t j = 0; j < base; ++j) out.push_back(out[j] * qe);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PrimeContext::PrimeContext(uint64_t p) {
  if (p >= (1ull << 31))
    throw std::domain_error("PrimeContext: p must be < 2^31");
  if (p < 3 || !is_prime(p))
    throw std::domain_error("PrimeContext: p must be an odd prime >= 3");
  p_ = static_cast<uint32_t>(p);
  g_ = find_primitive_root(p_);

  dlog_.assign(p_, 0);
  inv_.assign(p_, 0);
  dlog_[0] = 0xffffffffu;  // sentinel; 0 has no discrete log

  // walk g^j and g^(-j) together: inv(g^j) = (g^-1)^j
  const uint64_t ig = mod_inverse(g_, p_);
  uint64_t pw = 1, iw = 1;
  for (uint32_t j = 0; j + 1 < p_; ++j) {
    dlog_[pw] = j;
    inv_[pw] = static_cast<int64_t>(iw);
    pw = pw * g_ % p_;
    iw = iw * ig % p_;
  }

  cis_re_.resize(p_);
  cis_im_.resize(p_);
  const double w = 2.0 * std::numbers::pi / static_cast<double>(p_);
  for (uint32_t k = 0; k < p_; ++k) {
    const double theta = w * static_cast<double>(k);
    cis_re_[k] = std::cos(theta);
    cis_im_[k] = std::sin(theta);
  }
}

void validate_interval(const Interval& iv, uint64_t p) {
  if (iv.length < 1) throw std::domain_error("interval: length must be >= 1");
  if (iv.offset < 0) throw std::domain_error("interval: offset must be >= 0");
  if (static_cast<uint64_t>(iv.last()) > p - 1)
    throw std::domain_error("interval: must lie inside [1, p-1]");
}

}  // namespace ksl
