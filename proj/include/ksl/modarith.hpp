#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace ksl {

// All moduli in this library are odd primes p < 2^31, so products of two
// reduced residues fit in 64 bits before reduction and every operation here
// is exact integer arithmetic.

inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
  return (a % m) * (b % m) % m;
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(uint64_t n);

// Multiplicative inverse of x mod p, result in [1, p-1].
// Throws std::domain_error when x == 0 (mod p) or p is not prime.
uint64_t mod_inverse(uint64_t x, uint64_t p);

// Smallest generator of the unit group mod p. Throws for p = 2 and
// non-primes; the library is restricted to odd primes.
uint32_t find_primitive_root(uint32_t p);

// Legendre symbol via Euler's criterion: 0 if p | a, else a^((p-1)/2) mod p
// mapped to +-1. p must be an odd prime.
int legendre(int64_t a, uint64_t p);

// Distance from u to the nearest multiple of p: min_k |u - k*p|, in
// [0, floor(p/2)]. Defined for any integer u.
uint64_t dist_to_zero(int64_t u, uint64_t p);

// All positive divisors of n in ascending order, by trial division.
// Throws std::domain_error for n = 0.
std::vector<uint64_t> divisors(uint64_t n);

// Precomputed arithmetic tables for one odd prime p < 2^31:
//   g      smallest primitive root
//   dlog   x in [1,p-1]  ->  j with g^j == x (mod p), a bijection onto [0,p-2]
//   inv    x in [1,p-1]  ->  the inverse of x
//   cis    k in [0,p-1]  ->  exp(2*pi*i*k/p)
// Immutable after construction; safe to share across threads.
class PrimeContext {
 public:
  explicit PrimeContext(uint64_t p);

  uint32_t p() const { return p_; }
  uint32_t primitive_root() const { return g_; }

  // x must be nonzero mod p
  uint32_t dlog(uint64_t x) const { return dlog_[x % p_]; }
  int64_t inv(uint64_t x) const { return inv_[x % p_]; }

  std::complex<double> cis(uint64_t k) const {
    k %= p_;
    return {cis_re_[k], cis_im_[k]};
  }

  const double* cis_re() const { return cis_re_.data(); }
  const double* cis_im() const { return cis_im_.data(); }
  const std::vector<int64_t>& inv_table() const { return inv_; }

 private:
  uint32_t p_ = 0;
  uint32_t g_ = 0;
  std::vector<uint32_t> dlog_;
  std::vector<int64_t> inv_;
  std::vector<double> cis_re_, cis_im_;
};

}  // namespace ksl
