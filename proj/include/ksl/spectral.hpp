#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "ksl/expsums.hpp"
#include "ksl/modarith.hpp"

namespace ksl {

// out[t] = sum_{x=0}^{p-1} v[x] * e_p(sign * t * x); O(p^2) reference.
std::vector<cplx> naive_dft(const std::vector<cplx>& v, uint64_t p, int sign);

// Same contract for odd prime p, via Rader's reduction to a cyclic
// convolution of length p-1 indexed by powers of the primitive root; the
// convolution runs as a zero-padded radix-2 FFT. O(p log p).
std::vector<cplx> prime_dft(const std::vector<cplx>& v, uint64_t p, int sign);

// The full family K_p(m, 1) for m in [1, p-1]. Stored padded so that value(m)
// is a single lookup for any m; index 0 holds the constant K_p(0, 1) = -1,
// which is not part of the table proper and is never written to disk.
class KloostermanTable {
 public:
  KloostermanTable(uint32_t p, std::vector<double> padded, double max_imag);

  uint32_t p() const { return p_; }

  // K_p(m mod p, 1); m == 0 (mod p) yields -1
  double value(int64_t m) const {
    int64_t r = m % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    return padded_[static_cast<size_t>(r)];
  }

  // length p, entry 0 == -1; gather-friendly layout for the kernels
  const std::vector<double>& padded() const { return padded_; }

  double max_abs() const { return max_abs_; }
  double max_imag() const { return max_imag_; }

 private:
  uint32_t p_;
  std::vector<double> padded_;
  double max_abs_;
  double max_imag_;
};

enum class TableMethod { direct, spectral };

// direct: p-1 row summations, O(p^2), parallelizable across rows.
// spectral: one sign=+1 prime DFT of g(x) = e_p(inv(x)), g(0) = 0.
KloostermanTable build_table(const PrimeContext& ctx, TableMethod method,
                             unsigned jobs = 0);

// Cache file: magic "KLT1", p as 8-byte little-endian unsigned, then p-1
// IEEE-754 little-endian doubles (values for m = 1..p-1 in index order).
void save_table(const KloostermanTable& table, const std::string& path);
KloostermanTable load_table(const std::string& path);

}  // namespace ksl
