#include "ksl/spectral.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "ksl/kernels.hpp"
#include "ksl/parallel.hpp"

namespace ksl {

namespace {

// iterative radix-2 DIT, in place; n must be a power of two.
// inverse == false: X[k] = sum_j x[j] exp(-2*pi*i*j*k/n)
// inverse == true:  x[j] = (1/n) sum_k X[k] exp(+2*pi*i*j*k/n)
void fft_pow2(std::vector<cplx>& a, bool inverse) {
  const size_t n = a.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang =
        (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
    const cplx wlen{std::cos(ang), std::sin(ang)};
    for (size_t i = 0; i < n; i += len) {
      cplx w{1.0, 0.0};
      for (size_t k = 0; k < len / 2; ++k) {
        // explicit products; keeps the butterfly free of the complex-NaN
        // handling the standard operators drag in
        const cplx u = a[i + k];
        const cplx t = {w.real() * a[i + k + len / 2].real() -
                            w.imag() * a[i + k + len / 2].imag(),
                        w.real() * a[i + k + len / 2].imag() +
                            w.imag() * a[i + k + len / 2].real()};
        a[i + k] = {u.real() + t.real(), u.imag() + t.imag()};
        a[i + k + len / 2] = {u.real() - t.real(), u.imag() - t.imag()};
        w = {w.real() * wlen.real() - w.imag() * wlen.imag(),
             w.real() * wlen.imag() + w.imag() * wlen.real()};
      }
    }
  }
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& v : a) v *= scale;
  }
}

std::vector<cplx> build_cis(uint64_t p, int sign) {
  std::vector<cplx> cis(p);
  const double w = 2.0 * std::numbers::pi * (sign >= 0 ? 1.0 : -1.0) /
                   static_cast<double>(p);
  for (uint64_t k = 0; k < p; ++k) {
    const double theta = w * static_cast<double>(k);
    cis[k] = {std::cos(theta), std::sin(theta)};
  }
  return cis;
}

}  // namespace

std::vector<cplx> naive_dft(const std::vector<cplx>& v, uint64_t p, int sign) {
  if (v.size() != p) throw std::domain_error("naive_dft: length mismatch");
  const auto cis = build_cis(p, sign);
  std::vector<cplx> out(p);
  for (uint64_t t = 0; t < p; ++t) {
    kernels::KahanAcc re, im;
    for (uint64_t x = 0; x < p; ++x) {
      const cplx w = cis[t * x % p];
      re.add(v[x].real() * w.real() - v[x].imag() * w.imag());
      im.add(v[x].real() * w.imag() + v[x].imag() * w.real());
    }
    out[t] = {re.value(), im.value()};
  }
  return out;
}

std::vector<cplx> prime_dft(const std::vector<cplx>& v, uint64_t p, int sign) {
  if (v.size() != p) throw std::domain_error("prime_dft: length mismatch");
  if (p < 3 || !is_prime(p))
    throw std::domain_error("prime_dft: p must be an odd prime");

  const uint64_t n = p - 1;
  const uint32_t g = find_primitive_root(static_cast<uint32_t>(p));

  std::vector<uint32_t> pow_g(n);
  uint64_t pw = 1;
  for (uint64_t j = 0; j < n; ++j) {
    pow_g[j] = static_cast<uint32_t>(pw);
    pw = pw * g % p;
  }

  // cyclic convolution setup: out[g^a] - v[0] = sum_b u[b] * w[(a-b) mod n]
  // with u[b] = v[g^-b] and w[c] = e_p(sign * g^c)
  const size_t conv_len = std::bit_ceil(2 * n - 1);
  std::vector<cplx> u(conv_len, cplx{0.0, 0.0});
  std::vector<cplx> w(conv_len, cplx{0.0, 0.0});
  for (uint64_t b = 0; b < n; ++b)
    u[b] = v[pow_g[(n - b) % n]];
  const auto cis = build_cis(p, sign);
  for (uint64_t c = 0; c < n; ++c)
    w[c] = cis[pow_g[c]];

  fft_pow2(u, false);
  fft_pow2(w, false);
  for (size_t i = 0; i < conv_len; ++i) {
    const cplx a = u[i], b = w[i];
    u[i] = {a.real() * b.real() - a.imag() * b.imag(),
            a.real() * b.imag() + a.imag() * b.real()};
  }
  fft_pow2(u, true);

  std::vector<cplx> out(p);
  kernels::KahanAcc re0, im0;
  for (uint64_t x = 0; x < p; ++x) {
    re0.add(v[x].real());
    im0.add(v[x].imag());
  }
  out[0] = {re0.value(), im0.value()};
  for (uint64_t a = 0; a < n; ++a) {
    // fold the linear convolution back to a cyclic one
    cplx cyc = u[a];
    if (a + n <= 2 * n - 2) cyc += u[a + n];
    out[pow_g[a]] = v[0] + cyc;
  }
  return out;
}

KloostermanTable::KloostermanTable(uint32_t p, std::vector<double> padded,
                                   double max_imag)
    : p_(p), padded_(std::move(padded)), max_abs_(0.0), max_imag_(max_imag) {
  if (padded_.size() != p_)
    throw std::domain_error("KloostermanTable: bad payload length");
  for (uint32_t m = 1; m < p_; ++m)
    max_abs_ = std::max(max_abs_, std::abs(padded_[m]));
}

KloostermanTable build_table(const PrimeContext& ctx, TableMethod method,
                             unsigned jobs) {
  const uint32_t p = ctx.p();
  std::vector<double> padded(p);
  padded[0] = -1.0;
  double max_imag = 0.0;

  if (method == TableMethod::direct) {
    const auto shift = kloosterman_shift(ctx, 1);
    std::vector<double> imag(p, 0.0);
    parallel_for(p - 1, jobs, [&](size_t i) {
      const int64_t m = static_cast<int64_t>(i) + 1;
      const cplx s = kernels::cis_shift_ap_sum(ctx.cis_re(), ctx.cis_im(),
                                               shift.data(), shift.size(), m,
                                               m, p);
      padded[static_cast<size_t>(m)] = s.real();
      imag[static_cast<size_t>(m)] = std::abs(s.imag());
    });
    for (uint32_t m = 1; m < p; ++m) max_imag = std::max(max_imag, imag[m]);
  } else {
    std::vector<cplx> g(p, cplx{0.0, 0.0});
    const auto& inv = ctx.inv_table();
    for (uint32_t x = 1; x < p; ++x)
      g[x] = ctx.cis(static_cast<uint64_t>(inv[x]));
    const auto out = prime_dft(g, p, +1);
    for (uint32_t m = 1; m < p; ++m) {
      padded[m] = out[m].real();
      max_imag = std::max(max_imag, std::abs(out[m].imag()));
    }
  }
  if (max_imag > tol(p))
    throw std::logic_error("build_table: imaginary part exceeds tolerance");
  return KloostermanTable(p, std::move(padded), max_imag);
}

namespace {

constexpr char kMagic[4] = {'K', 'L', 'T', '1'};

static_assert(std::endian::native == std::endian::little,
              "cache format I/O assumes a little-endian host");

}  // namespace

void save_table(const KloostermanTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("save_table: cannot open " + path);
  out.write(kMagic, 4);
  const uint64_t p = table.p();
  out.write(reinterpret_cast<const char*>(&p), 8);
  out.write(reinterpret_cast<const char*>(table.padded().data() + 1),
            static_cast<std::streamsize>(8 * (table.p() - 1)));
  if (!out) throw std::runtime_error("save_table: write failed for " + path);
}

KloostermanTable load_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_table: cannot open " + path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("load_table: bad magic in " + path);
  uint64_t p = 0;
  in.read(reinterpret_cast<char*>(&p), 8);
  if (!in) throw std::runtime_error("load_table: truncated header in " + path);
  if (p < 3 || p >= (1ull << 31) || !is_prime(p))
    throw std::runtime_error("load_table: p is not an odd prime in " + path);
  std::vector<double> padded(p);
  padded[0] = -1.0;
  in.read(reinterpret_cast<char*>(padded.data() + 1),
          static_cast<std::streamsize>(8 * (p - 1)));
  if (!in || in.gcount() != static_cast<std::streamsize>(8 * (p - 1)))
    throw std::runtime_error("load_table: truncated payload in " + path);
  in.peek();
  if (!in.eof())
    throw std::runtime_error("load_table: trailing bytes in " + path);
  return KloostermanTable(static_cast<uint32_t>(p), std::move(padded), 0.0);
}

}  // namespace ksl
