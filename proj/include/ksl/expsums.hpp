#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "ksl/interval.hpp"
#include "ksl/modarith.hpp"

namespace ksl {

using cplx = std::complex<double>;

// Absolute tolerance for values accumulated over O(p) double-precision
// terms; rounding grows linearly in the term count.
inline double tol(uint64_t p) { return 1e-9 * static_cast<double>(p); }

// e_p(z) = exp(2*pi*i*z/p); z is reduced mod p before evaluation.
cplx additive_char(int64_t z, uint64_t p);

// --- Kloosterman sums ------------------------------------------------------
//
// K_p(m, n) = sum_{x=1}^{p-1} e_p(m*x + n*inv(x)). Always real; the direct
// summation's imaginary part is checked against tol(p) and dropped.

// shift[x-1] = n * inv(x) mod p for x in [1, p-1]; reusable across all m.
std::vector<int64_t> kloosterman_shift(const PrimeContext& ctx, int64_t n);

double kloosterman_row(const PrimeContext& ctx, int64_t m,
                       const std::vector<int64_t>& shift);

double kloosterman(const PrimeContext& ctx, int64_t m, int64_t n);

// --- Multiplicative characters --------------------------------------------
//
// chi_j(x) = exp(2*pi*i * j * dlog(x) / (p-1)) for x nonzero, 0 at x == 0.
// j = 0 is the principal character; the conjugate of chi_j is chi_{p-1-j}.

cplx char_value(const PrimeContext& ctx, uint32_t j, int64_t x);

// chi_j(x) for x = 1..p-1 (index x-1)
std::vector<cplx> character_table(const PrimeContext& ctx, uint32_t j);

// tau_p(a; chi_j) = sum_{x=1}^{p-1} chi_j(x) e_p(a*x)
cplx tau_sum(const PrimeContext& ctx, int64_t a, uint32_t j);

// --- Gauss sums and quadratic sums ------------------------------------------

// G_{k,p}(a) = sum_{x=0}^{p-1} e_p(a*x^k); requires k >= 1 and k | p-1.
cplx gauss_sum(const PrimeContext& ctx, uint64_t k, int64_t a);

// Same sum via the character decomposition: sum of tau_p(a; chi) over the
// nonprincipal chi with chi^k principal. Requires p not dividing a.
cplx gauss_via_characters(const PrimeContext& ctx, uint64_t k, int64_t a);

// G_{k,p}(c) for every c in [0, p-1], grouped through the k-th power
// histogram; entry c equals gauss_sum(ctx, k, c) up to rounding.
std::vector<cplx> gauss_sum_all(const PrimeContext& ctx, uint64_t k);

// sum_{x=0}^{p-1} e_p(a*x^2 + b*x), direct; requires p not dividing a.
cplx quad_sum_complete(const PrimeContext& ctx, int64_t a, int64_t b);

// (a/p) * e_p(-b^2 * inv(4a)) * G_{2,p}(1)
cplx quad_sum_closed_form(const PrimeContext& ctx, int64_t a, int64_t b);

struct DualPath {
  cplx direct;
  cplx companion;
};

// H_{k,p}(a; I) = sum_{m in I} G_{k,p}(a*m), with the character-path
// companion sum_{chi} tau_p(1; chi) * sum_{m in I} conj(chi)(a*m).
DualPath h_sum(const PrimeContext& ctx, uint64_t k, int64_t a, Interval I);

// F_p(a, b; I) = sum_{m in I} sum_{x=0}^{p-1} e_p(m*(a*x^2 + b*x)), with the
// Legendre-walk companion (a/p) * G_{2,p}(1) * sum_{m in I} (m/p) e_p(c*m),
// c = -b^2 * inv(4a).
DualPath f_sum(const PrimeContext& ctx, int64_t a, int64_t b, Interval I);

}  // namespace ksl
