// AVX2 GF(p) row kernels.
//
// Products are reduced with Montgomery REDC in 64-bit lanes: the scalar factor
// is pre-multiplied by R = 2^32 mod p, so REDC(aR * x) = a * x mod p without
// converting the row itself. Requires odd p < 2^31; p = 2 falls back to the
// reference loop.

#include "algdil/kernels.hpp"

#include <cassert>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define ALGDIL_HAVE_AVX2_KERNELS 1
#else
#define ALGDIL_HAVE_AVX2_KERNELS 0
#endif

namespace algdil::kernels::avx2 {

#if ALGDIL_HAVE_AVX2_KERNELS

namespace {

struct Montgomery {
  std::uint32_t p;
  std::uint32_t neg_pinv;  // -p^{-1} mod 2^32

  explicit Montgomery(std::uint32_t modulus) : p(modulus) {
    std::uint32_t inv = modulus;  // correct to 3 bits for odd modulus
    for (int i = 0; i < 5; ++i) inv *= 2u - modulus * inv;
    neg_pinv = 0u - inv;
  }

  std::uint32_t to_mont(std::uint32_t a) const {
    return static_cast<std::uint32_t>((std::uint64_t{a} << 32) % p);
  }
};

__attribute__((target("avx2"))) inline __m256i reduce_once(__m256i u, __m256i pv) {
  // u < 2p < 2^32: when u < p the wrapped difference is larger than u.
  return _mm256_min_epu32(u, _mm256_sub_epi32(u, pv));
}

__attribute__((target("avx2"))) inline __m256i mont_mul(__m256i x, __m256i am, __m256i np,
                                                        __m256i pv) {
  const __m256i t_even = _mm256_mul_epu32(x, am);
  const __m256i t_odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), am);
  const __m256i m_even = _mm256_mul_epu32(t_even, np);
  const __m256i m_odd = _mm256_mul_epu32(t_odd, np);
  const __m256i u_even =
      _mm256_srli_epi64(_mm256_add_epi64(t_even, _mm256_mul_epu32(m_even, pv)), 32);
  const __m256i u_odd = _mm256_add_epi64(t_odd, _mm256_mul_epu32(m_odd, pv));
  return reduce_once(_mm256_blend_epi32(u_even, u_odd, 0xAA), pv);
}

}  // namespace

__attribute__((target("avx2"))) void axpy_mod(std::span<std::uint32_t> y,
                                              std::span<const std::uint32_t> x,
                                              std::uint32_t a, std::uint32_t p) {
  assert(y.size() == x.size());
  if (a == 0) return;
  if (p == 2) {
    ref::axpy_mod(y, x, a, p);
    return;
  }
  const Montgomery mont(p);
  const __m256i am = _mm256_set1_epi32(static_cast<int>(mont.to_mont(a)));
  const __m256i np = _mm256_set1_epi32(static_cast<int>(mont.neg_pinv));
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));

  const std::size_t n = y.size();
  std::uint32_t* yp = y.data();
  const std::uint32_t* xp = x.data();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(xp + i));
    const __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(yp + i));
    const __m256i prod = mont_mul(xv, am, np, pv);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(yp + i),
                        reduce_once(_mm256_add_epi32(yv, prod), pv));
  }
  if (i < n) ref::axpy_mod(y.subspan(i), x.subspan(i), a, p);
}

__attribute__((target("avx2"))) void scale_mod(std::span<std::uint32_t> y, std::uint32_t a,
                                               std::uint32_t p) {
  if (p == 2) {
    ref::scale_mod(y, a, p);
    return;
  }
  const Montgomery mont(p);
  const __m256i am = _mm256_set1_epi32(static_cast<int>(mont.to_mont(a)));
  const __m256i np = _mm256_set1_epi32(static_cast<int>(mont.neg_pinv));
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));

  const std::size_t n = y.size();
  std::uint32_t* yp = y.data();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(yp + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(yp + i), mont_mul(yv, am, np, pv));
  }
  if (i < n) ref::scale_mod(y.subspan(i), a, p);
}

bool compiled() { return true; }

#else

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t a,
              std::uint32_t p) {
  ref::axpy_mod(y, x, a, p);
}

void scale_mod(std::span<std::uint32_t> y, std::uint32_t a, std::uint32_t p) {
  ref::scale_mod(y, a, p);
}

bool compiled() { return false; }

#endif

}  // namespace algdil::kernels::avx2
