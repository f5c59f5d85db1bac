// AVX2 variants. This translation unit is compiled with -mavx2; the dispatch
// layer only calls into it after a runtime CPU check.

#include "shufflep/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>

namespace shufflep::kernels::detail {

std::uint32_t weighted_dot_mod_avx2(const std::uint16_t* w,
                                    const std::uint32_t* a,
                                    const std::uint32_t* b, std::size_t n,
                                    std::uint32_t p) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  // Each 64-bit lane accumulates products < 2^48; a chunk of 2^18 elements
  // keeps lane sums below 2^63.
  constexpr std::size_t kChunk = std::size_t(1) << 18;
  while (i < n) {
    const std::size_t end = std::min(n, i + kChunk);
    __m256i acc_even = _mm256_setzero_si256();
    __m256i acc_odd = _mm256_setzero_si256();
    for (; i + 8 <= end; i += 8) {
      const __m256i wv = _mm256_cvtepu16_epi32(
          _mm_loadu_si128(reinterpret_cast<const __m128i*>(w + i)));
      const __m256i av =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
      const __m256i bv =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
      const __m256i wa = _mm256_mullo_epi32(wv, av);  // exact, < 2^32
      acc_even = _mm256_add_epi64(acc_even, _mm256_mul_epu32(wa, bv));
      acc_odd = _mm256_add_epi64(
          acc_odd, _mm256_mul_epu32(_mm256_srli_epi64(wa, 32),
                                    _mm256_srli_epi64(bv, 32)));
    }
    std::uint64_t lanes[8];
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(lanes), acc_even);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(lanes + 4), acc_odd);
    std::uint64_t s = 0;
    for (std::uint64_t v : lanes) s += v % p;
    total = (total + s) % p;
    for (; i < end; ++i)
      total = (total + std::uint64_t(w[i]) * a[i] % p * b[i]) % p;
  }
  return std::uint32_t(total);
}

void mod_add_u16_avx2(const std::uint16_t* x, const std::uint16_t* y,
                      std::uint16_t* out, std::size_t n, std::uint32_t p) {
  // Caller guarantees p <= 2^15, so x+y < 2^16 never wraps the u16 lanes.
  const __m256i pv = _mm256_set1_epi16(std::int16_t(p));
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const __m256i xv =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    const __m256i yv =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    __m256i s = _mm256_add_epi16(xv, yv);
    const __m256i ge = _mm256_cmpeq_epi16(_mm256_max_epu16(s, pv), s);
    s = _mm256_sub_epi16(s, _mm256_and_si256(ge, pv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), s);
  }
  for (; i < n; ++i) {
    std::uint32_t s = std::uint32_t(x[i]) + y[i];
    out[i] = std::uint16_t(s >= p ? s - p : s);
  }
}

}  // namespace shufflep::kernels::detail

#endif  // x86_64
