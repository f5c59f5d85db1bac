#pragma once

#include <cstddef>
#include <cstdint>

// Hot inner loops of the dense mod-p series arithmetic. Each kernel has a
// scalar reference implementation and an AVX2 variant; the active one is
// picked at runtime from CPU capabilities (override with set_backend or the
// SHUFFLEP_SIMD environment variable, values "scalar" / "avx2" / "auto").
//
// All residue inputs are < p with p < 2^16; the supported field range
// guarantees this.

namespace shufflep::kernels {

enum class Backend { Auto, Scalar, Avx2 };

// (sum_i w[i] * a[i] * b[i]) mod p. The weighted-dot core of the shuffle
// product and of the exp_! coefficient recurrence: w is a row of binomials
// mod p, a/b are coefficient slices.
std::uint32_t weighted_dot_mod(const std::uint16_t* w, const std::uint32_t* a,
                               const std::uint32_t* b, std::size_t n,
                               std::uint32_t p);

// out[i] = (x[i] + y[i]) % p elementwise. Used to roll Pascal rows mod p.
// out may alias neither input.
void mod_add_u16(const std::uint16_t* x, const std::uint16_t* y,
                 std::uint16_t* out, std::size_t n, std::uint32_t p);

bool avx2_available();
void set_backend(Backend b);
const char* active_backend();  // "avx2" or "scalar"

namespace detail {
std::uint32_t weighted_dot_mod_scalar(const std::uint16_t* w,
                                      const std::uint32_t* a,
                                      const std::uint32_t* b, std::size_t n,
                                      std::uint32_t p);
void mod_add_u16_scalar(const std::uint16_t* x, const std::uint16_t* y,
                        std::uint16_t* out, std::size_t n, std::uint32_t p);
#if defined(__x86_64__) || defined(_M_X64)
std::uint32_t weighted_dot_mod_avx2(const std::uint16_t* w,
                                    const std::uint32_t* a,
                                    const std::uint32_t* b, std::size_t n,
                                    std::uint32_t p);
void mod_add_u16_avx2(const std::uint16_t* x, const std::uint16_t* y,
                      std::uint16_t* out, std::size_t n, std::uint32_t p);
#endif
}  // namespace detail

}  // namespace shufflep::kernels
