#include "shufflep/kernels.hpp"

namespace shufflep::kernels::detail {

std::uint32_t weighted_dot_mod_scalar(const std::uint16_t* w,
                                      const std::uint32_t* a,
                                      const std::uint32_t* b, std::size_t n,
                                      std::uint32_t p) {
  // w[i]*a[i] < 2^32, reduced before the second multiply; each term is then
  // < 2^32, so the accumulator cannot overflow for any realistic n.
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += (std::uint64_t(w[i]) * a[i] % p) * b[i];
    if ((i & 0xffffff) == 0xffffff) acc %= p;
  }
  return std::uint32_t(acc % p);
}

void mod_add_u16_scalar(const std::uint16_t* x, const std::uint16_t* y,
                        std::uint16_t* out, std::size_t n, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t s = std::uint32_t(x[i]) + y[i];
    out[i] = std::uint16_t(s >= p ? s - p : s);
  }
}

}  // namespace shufflep::kernels::detail
