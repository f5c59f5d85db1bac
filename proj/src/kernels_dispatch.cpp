#include <atomic>
#include <cstdlib>
#include <cstring>

#include "shufflep/kernels.hpp"

namespace shufflep::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend env_backend() {
  const char* v = std::getenv("SHUFFLEP_SIMD");
  if (v == nullptr) return Backend::Auto;
  if (std::strcmp(v, "scalar") == 0) return Backend::Scalar;
  if (std::strcmp(v, "avx2") == 0) return Backend::Avx2;
  return Backend::Auto;
}

std::atomic<bool>& use_avx2_flag() {
  static std::atomic<bool> flag = [] {
    Backend b = env_backend();
    if (b == Backend::Scalar) return false;
    if (b == Backend::Avx2) return cpu_has_avx2();
    return cpu_has_avx2();
  }();
  return flag;
}

}  // namespace

bool avx2_available() { return cpu_has_avx2(); }

void set_backend(Backend b) {
  if (b == Backend::Scalar)
    use_avx2_flag() = false;
  else if (b == Backend::Avx2)
    use_avx2_flag() = cpu_has_avx2();
  else
    use_avx2_flag() = cpu_has_avx2();
}

const char* active_backend() {
  return use_avx2_flag().load() ? "avx2" : "scalar";
}

std::uint32_t weighted_dot_mod(const std::uint16_t* w, const std::uint32_t* a,
                               const std::uint32_t* b, std::size_t n,
                               std::uint32_t p) {
#if defined(__x86_64__) || defined(_M_X64)
  if (use_avx2_flag().load(std::memory_order_relaxed))
    return detail::weighted_dot_mod_avx2(w, a, b, n, p);
#endif
  return detail::weighted_dot_mod_scalar(w, a, b, n, p);
}

void mod_add_u16(const std::uint16_t* x, const std::uint16_t* y,
                 std::uint16_t* out, std::size_t n, std::uint32_t p) {
#if defined(__x86_64__) || defined(_M_X64)
  // The u16 vector adds need headroom: p above 2^15 stays on the scalar path.
  if (p <= 0x8000u && use_avx2_flag().load(std::memory_order_relaxed)) {
    detail::mod_add_u16_avx2(x, y, out, n, p);
    return;
  }
#endif
  detail::mod_add_u16_scalar(x, y, out, n, p);
}

}  // namespace shufflep::kernels
