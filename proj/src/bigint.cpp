#include "shufflep/bigint.hpp"

#include "shufflep/error.hpp"

namespace shufflep {

BigInt big_factorial(std::uint64_t n) {
  BigInt f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt big_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;  // exact: c is C(n-k+i, i) after this step
  }
  return c;
}

BigInt divided_power_count(std::uint64_t j, std::uint64_t k) {
  if (j < 1) throw DomainError("divided_power_count requires j >= 1");
  BigInt c = 1;
  for (std::uint64_t m = 1; m <= k; ++m) c *= big_binomial(m * j - 1, j - 1);
  return c;
}

}  // namespace shufflep
