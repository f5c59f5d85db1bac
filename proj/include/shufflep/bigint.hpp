#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace shufflep {

// Exact arbitrary-precision signed integer used by the lift ring, the
// divided-power combinatorics and the effective bound checks.
using BigInt = boost::multiprecision::cpp_int;

BigInt big_factorial(std::uint64_t n);
BigInt big_binomial(std::uint64_t n, std::uint64_t k);

// (jk)! / ((j!)^k k!), the number of partitions of a jk-set into k unordered
// blocks of size j. Computed by the product formula prod_{m=1..k} C(mj-1, j-1),
// which is integral term by term. Requires j >= 1.
BigInt divided_power_count(std::uint64_t j, std::uint64_t k);

}  // namespace shufflep
