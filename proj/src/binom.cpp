#include "shufflep/binom.hpp"

#include <map>
#include <mutex>

#include "shufflep/kernels.hpp"

namespace shufflep {

namespace {

// Factorial tables mod p for digit binomials; one pair of tables per p.
struct FactTables {
  std::vector<std::uint32_t> fact;
  std::vector<std::uint32_t> inv_fact;
};

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t ex, std::uint32_t p) {
  std::uint64_t acc = 1;
  base %= p;
  while (ex) {
    if (ex & 1) acc = acc * base % p;
    base = base * base % p;
    ex >>= 1;
  }
  return std::uint32_t(acc);
}

const FactTables& fact_tables(std::uint32_t p) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::unique_ptr<FactTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[p];
  if (!slot) {
    auto t = std::make_unique<FactTables>();
    t->fact.resize(p);
    t->inv_fact.resize(p);
    t->fact[0] = 1 % p;
    for (std::uint32_t i = 1; i < p; ++i)
      t->fact[i] = std::uint32_t(std::uint64_t(t->fact[i - 1]) * i % p);
    t->inv_fact[p - 1] = pow_mod(t->fact[p - 1], p - 2, p);
    for (std::uint32_t i = p - 1; i > 0; --i)
      t->inv_fact[i - 1] =
          std::uint32_t(std::uint64_t(t->inv_fact[i]) * i % p);
    slot = std::move(t);
  }
  return *slot;
}

}  // namespace

std::uint32_t binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) return 0;
  if (p == 2) {
    // digit condition collapses to a bit test
    return (k & ~n) == 0 ? 1u : 0u;
  }
  const FactTables& t = fact_tables(p);
  std::uint64_t acc = 1;
  while (n || k) {
    std::uint32_t nd = std::uint32_t(n % p), kd = std::uint32_t(k % p);
    if (kd > nd) return 0;
    acc = acc * t.fact[nd] % p * t.inv_fact[kd] % p * t.inv_fact[nd - kd] % p;
    n /= p;
    k /= p;
  }
  return std::uint32_t(acc);
}

BinomTable::BinomTable(std::uint32_t p, std::size_t rows) : p_(p) {
  rows_.resize(rows);
  if (rows == 0) return;
  rows_[0] = {std::uint16_t(1 % p)};
  for (std::size_t n = 1; n < rows; ++n) {
    auto& r = rows_[n];
    const auto& prev = rows_[n - 1];
    r.resize(n + 1);
    r[0] = std::uint16_t(1 % p);
    r[n] = std::uint16_t(1 % p);
    if (n >= 2)
      kernels::mod_add_u16(prev.data() + 1, prev.data(), r.data() + 1, n - 1,
                           p);
  }
}

std::shared_ptr<const BinomTable> BinomTable::get(std::uint32_t p,
                                                  std::size_t rows) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::shared_ptr<const BinomTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[p];
  if (!slot || slot->row_count() < rows) {
    std::size_t target = rows;
    if (slot) target = std::max(rows, slot->row_count() * 2);
    slot = std::shared_ptr<const BinomTable>(new BinomTable(p, target));
  }
  return slot;
}

}  // namespace shufflep
