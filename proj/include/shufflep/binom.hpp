#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace shufflep {

// C(n, k) mod p by Lucas's identity: the product over base-p digits of the
// digit binomials. Zero whenever some digit of k exceeds the digit of n.
std::uint32_t binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p);

// Rows of the Pascal triangle mod p, built once per characteristic and grown
// on demand; thereafter read-only. row(n) has n+1 entries C(n, 0..n) mod p.
// The shuffle product and the exp_! recurrence index straight into these rows.
class BinomTable {
public:
  static std::shared_ptr<const BinomTable> get(std::uint32_t p,
                                               std::size_t rows);
  const std::uint16_t* row(std::size_t n) const { return rows_[n].data(); }
  std::size_t row_count() const { return rows_.size(); }
  std::uint32_t p() const { return p_; }

private:
  BinomTable(std::uint32_t p, std::size_t rows);
  std::uint32_t p_;
  std::vector<std::vector<std::uint16_t>> rows_;
};

}  // namespace shufflep
