#pragma once

#include <cstdint>
#include <vector>

#include "shufflep/binom.hpp"
#include "shufflep/field.hpp"

namespace shufflep {

// A truncated ordinary formal power series over F_{p^e}: coefficients of
// X^0 .. X^{order-1}, known modulo X^order. Coordinates are stored flat
// (order * e residues, coefficient-major) so the prime-field inner loops can
// run on contiguous arrays.
//
// Every operation computes the exact guaranteed order of its result (tau
// loses one, sections divide, the Frobenius substitution multiplies); nothing
// pads with zeros.
class Series {
public:
  Series() = default;
  Series(FieldCtx ctx, std::size_t order);  // zero series
  static Series one(const FieldCtx& ctx, std::size_t order);
  static Series from_elements(const FieldCtx& ctx,
                              const std::vector<FieldElement>& coeffs);
  static Series from_ints(const FieldCtx& ctx,
                          const std::vector<std::int64_t>& coeffs);

  std::size_t order() const { return order_; }
  const FieldCtx& ctx() const { return ctx_; }

  FieldElement coeff(std::size_t n) const;
  void set_coeff(std::size_t n, const FieldElement& v);
  bool coeff_is_zero(std::size_t n) const;
  bool is_zero() const;
  bool in_m() const;           // constant term 0
  bool in_one_plus_m() const;  // constant term 1

  Series truncated(std::size_t new_order) const;

  // Strict equality: same context, same order, same coefficients.
  bool operator==(const Series& o) const;
  bool operator!=(const Series& o) const { return !(*this == o); }

  const std::uint32_t* block(std::size_t n) const {
    return coords_.data() + n * ctx_.e();
  }
  std::uint32_t* block(std::size_t n) { return coords_.data() + n * ctx_.e(); }
  const std::vector<std::uint32_t>& coords() const { return coords_; }

private:
  FieldCtx ctx_;
  std::size_t order_ = 0;
  std::vector<std::uint32_t> coords_;
};

// First min(n, order(a), order(b)) coefficients agree.
bool agree_to(const Series& a, const Series& b, std::size_t n);

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series negate(const Series& a);
Series scalar_mul(const Series& a, const FieldElement& c);

// Shuffle product: gamma_n = sum_k C(n,k) alpha_k beta_{n-k}, binomials mod p
// via the cached Pascal rows. Result order = min of the input orders.
Series shuffle(const Series& a, const Series& b);

// Shift tau(sum alpha_n X^n) = sum alpha_{n+1} X^n; loses one order.
Series tau(const Series& a);

// Section C_{k,f}: coefficients gamma_{k + n p^f}. Requires 0 <= k < p^f and
// order > k; result order = floor((order-1-k)/p^f) + 1.
Series section(const Series& a, std::uint64_t k, std::uint32_t f);

// Frobenius substitution phi(sum alpha_n X^n) = sum alpha_n X^{pn};
// result order = p*(order-1) + 1.
Series frobenius_subst(const Series& a);

// n-fold shuffle power by binary exponentiation; A^{sh 0} = 1.
Series shuffle_pow(const Series& a, std::uint64_t n);

// Shuffle inverse of a unit (nonzero constant term): writing A = c(1 + A'),
// the inverse is c^{-1} (1 + A')^{sh(p-1)} since 1 + m has exponent p.
Series shuffle_inv(const Series& a);

// exp_!: the divided-power exponential, computed by the coefficient
// recurrence beta_0 = 1, beta_{n+1} = sum_k C(n,k) beta_k alpha_{n+1-k}
// (the shift-derivation identity read coefficient-wise). Requires A in m.
Series exp_shriek(const Series& a);

// log_!: integrates B^{sh(p-1)} sh tau(B); requires constant term 1.
// Inverse of exp_shriek to the shared order.
Series log_shriek(const Series& b);

// The p-homogeneous form with A^{sh p} = (A,1)^p + p mu_p(A) over Z,
// evaluated on integer lifts and divided exactly by p. Restricted to 1 + m
// it equals log_shriek.
Series mu_p(const Series& a);

// Truncated ordinary (Cauchy) product, order = min of inputs.
Series mul_ordinary(const Series& a, const Series& b);

}  // namespace shufflep
