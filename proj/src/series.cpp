#include "shufflep/series.hpp"

#include <algorithm>

#include "shufflep/kernels.hpp"

namespace shufflep {

Series::Series(FieldCtx ctx, std::size_t order)
    : ctx_(std::move(ctx)), order_(order), coords_(order * ctx_.e(), 0) {
  if (order_ < 1) throw DomainError("series order must be >= 1");
}

Series Series::one(const FieldCtx& ctx, std::size_t order) {
  Series s(ctx, order);
  s.set_coeff(0, ctx.one());
  return s;
}

Series Series::from_elements(const FieldCtx& ctx,
                             const std::vector<FieldElement>& coeffs) {
  Series s(ctx, coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) s.set_coeff(i, coeffs[i]);
  return s;
}

Series Series::from_ints(const FieldCtx& ctx,
                         const std::vector<std::int64_t>& coeffs) {
  Series s(ctx, coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    s.set_coeff(i, ctx.from_int(coeffs[i]));
  return s;
}

FieldElement Series::coeff(std::size_t n) const {
  if (n >= order_) throw DomainError("coefficient index beyond order");
  return ctx_.from_coords(std::vector<std::uint32_t>(
      block(n), block(n) + ctx_.e()));
}

void Series::set_coeff(std::size_t n, const FieldElement& v) {
  if (n >= order_) throw DomainError("coefficient index beyond order");
  ctx_.require_same(v.ctx());
  std::copy(v.coords().begin(), v.coords().end(), block(n));
}

bool Series::coeff_is_zero(std::size_t n) const {
  return ctx_.raw_is_zero(block(n));
}

bool Series::is_zero() const {
  for (std::uint32_t c : coords_)
    if (c) return false;
  return true;
}

bool Series::in_m() const { return coeff_is_zero(0); }

bool Series::in_one_plus_m() const { return coeff(0).is_one(); }

Series Series::truncated(std::size_t new_order) const {
  if (new_order > order_)
    throw InsufficientOrderError("cannot extend a truncated series");
  Series s(ctx_, new_order);
  std::copy(coords_.begin(), coords_.begin() + new_order * ctx_.e(),
            s.coords_.begin());
  return s;
}

bool Series::operator==(const Series& o) const {
  return ctx_ == o.ctx_ && order_ == o.order_ && coords_ == o.coords_;
}

bool agree_to(const Series& a, const Series& b, std::size_t n) {
  a.ctx().require_same(b.ctx());
  n = std::min({n, a.order(), b.order()});
  const std::size_t e = a.ctx().e();
  return std::equal(a.coords().begin(), a.coords().begin() + n * e,
                    b.coords().begin());
}

Series add(const Series& a, const Series& b) {
  a.ctx().require_same(b.ctx());
  const std::size_t n = std::min(a.order(), b.order());
  Series out(a.ctx(), n);
  for (std::size_t i = 0; i < n; ++i)
    a.ctx().raw_add(a.block(i), b.block(i), out.block(i));
  return out;
}

Series sub(const Series& a, const Series& b) {
  a.ctx().require_same(b.ctx());
  const std::size_t n = std::min(a.order(), b.order());
  Series out(a.ctx(), n);
  for (std::size_t i = 0; i < n; ++i)
    a.ctx().raw_sub(a.block(i), b.block(i), out.block(i));
  return out;
}

Series negate(const Series& a) {
  Series out(a.ctx(), a.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    a.ctx().raw_neg(a.block(i), out.block(i));
  return out;
}

Series scalar_mul(const Series& a, const FieldElement& c) {
  a.ctx().require_same(c.ctx());
  Series out(a.ctx(), a.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    a.ctx().raw_mul(a.block(i), c.coords().data(), out.block(i));
  return out;
}

Series shuffle(const Series& a, const Series& b) {
  a.ctx().require_same(b.ctx());
  const FieldCtx& ctx = a.ctx();
  const std::size_t n = std::min(a.order(), b.order());
  const std::uint32_t p = ctx.p();
  auto tbl = BinomTable::get(p, n);
  Series out(ctx, n);
  if (ctx.e() == 1) {
    // reversed copy of b so each output is one contiguous weighted dot
    std::vector<std::uint32_t> brev(n);
    for (std::size_t i = 0; i < n; ++i) brev[i] = b.block(n - 1 - i)[0];
    for (std::size_t m = 0; m < n; ++m)
      out.block(m)[0] = kernels::weighted_dot_mod(
          tbl->row(m), a.block(0), brev.data() + (n - 1 - m), m + 1, p);
    return out;
  }
  const std::size_t e = ctx.e();
  std::vector<std::uint64_t> acc(e);
  for (std::size_t m = 0; m < n; ++m) {
    std::fill(acc.begin(), acc.end(), 0);
    const std::uint16_t* row = tbl->row(m);
    std::vector<std::uint32_t> tmp(e);
    for (std::size_t k = 0; k <= m; ++k) {
      const std::uint32_t c = row[k];
      if (c == 0) continue;
      ctx.raw_mul(a.block(k), b.block(m - k), tmp.data());
      for (std::size_t j = 0; j < e; ++j)
        acc[j] += std::uint64_t(c) * tmp[j];
    }
    for (std::size_t j = 0; j < e; ++j)
      out.block(m)[j] = std::uint32_t(acc[j] % p);
  }
  return out;
}

Series tau(const Series& a) {
  if (a.order() < 2) throw OrderExhaustedError();
  const std::size_t e = a.ctx().e();
  Series out(a.ctx(), a.order() - 1);
  std::copy(a.coords().begin() + e, a.coords().end(), out.block(0));
  return out;
}

Series section(const Series& a, std::uint64_t k, std::uint32_t f) {
  const std::uint64_t p = a.ctx().p();
  // p^f, saturated well above any order we can hold
  std::uint64_t pf = 1;
  bool huge = false;
  for (std::uint32_t i = 0; i < f; ++i) {
    if (pf > (std::uint64_t(1) << 62) / p) {
      huge = true;
      break;
    }
    pf *= p;
  }
  if (!huge && k >= pf) throw DomainError("section index k out of range");
  if (a.order() <= k)
    throw InsufficientOrderError("section requires order > k");
  const std::size_t m = huge ? 1 : std::size_t((a.order() - 1 - k) / pf) + 1;
  Series out(a.ctx(), m);
  const std::size_t e = a.ctx().e();
  for (std::size_t i = 0; i < m; ++i)
    std::copy(a.block(k + i * pf), a.block(k + i * pf) + e, out.block(i));
  return out;
}

Series frobenius_subst(const Series& a) {
  const std::size_t p = a.ctx().p();
  const std::size_t n = p * (a.order() - 1) + 1;
  const std::size_t e = a.ctx().e();
  Series out(a.ctx(), n);
  for (std::size_t i = 0; i < a.order(); ++i)
    std::copy(a.block(i), a.block(i) + e, out.block(i * p));
  return out;
}

Series shuffle_pow(const Series& a, std::uint64_t n) {
  Series acc = Series::one(a.ctx(), a.order());
  if (n == 0) return acc;
  Series base = a;
  for (;;) {
    if (n & 1) acc = shuffle(acc, base);
    n >>= 1;
    if (n == 0) break;
    base = shuffle(base, base);
  }
  return acc;
}

Series shuffle_inv(const Series& a) {
  if (a.coeff_is_zero(0)) throw DomainError("not a shuffle unit");
  const FieldElement cinv = a.coeff(0).inverse();
  Series unit_part = scalar_mul(a, cinv);  // in 1 + m
  Series inv_unit = shuffle_pow(unit_part, a.ctx().p() - 1);
  return scalar_mul(inv_unit, cinv);
}

Series exp_shriek(const Series& a) {
  if (!a.in_m()) throw DomainError("argument not in maximal ideal");
  const FieldCtx& ctx = a.ctx();
  const std::size_t n = a.order();
  const std::uint32_t p = ctx.p();
  Series out = Series::one(ctx, n);
  if (n == 1) return out;
  auto tbl = BinomTable::get(p, n - 1);
  if (ctx.e() == 1) {
    std::vector<std::uint32_t> arev(n);
    for (std::size_t i = 0; i < n; ++i) arev[i] = a.block(n - 1 - i)[0];
    for (std::size_t m = 0; m + 1 < n; ++m)
      out.block(m + 1)[0] = kernels::weighted_dot_mod(
          tbl->row(m), out.block(0), arev.data() + (n - 2 - m), m + 1, p);
    return out;
  }
  const std::size_t e = ctx.e();
  std::vector<std::uint64_t> acc(e);
  std::vector<std::uint32_t> tmp(e);
  for (std::size_t m = 0; m + 1 < n; ++m) {
    std::fill(acc.begin(), acc.end(), 0);
    const std::uint16_t* row = tbl->row(m);
    for (std::size_t k = 0; k <= m; ++k) {
      const std::uint32_t c = row[k];
      if (c == 0) continue;
      ctx.raw_mul(out.block(k), a.block(m + 1 - k), tmp.data());
      for (std::size_t j = 0; j < e; ++j)
        acc[j] += std::uint64_t(c) * tmp[j];
    }
    for (std::size_t j = 0; j < e; ++j)
      out.block(m + 1)[j] = std::uint32_t(acc[j] % p);
  }
  return out;
}

Series log_shriek(const Series& b) {
  if (!b.in_one_plus_m()) throw DomainError("argument not in 1+m");
  const FieldCtx& ctx = b.ctx();
  const std::size_t n = b.order();
  Series out(ctx, n);
  if (n == 1) return out;
  const Series inv = shuffle_pow(b, ctx.p() - 1);  // shuffle inverse of b
  const Series d = shuffle(inv, tau(b));           // tau(log_! b), order n-1
  const std::size_t e = ctx.e();
  for (std::size_t i = 0; i + 1 < n; ++i)
    std::copy(d.block(i), d.block(i) + e, out.block(i + 1));
  return out;
}

namespace {

// Series over the lift ring, used only by mu_p. Shuffles here need genuine
// integer binomials; rows are rolled as big integers.
using LiftSeries = std::vector<LiftElement>;

LiftSeries lift_shuffle(const LiftSeries& a, const LiftSeries& b,
                        const FieldCtx& ctx) {
  const std::size_t n = std::min(a.size(), b.size());
  LiftSeries out;
  out.reserve(n);
  std::vector<BigInt> row{1};
  for (std::size_t m = 0; m < n; ++m) {
    if (m > 0) {
      std::vector<BigInt> next(m + 1);
      next[0] = 1;
      next[m] = 1;
      for (std::size_t k = 1; k < m; ++k) next[k] = row[k - 1] + row[k];
      row = std::move(next);
    }
    LiftElement acc(ctx, std::vector<BigInt>(ctx.e(), BigInt(0)));
    for (std::size_t k = 0; k <= m; ++k) {
      LiftElement term = a[k] * b[m - k];
      std::vector<BigInt> scaled(ctx.e());
      for (std::size_t j = 0; j < ctx.e(); ++j)
        scaled[j] = term.coords()[j] * row[k];
      acc = acc + LiftElement(ctx, std::move(scaled));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

LiftSeries lift_shuffle_pow(const LiftSeries& a, std::uint64_t n,
                            const FieldCtx& ctx) {
  LiftSeries acc(a.size(),
                 LiftElement(ctx, std::vector<BigInt>(ctx.e(), BigInt(0))));
  std::vector<BigInt> onec(ctx.e(), BigInt(0));
  onec[0] = 1;
  acc[0] = LiftElement(ctx, std::move(onec));
  if (n == 0) return acc;
  LiftSeries base = a;
  for (;;) {
    if (n & 1) acc = lift_shuffle(acc, base, ctx);
    n >>= 1;
    if (n == 0) break;
    base = lift_shuffle(base, base, ctx);
  }
  return acc;
}

}  // namespace

Series mu_p(const Series& a) {
  const FieldCtx& ctx = a.ctx();
  const std::uint32_t p = ctx.p();
  LiftSeries ls;
  ls.reserve(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) ls.push_back(lift(a.coeff(i)));
  LiftSeries pw = lift_shuffle_pow(ls, p, ctx);
  pw[0] = pw[0] - ls[0].pow(p);
  Series out(ctx, a.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    out.set_coeff(i, reduce(exact_div_p(pw[i])));
  return out;
}

Series mul_ordinary(const Series& a, const Series& b) {
  a.ctx().require_same(b.ctx());
  const FieldCtx& ctx = a.ctx();
  const std::size_t n = std::min(a.order(), b.order());
  const std::size_t e = ctx.e();
  const std::uint32_t p = ctx.p();
  Series out(ctx, n);
  std::vector<std::uint64_t> acc(e);
  std::vector<std::uint32_t> tmp(e);
  for (std::size_t m = 0; m < n; ++m) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k <= m; ++k) {
      if (ctx.raw_is_zero(a.block(k))) continue;
      ctx.raw_mul(a.block(k), b.block(m - k), tmp.data());
      for (std::size_t j = 0; j < e; ++j) acc[j] += tmp[j];
    }
    for (std::size_t j = 0; j < e; ++j)
      out.block(m)[j] = std::uint32_t(acc[j] % p);
  }
  return out;
}

}  // namespace shufflep
