#include "shufflep/field.hpp"

#include <algorithm>
#include <sstream>

namespace shufflep {

namespace {

constexpr std::uint32_t kMaxP = 1u << 16;
constexpr std::uint64_t kMaxQ = 1u << 20;

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomial arithmetic over F_p on plain vectors, used only for
// modulus validation and the irreducible search.
using FpPoly = std::vector<std::uint32_t>;  // constant term first, no trailing zeros

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mod(FpPoly a, const FpPoly& b, std::uint32_t p) {
  // b monic-normalized below
  FpPoly bn = b;
  fp_trim(bn);
  std::uint32_t lead = bn.back();
  std::uint32_t lead_inv = 1;
  // Fermat inverse of the leading coefficient
  {
    std::uint64_t base = lead, acc = 1, ex = p - 2;
    while (ex) {
      if (ex & 1) acc = acc * base % p;
      base = base * base % p;
      ex >>= 1;
    }
    lead_inv = std::uint32_t(acc);
  }
  fp_trim(a);
  while (a.size() >= bn.size()) {
    std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
    std::size_t shift = a.size() - bn.size();
    for (std::size_t i = 0; i < bn.size(); ++i) {
      std::uint64_t sub = c * bn[i] % p;
      std::uint64_t cur = a[shift + i];
      a[shift + i] = std::uint32_t((cur + p - sub) % p);
    }
    fp_trim(a);
  }
  return a;
}

bool fp_is_irreducible(const FpPoly& m, std::uint32_t p) {
  FpPoly mm = m;
  fp_trim(mm);
  if (mm.size() < 2) return false;
  std::size_t deg = mm.size() - 1;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      FpPoly div(d + 1, 0);
      div[d] = 1;
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < d; ++i) {
        div[i] = std::uint32_t(v % p);
        v /= p;
      }
      FpPoly r = fp_mod(mm, div, p);
      if (r.empty()) return false;
    }
  }
  return true;
}

}  // namespace

struct FieldCtx::Impl {
  std::uint32_t p = 0;
  std::uint32_t e = 1;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> modulus;  // length e+1, modulus[e] = 1
};

const FieldCtx::Impl& FieldCtx::impl() const {
  if (!impl_) throw Error("use of an uninitialized field context");
  return *impl_;
}

std::uint32_t FieldCtx::p() const { return impl().p; }
std::uint32_t FieldCtx::e() const { return impl().e; }
std::uint64_t FieldCtx::q() const { return impl().q; }
const std::vector<std::uint32_t>& FieldCtx::modulus() const {
  return impl().modulus;
}

FieldCtx FieldCtx::with_modulus(std::uint32_t p,
                                std::vector<std::uint32_t> modulus) {
  if (!is_prime(p) || p >= kMaxP)
    throw DomainError("field characteristic must be a prime below 2^16");
  if (modulus.size() < 2) throw DomainError("modulus must have degree >= 1");
  std::uint32_t e = std::uint32_t(modulus.size() - 1);
  for (auto& c : modulus) c %= p;
  if (modulus.back() != 1) throw DomainError("modulus must be monic");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxQ) throw DomainError("field cardinality exceeds 2^20");
  }
  if (!fp_is_irreducible(modulus, p))
    throw DomainError("modulus is not irreducible over F_p");
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->e = e;
  impl->q = q;
  impl->modulus = std::move(modulus);
  return FieldCtx(std::move(impl));
}

FieldCtx FieldCtx::prime_field(std::uint32_t p) {
  return with_modulus(p, {0, 1});
}

FieldCtx FieldCtx::extension_field(std::uint32_t p, std::uint32_t e) {
  if (e < 1) throw DomainError("extension degree must be >= 1");
  if (e == 1) return prime_field(p);
  if (!is_prime(p) || p >= kMaxP)
    throw DomainError("field characteristic must be a prime below 2^16");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxQ) throw DomainError("field cardinality exceeds 2^20");
  }
  // Lexicographically smallest (c0, c1, ..., c_{e-1}) giving an irreducible
  // monic polynomial. The search is deterministic, so field descriptions are
  // reproducible across runs.
  std::vector<std::uint32_t> c(e, 0);
  for (;;) {
    std::vector<std::uint32_t> m = c;
    m.push_back(1);
    if (fp_is_irreducible(m, p)) return with_modulus(p, std::move(m));
    // increment (c_{e-1}, ..., c_0) as little-endian from the BACK so that
    // the tuple (c0, c1, ...) advances lexicographically
    std::size_t i = e;
    while (i > 0) {
      --i;
      if (++c[i] < p) break;
      c[i] = 0;
      if (i == 0) throw Error("no irreducible modulus found");
    }
  }
}

FieldCtx FieldCtx::parse(const std::string& spec) {
  auto caret = spec.find('^');
  if (caret == std::string::npos) {
    std::size_t pos = 0;
    unsigned long p = 0;
    try {
      p = std::stoul(spec, &pos);
    } catch (...) {
      throw ParseError("bad field spec '" + spec + "'");
    }
    if (pos != spec.size()) throw ParseError("bad field spec '" + spec + "'");
    return prime_field(std::uint32_t(p));
  }
  std::uint32_t p = 0;
  try {
    p = std::uint32_t(std::stoul(spec.substr(0, caret)));
  } catch (...) {
    throw ParseError("bad field spec '" + spec + "'");
  }
  auto colon = spec.find(':', caret);
  if (colon == std::string::npos) {
    std::uint32_t e = 0;
    try {
      e = std::uint32_t(std::stoul(spec.substr(caret + 1)));
    } catch (...) {
      throw ParseError("bad field spec '" + spec + "'");
    }
    return extension_field(p, e);
  }
  std::uint32_t e = 0;
  try {
    e = std::uint32_t(std::stoul(spec.substr(caret + 1, colon - caret - 1)));
  } catch (...) {
    throw ParseError("bad field spec '" + spec + "'");
  }
  std::vector<std::uint32_t> mod;
  std::stringstream ss(spec.substr(colon + 1));
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      mod.push_back(std::uint32_t(std::stoul(tok)));
    } catch (...) {
      throw ParseError("bad modulus coefficient '" + tok + "'");
    }
  }
  if (mod.size() != e + 1)
    throw ParseError("modulus must list e+1 coefficients");
  return with_modulus(p, std::move(mod));
}

std::string FieldCtx::to_string() const {
  const Impl& im = impl();
  if (im.e == 1) return std::to_string(im.p);
  std::ostringstream os;
  os << im.p << '^' << im.e << ':';
  for (std::size_t i = 0; i < im.modulus.size(); ++i) {
    if (i) os << ',';
    os << im.modulus[i];
  }
  return os.str();
}

bool FieldCtx::operator==(const FieldCtx& o) const {
  if (impl_ == o.impl_) return true;
  if (!impl_ || !o.impl_) return false;
  return impl_->p == o.impl_->p && impl_->e == o.impl_->e &&
         impl_->modulus == o.impl_->modulus;
}

FieldElement FieldCtx::zero() const {
  return FieldElement(*this, std::vector<std::uint32_t>(e(), 0));
}

FieldElement FieldCtx::one() const { return from_int(1); }

FieldElement FieldCtx::from_int(std::int64_t v) const {
  std::int64_t m = v % std::int64_t(p());
  if (m < 0) m += p();
  std::vector<std::uint32_t> c(e(), 0);
  c[0] = std::uint32_t(m);
  return FieldElement(*this, std::move(c));
}

FieldElement FieldCtx::from_coords(std::vector<std::uint32_t> coords) const {
  if (coords.size() != e())
    throw DomainError("coordinate vector has wrong length");
  for (auto& c : coords) c %= p();
  return FieldElement(*this, std::move(coords));
}

FieldElement FieldCtx::generator() const {
  if (e() == 1) return one();
  std::vector<std::uint32_t> c(e(), 0);
  c[1] = 1;
  return FieldElement(*this, std::move(c));
}

std::vector<FieldElement> FieldCtx::all_elements() const {
  std::vector<FieldElement> out;
  out.reserve(std::size_t(q()));
  std::vector<std::uint32_t> c(e(), 0);
  for (;;) {
    out.push_back(FieldElement(*this, c));
    std::size_t i = 0;
    while (i < c.size()) {
      if (++c[i] < p()) break;
      c[i] = 0;
      ++i;
    }
    if (i == c.size()) break;
  }
  return out;
}

void FieldCtx::raw_add(const std::uint32_t* a, const std::uint32_t* b,
                       std::uint32_t* out) const {
  const Impl& im = impl();
  for (std::uint32_t i = 0; i < im.e; ++i) {
    std::uint32_t s = a[i] + b[i];
    out[i] = s >= im.p ? s - im.p : s;
  }
}

void FieldCtx::raw_sub(const std::uint32_t* a, const std::uint32_t* b,
                       std::uint32_t* out) const {
  const Impl& im = impl();
  for (std::uint32_t i = 0; i < im.e; ++i) {
    std::uint32_t s = a[i] + im.p - b[i];
    out[i] = s >= im.p ? s - im.p : s;
  }
}

void FieldCtx::raw_neg(const std::uint32_t* a, std::uint32_t* out) const {
  const Impl& im = impl();
  for (std::uint32_t i = 0; i < im.e; ++i)
    out[i] = a[i] == 0 ? 0 : im.p - a[i];
}

void FieldCtx::raw_mul(const std::uint32_t* a, const std::uint32_t* b,
                       std::uint32_t* out) const {
  const Impl& im = impl();
  if (im.e == 1) {
    out[0] = std::uint32_t(std::uint64_t(a[0]) * b[0] % im.p);
    return;
  }
  // schoolbook convolution then reduction by the monic modulus
  std::uint64_t buf[64] = {0};  // e <= 20 in the supported range
  for (std::uint32_t i = 0; i < im.e; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < im.e; ++j)
      buf[i + j] += std::uint64_t(a[i]) * b[j];
  }
  for (std::uint32_t i = 2 * im.e - 2; i >= im.e; --i) {
    std::uint64_t c = buf[i] % im.p;
    if (c) {
      // t^i = t^{i-e} * (-(m_0 + ... + m_{e-1} t^{e-1}))
      for (std::uint32_t j = 0; j < im.e; ++j)
        buf[i - im.e + j] += c * (im.p - im.modulus[j] % im.p);
    }
    buf[i] = 0;
  }
  for (std::uint32_t j = 0; j < im.e; ++j)
    out[j] = std::uint32_t(buf[j] % im.p);
}

void FieldCtx::raw_scalar_mul(const std::uint32_t* a, std::uint32_t c,
                              std::uint32_t* out) const {
  const Impl& im = impl();
  for (std::uint32_t i = 0; i < im.e; ++i)
    out[i] = std::uint32_t(std::uint64_t(a[i]) * c % im.p);
}

bool FieldCtx::raw_is_zero(const std::uint32_t* a) const {
  for (std::uint32_t i = 0; i < e(); ++i)
    if (a[i]) return false;
  return true;
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldCtx ctx, std::vector<std::uint32_t> coords)
    : ctx_(std::move(ctx)), coords_(std::move(coords)) {
  if (coords_.size() != ctx_.e())
    throw DomainError("coordinate vector has wrong length");
}

bool FieldElement::is_zero() const { return ctx_.raw_is_zero(coords_.data()); }

bool FieldElement::is_one() const {
  if (coords_[0] != 1) return false;
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i]) return false;
  return true;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  ctx_.require_same(o.ctx_);
  std::vector<std::uint32_t> out(coords_.size());
  ctx_.raw_add(coords_.data(), o.coords_.data(), out.data());
  return FieldElement(ctx_, std::move(out));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  ctx_.require_same(o.ctx_);
  std::vector<std::uint32_t> out(coords_.size());
  ctx_.raw_sub(coords_.data(), o.coords_.data(), out.data());
  return FieldElement(ctx_, std::move(out));
}

FieldElement FieldElement::operator-() const {
  std::vector<std::uint32_t> out(coords_.size());
  ctx_.raw_neg(coords_.data(), out.data());
  return FieldElement(ctx_, std::move(out));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  ctx_.require_same(o.ctx_);
  std::vector<std::uint32_t> out(coords_.size());
  ctx_.raw_mul(coords_.data(), o.coords_.data(), out.data());
  return FieldElement(ctx_, std::move(out));
}

FieldElement FieldElement::pow(std::uint64_t n) const {
  FieldElement acc = ctx_.one();
  FieldElement base = *this;
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZeroError();
  return pow(ctx_.q() - 2);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  return *this * o.inverse();
}

bool FieldElement::operator==(const FieldElement& o) const {
  return ctx_ == o.ctx_ && coords_ == o.coords_;
}

std::string FieldElement::to_string() const {
  if (ctx_.e() == 1) return std::to_string(coords_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << coords_[0];
    } else {
      if (coords_[i] != 1) os << coords_[i] << '*';
      os << 't';
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

// ---------------------------------------------------------------------------

LiftElement::LiftElement(FieldCtx ctx, std::vector<BigInt> coords)
    : ctx_(std::move(ctx)), coords_(std::move(coords)) {
  if (coords_.size() != ctx_.e())
    throw DomainError("coordinate vector has wrong length");
}

bool LiftElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

LiftElement LiftElement::operator+(const LiftElement& o) const {
  ctx_.require_same(o.ctx_);
  std::vector<BigInt> out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    out[i] = coords_[i] + o.coords_[i];
  return LiftElement(ctx_, std::move(out));
}

LiftElement LiftElement::operator-(const LiftElement& o) const {
  ctx_.require_same(o.ctx_);
  std::vector<BigInt> out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    out[i] = coords_[i] - o.coords_[i];
  return LiftElement(ctx_, std::move(out));
}

LiftElement LiftElement::operator*(const LiftElement& o) const {
  ctx_.require_same(o.ctx_);
  const std::size_t e = coords_.size();
  if (e == 1)
    return LiftElement(ctx_, {coords_[0] * o.coords_[0]});
  std::vector<BigInt> buf(2 * e - 1);
  for (std::size_t i = 0; i < e; ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < e; ++j) buf[i + j] += coords_[i] * o.coords_[j];
  }
  const auto& mod = ctx_.modulus();
  for (std::size_t i = 2 * e - 2; i >= e; --i) {
    if (buf[i] != 0) {
      for (std::size_t j = 0; j < e; ++j)
        buf[i - e + j] -= buf[i] * mod[j];
    }
    if (i == e) break;
  }
  buf.resize(e);
  return LiftElement(ctx_, std::move(buf));
}

LiftElement LiftElement::pow(std::uint64_t n) const {
  std::vector<BigInt> onec(coords_.size(), BigInt(0));
  onec[0] = 1;
  LiftElement acc(ctx_, std::move(onec));
  LiftElement base = *this;
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool LiftElement::operator==(const LiftElement& o) const {
  return ctx_ == o.ctx_ && coords_ == o.coords_;
}

LiftElement lift(const FieldElement& a) {
  std::vector<BigInt> c(a.coords().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords()[i];
  return LiftElement(a.ctx(), std::move(c));
}

FieldElement reduce(const LiftElement& x) {
  const std::uint32_t p = x.ctx().p();
  std::vector<std::uint32_t> c(x.coords().size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    BigInt m = x.coords()[i] % p;
    if (m < 0) m += p;
    c[i] = std::uint32_t(m);
  }
  return FieldElement(x.ctx(), std::move(c));
}

LiftElement exact_div_p(const LiftElement& x) {
  const std::uint32_t p = x.ctx().p();
  std::vector<BigInt> c(x.coords().size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (x.coords()[i] % p != 0) throw InexactDivisionError();
    c[i] = x.coords()[i] / p;
  }
  return LiftElement(x.ctx(), std::move(c));
}

}  // namespace shufflep
