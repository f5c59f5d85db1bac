#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "shufflep/bigint.hpp"
#include "shufflep/error.hpp"

namespace shufflep {

class FieldElement;
class LiftElement;

// Description of a finite field F_{p^e}: characteristic p, extension degree e
// and a monic irreducible modulus of degree e over F_p (coefficient list,
// constant term first, modulus[e] = 1). Elements are coordinate vectors in
// the basis 1, t, ..., t^{e-1} with t the class of the variable.
//
// Supported range: p < 2^16 and q = p^e <= 2^20. Construction verifies
// primality of p and irreducibility of the modulus exhaustively.
//
// Copies share an immutable implementation; all operations are pure.
class FieldCtx {
public:
  FieldCtx() = default;  // invalid until assigned

  static FieldCtx prime_field(std::uint32_t p);
  // Modulus chosen as the lexicographically smallest monic irreducible of
  // degree e (coefficients compared constant term first).
  static FieldCtx extension_field(std::uint32_t p, std::uint32_t e);
  static FieldCtx with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);
  // "p" or "p^e:c0,c1,...,1".
  static FieldCtx parse(const std::string& spec);

  bool valid() const { return impl_ != nullptr; }
  std::uint32_t p() const;
  std::uint32_t e() const;
  std::uint64_t q() const;
  const std::vector<std::uint32_t>& modulus() const;  // length e+1
  std::string to_string() const;                      // the spec string

  bool operator==(const FieldCtx& o) const;
  bool operator!=(const FieldCtx& o) const { return !(*this == o); }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_coords(std::vector<std::uint32_t> coords) const;
  FieldElement generator() const;  // the class of t (e >= 2), else 1
  std::vector<FieldElement> all_elements() const;  // q elements, lex order

  // Low-level arithmetic on raw coordinate blocks of length e(), residues in
  // [0, p). Used by the series inner loops; out may alias inputs.
  void raw_add(const std::uint32_t* a, const std::uint32_t* b,
               std::uint32_t* out) const;
  void raw_sub(const std::uint32_t* a, const std::uint32_t* b,
               std::uint32_t* out) const;
  void raw_neg(const std::uint32_t* a, std::uint32_t* out) const;
  void raw_mul(const std::uint32_t* a, const std::uint32_t* b,
               std::uint32_t* out) const;
  // out = a * c for a scalar residue c in [0, p).
  void raw_scalar_mul(const std::uint32_t* a, std::uint32_t c,
                      std::uint32_t* out) const;
  bool raw_is_zero(const std::uint32_t* a) const;

  void require_same(const FieldCtx& o) const {
    if (*this != o) throw FieldMismatchError();
  }

private:
  struct Impl;
  explicit FieldCtx(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  const Impl& impl() const;
  std::shared_ptr<const Impl> impl_;
};

// An element of F_{p^e}: length-e coordinate vector plus its context.
// Immutable value type.
class FieldElement {
public:
  FieldElement() = default;
  FieldElement(FieldCtx ctx, std::vector<std::uint32_t> coords);

  const FieldCtx& ctx() const { return ctx_; }
  const std::vector<std::uint32_t>& coords() const { return coords_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement inverse() const;  // throws DivisionByZeroError on 0
  FieldElement operator/(const FieldElement& o) const;
  FieldElement pow(std::uint64_t n) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  // "3" for prime fields, "1+2*t" style for extensions.
  std::string to_string() const;

private:
  FieldCtx ctx_;
  std::vector<std::uint32_t> coords_;
};

// An element of the integer lift ring Z[t]/(M~) where M~ is the monic integer
// lift of the modulus: length-e vector of signed big integers. Reduction
// modulo p and the modulus recovers a FieldElement; the ring carries the
// exact division by p that defines mu_p.
class LiftElement {
public:
  LiftElement() = default;
  LiftElement(FieldCtx ctx, std::vector<BigInt> coords);

  const FieldCtx& ctx() const { return ctx_; }
  const std::vector<BigInt>& coords() const { return coords_; }
  bool is_zero() const;

  LiftElement operator+(const LiftElement& o) const;
  LiftElement operator-(const LiftElement& o) const;
  LiftElement operator*(const LiftElement& o) const;
  LiftElement pow(std::uint64_t n) const;

  bool operator==(const LiftElement& o) const;

private:
  FieldCtx ctx_;
  std::vector<BigInt> coords_;
};

LiftElement lift(const FieldElement& a);
FieldElement reduce(const LiftElement& x);
// Coordinate-wise quotient by p; every coordinate must be divisible.
LiftElement exact_div_p(const LiftElement& x);

}  // namespace shufflep
