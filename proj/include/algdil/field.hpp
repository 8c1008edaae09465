#pragma once

// Exact scalar fields: the rationals (GMP) and prime fields GF(p), p < 2^31.
//
// Generic code never uses operators on elements directly; it goes through a
// field object so that GF(p) residues (plain uint32) and mpq_class share one
// interface. Row-level loops (axpy, scale) are the hot path and are
// specialized per field.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "algdil/errors.hpp"

namespace algdil {

bool is_prime(std::uint64_t n);

struct FieldSpec {
  enum class Kind { rational, prime };

  Kind kind = Kind::rational;
  std::uint32_t modulus = 0;  // prime fields only

  static FieldSpec rational() { return {}; }
  /// Throws InvalidField unless 2 <= p < 2^31 and p is prime.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "Q", "GF(p)" or a bare prime "p".
  static FieldSpec parse(std::string_view text);

  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Split scalar text into sign/numerator/denominator digits, or throw ParseError.
/// Grammar: -?[0-9]+ or -?[0-9]+/[1-9][0-9]*
struct ScalarText {
  bool negative = false;
  std::string_view numerator;
  std::string_view denominator;  // empty for integers
};
ScalarText split_scalar_text(std::string_view text);

class Rationals {
 public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long long v) const;
  Element from_fraction(long long num, long long den) const;
  Element reduce(const mpq_class& q) const { return q; }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
  void add_mul(Element& acc, const Element& a, const Element& b) const;

  /// y <- y + a * x
  void axpy(std::span<Element> y, const Element& a, std::span<const Element> x) const;
  void scale(std::span<Element> y, const Element& a) const;

  Element parse(std::string_view text) const;
  std::string format(const Element& a) const { return a.get_str(); }
  FieldSpec spec() const { return FieldSpec::rational(); }

  friend bool operator==(const Rationals&, const Rationals&) = default;
};

class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long long v) const;
  Element from_fraction(long long num, long long den) const;
  /// Reduction of a rational whose denominator is a unit mod p.
  Element reduce(const mpq_class& q) const;

  bool is_zero(Element a) const { return a == 0; }
  Element add(Element a, Element b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + (p_ - b); }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(std::uint64_t{a} * b % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  void add_mul(Element& acc, Element a, Element b) const { acc = add(acc, mul(a, b)); }

  void axpy(std::span<Element> y, Element a, std::span<const Element> x) const;
  void scale(std::span<Element> y, Element a) const;

  /// Accepts the rational grammar and reduces mod p.
  Element parse(std::string_view text) const;
  std::string format(Element a) const { return std::to_string(a); }
  FieldSpec spec() const { return FieldSpec::prime(p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// Calls fn(Rationals{}) or fn(PrimeField{p}) depending on the spec.
template <class Fn>
decltype(auto) visit_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::rational) return std::forward<Fn>(fn)(Rationals{});
  return std::forward<Fn>(fn)(PrimeField{spec.modulus});
}

}  // namespace algdil
