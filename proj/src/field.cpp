#include "algdil/field.hpp"

#include <cctype>
#include <limits>

#include "algdil/kernels.hpp"

namespace algdil {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::uint32_t mpz_mod_u32(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= kMaxModulus) {
    throw InvalidField("prime modulus must be below 2^31, got " + std::to_string(p));
  }
  if (!is_prime(p)) throw InvalidField("modulus is not prime: " + std::to_string(p));
  FieldSpec spec;
  spec.kind = Kind::prime;
  spec.modulus = static_cast<std::uint32_t>(p);
  return spec;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "QQ" || text == "rational") return rational();
  std::string_view digits = text;
  if (text.starts_with("GF(") && text.ends_with(")")) {
    digits = text.substr(3, text.size() - 4);
  }
  if (!all_digits(digits) || digits.size() > 12) {
    throw InvalidField("unrecognized field: " + std::string(text));
  }
  return prime(std::stoull(std::string(digits)));
}

std::string FieldSpec::name() const {
  if (kind == Kind::rational) return "Q";
  return "GF(" + std::to_string(modulus) + ")";
}

ScalarText split_scalar_text(std::string_view text) {
  ScalarText out;
  std::string_view rest = text;
  if (rest.starts_with('-')) {
    out.negative = true;
    rest.remove_prefix(1);
  }
  const auto slash = rest.find('/');
  out.numerator = rest.substr(0, slash);
  if (slash != std::string_view::npos) out.denominator = rest.substr(slash + 1);
  const bool ok = all_digits(out.numerator) &&
                  (slash == std::string_view::npos ||
                   (all_digits(out.denominator) && out.denominator.front() != '0'));
  if (!ok) throw ParseError("malformed scalar: \"" + std::string(text) + "\"");
  return out;
}

// ---- Rationals ------------------------------------------------------------

Rationals::Element Rationals::from_int(long long v) const {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return Element(z);
}

Rationals::Element Rationals::from_fraction(long long num, long long den) const {
  if (den == 0) throw Singular("zero denominator");
  Element q(from_int(num).get_num(), from_int(den).get_num());
  q.canonicalize();
  return q;
}

Rationals::Element Rationals::inv(const Element& a) const {
  if (is_zero(a)) throw Singular("inverse of zero");
  Element r;
  mpq_inv(r.get_mpq_t(), a.get_mpq_t());
  return r;
}

void Rationals::add_mul(Element& acc, const Element& a, const Element& b) const {
  if (is_zero(a) || is_zero(b)) return;
  acc += a * b;
}

void Rationals::axpy(std::span<Element> y, const Element& a, std::span<const Element> x) const {
  if (is_zero(a)) return;
  Element t;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    mpq_mul(t.get_mpq_t(), a.get_mpq_t(), x[i].get_mpq_t());
    mpq_add(y[i].get_mpq_t(), y[i].get_mpq_t(), t.get_mpq_t());
  }
}

void Rationals::scale(std::span<Element> y, const Element& a) const {
  for (auto& v : y) {
    if (sgn(v) != 0) mpq_mul(v.get_mpq_t(), v.get_mpq_t(), a.get_mpq_t());
  }
}

Rationals::Element Rationals::parse(std::string_view text) const {
  const ScalarText parts = split_scalar_text(text);
  mpz_class num(std::string(parts.numerator), 10);
  if (parts.negative) num = -num;
  mpz_class den = parts.denominator.empty() ? mpz_class(1)
                                            : mpz_class(std::string(parts.denominator), 10);
  Element q(num, den);
  q.canonicalize();
  return q;
}

// ---- PrimeField -----------------------------------------------------------

PrimeField::PrimeField(std::uint32_t p) : p_(FieldSpec::prime(p).modulus) {}

PrimeField::Element PrimeField::from_int(long long v) const {
  const long long m = static_cast<long long>(p_);
  long long r = v % m;
  if (r < 0) r += m;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_fraction(long long num, long long den) const {
  const Element d = from_int(den);
  if (d == 0) throw Singular("denominator divisible by the modulus");
  return div(from_int(num), d);
}

PrimeField::Element PrimeField::reduce(const mpq_class& q) const {
  const Element den = mpz_mod_u32(q.get_den(), p_);
  if (den == 0) throw Singular("denominator divisible by the modulus");
  return div(mpz_mod_u32(q.get_num(), p_), den);
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw Singular("inverse of zero");
  // Extended Euclid on (a, p).
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (s0 < 0) s0 += p_;
  return static_cast<Element>(s0);
}

void PrimeField::axpy(std::span<Element> y, Element a, std::span<const Element> x) const {
  kernels::axpy_mod(y, x, a, p_);
}

void PrimeField::scale(std::span<Element> y, Element a) const { kernels::scale_mod(y, a, p_); }

PrimeField::Element PrimeField::parse(std::string_view text) const {
  Rationals q;
  return reduce(q.parse(text));
}

}  // namespace algdil
