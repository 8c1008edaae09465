#pragma once

// Seeded generation of commuting pairs (T, S) and the exact commutation test.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "algdil/linalg.hpp"
#include "algdil/rng.hpp"

namespace algdil {

template <class Field>
void check_square_pair(const Matrix<Field>& t, const Matrix<Field>& s) {
  if (!t.is_square() || !s.is_square()) throw DimensionMismatch("operators must be square");
  if (t.rows() != s.rows()) throw DimensionMismatch("operators act on spaces of different size");
  if (!(t.field() == s.field())) throw DimensionMismatch("operators live over different fields");
}

/// Exact test T*S == S*T.
template <class Field>
bool check_commute(const Matrix<Field>& t, const Matrix<Field>& s) {
  check_square_pair(t, s);
  return t * s == s * t;
}

enum class PairKind {
  polynomial,        // (p(A), q(A)) for a random A
  upper_triangular,  // two upper-triangular Toeplitz matrices
  diagonal,
  idempotent,        // commuting projections P D1 P^-1, P D2 P^-1
  explicit_pair,     // matrices supplied by the caller; not generated
};

std::string_view pair_kind_name(PairKind k);
/// Throws InvalidRecipe on unknown names.
PairKind parse_pair_kind(std::string_view name);

struct PairRecipe {
  PairKind kind = PairKind::polynomial;
  std::size_t dim = 2;
  FieldSpec field;
  std::uint64_t seed = 0;
  unsigned max_degree = 3;  // polynomial kind
  unsigned height = 5;      // bound on |numerator| and denominator of random entries

  void validate() const;
};

/// Uniform element with bounded height: over Q, a/b with |a| <= h and 1 <= b <= h;
/// over GF(p), a uniform residue.
inline Rationals::Element random_scalar(const Rationals& f, Rng& rng, unsigned height) {
  const auto h = static_cast<std::int64_t>(height);
  const std::int64_t num = rng.between(-h, h);
  const std::int64_t den = rng.between(1, h);
  return f.from_fraction(num, den);
}

inline PrimeField::Element random_scalar(const PrimeField& f, Rng& rng, unsigned /*height*/) {
  return static_cast<PrimeField::Element>(rng.below(f.modulus()));
}

template <class Field>
Matrix<Field> random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng,
                            unsigned height) {
  Matrix<Field> m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(f, rng, height);
  }
  return m;
}

template <class Field>
Column<Field> random_column(const Field& f, std::size_t n, Rng& rng, unsigned height) {
  Column<Field> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.push_back(random_scalar(f, rng, height));
  return c;
}

/// c_0 I + c_1 A + ... + c_k A^k by Horner's rule.
template <class Field>
Matrix<Field> eval_polynomial(const std::vector<typename Field::Element>& coeffs,
                              const Matrix<Field>& a) {
  const Field& f = a.field();
  Matrix<Field> acc(f, a.rows(), a.cols());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * a;
    for (std::size_t i = 0; i < a.rows(); ++i) acc(i, i) = f.add(acc(i, i), *it);
  }
  return acc;
}

namespace detail {

// Unit lower times unit upper triangular: invertible by construction.
template <class Field>
Matrix<Field> random_invertible(const Field& f, std::size_t d, Rng& rng, unsigned height) {
  Matrix<Field> lower = Matrix<Field>::identity(f, d);
  Matrix<Field> upper = Matrix<Field>::identity(f, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < i; ++j) lower(i, j) = random_scalar(f, rng, height);
    for (std::size_t j = i + 1; j < d; ++j) upper(i, j) = random_scalar(f, rng, height);
  }
  return lower * upper;
}

template <class Field>
Matrix<Field> diagonal(const Field& f, const std::vector<typename Field::Element>& diag) {
  Matrix<Field> m(f, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

}  // namespace detail

/// Deterministic commuting pair for the recipe. `f` must match recipe.field.
template <class Field>
std::pair<Matrix<Field>, Matrix<Field>> gen_pair(const Field& f, const PairRecipe& recipe) {
  recipe.validate();
  if (!(f.spec() == recipe.field)) throw InvalidRecipe("field object does not match recipe");
  Rng rng(recipe.seed);
  const std::size_t d = recipe.dim;
  const unsigned h = recipe.height;

  switch (recipe.kind) {
    case PairKind::polynomial: {
      const Matrix<Field> a = random_matrix(f, d, d, rng, h);
      auto draw_poly = [&] {
        const auto degree = static_cast<std::size_t>(rng.below(recipe.max_degree + 1));
        std::vector<typename Field::Element> c;
        for (std::size_t k = 0; k <= degree; ++k) c.push_back(random_scalar(f, rng, h));
        return c;
      };
      const auto p = draw_poly();
      const auto q = draw_poly();
      return {eval_polynomial(p, a), eval_polynomial(q, a)};
    }
    case PairKind::upper_triangular: {
      // Upper-triangular Toeplitz matrices are polynomials in the shift, so they commute.
      auto draw = [&] {
        Matrix<Field> m(f, d, d);
        for (std::size_t k = 0; k < d; ++k) {
          const auto c = random_scalar(f, rng, h);
          for (std::size_t i = 0; i + k < d; ++i) m(i, i + k) = c;
        }
        return m;
      };
      Matrix<Field> t = draw();
      Matrix<Field> s = draw();
      return {std::move(t), std::move(s)};
    }
    case PairKind::diagonal: {
      std::vector<typename Field::Element> dt, ds;
      for (std::size_t i = 0; i < d; ++i) dt.push_back(random_scalar(f, rng, h));
      for (std::size_t i = 0; i < d; ++i) ds.push_back(random_scalar(f, rng, h));
      return {detail::diagonal(f, dt), detail::diagonal(f, ds)};
    }
    case PairKind::idempotent: {
      std::vector<typename Field::Element> dt, ds;
      for (std::size_t i = 0; i < d; ++i) dt.push_back(rng.below(2) ? f.one() : f.zero());
      for (std::size_t i = 0; i < d; ++i) ds.push_back(rng.below(2) ? f.one() : f.zero());
      const Matrix<Field> p = detail::random_invertible(f, d, rng, h);
      const Matrix<Field> p_inv = inverse(p);
      return {p * detail::diagonal(f, dt) * p_inv, p * detail::diagonal(f, ds) * p_inv};
    }
    case PairKind::explicit_pair:
      break;
  }
  throw InvalidRecipe("explicit pairs carry their own matrices and cannot be generated");
}

/// Rejection-sample a pair with T*S != S*T. Requires d >= 2.
template <class Field>
std::pair<Matrix<Field>, Matrix<Field>> gen_noncommuting_pair(const Field& f, std::size_t d,
                                                              std::uint64_t seed,
                                                              unsigned height = 5) {
  if (d < 2) throw InvalidRecipe("every pair of 1x1 or 0x0 matrices commutes");
  Rng rng(seed);
  for (;;) {
    Matrix<Field> t = random_matrix(f, d, d, rng, height);
    Matrix<Field> s = random_matrix(f, d, d, rng, height);
    if (!check_commute(t, s)) return {std::move(t), std::move(s)};
  }
}

}  // namespace algdil
