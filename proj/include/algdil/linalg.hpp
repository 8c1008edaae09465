#pragma once

// Exact elimination kernel: RREF, rank, kernel bases, linear solves, basis
// completion and inversion. All routines are pure; inputs are never modified.

#include <optional>
#include <vector>

#include "algdil/matrix.hpp"

namespace algdil {

template <class Field>
struct RrefResult {
  Matrix<Field> matrix;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
};

/// Reduce m in place to RREF, restricted to the first `ncols` columns for
/// pivot search (the remaining columns are carried along). Returns pivots.
template <class Field>
std::vector<std::size_t> rref_in_place(Matrix<Field>& m, std::size_t ncols) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && f.is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(row, sel);
    const auto pivot_inv = f.inv(m(row, col));
    f.scale(m.row(row).subspan(col), pivot_inv);
    const auto pivot_row = std::span<const typename Field::Element>(m.row(row)).subspan(col);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || f.is_zero(m(i, col))) continue;
      const auto factor = f.neg(m(i, col));
      f.axpy(m.row(i).subspan(col), factor, pivot_row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Field>
RrefResult<Field> rref(const Matrix<Field>& m) {
  RrefResult<Field> r{m, {}};
  r.pivots = rref_in_place(r.matrix, m.cols());
  return r;
}

/// Number of pivots. Uses forward elimination only.
template <class Field>
std::size_t rank(const Matrix<Field>& m) {
  Matrix<Field> w = m;
  const Field& f = w.field();
  std::size_t row = 0;
  for (std::size_t col = 0; col < w.cols() && row < w.rows(); ++col) {
    std::size_t sel = row;
    while (sel < w.rows() && f.is_zero(w(sel, col))) ++sel;
    if (sel == w.rows()) continue;
    w.swap_rows(row, sel);
    const auto pivot_inv = f.inv(w(row, col));
    f.scale(w.row(row).subspan(col), pivot_inv);
    const auto pivot_row = std::span<const typename Field::Element>(w.row(row)).subspan(col);
    for (std::size_t i = row + 1; i < w.rows(); ++i) {
      if (f.is_zero(w(i, col))) continue;
      const auto factor = f.neg(w(i, col));
      f.axpy(w.row(i).subspan(col), factor, pivot_row);
    }
    ++row;
  }
  return row;
}

/// Columns form a basis of ker m (cols(m) - rank(m) of them).
template <class Field>
Matrix<Field> kernel_basis(const Matrix<Field>& m) {
  const Field& f = m.field();
  const auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;

  Matrix<Field> basis(f, m.cols(), m.cols() - r.pivots.size());
  std::size_t k = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = f.one();
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      basis(r.pivots[i], k) = f.neg(r.matrix(i, free));
    }
    ++k;
  }
  return basis;
}

/// x with m x = b, or nullopt if the system is inconsistent.
template <class Field>
std::optional<Column<Field>> solve(const Matrix<Field>& m, const Column<Field>& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: right-hand side has wrong height");
  const Field& f = m.field();
  Matrix<Field> aug(f, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto pivots = rref_in_place(aug, m.cols() + 1);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Column<Field> x(m.cols(), f.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

enum class CompletionOrder {
  forward,  // e_0, e_1, ..., e_{n-1}
  reverse,  // e_{n-1}, ..., e_0
};

/// Standard basis vectors that complete the columns of `basis` to a basis of
/// F^ambient_dim, chosen greedily in scan order.
template <class Field>
Matrix<Field> complete_basis(const Matrix<Field>& basis, std::size_t ambient_dim,
                             CompletionOrder order = CompletionOrder::forward) {
  const Field& f = basis.field();
  if (basis.rows() != ambient_dim && basis.cols() != 0) {
    throw DimensionMismatch("complete_basis: columns must have height ambient_dim");
  }
  using Element = typename Field::Element;

  // Echelon rows of the current span: each row has a 1 at its pivot and zeros
  // at every other stored pivot.
  std::vector<std::vector<Element>> echelon;
  std::vector<std::size_t> echelon_pivot;
  auto absorb = [&](std::vector<Element> v) {
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const auto c = v[echelon_pivot[k]];
      if (!f.is_zero(c)) f.axpy(v, f.neg(c), echelon[k]);
    }
    std::size_t p = 0;
    while (p < v.size() && f.is_zero(v[p])) ++p;
    if (p == v.size()) return false;
    f.scale(v, f.inv(v[p]));
    for (auto& row : echelon) {
      const auto c = row[p];
      if (!f.is_zero(c)) f.axpy(row, f.neg(c), v);
    }
    echelon.push_back(std::move(v));
    echelon_pivot.push_back(p);
    return true;
  };

  for (std::size_t j = 0; j < basis.cols(); ++j) {
    if (!absorb(basis.column(j))) {
      throw NotIndependent("complete_basis: input columns are linearly dependent");
    }
  }

  std::vector<Column<Field>> added;
  for (std::size_t s = 0; s < ambient_dim && echelon.size() < ambient_dim; ++s) {
    const std::size_t idx = order == CompletionOrder::forward ? s : ambient_dim - 1 - s;
    Column<Field> e(ambient_dim, f.zero());
    e[idx] = f.one();
    if (absorb(e)) {
      Column<Field> kept(ambient_dim, f.zero());
      kept[idx] = f.one();
      added.push_back(std::move(kept));
    }
  }
  return Matrix<Field>::from_columns(f, ambient_dim, added);
}

template <class Field>
bool is_invertible(const Matrix<Field>& m) {
  if (!m.is_square()) throw NotSquare("is_invertible: matrix is not square");
  return rank(m) == m.rows();
}

template <class Field>
Matrix<Field> inverse(const Matrix<Field>& m) {
  if (!m.is_square()) throw NotSquare("inverse: matrix is not square");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  Matrix<Field> aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  const auto pivots = rref_in_place(aug, n);
  if (pivots.size() != n) throw Singular("inverse: matrix is singular");
  Matrix<Field> inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

/// True when the column spaces of a and b (same height) coincide.
template <class Field>
bool same_column_space(const Matrix<Field>& a, const Matrix<Field>& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("same_column_space: height mismatch");
  const std::size_t ra = rank(a);
  return ra == rank(b) && ra == rank(hcat(a, b));
}

}  // namespace algdil
