#pragma once

// Dense row-major matrices over an exact field.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "algdil/errors.hpp"
#include "algdil/field.hpp"

namespace algdil {

template <class Field>
using Column = std::vector<typename Field::Element>;

template <class Field>
class Matrix {
 public:
  using Element = typename Field::Element;

  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(const Field& field, const std::vector<std::vector<Element>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw DimensionMismatch("ragged row list");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  /// Convenience for tests and examples: small integer entries.
  static Matrix from_ints(const Field& field,
                          std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<Element>> conv;
    for (const auto& row : rows) {
      auto& out = conv.emplace_back();
      for (long long v : row) out.push_back(field.from_int(v));
    }
    return from_rows(field, conv);
  }

  /// Columns given as a list of vectors, each of height `height`.
  static Matrix from_columns(const Field& field, std::size_t height,
                             const std::vector<Column<Field>>& cols) {
    Matrix m(field, height, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Element> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Element> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Column<Field> column(std::size_t j) const {
    Column<Field> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  void set_column(std::size_t j, const Column<Field>& c) {
    if (c.size() != rows_) throw DimensionMismatch("column height does not match row count");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  bool is_zero() const {
    for (const auto& e : data_) {
      if (!field_.is_zero(e)) return false;
    }
    return true;
  }

  std::span<const Element> data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

template <class Field>
Matrix<Field> operator*(const Matrix<Field>& a, const Matrix<Field>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("product of " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
  const Field& f = a.field();
  Matrix<Field> c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (f.is_zero(aik)) continue;
      f.axpy(out, aik, b.row(k));
    }
  }
  return c;
}

template <class Field>
Column<Field> operator*(const Matrix<Field>& a, const Column<Field>& x) {
  if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector size mismatch");
  const Field& f = a.field();
  Column<Field> y(a.rows(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) f.add_mul(y[i], a(i, j), x[j]);
  }
  return y;
}

template <class Field>
Matrix<Field> operator+(const Matrix<Field>& a, const Matrix<Field>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("sum shape mismatch");
  Matrix<Field> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) a.field().axpy(c.row(i), a.field().one(), b.row(i));
  return c;
}

template <class Field>
Matrix<Field> operator-(const Matrix<Field>& a, const Matrix<Field>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("difference shape mismatch");
  }
  Matrix<Field> c = a;
  const auto minus_one = a.field().neg(a.field().one());
  for (std::size_t i = 0; i < a.rows(); ++i) a.field().axpy(c.row(i), minus_one, b.row(i));
  return c;
}

template <class Field>
Matrix<Field> transpose(const Matrix<Field>& a) {
  Matrix<Field> t(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

template <class Field>
Matrix<Field> power(const Matrix<Field>& a, unsigned n) {
  if (!a.is_square()) throw NotSquare("power of a non-square matrix");
  Matrix<Field> r = Matrix<Field>::identity(a.field(), a.rows());
  for (unsigned i = 0; i < n; ++i) r = r * a;
  return r;
}

/// [a | b]
template <class Field>
Matrix<Field> hcat(const Matrix<Field>& a, const Matrix<Field>& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hcat row mismatch");
  Matrix<Field> c(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

/// Stack blocks vertically; all must have the same column count.
template <class Field>
Matrix<Field> vstack(const Field& field, std::size_t cols,
                     const std::vector<const Matrix<Field>*>& blocks) {
  std::size_t rows = 0;
  for (const auto* b : blocks) {
    if (b->cols() != cols) throw DimensionMismatch("vstack column mismatch");
    rows += b->rows();
  }
  Matrix<Field> out(field, rows, cols);
  std::size_t r0 = 0;
  for (const auto* b : blocks) {
    for (std::size_t i = 0; i < b->rows(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) out(r0 + i, j) = (*b)(i, j);
    }
    r0 += b->rows();
  }
  return out;
}

template <class Field>
Matrix<Field> select_columns(const Matrix<Field>& a, std::span<const std::size_t> idx) {
  Matrix<Field> out(a.field(), a.rows(), idx.size());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < idx.size(); ++k) out(i, k) = a(i, idx[k]);
  }
  return out;
}

template <class Field>
bool is_zero_column(const Field& f, const Column<Field>& c) {
  for (const auto& e : c) {
    if (!f.is_zero(e)) return false;
  }
  return true;
}

/// Scalar-string grid, row by row.
template <class Field>
std::vector<std::vector<std::string>> to_string_grid(const Matrix<Field>& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out[i].reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m.field().format(m(i, j)));
  }
  return out;
}

template <class Field>
std::vector<std::string> to_strings(const Field& f, const Column<Field>& c) {
  std::vector<std::string> out;
  out.reserve(c.size());
  for (const auto& e : c) out.push_back(f.format(e));
  return out;
}

}  // namespace algdil
