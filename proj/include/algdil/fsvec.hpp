#pragma once

// Finite-support sequences (x_n)_{n>=0} with x_n in F^d: the elements of the
// direct sum W = V (+) V (+) V (+) ... on which the dilations act.

#include <cstddef>
#include <map>
#include <optional>

#include "algdil/matrix.hpp"

namespace algdil {

template <class Field>
class FsVec {
 public:
  using Block = Column<Field>;

  FsVec(Field field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  bool empty() const { return blocks_.empty(); }
  std::size_t support_size() const { return blocks_.size(); }
  const std::map<std::size_t, Block>& blocks() const { return blocks_; }

  std::optional<std::size_t> max_index() const {
    if (blocks_.empty()) return std::nullopt;
    return blocks_.rbegin()->first;
  }

  /// Block at coordinate n, or the zero column.
  Block at(std::size_t n) const {
    auto it = blocks_.find(n);
    return it == blocks_.end() ? Block(dim_, field_.zero()) : it->second;
  }

  const Block* find(std::size_t n) const {
    auto it = blocks_.find(n);
    return it == blocks_.end() ? nullptr : &it->second;
  }

  /// Overwrite coordinate n. Zero blocks are erased, never stored.
  void set(std::size_t n, Block block) {
    check_height(block);
    if (is_zero_column(field_, block)) {
      blocks_.erase(n);
    } else {
      blocks_.insert_or_assign(n, std::move(block));
    }
  }

  /// Sum of two sequences (used by linearity tests).
  friend FsVec operator+(const FsVec& a, const FsVec& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("FsVec sum: dimension mismatch");
    FsVec out = a;
    for (const auto& [n, blk] : b.blocks_) {
      Block sum = out.at(n);
      out.field_.axpy(sum, out.field_.one(), blk);
      out.set(n, std::move(sum));
    }
    return out;
  }

  friend bool operator==(const FsVec& a, const FsVec& b) {
    return a.dim_ == b.dim_ && a.blocks_ == b.blocks_;
  }

 private:
  void check_height(const Block& b) const {
    if (b.size() != dim_) throw DimensionMismatch("FsVec block has wrong height");
  }

  Field field_;
  std::size_t dim_;
  std::map<std::size_t, Block> blocks_;
};

/// x placed at coordinate 0.
template <class Field>
FsVec<Field> embed(const Field& field, const Column<Field>& x) {
  FsVec<Field> w(field, x.size());
  w.set(0, x);
  return w;
}

/// Coordinate-0 block.
template <class Field>
Column<Field> project(const FsVec<Field>& w) {
  return w.at(0);
}

/// Flat coordinates of w in the truncation {0, ..., last}; length d*(last+1).
template <class Field>
Column<Field> to_coords(const FsVec<Field>& w, std::size_t last) {
  const auto top = w.max_index();
  if (top && *top > last) {
    throw SupportOverflow("sequence has support at coordinate " + std::to_string(*top) +
                          ", beyond the truncation limit " + std::to_string(last));
  }
  const std::size_t d = w.dim();
  Column<Field> out(d * (last + 1), w.field().zero());
  for (const auto& [n, blk] : w.blocks()) {
    for (std::size_t i = 0; i < d; ++i) out[n * d + i] = blk[i];
  }
  return out;
}

template <class Field>
FsVec<Field> from_coords(const Field& field, std::size_t dim, const Column<Field>& coords) {
  FsVec<Field> w(field, dim);
  if (dim == 0) return w;
  if (coords.size() % dim != 0) throw DimensionMismatch("coordinate vector not a multiple of d");
  for (std::size_t n = 0; n < coords.size() / dim; ++n) {
    Column<Field> blk(coords.begin() + static_cast<std::ptrdiff_t>(n * dim),
                      coords.begin() + static_cast<std::ptrdiff_t>((n + 1) * dim));
    w.set(n, std::move(blk));
  }
  return w;
}

}  // namespace algdil
