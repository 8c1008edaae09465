#pragma once

// Algebraic dilations of linear maps on V = F^d, acting on the direct sum
// W = V (+) V (+) ... of finite-support sequences.
//
//   Sz.-Nagy:  U(x_n) = (T x_0, (I - T) x_0, x_1, x_2, ...)
//   Ando:      W1(x_n) = (T x_0, (I - T) x_0, 0, x_1, x_2, ...), W2 likewise with S,
//              W acts as v on every 4-block (x_{4k+1}, ..., x_{4k+4}) and fixes x_0,
//              U = W W1, V = W2 W^{-1}.
//
// Both dilations satisfy P U^n V^m I = T^n S^m with U, V injective and UV = VU.
// v is any bijection of V^4 extending
//   ((I-T)Sx, 0, (I-S)x, 0) -> ((I-S)Tx, 0, (I-T)x, 0);
// the extension here is pinned down by greedy completion of both subspaces.

#include <stdexcept>
#include <string_view>

#include "algdil/fsvec.hpp"
#include "algdil/linalg.hpp"
#include "algdil/pairs.hpp"

namespace algdil {

namespace detail {

// (T x_0, (I - T) x_0, 0 x gap-1, x_1, x_2, ...): tail shifted by `gap`.
template <class Field>
FsVec<Field> head_split_shift(const Matrix<Field>& t, const FsVec<Field>& w, std::size_t gap) {
  if (w.dim() != t.rows()) throw DimensionMismatch("sequence dimension does not match operator");
  const Field& f = t.field();
  FsVec<Field> out(f, w.dim());
  if (const auto* x0 = w.find(0)) {
    Column<Field> tx = t * *x0;
    Column<Field> rest = *x0;
    f.axpy(rest, f.neg(f.one()), tx);
    out.set(0, std::move(tx));
    out.set(1, std::move(rest));
  }
  for (const auto& [n, blk] : w.blocks()) {
    if (n >= 1) out.set(n + gap, blk);
  }
  return out;
}

// Fix x_0 and multiply every 4-block (x_{4k+1}..x_{4k+4}) by a 4d x 4d matrix.
template <class Field>
FsVec<Field> blockwise(const Matrix<Field>& m, const FsVec<Field>& w) {
  const std::size_t d = w.dim();
  if (m.rows() != 4 * d) throw DimensionMismatch("sequence dimension does not match operator");
  const Field& f = m.field();
  FsVec<Field> out(f, d);
  if (const auto* x0 = w.find(0)) out.set(0, *x0);

  const auto& blocks = w.blocks();
  auto it = blocks.lower_bound(1);
  while (it != blocks.end()) {
    const std::size_t k = (it->first - 1) / 4;
    Column<Field> packed(4 * d, f.zero());
    for (; it != blocks.end() && (it->first - 1) / 4 == k; ++it) {
      const std::size_t slot = (it->first - 1) % 4;
      std::copy(it->second.begin(), it->second.end(),
                packed.begin() + static_cast<std::ptrdiff_t>(slot * d));
    }
    const Column<Field> image = m * packed;
    for (std::size_t slot = 0; slot < 4; ++slot) {
      out.set(4 * k + 1 + slot,
              Column<Field>(image.begin() + static_cast<std::ptrdiff_t>(slot * d),
                            image.begin() + static_cast<std::ptrdiff_t>((slot + 1) * d)));
    }
  }
  return out;
}

}  // namespace detail

template <class Field>
class SzNagyDilation {
 public:
  explicit SzNagyDilation(Matrix<Field> t) : t_(std::move(t)) {
    if (!t_.is_square()) throw NotSquare("Sz.-Nagy dilation needs a square operator");
  }

  std::size_t dim() const { return t_.rows(); }
  const Field& field() const { return t_.field(); }
  const Matrix<Field>& t() const { return t_; }

  FsVec<Field> apply_u(const FsVec<Field>& w) const { return detail::head_split_shift(t_, w, 1); }

 private:
  Matrix<Field> t_;
};

/// Generator matrices of the two subspaces matched by v. Column i of G is
/// ((I-T)S e_i, 0, (I-S) e_i, 0); column i of H is ((I-S)T e_i, 0, (I-T) e_i, 0).
template <class Field>
struct Generators {
  Matrix<Field> g;
  Matrix<Field> h;
};

/// ker G == ker H, compared as subspaces.
template <class Field>
bool kernels_agree(const Generators<Field>& gens) {
  const auto kg = kernel_basis(gens.g);
  const auto kh = kernel_basis(gens.h);
  return kg.cols() == kh.cols() && (gens.h * kg).is_zero() && (gens.g * kh).is_zero();
}

template <class Field>
Generators<Field> build_generators(const Matrix<Field>& t, const Matrix<Field>& s) {
  check_square_pair(t, s);
  const Field& f = t.field();
  const std::size_t d = t.rows();
  const auto id = Matrix<Field>::identity(f, d);
  const Matrix<Field> zero(f, d, d);
  const Matrix<Field> i_minus_t = id - t;
  const Matrix<Field> i_minus_s = id - s;
  const Matrix<Field> top_g = i_minus_t * s;
  const Matrix<Field> top_h = i_minus_s * t;

  Generators<Field> gens{vstack(f, d, {&top_g, &zero, &i_minus_s, &zero}),
                         vstack(f, d, {&top_h, &zero, &i_minus_t, &zero})};
  if (!kernels_agree(gens)) {
    throw WellDefinednessFailure(
        "generator kernels differ: the partial map is not well defined (non-commuting input?)");
  }
  return gens;
}

template <class Field>
struct PartialIsoExtension {
  Matrix<Field> v;
  Matrix<Field> v_inv;
};

/// Bijection v of F^{4d} with v G = H. Bases of span G and span H are taken
/// at the pivot columns of G; both are completed with standard basis vectors
/// in `order`, and v = [H_b | Z] [G_b | Y]^{-1}.
template <class Field>
PartialIsoExtension<Field> build_v(const Generators<Field>& gens,
                                   CompletionOrder order = CompletionOrder::forward) {
  const std::size_t n = gens.g.rows();
  if (gens.h.rows() != n || gens.h.cols() != gens.g.cols()) {
    throw DimensionMismatch("generator matrices have different shapes");
  }
  const auto pivots = rref(gens.g).pivots;
  const Matrix<Field> g_basis = select_columns(gens.g, std::span<const std::size_t>(pivots));
  const Matrix<Field> h_basis = select_columns(gens.h, std::span<const std::size_t>(pivots));
  if (rank(h_basis) != pivots.size() || rank(gens.h) != pivots.size()) {
    throw ExtensionFailure("rank G != rank H; v cannot be extended to a bijection");
  }
  const Matrix<Field> source = hcat(g_basis, complete_basis(g_basis, n, order));
  const Matrix<Field> target = hcat(h_basis, complete_basis(h_basis, n, order));
  return {target * inverse(source), source * inverse(target)};
}

template <class Field>
class AndoDilation {
 public:
  /// Throws NotCommuting before any construction when T*S != S*T.
  static AndoDilation build(Matrix<Field> t, Matrix<Field> s,
                            CompletionOrder order = CompletionOrder::forward) {
    if (!check_commute(t, s)) throw NotCommuting("T and S do not commute");
    Generators<Field> gens = build_generators(t, s);
    PartialIsoExtension<Field> ext = build_v(gens, order);
    return AndoDilation(std::move(t), std::move(s), std::move(gens), std::move(ext), order);
  }

  std::size_t dim() const { return t_.rows(); }
  const Field& field() const { return t_.field(); }
  const Matrix<Field>& t() const { return t_; }
  const Matrix<Field>& s() const { return s_; }
  const Matrix<Field>& v() const { return ext_.v; }
  const Matrix<Field>& v_inv() const { return ext_.v_inv; }
  const Generators<Field>& generators() const { return gens_; }
  CompletionOrder completion_order() const { return order_; }

  FsVec<Field> apply_w1(const FsVec<Field>& w) const { return detail::head_split_shift(t_, w, 2); }
  FsVec<Field> apply_w2(const FsVec<Field>& w) const { return detail::head_split_shift(s_, w, 2); }
  FsVec<Field> apply_w(const FsVec<Field>& w) const { return detail::blockwise(ext_.v, w); }
  FsVec<Field> apply_w_inv(const FsVec<Field>& w) const {
    return detail::blockwise(ext_.v_inv, w);
  }
  FsVec<Field> apply_u(const FsVec<Field>& w) const { return apply_w(apply_w1(w)); }
  FsVec<Field> apply_v(const FsVec<Field>& w) const { return apply_w2(apply_w_inv(w)); }

 private:
  AndoDilation(Matrix<Field> t, Matrix<Field> s, Generators<Field> gens,
               PartialIsoExtension<Field> ext, CompletionOrder order)
      : t_(std::move(t)),
        s_(std::move(s)),
        gens_(std::move(gens)),
        ext_(std::move(ext)),
        order_(order) {}

  Matrix<Field> t_;
  Matrix<Field> s_;
  Generators<Field> gens_;
  PartialIsoExtension<Field> ext_;
  CompletionOrder order_;
};

// ---- truncations -----------------------------------------------------------

enum class OperatorTag { U, V, W1, W2, W, WInv, SzNagyU };

std::string_view operator_tag_name(OperatorTag tag);

/// Dimension of the truncation T_K = coordinates {0, ..., 4K}.
inline std::size_t truncation_dim(std::size_t d, std::size_t level) { return d * (4 * level + 1); }

/// Matrix of `op` from T_{level_in} into T_{level_out}, built column by column
/// from the lazy action on embedded standard basis vectors.
template <class Field, class Op>
Matrix<Field> truncate_operator(const Field& f, std::size_t d, std::size_t level_in,
                                std::size_t level_out, Op&& op) {
  const std::size_t n_in = truncation_dim(d, level_in);
  const std::size_t last_out = 4 * level_out;
  Matrix<Field> m(f, truncation_dim(d, level_out), n_in);
  for (std::size_t j = 0; j < n_in; ++j) {
    FsVec<Field> e(f, d);
    Column<Field> blk(d, f.zero());
    blk[j % d] = f.one();
    e.set(j / d, std::move(blk));
    const FsVec<Field> image = op(e);
    m.set_column(j, to_coords(image, last_out));
  }
  return m;
}

template <class Field>
Matrix<Field> truncated_matrix(const AndoDilation<Field>& ops, OperatorTag tag, std::size_t level) {
  auto run = [&](auto&& fn) {
    return truncate_operator(ops.field(), ops.dim(), level, level + 1, fn);
  };
  switch (tag) {
    case OperatorTag::U:
      return run([&](const FsVec<Field>& w) { return ops.apply_u(w); });
    case OperatorTag::V:
      return run([&](const FsVec<Field>& w) { return ops.apply_v(w); });
    case OperatorTag::W1:
      return run([&](const FsVec<Field>& w) { return ops.apply_w1(w); });
    case OperatorTag::W2:
      return run([&](const FsVec<Field>& w) { return ops.apply_w2(w); });
    case OperatorTag::W:
      return run([&](const FsVec<Field>& w) { return ops.apply_w(w); });
    case OperatorTag::WInv:
      return run([&](const FsVec<Field>& w) { return ops.apply_w_inv(w); });
    case OperatorTag::SzNagyU:
      break;
  }
  throw std::invalid_argument("SzNagyU is not an operator of the Ando dilation");
}

template <class Field>
Matrix<Field> truncated_matrix(const SzNagyDilation<Field>& ops, std::size_t level) {
  return truncate_operator(ops.field(), ops.dim(), level, level + 1,
                           [&](const FsVec<Field>& w) { return ops.apply_u(w); });
}

}  // namespace algdil
