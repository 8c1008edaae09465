#pragma once

// Executable checks for both dilation theorems. Checks never throw on a
// failed identity; they record it with a counterexample carrying both sides.
// All comparisons are exact.

#include <cstdint>
#include <vector>

#include "algdil/dilation.hpp"
#include "algdil/report.hpp"

namespace algdil {

struct CheckParams {
  unsigned max_power = 4;  // N: exponents 0..N
  unsigned max_trunc = 5;  // K_max: truncation levels 0..K_max
  unsigned trials = 8;     // random vectors on top of the standard basis
  std::uint64_t seed = 0;

  /// N >= 1 and trials >= 1.
  void validate() const;
  /// Additionally K_max >= N, so truncations contain every support reached.
  void validate_for_ando() const;

  json to_json() const;
};

namespace detail {

template <class Field>
json grid_json(const Matrix<Field>& m) {
  return json(to_string_grid(m));
}

template <class Field>
json column_json(const Field& f, const Column<Field>& c) {
  return json(to_strings(f, c));
}

/// Standard basis vectors followed by `trials` seeded random vectors.
template <class Field>
std::vector<Column<Field>> trial_vectors(const Field& f, std::size_t d, const CheckParams& p) {
  std::vector<Column<Field>> xs;
  for (std::size_t i = 0; i < d; ++i) {
    Column<Field> e(d, f.zero());
    e[i] = f.one();
    xs.push_back(std::move(e));
  }
  if (d == 0) return xs;
  Rng rng(p.seed ^ 0x9e3779b97f4a7c15ULL);
  for (unsigned t = 0; t < p.trials; ++t) xs.push_back(random_column(f, d, rng, 5));
  return xs;
}

/// Records full column rank of each truncation; ranks and codimensions of the
/// images are reported for inspection only.
template <class Field, class TruncFn>
CheckRecord injectivity_record(std::string name, std::size_t d, unsigned max_trunc,
                               TruncFn&& trunc) {
  json ranks = json::array();
  json image_codim = json::array();
  for (unsigned k = 0; k <= max_trunc; ++k) {
    const Matrix<Field> m = trunc(k);
    const std::size_t r = rank(m);
    ranks.push_back(r);
    image_codim.push_back(m.rows() - r);
    if (r != m.cols()) {
      const Matrix<Field> ker = kernel_basis(m);
      json params = {{"K_max", max_trunc}, {"ranks", ranks}, {"image_codim", image_codim}};
      return CheckRecord::failed(
          std::move(name), std::move(params),
          {{"inputs", {{"K", k}, {"d", d}}},
           {"expected", {{"rank", m.cols()}}},
           {"actual", {{"rank", r}, {"kernel_vector", column_json(m.field(), ker.column(0))}}}});
    }
  }
  return CheckRecord::passed(std::move(name), {{"K_max", max_trunc},
                                               {"ranks", ranks},
                                               {"image_codim", image_codim}});
}

template <class Field>
Matrix<Field> checked_square(const Matrix<Field>& t) {
  if (!t.is_square()) throw NotSquare("operator must be square");
  return t;
}

}  // namespace detail

/// Dilation equation T^n = P U^n I for n <= N over all trial vectors, plus
/// injectivity of U on every truncation up to K_max.
template <class Field>
std::vector<CheckRecord> check_sznagy(const Matrix<Field>& t, const CheckParams& params) {
  params.validate();
  const SzNagyDilation<Field> ops(detail::checked_square(t));
  const Field& f = t.field();
  const std::size_t d = t.rows();
  const auto xs = detail::trial_vectors(f, d, params);

  std::vector<Matrix<Field>> powers{Matrix<Field>::identity(f, d)};
  for (unsigned n = 1; n <= params.max_power; ++n) powers.push_back(powers.back() * t);

  std::vector<CheckRecord> out;
  const json eq_params = {{"N", params.max_power}, {"vectors", xs.size()}};
  std::optional<CheckRecord> failure;
  for (const auto& x : xs) {
    FsVec<Field> w = embed(f, x);
    for (unsigned n = 0; n <= params.max_power && !failure; ++n) {
      const Column<Field> expected = powers[n] * x;
      const Column<Field> actual = project(w);
      if (expected != actual) {
        failure = CheckRecord::failed("sznagy.dilation_equation", eq_params,
                                      {{"inputs", {{"x", detail::column_json(f, x)}, {"n", n}}},
                                       {"expected", detail::column_json(f, expected)},
                                       {"actual", detail::column_json(f, actual)}});
      }
      if (n < params.max_power) w = ops.apply_u(w);
    }
    if (failure) break;
  }
  out.push_back(failure ? *failure : CheckRecord::passed("sznagy.dilation_equation", eq_params));
  out.push_back(detail::injectivity_record<Field>(
      "sznagy.injectivity", d, params.max_trunc,
      [&](unsigned k) { return truncated_matrix(ops, k); }));
  return out;
}

namespace detail {

template <class Field>
CheckRecord ando_dilation_records(const AndoDilation<Field>& ops, const CheckParams& params,
                                  CheckRecord& support) {
  const Field& f = ops.field();
  const std::size_t d = ops.dim();
  const unsigned N = params.max_power;
  const auto xs = trial_vectors(f, d, params);

  std::vector<Matrix<Field>> tp{Matrix<Field>::identity(f, d)};
  std::vector<Matrix<Field>> sp{Matrix<Field>::identity(f, d)};
  for (unsigned k = 1; k <= N; ++k) {
    tp.push_back(tp.back() * ops.t());
    sp.push_back(sp.back() * ops.s());
  }

  const json eq_params = {{"N", N}, {"vectors", xs.size()}};
  const json support_params = {{"N", N}, {"bound", "4(n+m)+4"}};
  support = CheckRecord::passed("ando.support", support_params);
  for (const auto& x : xs) {
    FsVec<Field> vm = embed(f, x);  // V^m I x
    for (unsigned m = 0; m <= N; ++m) {
      FsVec<Field> w = vm;  // U^n V^m I x
      for (unsigned n = 0; n <= N; ++n) {
        const Column<Field> expected = tp[n] * (sp[m] * x);
        const Column<Field> actual = project(w);
        const json inputs = {{"x", column_json(f, x)}, {"n", n}, {"m", m}};
        if (expected != actual) {
          return CheckRecord::failed("ando.dilation_equation", eq_params,
                                     {{"inputs", inputs},
                                      {"expected", column_json(f, expected)},
                                      {"actual", column_json(f, actual)}});
        }
        const std::size_t bound = 4 * (n + m) + 4;
        if (support.pass && w.max_index() && *w.max_index() > bound) {
          support = CheckRecord::failed("ando.support", support_params,
                                        {{"inputs", inputs},
                                         {"expected", {{"max_index_at_most", bound}}},
                                         {"actual", {{"max_index", *w.max_index()}}}});
        }
        if (n < N) w = ops.apply_u(w);
      }
      if (m < N) vm = ops.apply_v(vm);
    }
  }
  return CheckRecord::passed("ando.dilation_equation", eq_params);
}

template <class Field>
CheckRecord ando_commutation_record(const AndoDilation<Field>& ops, unsigned max_trunc) {
  const Field& f = ops.field();
  const std::size_t d = ops.dim();
  const json params = {{"K_max", max_trunc}, {"map", "T_K -> T_{K+2}"}};
  for (unsigned k = 0; k <= max_trunc; ++k) {
    const auto uv = truncate_operator(f, d, k, k + 2, [&](const FsVec<Field>& w) {
      return ops.apply_u(ops.apply_v(w));
    });
    const auto vu = truncate_operator(f, d, k, k + 2, [&](const FsVec<Field>& w) {
      return ops.apply_v(ops.apply_u(w));
    });
    if (uv == vu) continue;
    std::size_t j = 0;
    while (uv.column(j) == vu.column(j)) ++j;
    return CheckRecord::failed("ando.commutation", params,
                               {{"inputs", {{"K", k}, {"basis_index", j}}},
                                {"expected", column_json(f, uv.column(j))},
                                {"actual", column_json(f, vu.column(j))}});
  }
  return CheckRecord::passed("ando.commutation", params);
}

template <class Field>
CheckRecord v_coherence_record(const AndoDilation<Field>& ops) {
  const Field& f = ops.field();
  const auto& gens = ops.generators();
  const json params = {{"rank_G", rank(gens.g)}, {"size", ops.v().rows()}};
  const Matrix<Field> vg = ops.v() * gens.g;
  const Matrix<Field> vih = ops.v_inv() * gens.h;
  for (std::size_t j = 0; j < gens.g.cols(); ++j) {
    if (vg.column(j) != gens.h.column(j)) {
      return CheckRecord::failed("ando.v_coherence", params,
                                 {{"inputs", {{"relation", "v G = H"}, {"column", j}}},
                                  {"expected", column_json(f, gens.h.column(j))},
                                  {"actual", column_json(f, vg.column(j))}});
    }
    if (vih.column(j) != gens.g.column(j)) {
      return CheckRecord::failed("ando.v_coherence", params,
                                 {{"inputs", {{"relation", "v^-1 H = G"}, {"column", j}}},
                                  {"expected", column_json(f, gens.g.column(j))},
                                  {"actual", column_json(f, vih.column(j))}});
    }
  }
  const auto id = Matrix<Field>::identity(f, ops.v().rows());
  const auto prod = ops.v() * ops.v_inv();
  if (prod != id) {
    return CheckRecord::failed("ando.v_coherence", params,
                               {{"inputs", {{"relation", "v v^-1 = I"}}},
                                {"expected", grid_json(id)},
                                {"actual", grid_json(prod)}});
  }
  return CheckRecord::passed("ando.v_coherence", params);
}

template <class Field>
CheckRecord well_definedness_record(const AndoDilation<Field>& ops) {
  const Field& f = ops.field();
  const auto& gens = ops.generators();
  const auto kg = kernel_basis(gens.g);
  const auto kh = kernel_basis(gens.h);
  const json params = {{"dim_ker_G", kg.cols()}, {"dim_ker_H", kh.cols()}};
  auto probe = [&](const Matrix<Field>& basis, const Matrix<Field>& other,
                   const char* relation) -> std::optional<CheckRecord> {
    for (std::size_t j = 0; j < basis.cols(); ++j) {
      const Column<Field> img = other * basis.column(j);
      if (!is_zero_column(f, img)) {
        return CheckRecord::failed("ando.well_definedness", params,
                                   {{"inputs", {{"relation", relation},
                                                {"kernel_vector", column_json(f, basis.column(j))}}},
                                    {"expected", column_json(f, Column<Field>(img.size(), f.zero()))},
                                    {"actual", column_json(f, img)}});
      }
    }
    return std::nullopt;
  };
  if (auto r = probe(kg, gens.h, "ker G in ker H")) return *r;
  if (auto r = probe(kh, gens.g, "ker H in ker G")) return *r;
  if (kg.cols() != kh.cols()) {
    return CheckRecord::failed("ando.well_definedness", params,
                               {{"inputs", {{"relation", "dim ker G = dim ker H"}}},
                                {"expected", kg.cols()},
                                {"actual", kh.cols()}});
  }
  return CheckRecord::passed("ando.well_definedness", params);
}

}  // namespace detail

inline std::string_view completion_order_name(CompletionOrder o) {
  return o == CompletionOrder::forward ? "forward" : "reverse";
}

template <class Field>
Report check_ando(const AndoDilation<Field>& ops, const CheckParams& params) {
  params.validate_for_ando();
  Report report;
  report.meta = {{"field", ops.field().spec().name()},
                 {"dim", ops.dim()},
                 {"completion", completion_order_name(ops.completion_order())}};
  report.meta.update(params.to_json());

  CheckRecord support;
  report.add(detail::ando_dilation_records(ops, params, support));
  report.add(std::move(support));
  report.add(detail::ando_commutation_record(ops, params.max_trunc));
  report.add(detail::injectivity_record<Field>(
      "ando.injectivity_u", ops.dim(), params.max_trunc,
      [&](unsigned k) { return truncated_matrix(ops, OperatorTag::U, k); }));
  report.add(detail::injectivity_record<Field>(
      "ando.injectivity_v", ops.dim(), params.max_trunc,
      [&](unsigned k) { return truncated_matrix(ops, OperatorTag::V, k); }));
  report.add(detail::v_coherence_record(ops));
  report.add(detail::well_definedness_record(ops));
  return report;
}

/// Full Ando suite. Throws NotCommuting (before any construction) when
/// T*S != S*T, and InvalidParams when K_max < N.
template <class Field>
Report check_ando(const Matrix<Field>& t, const Matrix<Field>& s, const CheckParams& params,
                  CompletionOrder order = CompletionOrder::forward) {
  params.validate_for_ando();
  const auto ops = AndoDilation<Field>::build(t, s, order);
  return check_ando(ops, params);
}

/// Contrapositive probe: a non-commuting pair must be rejected by the builder
/// with NotCommuting. A commuting pair is noted and skipped.
template <class Field>
CheckRecord check_negative(const Matrix<Field>& t, const Matrix<Field>& s) {
  const char* name = "ando.negative_path";
  if (check_commute(t, s)) {
    return CheckRecord::passed(name, {{"commutes", true}, {"skipped", true}});
  }
  try {
    (void)AndoDilation<Field>::build(t, s);
  } catch (const NotCommuting&) {
    return CheckRecord::passed(name, {{"commutes", false}, {"rejected", "NotCommuting"}});
  }
  return CheckRecord::failed(name, {{"commutes", false}},
                             {{"inputs", {{"T", detail::grid_json(t)}, {"S", detail::grid_json(s)}}},
                              {"expected", "NotCommuting"},
                              {"actual", "construction accepted"}});
}

}  // namespace algdil
