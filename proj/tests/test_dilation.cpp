#include <doctest.h>

#include "algdil/dilation.hpp"

using namespace algdil;

namespace {

const Rationals kQ;
using QMat = Matrix<Rationals>;
using QCol = Column<Rationals>;
using QVec = FsVec<Rationals>;

QCol col(std::initializer_list<const char*> xs) {
  QCol c;
  for (const char* x : xs) c.push_back(kQ.parse(x));
  return c;
}

QMat jordan2() { return QMat::from_ints(kQ, {{1, 1}, {0, 1}}); }

template <class Field>
FsVec<Field> random_fsvec(const Field& f, std::size_t d, std::size_t last, Rng& rng) {
  FsVec<Field> w(f, d);
  for (std::size_t n = 0; n <= last; ++n) {
    if (rng.below(3) == 0) continue;
    w.set(n, random_column(f, d, rng, 4));
  }
  return w;
}

}  // namespace

TEST_CASE("embed and project") {
  CHECK(embed(kQ, col({"0", "0"})).empty());
  const auto e = embed(kQ, col({"1", "0"}));
  CHECK(e.support_size() == 1);
  CHECK(e.at(0) == col({"1", "0"}));
  const auto x = col({"3", "-1/2"});
  CHECK(embed(kQ, x).at(0) == x);
  CHECK(project(embed(kQ, x)) == x);
  CHECK(project(QVec(kQ, 2)) == col({"0", "0"}));

  QVec w(kQ, 2);
  w.set(0, col({"1", "2"}));
  w.set(3, col({"5", "6"}));
  CHECK(project(w) == col({"1", "2"}));
  CHECK_THROWS_AS(w.set(1, col({"1"})), DimensionMismatch);
}

TEST_CASE("zero blocks are never stored") {
  QVec w(kQ, 2);
  w.set(4, col({"0", "0"}));
  CHECK(w.empty());
  w.set(4, col({"1", "0"}));
  w.set(4, col({"0", "0"}));
  CHECK(w.empty());
  QVec a(kQ, 2), b(kQ, 2);
  a.set(2, col({"1", "1"}));
  b.set(2, col({"-1", "-1"}));
  CHECK((a + b).empty());
}

TEST_CASE("Sz.-Nagy U action") {
  const auto x = col({"2", "-3/4"});
  SUBCASE("T = I keeps x at coordinate 0") {
    const SzNagyDilation<Rationals> ops(QMat::identity(kQ, 2));
    CHECK(ops.apply_u(embed(kQ, x)) == embed(kQ, x));
  }
  SUBCASE("T = 0 moves x to coordinate 1") {
    const SzNagyDilation<Rationals> ops(QMat(kQ, 2, 2));
    const auto w = ops.apply_u(embed(kQ, x));
    CHECK(w.support_size() == 1);
    CHECK(w.at(1) == x);
  }
  SUBCASE("Jordan block") {
    const SzNagyDilation<Rationals> ops(jordan2());
    const auto w = ops.apply_u(embed(kQ, col({"0", "1"})));
    CHECK(w.support_size() == 2);
    CHECK(w.at(0) == col({"1", "1"}));
    CHECK(w.at(1) == col({"-1", "0"}));
  }
  SUBCASE("tail shifts by one") {
    const SzNagyDilation<Rationals> ops(QMat(kQ, 2, 2));
    QVec w(kQ, 2);
    w.set(2, x);
    w.set(5, x);
    const auto u = ops.apply_u(w);
    CHECK(u.at(3) == x);
    CHECK(u.at(6) == x);
    CHECK(u.support_size() == 2);
  }
  CHECK_THROWS_AS(SzNagyDilation<Rationals>(QMat(kQ, 2, 3)), NotSquare);
  const SzNagyDilation<Rationals> ops(jordan2());
  CHECK_THROWS_AS(ops.apply_u(QVec(kQ, 3)), DimensionMismatch);
}

TEST_CASE("Sz.-Nagy dilation equation and injectivity on random operators") {
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const auto d = static_cast<std::size_t>(rng.between(0, 4));
    const auto t = random_matrix(kQ, d, d, rng, 4);
    const SzNagyDilation<Rationals> ops(t);
    const auto x = random_column(kQ, d, rng, 4);
    auto w = embed(kQ, x);
    QMat tn = QMat::identity(kQ, d);
    for (int n = 0; n <= 6; ++n) {
      CHECK(project(w) == tn * x);
      w = ops.apply_u(w);
      tn = tn * t;
    }
    for (std::size_t k = 0; k <= 3; ++k) {
      const auto m = truncated_matrix(ops, k);
      CHECK(rank(m) == m.cols());
    }
  }
}

TEST_CASE("W1 action") {
  const auto x = col({"1", "2"});
  const auto y = col({"-1", "5"});
  SUBCASE("T = I") {
    const auto ops = AndoDilation<Rationals>::build(QMat::identity(kQ, 2), QMat::identity(kQ, 2));
    CHECK(ops.apply_w1(embed(kQ, x)) == embed(kQ, x));
  }
  SUBCASE("T = 0") {
    const auto ops = AndoDilation<Rationals>::build(QMat(kQ, 2, 2), QMat(kQ, 2, 2));
    const auto w = ops.apply_w1(embed(kQ, x));
    CHECK(w.support_size() == 1);
    CHECK(w.at(1) == x);

    QVec in(kQ, 2);
    in.set(0, x);
    in.set(1, y);
    const auto out = ops.apply_w1(in);
    CHECK(out.support_size() == 2);
    CHECK(out.at(1) == x);
    CHECK(out.at(3) == y);
  }
  SUBCASE("W2 uses S") {
    const auto ops = AndoDilation<Rationals>::build(QMat(kQ, 2, 2), QMat::identity(kQ, 2));
    CHECK(ops.apply_w2(embed(kQ, x)) == embed(kQ, x));
    CHECK(ops.apply_w1(embed(kQ, x)).at(1) == x);
  }
}

TEST_CASE("generator matrices") {
  SUBCASE("T = S = I gives zero generators") {
    const auto g = build_generators(QMat::identity(kQ, 3), QMat::identity(kQ, 3));
    CHECK(g.g == QMat(kQ, 12, 3));
    CHECK(g.h == QMat(kQ, 12, 3));
  }
  SUBCASE("T = S = 0 gives column i = (0, 0, e_i, 0)") {
    const auto g = build_generators(QMat(kQ, 2, 2), QMat(kQ, 2, 2));
    QMat expected(kQ, 8, 2);
    expected(4, 0) = 1;
    expected(5, 1) = 1;
    CHECK(g.g == expected);
    CHECK(g.h == expected);
  }
  SUBCASE("Jordan block and its square") {
    // I - T = [[0,-1],[0,0]], S = T^2 = [[1,2],[0,1]], I - S = [[0,-2],[0,0]]
    // (I-T)S = [[0,-1],[0,0]], (I-S)T = [[0,-2],[0,0]]
    const QMat t = jordan2();
    const QMat s = t * t;
    const auto g = build_generators(t, s);
    QMat g_expected(kQ, 8, 2), h_expected(kQ, 8, 2);
    g_expected(0, 1) = -1;
    g_expected(4, 1) = -2;
    h_expected(0, 1) = -2;
    h_expected(4, 1) = -1;
    CHECK(g.g == g_expected);
    CHECK(g.h == h_expected);
    CHECK(kernels_agree(g));
    CHECK(rank(g.g) == rank(g.h));
  }
  CHECK_THROWS_AS(build_generators(QMat::identity(kQ, 2), QMat::identity(kQ, 3)), DimensionMismatch);
}

TEST_CASE("generator kernels agree even without commutation") {
  // Both kernels equal {x : Tx = x, Sx = x} for any square pair, so the
  // guard in build_generators is defensive. kernels_agree itself still
  // detects hand-made mismatches.
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto [t, s] = gen_noncommuting_pair(PrimeField(3), 2, seed);
    CHECK(kernels_agree(build_generators(t, s)));
  }
  const Generators<Rationals> bad{QMat::from_ints(kQ, {{1, 0}, {0, 0}}),
                                  QMat::from_ints(kQ, {{0, 0}, {0, 1}})};
  CHECK_FALSE(kernels_agree(bad));
}

TEST_CASE("build_v") {
  SUBCASE("zero generators give the identity") {
    const auto g = build_generators(QMat::identity(kQ, 2), QMat::identity(kQ, 2));
    const auto ext = build_v(g);
    CHECK(ext.v == QMat::identity(kQ, 8));
    CHECK(ext.v_inv == QMat::identity(kQ, 8));
  }
  SUBCASE("T = S fixes every generator") {
    Rng rng(2);
    const auto t = random_matrix(kQ, 3, 3, rng, 5);
    const auto g = build_generators(t, t);
    CHECK(g.g == g.h);
    const auto ext = build_v(g);
    CHECK(ext.v * g.g == g.g);
  }
  SUBCASE("Jordan block and its square") {
    const QMat t = jordan2();
    const auto g = build_generators(t, t * t);
    for (auto order : {CompletionOrder::forward, CompletionOrder::reverse}) {
      const auto ext = build_v(g, order);
      CHECK(ext.v * g.g == g.h);
      CHECK(ext.v * ext.v_inv == QMat::identity(kQ, 8));
      CHECK(ext.v_inv * ext.v == QMat::identity(kQ, 8));
    }
  }
  SUBCASE("rank mismatch is an extension failure") {
    Generators<Rationals> g{QMat::from_ints(kQ, {{1}, {0}}), QMat(kQ, 2, 1)};
    CHECK_THROWS_AS(build_v(g), ExtensionFailure);
  }
}

TEST_CASE("builder rejects non-commuting pairs") {
  CHECK_THROWS_AS(AndoDilation<Rationals>::build(QMat::from_ints(kQ, {{0, 1}, {0, 0}}),
                                                 QMat::from_ints(kQ, {{0, 0}, {1, 0}})),
                  NotCommuting);
}

TEST_CASE("W acts blockwise") {
  const QMat t = jordan2();
  const auto ops = AndoDilation<Rationals>::build(t, t * t);
  Rng rng(5);
  SUBCASE("identity v leaves sequences unchanged") {
    const auto id_ops = AndoDilation<Rationals>::build(QMat::identity(kQ, 2), QMat::identity(kQ, 2));
    const auto w = random_fsvec(kQ, 2, 12, rng);
    CHECK(id_ops.apply_w(w) == w);
  }
  SUBCASE("W^-1 W = I") {
    for (int i = 0; i < 20; ++i) {
      const auto w = random_fsvec(kQ, 2, 15, rng);
      CHECK(ops.apply_w_inv(ops.apply_w(w)) == w);
      CHECK(ops.apply_w(ops.apply_w_inv(w)) == w);
    }
  }
  SUBCASE("support on coordinates 1..4 is multiplied by v") {
    QVec w(kQ, 2);
    QCol packed;
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto b = random_column(kQ, 2, rng, 4);
      w.set(n, b);
      packed.insert(packed.end(), b.begin(), b.end());
    }
    const auto out = ops.apply_w(w);
    CHECK(out.find(0) == nullptr);
    const QCol image = ops.v() * packed;
    QCol got;
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto b = out.at(n);
      got.insert(got.end(), b.begin(), b.end());
    }
    CHECK(got == image);
    CHECK(*out.max_index() <= 4);
  }
}

TEST_CASE("U and V on embedded vectors") {
  const auto x = col({"2", "7/3"});
  SUBCASE("T = S = I") {
    const auto ops = AndoDilation<Rationals>::build(QMat::identity(kQ, 2), QMat::identity(kQ, 2));
    CHECK(ops.apply_u(embed(kQ, x)) == embed(kQ, x));
    CHECK(ops.apply_v(embed(kQ, x)) == embed(kQ, x));
  }
  SUBCASE("P U I = T") {
    Rng rng(6);
    for (int i = 0; i < 10; ++i) {
      const auto pair = gen_pair(kQ, PairRecipe{PairKind::polynomial, 3, FieldSpec::rational(),
                                                static_cast<std::uint64_t>(i), 3, 5});
      const auto ops = AndoDilation<Rationals>::build(pair.first, pair.second);
      const auto y = random_column(kQ, 3, rng, 5);
      CHECK(project(ops.apply_u(embed(kQ, y))) == pair.first * y);
      CHECK(project(ops.apply_v(embed(kQ, y))) == pair.second * y);
    }
  }
  SUBCASE("Jordan block and its square, n, m <= 3") {
    const QMat t = jordan2();
    const QMat s = t * t;
    const auto ops = AndoDilation<Rationals>::build(t, s);
    for (unsigned m = 0; m <= 3; ++m) {
      for (unsigned n = 0; n <= 3; ++n) {
        auto w = embed(kQ, x);
        for (unsigned k = 0; k < m; ++k) w = ops.apply_v(w);
        for (unsigned k = 0; k < n; ++k) w = ops.apply_u(w);
        CAPTURE(n);
        CAPTURE(m);
        CHECK(project(w) == power(t, n) * (power(s, m) * x));
        CHECK(*w.max_index() <= 4 * (n + m) + 4);
      }
    }
  }
}

TEST_CASE("truncated matrices") {
  SUBCASE("W with identity v is an identity padded with zero rows") {
    const auto ops = AndoDilation<Rationals>::build(QMat::identity(kQ, 2), QMat::identity(kQ, 2));
    for (std::size_t k = 0; k <= 2; ++k) {
      const auto m = truncated_matrix(ops, OperatorTag::W, k);
      const std::size_t n = truncation_dim(2, k);
      CHECK(m.rows() == truncation_dim(2, k + 1));
      CHECK(m.cols() == n);
      QMat expected(kQ, m.rows(), n);
      for (std::size_t i = 0; i < n; ++i) expected(i, i) = 1;
      CHECK(m == expected);
    }
  }
  SUBCASE("Sz.-Nagy U with T = I, K = 0") {
    const SzNagyDilation<Rationals> ops(QMat::identity(kQ, 2));
    const auto m = truncated_matrix(ops, 0);
    QMat expected(kQ, 10, 2);
    expected(0, 0) = 1;
    expected(1, 1) = 1;
    CHECK(m == expected);
  }
  SUBCASE("SzNagyU tag is not an Ando operator") {
    const auto ops = AndoDilation<Rationals>::build(QMat::identity(kQ, 1), QMat::identity(kQ, 1));
    CHECK_THROWS_AS(truncated_matrix(ops, OperatorTag::SzNagyU, 0), std::invalid_argument);
  }
  SUBCASE("escaping support is reported") {
    QVec w(kQ, 1);
    w.set(9, col({"1"}));
    CHECK_THROWS_AS(to_coords(w, 8), SupportOverflow);
    CHECK(to_coords(w, 9).size() == 10);
    CHECK(from_coords(kQ, 1, to_coords(w, 9)) == w);
  }
}

TEST_CASE_TEMPLATE("lazy and truncated actions agree", Field, Rationals, PrimeField) {
  const Field f = [] {
    if constexpr (std::is_same_v<Field, Rationals>) return Rationals{};
    else return PrimeField(7);
  }();
  Rng rng(31);
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto [t, s] = gen_pair(f, PairRecipe{PairKind::polynomial, 2, f.spec(), seed, 3, 5});
    const auto ops = AndoDilation<Field>::build(t, s);
    const std::size_t level = 2;
    for (auto tag : {OperatorTag::U, OperatorTag::V, OperatorTag::W1, OperatorTag::W2,
                     OperatorTag::W, OperatorTag::WInv}) {
      const auto m = truncated_matrix(ops, tag, level);
      for (int i = 0; i < 5; ++i) {
        const auto w = random_fsvec(f, 2, 4 * level, rng);
        FsVec<Field> lazy(f, 2);
        switch (tag) {
          case OperatorTag::U: lazy = ops.apply_u(w); break;
          case OperatorTag::V: lazy = ops.apply_v(w); break;
          case OperatorTag::W1: lazy = ops.apply_w1(w); break;
          case OperatorTag::W2: lazy = ops.apply_w2(w); break;
          case OperatorTag::W: lazy = ops.apply_w(w); break;
          default: lazy = ops.apply_w_inv(w); break;
        }
        CAPTURE(operator_tag_name(tag));
        CHECK(m * to_coords(w, 4 * level) == to_coords(lazy, 4 * (level + 1)));
      }
    }
  }
}

TEST_CASE_TEMPLATE("U and V commute, are injective, and are linear", Field, Rationals, PrimeField) {
  const Field f = [] {
    if constexpr (std::is_same_v<Field, Rationals>) return Rationals{};
    else return PrimeField(5);
  }();
  Rng rng(41);
  for (auto kind : {PairKind::polynomial, PairKind::upper_triangular, PairKind::diagonal,
                    PairKind::idempotent}) {
    const auto [t, s] = gen_pair(f, PairRecipe{kind, 3, f.spec(), 77, 3, 5});
    for (auto order : {CompletionOrder::forward, CompletionOrder::reverse}) {
      const auto ops = AndoDilation<Field>::build(t, s, order);
      CHECK(ops.v() * ops.generators().g == ops.generators().h);
      CHECK(ops.v_inv() * ops.generators().h == ops.generators().g);
      for (std::size_t level = 0; level <= 2; ++level) {
        const auto uv = truncated_matrix(ops, OperatorTag::U, level + 1) *
                        truncated_matrix(ops, OperatorTag::V, level);
        const auto vu = truncated_matrix(ops, OperatorTag::V, level + 1) *
                        truncated_matrix(ops, OperatorTag::U, level);
        CHECK(uv == vu);
        const auto u = truncated_matrix(ops, OperatorTag::U, level);
        const auto v = truncated_matrix(ops, OperatorTag::V, level);
        CHECK(rank(u) == u.cols());
        CHECK(rank(v) == v.cols());
      }
      const auto a = random_fsvec(f, 3, 9, rng);
      const auto b = random_fsvec(f, 3, 9, rng);
      CHECK(ops.apply_u(a + b) == ops.apply_u(a) + ops.apply_u(b));
      CHECK(ops.apply_v(a + b) == ops.apply_v(a) + ops.apply_v(b));
    }
  }
}

TEST_CASE("trivial space") {
  const auto ops = AndoDilation<Rationals>::build(QMat(kQ, 0, 0), QMat(kQ, 0, 0));
  CHECK(ops.v().rows() == 0);
  CHECK(ops.apply_u(QVec(kQ, 0)).empty());
  CHECK(truncated_matrix(ops, OperatorTag::U, 3).cols() == 0);
  const SzNagyDilation<Rationals> sz(QMat(kQ, 0, 0));
  CHECK(truncated_matrix(sz, 2).rows() == 0);
}
