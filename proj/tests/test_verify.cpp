#include <doctest.h>

#include "algdil/verify.hpp"

using namespace algdil;

namespace {

const Rationals kQ;
using QMat = Matrix<Rationals>;

CheckParams small_params() {
  CheckParams p;
  p.max_power = 3;
  p.max_trunc = 3;
  p.trials = 2;
  p.seed = 1;
  return p;
}

bool all_pass(const std::vector<CheckRecord>& rs) {
  for (const auto& r : rs) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Sz.-Nagy checks") {
  const auto p = small_params();
  for (const auto& t : {QMat::identity(kQ, 2), QMat(kQ, 2, 2), QMat::from_ints(kQ, {{0, 1}, {0, 0}}),
                        QMat::from_ints(kQ, {{2, -1}, {3, 7}}), QMat(kQ, 0, 0)}) {
    const auto rs = check_sznagy(t, p);
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].name == "sznagy.dilation_equation");
    CHECK(rs[1].name == "sznagy.injectivity");
    CHECK(all_pass(rs));
  }
  const PrimeField f(7);
  Rng rng(3);
  CHECK(all_pass(check_sznagy(random_matrix(f, 3, 3, rng, 0), p)));
  CHECK_THROWS_AS(check_sznagy(QMat(kQ, 2, 3), p), NotSquare);
}

TEST_CASE("injectivity record reports ranks and codimensions") {
  const auto rs = check_sznagy(QMat::identity(kQ, 1), small_params());
  const auto& params = rs[1].params;
  CHECK(params["ranks"] == json({1, 5, 9, 13}));
  CHECK(params["image_codim"] == json({4, 4, 4, 4}));
}

TEST_CASE("Ando checks on hand-picked pairs") {
  const auto p = small_params();
  const QMat j = QMat::from_ints(kQ, {{1, 1}, {0, 1}});
  const std::vector<std::pair<QMat, QMat>> pairs{
      {QMat::identity(kQ, 2), QMat::identity(kQ, 2)},
      {QMat(kQ, 2, 2), QMat(kQ, 2, 2)},
      {j, j},
      {j, j * j},
      {QMat(kQ, 2, 2), QMat::identity(kQ, 2)},
  };
  const std::vector<std::string> expected_names{
      "ando.commutation",  "ando.dilation_equation", "ando.injectivity_u", "ando.injectivity_v",
      "ando.support",      "ando.v_coherence",       "ando.well_definedness"};
  for (const auto& [t, s] : pairs) {
    for (auto order : {CompletionOrder::forward, CompletionOrder::reverse}) {
      const Report r = check_ando(t, s, p, order);
      CHECK(r.pass());
      std::vector<std::string> names;
      const json doc = r.to_json();
      for (const auto& c : doc["checks"]) names.push_back(c["name"].get<std::string>());
      CHECK(names == expected_names);
      CHECK(r.meta["completion"] == std::string(completion_order_name(order)));
      CHECK(r.meta["field"] == "Q");
      CHECK(r.meta["dim"] == 2);
    }
  }
}

TEST_CASE("Ando checks on generated pairs over GF(7)") {
  const PrimeField f(7);
  for (auto kind : {PairKind::polynomial, PairKind::upper_triangular, PairKind::diagonal,
                    PairKind::idempotent}) {
    const auto [t, s] = gen_pair(f, PairRecipe{kind, 3, f.spec(), 12, 3, 5});
    CHECK(check_ando(t, s, small_params()).pass());
  }
}

TEST_CASE("Ando parameter and input errors") {
  auto p = small_params();
  p.max_trunc = 2;
  CHECK_THROWS_AS(check_ando(QMat::identity(kQ, 2), QMat::identity(kQ, 2), p), InvalidParams);
  p = small_params();
  p.max_power = 0;
  CHECK_THROWS_AS(p.validate(), InvalidParams);
  p = small_params();
  p.trials = 0;
  CHECK_THROWS_AS(p.validate(), InvalidParams);
  CHECK_THROWS_AS(check_ando(QMat::from_ints(kQ, {{0, 1}, {0, 0}}),
                             QMat::from_ints(kQ, {{0, 0}, {1, 0}}), small_params()),
                  NotCommuting);
}

TEST_CASE("negative path") {
  const auto rej = check_negative(QMat::from_ints(kQ, {{0, 1}, {0, 0}}), QMat::from_ints(kQ, {{0, 0}, {1, 0}}));
  CHECK(rej.pass);
  CHECK(rej.params["rejected"] == "NotCommuting");
  const auto skip = check_negative(QMat::identity(kQ, 2), QMat::identity(kQ, 2));
  CHECK(skip.pass);
  CHECK(skip.params["skipped"] == true);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto [t, s] = gen_noncommuting_pair(PrimeField(5), 3, seed);
    CHECK(check_negative(t, s).pass);
  }
}

TEST_CASE("failing records carry a counterexample") {
  const auto r = detail::injectivity_record<Rationals>(
      "probe.injectivity", 2, 2, [](unsigned) { return QMat::from_ints(kQ, {{1, 1}, {1, 1}}); });
  CHECK_FALSE(r.pass);
  REQUIRE(r.counterexample.has_value());
  CHECK(r.counterexample->contains("inputs"));
  CHECK(r.counterexample->contains("expected"));
  CHECK(r.counterexample->contains("actual"));
  CHECK((*r.counterexample)["actual"]["rank"] == 1);

  Report rep;
  rep.add(CheckRecord::passed("a", json::object()));
  rep.add(r);
  CHECK_FALSE(rep.pass());
  CHECK(rep.render_text().find("[FAIL] probe.injectivity") != std::string::npos);
  CHECK(rep.render_text().find("counterexample") != std::string::npos);
}

TEST_CASE("report serialization round trip") {
  const QMat j = QMat::from_ints(kQ, {{1, 1}, {0, 1}});
  Report r = check_ando(j, j * j, small_params());
  r.add(CheckRecord::failed("zz.synthetic", {{"k", 1}}, {{"inputs", 1}, {"expected", 2}, {"actual", 3}}));
  const std::string once = r.serialize();
  const Report back = Report::from_json(json::parse(once));
  CHECK(back.serialize() == once);
  CHECK_FALSE(back.pass());
  CHECK(once.back() == '\n');

  // Order of insertion does not affect the bytes.
  Report shuffled;
  shuffled.meta = r.meta;
  for (auto it = r.checks.rbegin(); it != r.checks.rend(); ++it) shuffled.add(*it);
  CHECK(shuffled.serialize() == once);
}

TEST_CASE("report schema violations") {
  CHECK_THROWS_AS(Report::from_json(json::parse(R"({"checks": []})")), ParseError);
  CHECK_THROWS_AS(Report::from_json(json::parse(R"({"checks": [], "pass": false})")), ParseError);
  CHECK_THROWS_AS(CheckRecord::from_json(json::parse(R"({"name": "x", "pass": false})")), ParseError);
  CHECK_THROWS_AS(
      CheckRecord::from_json(json::parse(R"({"name": "x", "pass": true, "counterexample": {}})")),
      ParseError);
  CHECK_THROWS_AS(CheckRecord::from_json(json::parse(R"({"name": 3, "pass": true})")), ParseError);
}

TEST_CASE("reports are deterministic") {
  const PrimeField f(7);
  const auto [t, s] = gen_pair(f, PairRecipe{PairKind::polynomial, 3, f.spec(), 5, 3, 5});
  CHECK(check_ando(t, s, small_params()).serialize() == check_ando(t, s, small_params()).serialize());
}
