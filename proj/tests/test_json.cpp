#include <catch2/catch_amalgamated.hpp>

#include "shifted_hecke/json_io.hpp"
#include "test_helpers.hpp"

using namespace shifted_hecke;
using namespace test_helpers;
using nlohmann::json;

TEST_CASE("permutation and involution serialization") {
  CHECK(to_json(Permutation({3, 1, 2})) == json::array({3, 1, 2}));
  CHECK(to_json(Permutation::identity()) == json::array());
  CHECK(to_json(FpfInvolution({4, 3, 2, 1})) == json::array({4, 3, 2, 1}));
  CHECK(to_json(symplectic_fold({1})) == json("zero"));
  CHECK(to_json(symplectic_fold({2, 1})) == json::array({4, 3, 2, 1}));
}

TEST_CASE("tableau serialization round trip") {
  Tableau t = tab({3, 1}, {2, 3, 5, 4});
  json j = to_json(t);
  CHECK(j["kind"] == "shifted");
  CHECK(j["shape"] == json::array({3, 1}));
  CHECK(tableau_from_json(j) == t);

  SetValuedTableau q =
      svt({{1, 1, {1}}, {1, 2, {-2, 3}}, {2, 2, {4}}});
  json jq = to_json(q);
  CHECK(setvalued_from_json(jq) == q);

  // primed or multi entries are rejected for plain tableaux
  CHECK_THROWS_AS(tableau_from_json(jq), ValidationError);
}

TEST_CASE("series serialization is sorted") {
  TruncatedSeries s(2, 3);
  s.add({{0, 1}, 0}, 2);
  s.add({{1, 0}, 1}, 3);
  s.add({{1, 0}, 0}, 1);
  json j = to_json(s);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["exps"] == json::array({0, 1}));
  CHECK(j[1] == json({{"exps", {1, 0}}, {"beta", 0}, {"coeff", 1}}));
  CHECK(j[2]["beta"] == 1);
}

TEST_CASE("expansion report serialization") {
  auto report = verify_expansion(
      WordMode::symplectic(FpfInvolution({4, 3, 2, 1})), 2, 3);
  json j = to_json(report);
  CHECK(j["mode"] == "sp");
  CHECK(j["target"] == json::array({4, 3, 2, 1}));
  CHECK(j["verified"] == true);
  CHECK(j["truncation"] == json({{"vars", 2}, {"deg", 3}}));
  CHECK(j["residual"] == json::array());
  CHECK(j["coefficients"].contains("2"));
}

TEST_CASE("insertion state serialization") {
  InsertionState s{tab({2}, {2, 4}), Outer{false, 2, 4}};
  json j = to_json(s);
  CHECK(j["outer"]["side"] == "col");
  CHECK(j["outer"]["index"] == 2);
  CHECK(j["outer"]["value"] == 4);
  InsertionState term{tab({2}, {2, 4}), std::nullopt};
  CHECK(to_json(term)["outer"].is_null());
}

TEST_CASE("french rendering") {
  CHECK(render(tab({2, 1}, {2, 3, 4})) == "  4\n2 3\n");
  CHECK(render(Tableau{}) == "(empty)\n");
  CHECK(render(svt({{1, 1, {1}}, {1, 2, {-2, -3}}, {2, 2, {4}}})) ==
        "     4\n1    2'3'\n");
}
