#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace shifted_hecke;
using namespace test_helpers;

TEST_CASE("reading words in the four orders") {
  Tableau t(std::map<Cell, int>{{{1, 1}, 1}, {{1, 2}, 2}, {{2, 3}, 3}, {{3, 2}, 4}});
  CHECK(reading_word(t, ReadingOrder::row) == Word{4, 3, 1, 2});
  CHECK(reading_word(t, ReadingOrder::col) == Word{1, 4, 2, 3});
  CHECK(reading_word(t, ReadingOrder::ne) == Word{4, 1, 2, 3});
  CHECK(reading_word(t, ReadingOrder::sw) == Word{4, 1, 3, 2});

  Tableau single(std::map<Cell, int>{{{1, 1}, 5}});
  for (auto order : {ReadingOrder::row, ReadingOrder::col, ReadingOrder::ne,
                     ReadingOrder::sw})
    CHECK(reading_word(single, order) == Word{5});

  CHECK(row_word(tab({3, 1}, {2, 3, 4, 4})) == Word{4, 2, 3, 4});
}

TEST_CASE("closure predicates") {
  for (auto& t : enumerate_increasing_shifted(StrictPartition({3, 2}), 5)) {
    auto cp = closure_predicates(t);
    CHECK(cp.row_column);
    CHECK(cp.row_diagonal);
    CHECK(cp.column_diagonal);
  }
  auto empty = closure_predicates(Tableau{});
  CHECK((empty.row_column && empty.row_diagonal && empty.column_diagonal));
  Tableau gap(std::map<Cell, int>{{{1, 1}, 1}, {{2, 3}, 2}});
  CHECK_FALSE(closure_predicates(gap).row_column);
}

TEST_CASE("corners") {
  auto c2 = corners(tab({2}, {1, 2}));
  CHECK(c2.inner == std::set<Cell>{{1, 2}});
  CHECK(c2.outer == std::set<Cell>{{1, 3}, {2, 2}});
  auto c0 = corners(Tableau{});
  CHECK(c0.inner.empty());
  CHECK(c0.outer == std::set<Cell>{{1, 1}});
  auto c42 = corners(tab({4, 2}, {1, 2, 3, 4, 5, 6}));
  CHECK(c42.inner == std::set<Cell>{{1, 4}, {2, 3}});

  // oracle: removing an inner corner or adding an outer corner keeps a
  // shifted domain, and no other position does
  Tableau t = tab({4, 2}, {1, 2, 3, 4, 5, 6});
  auto cs = corners(t);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 6; ++j) {
      if (t.has(i, j))
        CHECK(t.without(i, j).shifted_shape().has_value() ==
              (cs.inner.count({i, j}) > 0));
      else
        CHECK(t.with(i, j, 99).shifted_shape().has_value() ==
              (cs.outer.count({i, j}) > 0));
    }
}

TEST_CASE("doubling and halving") {
  CHECK(scale2(Word{3, 4, 1, 2}) == Word{6, 8, 2, 4});
  CHECK(halve(tab({3, 1}, {2, 4, 8, 6})) == tab({3, 1}, {1, 2, 4, 3}));
  CHECK(scale2(Tableau{}) == Tableau{});
  CHECK_THROWS_AS(halve(tab({1}, {3})), ValidationError);
  for (auto& t : enumerate_increasing_shifted(StrictPartition({2, 1}), 4))
    CHECK(halve(scale2(t)) == t);
}

TEST_CASE("set-valued flavors") {
  auto q = svt({{1, 1, {1, 2}}, {1, 2, {-3, 4}}, {2, 2, {5, 6}}});
  CHECK(is_standard(q));
  CHECK_FALSE(is_marked(q));
  auto marked = svt({{1, 1, {1}}, {1, 2, {-2}}});
  CHECK(is_marked(marked));
  // primes are not allowed on the diagonal
  CHECK_FALSE(is_standard(svt({{1, 1, {-1}}})));
  // the weak tableau from the running example, with a doubled entry
  auto weak = svt({{1, 1, {1, 2}}, {1, 2, {2, 2}}, {1, 3, {-3, -6}},
                   {2, 2, {5}}, {2, 3, {-6, 6}}});
  CHECK(is_semistandard_weak(weak));
  CHECK_FALSE(is_semistandard_set(weak));
  CHECK(weak.weight() == std::vector<int>{1, 3, 1, 0, 1, 3});
}

TEST_CASE("tableau descents") {
  auto bigq = svt({{1, 1, {1}}, {1, 2, {-2}}, {1, 3, {3}}, {1, 4, {-4}},
                   {1, 5, {5}}, {1, 6, {-10}}, {2, 2, {6}}, {2, 3, {-7}},
                   {2, 4, {-9}}, {2, 5, {-12}}, {3, 3, {8}}, {3, 4, {-11}}});
  CHECK(tableau_descents(bigq) == std::set<int>{1, 3, 5, 6, 8, 9, 11});
  CHECK(tableau_descents(svt({{1, 1, {1}}})).empty());
  // 1 with 2' present is a descent
  auto q = svt({{1, 1, {1}}, {1, 2, {-2, -3}}, {2, 2, {4}}});
  CHECK(tableau_descents(q).count(1) == 1);
  CHECK_THROWS_AS(tableau_descents(svt({{1, 1, {-1}}})), ValidationError);
}

TEST_CASE("descents and their complement partition the positions") {
  for (auto shape : std::vector<std::vector<int>>{{1}, {2}, {2, 1}, {3}, {3, 1}})
    for_each_setvalued(shape, SetFlavor::standard, 0, 6,
                       [&](const SetValuedTableau& q) {
                         auto des = tableau_descents(q);
                         auto non = tableau_non_descents(q);
                         for (int i = 1; i < q.length(); ++i)
                           REQUIRE((des.count(i) + non.count(i)) == 1);
                         return true;
                       });
}

TEST_CASE("standardization") {
  auto qwi = svt({{1, 1, {1}}, {1, 2, {-2}}, {1, 3, {2}}, {1, 4, {-3}},
                  {1, 5, {3}}, {1, 6, {-8}}, {2, 2, {4}}, {2, 3, {-5}},
                  {2, 4, {-6}}, {2, 5, {-9}}, {3, 3, {5}}, {3, 4, {-8}}});
  auto bigq = svt({{1, 1, {1}}, {1, 2, {-2}}, {1, 3, {3}}, {1, 4, {-4}},
                   {1, 5, {5}}, {1, 6, {-10}}, {2, 2, {6}}, {2, 3, {-7}},
                   {2, 4, {-9}}, {2, 5, {-12}}, {3, 3, {8}}, {3, 4, {-11}}});
  auto r = standardize(qwi);
  CHECK(r.standard == bigq);
  CHECK(r.sequence == std::vector<int>{1, 2, 2, 3, 3, 4, 5, 5, 6, 8, 8, 9});
  CHECK(relabel(r.standard, r.sequence) == qwi);

  auto single = standardize(svt({{1, 1, {2, 2}}}));
  CHECK(single.standard == svt({{1, 1, {1, 2}}}));
  CHECK(single.sequence == std::vector<int>{2, 2});

  // marked tableau with distinct values standardizes to itself up to
  // relabeling
  auto m = svt({{1, 1, {1}}, {1, 2, {3}}});
  auto rm = standardize(m);
  CHECK(rm.standard == svt({{1, 1, {1}}, {1, 2, {2}}}));
  CHECK(rm.sequence == std::vector<int>{1, 3});

  CHECK_THROWS_AS(standardize(svt({{1, 1, {-1}}})), ValidationError);
}

TEST_CASE("standardization round-trips exhaustively") {
  for (auto shape : std::vector<std::vector<int>>{{1}, {2}, {2, 1}, {3}, {3, 1}, {4}}) {
    std::set<std::pair<SetValuedTableau, std::vector<int>>> images;
    long long total = 0;
    for_each_setvalued(shape, SetFlavor::shifted_weak, 4, 6,
                       [&](const SetValuedTableau& q) {
                         ++total;
                         auto r = standardize(q);
                         REQUIRE(is_standard(r.standard));
                         REQUIRE(relabel(r.standard, r.sequence) == q);
                         REQUIRE(images.insert({r.standard, r.sequence}).second);
                         return true;
                       });
    REQUIRE(total == static_cast<long long>(images.size()));
  }
}

TEST_CASE("increasing tableau enumeration") {
  auto inc = enumerate_increasing_shifted(StrictPartition({2}), 3);
  REQUIRE(inc.size() == 3);
  CHECK(inc[0] == tab({2}, {1, 2}));
  CHECK(inc[1] == tab({2}, {1, 3}));
  CHECK(inc[2] == tab({2}, {2, 3}));
  CHECK(enumerate_increasing_shifted(StrictPartition({1}), 1).size() == 1);
  CHECK(enumerate_increasing_shifted(StrictPartition({3, 1}), 4).size() == 6);

  // brute-force oracle on the unshifted variant
  auto young = enumerate_increasing({2, 2}, DiagramKind::young, 3);
  int brute = 0;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c)
        for (int d = 1; d <= 3; ++d)
          if (a < b && c < d && a < c && b < d) ++brute;
  CHECK(static_cast<int>(young.size()) == brute);
}

TEST_CASE("set-valued enumeration matches a brute-force filter") {
  // shifted shape (2), marked-semistandard singletons, values <= 2
  auto marked = enumerate_setvalued({2}, SetFlavor::shifted_marked, 2, 2);
  std::set<SetValuedTableau> expect;
  for (int a : {2, 4})            // codes of 1, 2 (diagonal: unprimed)
    for (int b = 1; b <= 4; ++b)  // codes of 1', 1, 2', 2
      if (a <= b && b != 1) {
        std::map<Cell, std::vector<MarkedLetter>> m{
            {{1, 1}, {MarkedLetter::from_code(a)}},
            {{1, 2}, {MarkedLetter::from_code(b)}}};
        SetValuedTableau cand(m);
        if (is_semistandard_weak(cand)) expect.insert(cand);
      }
  CHECK(std::set<SetValuedTableau>(marked.begin(), marked.end()) == expect);
  CHECK(expect.count(svt({{1, 1, {1}}, {1, 2, {2}}})) == 1);
  CHECK(expect.count(svt({{1, 1, {1}}, {1, 2, {-2}}})) == 1);

  // too-small length budget yields nothing
  CHECK(enumerate_setvalued({2, 1}, SetFlavor::shifted_sets, 3, 2).empty());

  // unshifted single box with sets over {1,2}
  auto g = enumerate_setvalued({1}, SetFlavor::young_sets, 2, 2);
  CHECK(g.size() == 3);
}

TEST_CASE("the four reading words are Coxeter-Knuth equivalent") {
  // every increasing shifted tableau with at most 8 cells and entries <= 8
  long long checked = 0;
  std::function<void(std::vector<int>&, int)> shapes = [&](std::vector<int>& sh,
                                                           int next) {
    int total = 0;
    for (int p : sh) total += p;
    if (!sh.empty()) {
      for (auto& t :
           enumerate_increasing_shifted(StrictPartition(sh), 8)) {
        Word row = reading_word(t, ReadingOrder::row);
        const int cap = static_cast<int>(row.size());
        for (auto order :
             {ReadingOrder::col, ReadingOrder::ne, ReadingOrder::sw})
          REQUIRE(congruent_within(row, reading_word(t, order), Relation::ck,
                                   cap, 8));
        ++checked;
      }
    }
    for (int p = next; p >= 1; --p) {
      if (total + p > 8) continue;
      sh.push_back(p);
      shapes(sh, p - 1);
      sh.pop_back();
    }
  };
  std::vector<int> sh;
  shapes(sh, 8);
  CHECK(checked > 1000);
}
