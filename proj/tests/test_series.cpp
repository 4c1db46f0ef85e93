#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace shifted_hecke;
using namespace test_helpers;

namespace {
const WordMode sp4321 = WordMode::symplectic(FpfInvolution({4, 3, 2, 1}));
const WordMode o321 = WordMode::orthogonal(Involution(Permutation({3, 2, 1})));
}  // namespace

TEST_CASE("series arithmetic basics") {
  TruncatedSeries s(2, 3);
  s.add({{1, 0}, 0}, 1);
  s.add({{1, 0}, 0}, -1);
  CHECK(s.is_zero());
  s.add({{2, 2}, 1}, 5);  // degree 4 > 3: truncated away
  CHECK(s.is_zero());
  s.add({{1, 1}, 2}, 7);
  CHECK(s.coeff({1, 1}, 2) == 7);
  CHECK(s.scaled_beta(1).coeff({1, 1}, 3) == 7);
  CHECK(s.scaled(3).coeff({1, 1}, 2) == 21);
}

TEST_CASE("word series of the standard examples") {
  auto one = series_from_words(WordMode::symplectic(FpfInvolution::theta()), 2, 3);
  CHECK(one.coeff({0, 0}, 0) == 1);
  CHECK(one.terms().size() == 1);

  auto s = series_from_words(sp4321, 2, 3);
  CHECK(s.coeff({1, 1}, 0) == 2);
  CHECK(s.coeff({2, 0}, 0) == 1);

  // one variable admits no strict rise over the doubled letter
  auto g1 = series_from_words(WordMode::plain(Permutation::transposition(1)), 1, 2);
  CHECK(g1.coeff({1}, 0) == 1);
  CHECK(g1.terms().size() == 1);
  // in two variables the word series equals Buch's single-box series
  auto g2 = series_from_words(WordMode::plain(Permutation::transposition(1)), 2, 2);
  CHECK(g2 == series_G_lambda({1}, 2, 2));
}

TEST_CASE("tableau-basis series") {
  auto gp1 = series_GP_lambda(StrictPartition({1}), 2, 2);
  CHECK(gp1.coeff({1, 0}, 0) == 1);
  CHECK(gp1.coeff({0, 1}, 0) == 1);
  CHECK(gp1.coeff({1, 1}, 1) == 1);
  CHECK(gp1.terms().size() == 3);

  auto g1 = series_G_lambda({1}, 1, 1);
  CHECK(g1.coeff({1}, 0) == 1);
  CHECK(g1.terms().size() == 1);

  auto gp2 = series_GP_lambda(StrictPartition({2}), 2, 2);
  CHECK(gp2.coeff({1, 1}, 0) == 2);
}

TEST_CASE("all produced series are symmetric") {
  for (auto& z : fpf_up_to(4))
    CHECK(series_from_words(WordMode::symplectic(z), 3, 4).is_symmetric());
  for (auto& y : involutions_up_to(3))
    CHECK(series_from_words(WordMode::orthogonal(y), 3, 4).is_symmetric());
  CHECK(series_GP_lambda(StrictPartition({2, 1}), 3, 5).is_symmetric());
  CHECK(series_G_lambda({2, 1}, 3, 5).is_symmetric());
}

TEST_CASE("beta zero keeps only the marked tableaux") {
  StrictPartition shape({2, 1});
  auto gp = series_GP_lambda(shape, 3, 5).beta_zero();
  TruncatedSeries marked(3, 5);
  for_each_setvalued(shape.parts(), SetFlavor::shifted_marked, 3, 5,
                     [&](const SetValuedTableau& t) {
                       std::vector<int> exps = t.weight();
                       exps.resize(3, 0);
                       marked.add({exps, 0}, 1);
                       return true;
                     });
  CHECK(gp == marked);
}

TEST_CASE("expansion coefficients") {
  auto c = expansion_coefficients(sp4321);
  CHECK(c.at({2}) == 1);
  auto co = expansion_coefficients(o321);
  CHECK(co.at({2}) == 1);
  // shapes below the minimal length are absent
  for (auto& [shape, cnt] : c) {
    int sz = 0;
    for (int p : shape) sz += p;
    CHECK(sz >= sp4321.min_length());
    CHECK(cnt > 0);
  }
}

TEST_CASE("minimal-degree coefficients count insertion tableaux") {
  for (auto& z : fpf_up_to(6)) {
    WordMode mode = WordMode::symplectic(z);
    std::map<std::vector<int>, long long> by_shape;
    std::set<Tableau> seen;
    for (const Word& w : enumerate_words(mode, mode.min_length())) {
      Tableau p = p_tableau(w, InsertionMode::sp);
      if (seen.insert(p).second)
        ++by_shape[p.shifted_shape()->parts()];
    }
    auto coeffs = expansion_coefficients(mode);
    std::map<std::vector<int>, long long> minimal;
    for (auto& [shape, cnt] : coeffs) {
      int sz = 0;
      for (int p : shape) sz += p;
      if (sz == mode.min_length()) minimal[shape] = cnt;
    }
    REQUIRE(by_shape == minimal);
  }
}

TEST_CASE("expansions verify at a small truncation") {
  CHECK(verify_expansion(sp4321, 3, 4).verified);
  CHECK(verify_expansion(o321, 3, 4).verified);
  CHECK(verify_expansion(WordMode::plain(Permutation({3, 2, 1})), 3, 4).verified);
}

TEST_CASE("star symmetry of the shifted series") {
  CHECK(star_symmetry_check(sp4321, 3, 4));
  CHECK(star_symmetry_check(WordMode::symplectic(FpfInvolution({3, 5, 1, 6, 2, 4})), 3, 4));
  CHECK(star_symmetry_check(WordMode::orthogonal(Involution(Permutation({2, 1}))), 3, 4));
  CHECK_THROWS_AS(star_symmetry_check(WordMode::plain(Permutation({2, 1})), 3, 4),
                  ValidationError);
}

TEST_CASE("conjecture scans find nothing at the acceptance caps") {
  CHECK_FALSE(conjecture_scan(InsertionMode::sp, 4, 4).has_value());
  CHECK_FALSE(conjecture_scan(InsertionMode::o, 4, 4).has_value());
  CHECK_FALSE(conjecture_scan(InsertionMode::sp, 0, 5).has_value());
}

TEST_CASE("staircase word counts match marked tableaux") {
  auto words4 = enumerate_words(WordMode::symplectic(FpfInvolution({4, 3, 2, 1})), 2);
  CHECK(words4.size() == 2);
  auto words6 = enumerate_words(WordMode::symplectic(FpfInvolution({6, 5, 4, 3, 2, 1})), 6);
  long long marked = 0;
  for_each_setvalued({4, 2}, SetFlavor::marked, 0, 6,
                     [&](const SetValuedTableau&) {
                       ++marked;
                       return true;
                     });
  CHECK(static_cast<long long>(words6.size()) == marked);
}
