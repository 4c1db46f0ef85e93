#include <catch2/catch_amalgamated.hpp>
#include <map>

#include "test_helpers.hpp"

using namespace shifted_hecke;
using namespace test_helpers;

TEST_CASE("one-line storage trims trailing fixed points") {
  CHECK(Permutation({2, 1, 3}) == Permutation({2, 1}));
  CHECK(Permutation({1, 2, 3}).is_identity());
  CHECK(Permutation({3, 1, 2, 4}).oneline() == std::vector<int>{3, 1, 2});
  CHECK_THROWS_AS(Permutation({1, 1}), ValidationError);
}

TEST_CASE("demazure product of words") {
  CHECK(demazure_product({1, 2, 1}) == Permutation({3, 2, 1}));
  CHECK(demazure_product({}) == Permutation::identity());
  CHECK(demazure_product({1, 1, 2, 1}) == Permutation({3, 2, 1}));
}

TEST_CASE("demazure product is associative") {
  auto perms = permutations_of(4);
  const int n = static_cast<int>(perms.size());
  std::map<Permutation, int> index;
  for (int i = 0; i < n; ++i) index[perms[i]] = i;
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mult[a][b] = index.at(demazure_mult(perms[a], perms[b]));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        REQUIRE(mult[mult[a][b]][c] == mult[a][mult[b][c]]);
}

TEST_CASE("demazure length is monotone along words") {
  for_each_word(5, 6, [](const Word& w) {
    if (w.empty()) return;
    Word prefix(w.begin(), w.end() - 1);
    REQUIRE(demazure_product(w).length() >= demazure_product(prefix).length());
  });
}

TEST_CASE("orthogonal fold reaches involutions") {
  CHECK(orthogonal_fold({1, 2}).perm() == Permutation({3, 2, 1}));
  CHECK(orthogonal_fold({1, 1, 2}).perm() == Permutation({3, 2, 1}));
  CHECK(orthogonal_fold({}).perm().is_identity());
  for_each_word(4, 4, [](const Word& w) {
    REQUIRE(orthogonal_fold(w).perm().is_involution());
  });
}

TEST_CASE("symplectic fold") {
  auto z = symplectic_fold({2, 1});
  REQUIRE(z.has_value());
  CHECK(*z == FpfInvolution({4, 3, 2, 1}));
  CHECK_FALSE(symplectic_fold({1}).has_value());

  // direct evaluation of the swap case: conjugate theta by s_2
  auto z2 = symplectic_fold({2});
  REQUIRE(z2.has_value());
  std::vector<int> conj(4);
  Permutation s2 = Permutation::transposition(2);
  for (int x = 1; x <= 4; ++x)
    conj[x - 1] = s2(FpfInvolution::theta()(s2(x)));
  CHECK(*z2 == FpfInvolution(conj));
}

TEST_CASE("words starting with an odd letter are killed") {
  for_each_word(5, 4, [](const Word& w) {
    if (!w.empty() && w.front() % 2 == 1)
      REQUIRE_FALSE(symplectic_fold(w).has_value());
  });
}

TEST_CASE("fpf involutions store the minimal even prefix") {
  CHECK(FpfInvolution({2, 1}) == FpfInvolution::theta());
  CHECK(FpfInvolution({2, 1, 4, 3, 6, 5}).is_theta());
  CHECK(FpfInvolution({4, 3, 2, 1}).support() == 4);
  CHECK_THROWS_AS(FpfInvolution({2, 1, 3}), ValidationError);
  CHECK_THROWS_AS(FpfInvolution({1, 2}), ValidationError);
  // extension beyond the prefix follows theta
  FpfInvolution z({4, 3, 2, 1});
  CHECK(z(5) == 6);
  CHECK(z(6) == 5);
}

TEST_CASE("fold states never acquire a fixed point below their support") {
  for_each_word(5, 5, [](const Word& w) {
    auto z = symplectic_fold(w);
    if (!z) return;
    for (int i = 1; i <= z->support(); ++i) REQUIRE((*z)(i) != i);
  });
}

TEST_CASE("length statistics") {
  auto s321 = length_stats(Involution(Permutation({3, 2, 1})));
  CHECK(s321.ell == 3);
  CHECK(s321.ell_hat == 2);
  CHECK(s321.kappa == 1);

  auto s4321 = length_stats(FpfInvolution({4, 3, 2, 1}));
  CHECK(s4321.ell == 6);
  CHECK(s4321.ell_hat == 2);
  CHECK(s4321.kappa == 2);

  auto sid = length_stats(Involution(Permutation::identity()));
  CHECK(sid.ell == 0);
  CHECK(sid.ell_hat == 0);
  CHECK(sid.kappa == 0);
}

TEST_CASE("ell_hat equals the minimal member word length") {
  for (auto& y : involutions_up_to(4)) {
    auto words = enumerate_words(WordMode::orthogonal(y), 6);
    int shortest = 100;
    for (auto& w : words) shortest = std::min(shortest, (int)w.size());
    REQUIRE(shortest == length_stats(y).ell_hat);
  }
  for (auto& z : fpf_up_to(6)) {
    auto words = enumerate_words(WordMode::symplectic(z), 6);
    int shortest = 100;
    for (auto& w : words) shortest = std::min(shortest, (int)w.size());
    REQUIRE(shortest == length_stats(z).ell_hat);
  }
}

TEST_CASE("star involution") {
  CHECK(star(FpfInvolution({4, 3, 2, 1})) == FpfInvolution({4, 3, 2, 1}));
  CHECK(star(Permutation::identity()).is_identity());

  // conjugating s_1 by 321: explicit oracle
  Permutation w0({3, 2, 1});
  Permutation expect = w0 * Permutation::transposition(1) * w0;
  CHECK(star(Permutation({2, 1}), 3) == expect);
  CHECK(expect == Permutation({1, 3, 2}));

  // Conjugation by the reversal of a stated n is an involution. The
  // canonical minimal bound can shrink (132 stars to 21), so double-starring
  // at the minimal bound does not return in general.
  for (auto& p : permutations_of(6)) CHECK(star(star(p, 6), 6) == p);
  for (auto& y : involutions_up_to(6)) CHECK(star(star(y, 6), 6) == y);
  for (auto& z : fpf_up_to(6)) {
    FpfInvolution once = star(z);
    if (once.support() == z.support()) CHECK(star(once) == z);
    CHECK(star(star(once)) == once);
  }
  CHECK(star(Permutation({1, 3, 2})) == Permutation({2, 1}));
}

TEST_CASE("star maps member words by letter reversal") {
  FpfInvolution z({3, 5, 1, 6, 2, 4});
  const int n = z.support();
  auto words = enumerate_words(WordMode::symplectic(z), 4);
  auto words_star = enumerate_words(WordMode::symplectic(star(z)), 4);
  std::set<Word> mapped;
  for (auto& w : words) {
    Word v;
    for (int x : w) v.push_back(n - x);
    mapped.insert(v);
  }
  CHECK(mapped == words_star);
}
