#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shifted_hecke/errors.hpp"
#include "shifted_hecke/insertion.hpp"
#include "shifted_hecke/tableaux.hpp"
#include "shifted_hecke/words.hpp"

namespace shifted_hecke {

using BigInt = boost::multiprecision::cpp_int;

struct Monomial {
  std::vector<int> exps;
  int beta = 0;
  int degree() const {
    int d = 0;
    for (int e : exps) d += e;
    return d;
  }
  auto operator<=>(const Monomial&) const = default;
};

// Polynomial in x_1..x_m and beta, truncated at total x-degree max_deg. Zero
// coefficients are never stored, so equality is map equality.
class TruncatedSeries {
 public:
  TruncatedSeries(int vars, int max_deg) : vars_(vars), max_deg_(max_deg) {}

  int vars() const { return vars_; }
  int max_deg() const { return max_deg_; }
  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(Monomial m, const BigInt& c) {
    assert(static_cast<int>(m.exps.size()) == vars_ && m.beta >= 0);
    if (c == 0 || m.degree() > max_deg_) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BigInt coeff(const std::vector<int>& exps, int beta) const {
    auto it = terms_.find({exps, beta});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    assert(vars_ == o.vars_ && max_deg_ == o.max_deg_);
    for (auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    assert(vars_ == o.vars_ && max_deg_ == o.max_deg_);
    for (auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    a -= b;
    return a;
  }

  TruncatedSeries scaled_beta(int k) const {
    TruncatedSeries out(vars_, max_deg_);
    for (auto& [m, c] : terms_) {
      Monomial s = m;
      s.beta += k;
      assert(s.beta >= 0);
      out.add(std::move(s), c);
    }
    return out;
  }

  TruncatedSeries scaled(const BigInt& k) const {
    TruncatedSeries out(vars_, max_deg_);
    for (auto& [m, c] : terms_) out.add(m, c * k);
    return out;
  }

  // Keep only the beta-degree-zero part.
  TruncatedSeries beta_zero() const {
    TruncatedSeries out(vars_, max_deg_);
    for (auto& [m, c] : terms_)
      if (m.beta == 0) out.add(m, c);
    return out;
  }

  // Invariance of the coefficient map under exchanging adjacent variables.
  bool is_symmetric() const {
    for (int k = 0; k + 1 < vars_; ++k)
      for (auto& [m, c] : terms_) {
        Monomial s = m;
        std::swap(s.exps[k], s.exps[k + 1]);
        if (coeff(s.exps, s.beta) != c) return false;
      }
    return true;
  }

  bool operator==(const TruncatedSeries& o) const {
    return vars_ == o.vars_ && max_deg_ == o.max_deg_ && terms_ == o.terms_;
  }

 private:
  int vars_, max_deg_;
  std::map<Monomial, BigInt> terms_;
};

// Sum of beta^(l(w) - l0) x^i over member words w of length <= d and
// compatible sequences i with entries <= m; exact at every x-degree <= d
// since each letter contributes one variable.
inline TruncatedSeries series_from_words(const WordMode& mode, int m, int d,
                                         const EnumLimits& limits = {}) {
  TruncatedSeries out(m, d);
  const int l0 = mode.min_length();
  std::vector<int> exps(m, 0);
  for (const Word& w : enumerate_words(mode, d, limits)) {
    const int beta = static_cast<int>(w.size()) - l0;
    std::function<void(size_t, int)> rec = [&](size_t j, int lo) {
      if (j == w.size()) {
        out.add({exps, beta}, 1);
        return;
      }
      for (int v = lo; v <= m; ++v) {
        ++exps[v - 1];
        int next_lo = v;
        if (j + 1 < w.size() && w[j] <= w[j + 1]) next_lo = v + 1;
        rec(j + 1, next_lo);
        --exps[v - 1];
      }
    };
    rec(0, 1);
  }
  return out;
}

// Buch's set-valued generating function of an unshifted shape.
inline TruncatedSeries series_G_lambda(const std::vector<int>& lambda, int m,
                                       int d) {
  TruncatedSeries out(m, d);
  int size = 0;
  for (int p : lambda) size += p;
  for_each_setvalued(lambda, SetFlavor::young_sets, m, d,
                     [&](const SetValuedTableau& t) {
                       std::vector<int> exps = t.weight();
                       exps.resize(m, 0);
                       out.add({exps, t.length() - size}, 1);
                       return true;
                     });
  return out;
}

// Generating function of semistandard shifted set-valued tableaux.
inline TruncatedSeries series_GP_lambda(const StrictPartition& lambda, int m,
                                        int d) {
  TruncatedSeries out(m, d);
  for_each_setvalued(lambda.parts(), SetFlavor::shifted_sets, m, d,
                     [&](const SetValuedTableau& t) {
                       std::vector<int> exps = t.weight();
                       exps.resize(m, 0);
                       out.add({exps, t.length() - lambda.size()}, 1);
                       return true;
                     });
  return out;
}

namespace detail {

inline std::vector<std::vector<int>> strict_partitions_with(int max_part) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int hi) {
    out.push_back(cur);
    for (int p = hi; p >= 1; --p) {
      cur.push_back(p);
      rec(p - 1);
      cur.pop_back();
    }
  };
  rec(max_part);
  return out;
}

inline std::vector<std::vector<int>> partitions_in_box(int max_part,
                                                       int max_rows) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int hi) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_rows) return;
    for (int p = hi; p >= 1; --p) {
      cur.push_back(p);
      rec(p);
      cur.pop_back();
    }
  };
  rec(max_part);
  return out;
}

}  // namespace detail

// Counts of increasing tableaux of each shape whose row reading words are
// member words; for the plain family the target is inverted and the diagrams
// are unshifted. Shapes run over everything the entry bound < support allows.
inline std::map<std::vector<int>, long long> expansion_coefficients(
    const WordMode& mode, const EnumLimits& limits = {}) {
  (void)limits;
  std::map<std::vector<int>, long long> out;
  const int n = mode.support_bound();
  if (n == 0) {
    out[{}] = 1;
    return out;
  }
  const bool plain = mode.family() == Family::plain;
  const WordMode counted =
      plain ? WordMode::plain(mode.plain_target().inverse()) : mode;
  const auto shapes = plain ? detail::partitions_in_box(n - 1, n - 1)
                            : detail::strict_partitions_with(n - 1);
  for (const auto& shape : shapes) {
    if (shape.empty()) {
      if (counted.min_length() == 0) out[shape] = 1;
      continue;
    }
    long long count = 0;
    for (const Tableau& t : enumerate_increasing(
             shape, plain ? DiagramKind::young : DiagramKind::shifted, n - 1))
      if (counted.is_member(row_word(t))) ++count;
    if (count > 0) out[shape] = count;
  }
  return out;
}

struct ExpansionReport {
  WordMode mode;
  std::map<std::vector<int>, long long> coefficients;
  bool verified = false;
  int vars = 0, deg = 0;
  TruncatedSeries residual{0, 0};
};

// Residual of the expansion of the word-system series over the tableau-basis
// series, all computed at the same truncation.
inline ExpansionReport verify_expansion(const WordMode& mode, int m, int d,
                                        const EnumLimits& limits = {}) {
  ExpansionReport report{mode, {}, false, m, d, TruncatedSeries(m, d)};
  TruncatedSeries lhs = series_from_words(mode, m, d, limits);
  const int l0 = mode.min_length();
  auto coeffs = expansion_coefficients(mode, limits);
  TruncatedSeries rhs(m, d);
  for (auto& [shape, c] : coeffs) {
    int size = 0;
    for (int p : shape) size += p;
    if (size > d) continue;
    report.coefficients[shape] = c;
    TruncatedSeries basis =
        mode.family() == Family::plain
            ? series_G_lambda(shape, m, d)
            : series_GP_lambda(StrictPartition(shape), m, d);
    rhs += basis.scaled_beta(size - l0).scaled(c);
  }
  report.residual = lhs - rhs;
  report.verified = report.residual.is_zero();
  return report;
}

// The shifted series is invariant under the reversal conjugation of its
// target.
inline bool star_symmetry_check(const WordMode& mode, int m, int d,
                                const EnumLimits& limits = {}) {
  if (mode.family() == Family::plain)
    throw ValidationError("BadMode",
                          "star symmetry applies to o and sp targets");
  return series_from_words(mode, m, d, limits) ==
         series_from_words(mode.starred(), m, d, limits);
}

// Scan for a pair of (FPF-)involution words that are Coxeter-Knuth equivalent
// but have different insertion tableaux. Classes are closed with two letters
// of alphabet slack so that within-cap words connected through slightly
// larger letters still group together.
inline std::optional<std::pair<Word, Word>> conjecture_scan(
    InsertionMode which, int len_cap, int alpha_cap,
    long long node_budget = 20'000'000) {
  double tree = 1, total = 1;
  for (int l = 1; l <= len_cap; ++l) {
    tree *= alpha_cap;
    total += tree;
    if (total > static_cast<double>(node_budget))
      throw CapExceeded("conjecture scan exceeds node budget");
  }

  std::vector<Word> reduced;
  Word cur;
  std::function<void()> rec = [&]() {
    if (!cur.empty()) {
      if (which == InsertionMode::sp) {
        auto z = symplectic_fold(cur);
        if (z && static_cast<int>(cur.size()) == length_stats(*z).ell_hat)
          reduced.push_back(cur);
      } else {
        Involution y = orthogonal_fold(cur);
        if (static_cast<int>(cur.size()) == length_stats(y).ell_hat)
          reduced.push_back(cur);
      }
    }
    if (static_cast<int>(cur.size()) >= len_cap) return;
    for (int i = 1; i <= alpha_cap; ++i) {
      cur.push_back(i);
      rec();
      cur.pop_back();
    }
  };
  rec();

  const Relation rel =
      which == InsertionMode::sp ? Relation::sp_ck : Relation::ortho_ck;
  std::set<Word> wordset(reduced.begin(), reduced.end());
  std::set<Word> grouped;
  for (const Word& w : reduced) {
    if (grouped.count(w)) continue;
    std::set<Word> cls = congruence_class(w, rel, len_cap, alpha_cap + 2,
                                          node_budget);
    Tableau p = p_tableau(w, which);
    std::optional<std::pair<Word, Word>> bad;
    for (const Word& v : cls) {
      if (!wordset.count(v)) continue;
      grouped.insert(v);
      if (!(p_tableau(v, which) == p)) {
        bad = std::minmax(w, v);
      }
    }
    if (bad) return bad;
  }
  return std::nullopt;
}

}  // namespace shifted_hecke
