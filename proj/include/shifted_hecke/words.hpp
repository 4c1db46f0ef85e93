#pragma once

#include <functional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "shifted_hecke/errors.hpp"
#include "shifted_hecke/permutation.hpp"

namespace shifted_hecke {

enum class Family { plain, orthogonal, symplectic };

// A target for one of the three word systems: Hecke words of a permutation,
// orthogonal Hecke words of an involution, or symplectic Hecke words of a
// fixed-point-free involution.
class WordMode {
 public:
  static WordMode plain(Permutation pi) { return WordMode(std::move(pi)); }
  static WordMode orthogonal(Involution y) { return WordMode(std::move(y)); }
  static WordMode symplectic(FpfInvolution z) { return WordMode(std::move(z)); }

  Family family() const { return static_cast<Family>(target_.index()); }

  const Permutation& plain_target() const { return std::get<0>(target_); }
  const Involution& orthogonal_target() const { return std::get<1>(target_); }
  const FpfInvolution& symplectic_target() const { return std::get<2>(target_); }

  // Member words use only letters < support_bound(): the fold is monotone in
  // Bruhat order and a letter at or beyond the bound moves irreversibly away
  // from the target.
  int support_bound() const {
    switch (family()) {
      case Family::plain: return plain_target().size();
      case Family::orthogonal: return orthogonal_target().size();
      default: return symplectic_target().support();
    }
  }

  // Common length of the minimal member words.
  int min_length() const {
    switch (family()) {
      case Family::plain: return plain_target().length();
      case Family::orthogonal: return length_stats(orthogonal_target()).ell_hat;
      default: return length_stats(symplectic_target()).ell_hat;
    }
  }

  bool is_member(const Word& w, bool reduced_only = false) const {
    if (reduced_only && static_cast<int>(w.size()) != min_length()) return false;
    switch (family()) {
      case Family::plain: return demazure_product(w) == plain_target();
      case Family::orthogonal: return orthogonal_fold(w) == orthogonal_target();
      default: {
        auto z = symplectic_fold(w);
        return z && *z == symplectic_target();
      }
    }
  }

  WordMode starred() const {
    switch (family()) {
      case Family::plain: return plain(star(plain_target()));
      case Family::orthogonal: return orthogonal(star(orthogonal_target()));
      default: return symplectic(star(symplectic_target()));
    }
  }

  bool operator==(const WordMode&) const = default;

 private:
  explicit WordMode(Permutation p) : target_(std::move(p)) {}
  explicit WordMode(Involution y) : target_(std::move(y)) {}
  explicit WordMode(FpfInvolution z) : target_(std::move(z)) {}
  std::variant<Permutation, Involution, FpfInvolution> target_;
};

struct EnumLimits {
  int max_len_cap = 10;
  long long node_budget = 50'000'000;
};

namespace detail {

template <class State, class StepFn, class HitFn>
void word_dfs(Word& prefix, const State& state, int alphabet, int max_len,
              long long& nodes, long long budget, const StepFn& step,
              const HitFn& hit) {
  hit(prefix, state);
  if (static_cast<int>(prefix.size()) >= max_len) return;
  for (int i = 1; i <= alphabet; ++i) {
    if (++nodes > budget)
      throw CapExceeded("word enumeration exceeded node budget");
    auto next = step(state, i);
    if (!next) continue;  // absorbing zero: no extension can recover
    prefix.push_back(i);
    word_dfs(prefix, *next, alphabet, max_len, nodes, budget, step, hit);
    prefix.pop_back();
  }
}

}  // namespace detail

// All member words of length <= max_len, complete over the alphabet
// [support_bound - 1].
inline std::set<Word> enumerate_words(const WordMode& mode, int max_len,
                                      const EnumLimits& limits = {}) {
  if (max_len > limits.max_len_cap)
    throw CapExceeded("max_len exceeds the configured cap");
  int alphabet = mode.support_bound() - 1;
  std::set<Word> out;
  Word prefix;
  long long nodes = 0;

  switch (mode.family()) {
    case Family::plain: {
      auto step = [](const Permutation& p, int i) {
        return std::optional<Permutation>(demazure_step(p, i));
      };
      auto hit = [&](const Word& w, const Permutation& p) {
        if (p == mode.plain_target()) out.insert(w);
      };
      detail::word_dfs(prefix, Permutation(), alphabet, max_len, nodes,
                       limits.node_budget, step, hit);
      break;
    }
    case Family::orthogonal: {
      auto step = [](const Involution& y, int i) {
        Permutation s = Permutation::transposition(i);
        return std::optional<Involution>(
            Involution(demazure_mult(demazure_mult(s, y.perm()), s)));
      };
      auto hit = [&](const Word& w, const Involution& y) {
        if (y == mode.orthogonal_target()) out.insert(w);
      };
      detail::word_dfs(prefix, Involution(), alphabet, max_len, nodes,
                       limits.node_budget, step, hit);
      break;
    }
    case Family::symplectic: {
      auto step = [](const FpfInvolution& z, int i) {
        return symplectic_step(z, i);
      };
      auto hit = [&](const Word& w, const FpfInvolution& z) {
        if (z == mode.symplectic_target()) out.insert(w);
      };
      detail::word_dfs(prefix, FpfInvolution::theta(), alphabet, max_len, nodes,
                       limits.node_budget, step, hit);
      break;
    }
  }
  return out;
}

// Atoms: the permutations whose reduced-word fibers partition the minimal
// member words.
inline std::set<Permutation> atoms(const WordMode& mode,
                                   const EnumLimits& limits = {}) {
  std::set<Permutation> out;
  for (const Word& w : enumerate_words(mode, mode.min_length(), limits))
    if (static_cast<int>(w.size()) == mode.min_length())
      out.insert(demazure_product(w));
  return out;
}

namespace detail {

// Substitution patterns for the Hecke-atom relations, acting on inverses in
// one-line notation. Triples use windows {cba, bca, cab} at every index;
// quadruples use windows {adbc, bcad, bdac} at even offsets.
inline std::vector<std::vector<int>> window_patterns(const std::vector<int>& w) {
  std::vector<int> s(w);
  std::sort(s.begin(), s.end());
  if (w.size() == 3) {
    const int a = s[0], b = s[1], c = s[2];
    std::vector<std::vector<int>> pats = {{c, b, a}, {b, c, a}, {c, a, b}};
    for (const auto& p : pats)
      if (p == w) return pats;
    return {};
  }
  const int a = s[0], b = s[1], c = s[2], d = s[3];
  std::vector<std::vector<int>> pats = {{a, d, b, c}, {b, c, a, d}, {b, d, a, c}};
  for (const auto& p : pats)
    if (p == w) return pats;
  return {};
}

inline std::set<Permutation> atom_closure(const Permutation& start, int n,
                                          bool fpf) {
  std::set<Permutation> out;
  std::vector<Permutation> queue = {start};
  out.insert(start);
  const int width = fpf ? 4 : 3;
  while (!queue.empty()) {
    Permutation x = queue.back();
    queue.pop_back();
    std::vector<int> pi(n);
    for (int i = 1; i <= n; ++i) pi[i - 1] = x.inverse()(i);
    for (int i = 0; i + width <= n; i += (fpf ? 2 : 1)) {
      std::vector<int> window(pi.begin() + i, pi.begin() + i + width);
      for (const auto& pat : window_patterns(window)) {
        if (pat == window) continue;
        std::vector<int> sigma = pi;
        std::copy(pat.begin(), pat.end(), sigma.begin() + i);
        Permutation y = Permutation(sigma).inverse();
        if (out.insert(y).second) queue.push_back(y);
      }
    }
  }
  return out;
}

}  // namespace detail

// The distinguished atom built from the cycle word of the target. The
// interleaving and inverse conventions were fixed by checking membership in
// the enumerated atom sets for every target with support <= 6: orthogonal
// targets use the word b_1 a_1 b_2 a_2 ... (fixed points contributing a
// single letter), symplectic targets use a_1 b_1 a_2 b_2 ..., and both are
// inverted.
inline Permutation min_atom(const Involution& y) {
  std::vector<int> word;
  for (int a = 1; a <= y.size(); ++a) {
    if (a > y(a)) continue;
    if (a == y(a)) word.push_back(a);
    else {
      word.push_back(y(a));
      word.push_back(a);
    }
  }
  return Permutation(std::move(word)).inverse();
}

inline Permutation min_atom(const FpfInvolution& z) {
  std::vector<int> word;
  for (int a = 1; a <= z.support(); ++a) {
    if (a > z(a)) continue;
    word.push_back(a);
    word.push_back(z(a));
  }
  return Permutation(std::move(word)).inverse();
}

inline Permutation min_atom(const WordMode& mode) {
  if (mode.family() == Family::orthogonal)
    return min_atom(mode.orthogonal_target());
  if (mode.family() == Family::symplectic)
    return min_atom(mode.symplectic_target());
  throw ValidationError("BadMode", "min_atom requires an orthogonal or "
                                   "symplectic target");
}

// Hecke atoms: the permutations whose Hecke-word fibers partition the full
// member-word set. Computed as the closure of min_atom under the window
// relation, then checked against grouping member words by Demazure product up
// to the largest length the node budget allows.
inline std::set<Permutation> hecke_atoms(const WordMode& mode,
                                         const EnumLimits& limits = {}) {
  if (mode.family() == Family::plain)
    throw ValidationError("BadMode", "hecke_atoms requires an orthogonal or "
                                     "symplectic target");
  const bool fpf = mode.family() == Family::symplectic;
  const int n = mode.support_bound();
  if (n == 0) return {Permutation::identity()};
  std::set<Permutation> closure =
      detail::atom_closure(min_atom(mode), n, fpf);

  int max_len = 0;
  for (const auto& p : closure) max_len = std::max(max_len, p.length());
  // Shrink the grouping depth until the word tree fits the budget.
  int alphabet = std::max(1, n - 1);
  int len = max_len;
  double tree = 1, total = 1;
  for (int l = 1; l <= len; ++l) {
    tree *= alphabet;
    total += tree;
    if (total > static_cast<double>(limits.node_budget)) {
      len = l - 1;
      break;
    }
  }
  std::set<Permutation> grouped;
  for (const Word& w : enumerate_words(mode, len, limits))
    grouped.insert(demazure_product(w));
  std::set<Permutation> closure_at_len;
  for (const auto& p : closure)
    if (p.length() <= len) closure_at_len.insert(p);
  if (grouped != closure_at_len)
    throw ValidationError("AtomMismatch",
                          "window closure disagrees with member-word grouping");
  return closure;
}

enum class Relation {
  braid,          // Coxeter braid congruence
  hecke_braid,    // braid plus i ~ ii
  ortho_reduced,  // braid plus first-two swap
  ortho_hecke,    // hecke_braid plus first-two swap
  sp_reduced,     // braid plus the leading a(a-1) ~ a(a+1) move
  sp_hecke,       // hecke_braid plus the leading move
  ck,             // Coxeter-Knuth moves
  k_knuth,        // ck plus a ~ aa
  sp_ck,          // ck plus leading same-parity swap and a(a-1) ~ a(a+1)
  sp_k_knuth,     // k_knuth plus the two leading moves
  ortho_ck,       // ck plus first-two swap
  ortho_k_knuth,  // k_knuth plus first-two swap
};

namespace detail {

struct MoveSet {
  bool commute = false;      // ij ~ ji for |i-j| > 1, any position
  bool braid = false;        // i(i+1)i ~ (i+1)i(i+1), any position
  bool ck_windows = false;   // cab ~ acb, bca ~ bac, aba ~ bab, any position
  bool doubling = false;     // i ~ ii, any position
  bool first_swap_any = false;
  bool first_swap_parity = false;
  bool first_shift = false;  // a(a-1) ~ a(a+1) in the first two letters
};

inline MoveSet moves_for(Relation rel) {
  MoveSet m;
  switch (rel) {
    case Relation::braid: m.commute = m.braid = true; break;
    case Relation::hecke_braid: m.commute = m.braid = m.doubling = true; break;
    case Relation::ortho_reduced:
      m.commute = m.braid = m.first_swap_any = true;
      break;
    case Relation::ortho_hecke:
      m.commute = m.braid = m.doubling = m.first_swap_any = true;
      break;
    case Relation::sp_reduced:
      m.commute = m.braid = m.first_shift = true;
      break;
    case Relation::sp_hecke:
      m.commute = m.braid = m.doubling = m.first_shift = true;
      break;
    case Relation::ck: m.ck_windows = true; break;
    case Relation::k_knuth: m.ck_windows = m.doubling = true; break;
    case Relation::sp_ck:
      m.ck_windows = m.first_swap_parity = m.first_shift = true;
      break;
    case Relation::sp_k_knuth:
      m.ck_windows = m.doubling = m.first_swap_parity = m.first_shift = true;
      break;
    case Relation::ortho_ck:
      m.ck_windows = m.first_swap_any = true;
      break;
    case Relation::ortho_k_knuth:
      m.ck_windows = m.doubling = m.first_swap_any = true;
      break;
  }
  return m;
}

inline void neighbors(const Word& w, const MoveSet& m, int len_cap,
                      int alpha_cap, const std::function<void(Word)>& emit) {
  const int n = static_cast<int>(w.size());
  auto try_emit = [&](Word v) {
    if (static_cast<int>(v.size()) > len_cap) return;
    for (int x : v)
      if (x < 1 || x > alpha_cap) return;
    emit(std::move(v));
  };

  if (m.commute) {
    for (int i = 0; i + 1 < n; ++i)
      if (std::abs(w[i] - w[i + 1]) > 1) {
        Word v = w;
        std::swap(v[i], v[i + 1]);
        try_emit(std::move(v));
      }
  }
  if (m.braid) {
    for (int i = 0; i + 2 < n; ++i)
      if (w[i] == w[i + 2] && std::abs(w[i] - w[i + 1]) == 1) {
        Word v = w;
        std::swap(v[i], v[i + 1]);
        v[i + 2] = v[i];
        try_emit(std::move(v));
      }
  }
  if (m.ck_windows) {
    for (int i = 0; i + 2 < n; ++i) {
      const int x = w[i], y = w[i + 1], z = w[i + 2];
      if (x == z && x != y) {
        // aba ~ bab for any a != b
        try_emit([&] { Word v = w; v[i] = y; v[i + 1] = x; v[i + 2] = y; return v; }());
      } else if (x != y && y != z && x != z) {
        std::vector<int> s = {x, y, z};
        std::sort(s.begin(), s.end());
        const int b = s[1];
        if (z == b) {
          // cab ~ acb
          Word v = w;
          std::swap(v[i], v[i + 1]);
          try_emit(std::move(v));
        } else if (x == b) {
          // bca ~ bac
          Word v = w;
          std::swap(v[i + 1], v[i + 2]);
          try_emit(std::move(v));
        }
      }
    }
  }
  if (m.doubling) {
    for (int i = 0; i < n; ++i) {
      if (i + 1 < n && w[i] == w[i + 1]) {
        Word v;
        v.insert(v.end(), w.begin(), w.begin() + i);
        v.insert(v.end(), w.begin() + i + 1, w.end());
        try_emit(std::move(v));
      }
      Word v;
      v.insert(v.end(), w.begin(), w.begin() + i);
      v.push_back(w[i]);
      v.insert(v.end(), w.begin() + i, w.end());
      try_emit(std::move(v));
    }
  }
  if (n >= 2) {
    if (m.first_swap_any ||
        (m.first_swap_parity && (w[0] - w[1]) % 2 == 0)) {
      Word v = w;
      std::swap(v[0], v[1]);
      try_emit(std::move(v));
    }
    if (m.first_shift) {
      if (w[0] == w[1] + 1) {
        Word v = w;
        v[1] += 2;
        try_emit(std::move(v));
      }
      if (w[0] == w[1] - 1 && w[1] >= 3) {
        Word v = w;
        v[1] -= 2;
        try_emit(std::move(v));
      }
    }
  }
}

}  // namespace detail

// Breadth-first closure of w under the relation's moves, restricted to words
// of length <= len_cap over the alphabet [alpha_cap]. Moves that would leave
// the box are not followed.
inline std::set<Word> congruence_class(const Word& w, Relation rel, int len_cap,
                                       int alpha_cap,
                                       long long node_budget = 5'000'000) {
  for (int x : w)
    if (x < 1 || x > alpha_cap)
      throw ValidationError("BadWord", "seed word leaves the alphabet cap");
  if (static_cast<int>(w.size()) > len_cap)
    throw ValidationError("BadWord", "seed word exceeds the length cap");
  const detail::MoveSet moves = detail::moves_for(rel);
  std::set<Word> seen = {w};
  std::vector<Word> queue = {w};
  while (!queue.empty()) {
    Word cur = queue.back();
    queue.pop_back();
    detail::neighbors(cur, moves, len_cap, alpha_cap, [&](Word v) {
      if (static_cast<long long>(seen.size()) >= node_budget)
        throw CapExceeded("congruence closure exceeded node budget");
      if (seen.insert(v).second) queue.push_back(std::move(v));
    });
  }
  return seen;
}

// Closure with an early exit once `target` is reached; the full class is not
// materialized when a short derivation exists.
inline bool congruent_within(const Word& w, const Word& target, Relation rel,
                             int len_cap, int alpha_cap,
                             long long node_budget = 5'000'000) {
  if (w == target) return true;
  const detail::MoveSet moves = detail::moves_for(rel);
  std::set<Word> seen = {w};
  std::vector<Word> frontier = {w}, next;
  bool found = false;
  while (!frontier.empty() && !found) {
    next.clear();
    for (const Word& cur : frontier) {
      detail::neighbors(cur, moves, len_cap, alpha_cap, [&](Word v) {
        if (found) return;
        if (v == target) { found = true; return; }
        if (static_cast<long long>(seen.size()) >= node_budget)
          throw CapExceeded("congruence closure exceeded node budget");
        if (seen.insert(v).second) next.push_back(std::move(v));
      });
      if (found) break;
    }
    frontier.swap(next);
  }
  return found;
}

// Strict descent positions of a word (1-based).
inline std::set<int> word_descents(const Word& w) {
  std::set<int> out;
  for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i)
    if (w[i] > w[i + 1]) out.insert(i + 1);
  return out;
}

}  // namespace shifted_hecke
