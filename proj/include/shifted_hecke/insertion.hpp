#pragma once

#include <cassert>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "shifted_hecke/errors.hpp"
#include "shifted_hecke/permutation.hpp"
#include "shifted_hecke/tableaux.hpp"
#include "shifted_hecke/words.hpp"

namespace shifted_hecke {

enum class StepKind { R1, R2, R3, R4, D1, D2, D3, D4, C1, C2, C3, C4 };
enum class InverseKind {
  iR1, iR2, iR3, iR4, iD1, iD2, iD3, iD4, iC1, iC2, iC3a, iC3b, iC4
};

inline const char* to_string(StepKind k) {
  static const char* names[] = {"R1", "R2", "R3", "R4", "D1", "D2",
                                "D3", "D4", "C1", "C2", "C3", "C4"};
  return names[static_cast<int>(k)];
}
inline const char* to_string(InverseKind k) {
  static const char* names[] = {"iR1", "iR2", "iR3",  "iR4",  "iD1", "iD2", "iD3",
                                "iD4", "iC1", "iC2", "iC3a", "iC3b", "iC4"};
  return names[static_cast<int>(k)];
}

// The outer box of a non-terminal state: either at the far right of a row or
// at the far top of a column. The ambient frame is implicit; only the side,
// index and value matter.
struct Outer {
  bool in_row = true;
  int index = 1;
  int value = 1;
  bool operator==(const Outer&) const = default;
  auto operator<=>(const Outer&) const = default;
};

struct InsertionState {
  Tableau base;
  std::optional<Outer> outer;

  bool terminal() const { return !outer.has_value(); }
  bool initial() const {
    return outer && outer->in_row && outer->index == 1;
  }
  bool operator==(const InsertionState&) const = default;
  auto operator<=>(const InsertionState&) const = default;
};

struct Step {
  StepKind kind;
  Cell pos;
  bool operator==(const Step&) const = default;
};

// Reading word of a state: the outer box sits beyond every base row/column.
inline Tableau combined_tableau(const InsertionState& s) {
  if (!s.outer) return s.base;
  if (s.outer->in_row)
    return s.base.with(s.outer->index, s.base.columns() + 2, s.outer->value);
  return s.base.with(s.base.rows() + 2, s.outer->index, s.outer->value);
}

// Row word for terminal and row-outer states, column word for column-outer
// states.
inline Word state_word(const InsertionState& s) {
  if (s.outer && !s.outer->in_row)
    return column_word(combined_tableau(s));
  return row_word(combined_tableau(s));
}

// The unique outgoing edge of the forward transition graph.
inline std::pair<Step, InsertionState> forward_step(const InsertionState& U) {
  if (U.terminal()) throw terminal_state("terminal states have no forward edge");
  const Tableau& T = U.base;
  const int b = U.outer->value;

  if (U.outer->in_row) {
    const int i = U.outer->index;
    int x = 0;
    for (int c = i; T.has(i, c); ++c)
      if (*T.value(i, c) > b) { x = c; break; }
    if (x == 0) {
      // b is maximal in its row
      const int j = i + T.row_length(i);
      Tableau cand = T.with(i, j, b);
      if (cand.is_increasing_shifted())
        return {{StepKind::R1, {i, j}}, {std::move(cand), std::nullopt}};
      return {{StepKind::R2, {i, j}}, {T, std::nullopt}};
    }
    if (x == i) {
      const int d = *T.value(i, i);
      if ((d - b) % 2 == 0) {
        Tableau cand = T.with(i, i, b);
        if (cand.is_increasing())
          return {{StepKind::D3, {i, i}},
                  {std::move(cand), Outer{false, i + 1, d}}};
        return {{StepKind::D2, {i, i}}, {T, Outer{false, i + 1, d}}};
      }
      return {{StepKind::D4, {i, i}}, {T, Outer{false, i + 1, d + 1}}};
    }
    const int old = *T.value(i, x);
    Tableau cand = T.with(i, x, b);
    if (cand.is_increasing())
      return {{StepKind::R4, {i, x}},
              {std::move(cand), Outer{true, i + 1, old}}};
    if (x == i + 1 && T.row_length(i + 1) == 0)
      return {{StepKind::D1, {i, i + 1}}, {T, Outer{false, i + 1, old}}};
    return {{StepKind::R3, {i, x}}, {T, Outer{true, i + 1, old}}};
  }

  const int j = U.outer->index;
  int x = 0;
  for (int r = 1; T.has(r, j); ++r)
    if (*T.value(r, j) > b) { x = r; break; }
  if (x == 0) {
    const int i = T.column_height(j) + 1;
    Tableau cand = T.with(i, j, b);
    if (cand.is_increasing_shifted())
      return {{StepKind::C1, {i, j}}, {std::move(cand), std::nullopt}};
    return {{StepKind::C2, {i, j}}, {T, std::nullopt}};
  }
  const int old = *T.value(x, j);
  Tableau cand = T.with(x, j, b);
  if (cand.is_increasing())
    return {{StepKind::C4, {x, j}},
            {std::move(cand), Outer{false, j + 1, old}}};
  return {{StepKind::C3, {x, j}}, {T, Outer{false, j + 1, old}}};
}

struct BumpRecord {
  std::vector<Cell> path;
  std::vector<StepKind> kinds;
  // Number of row-bumped positions: the prefix through the first diagonal
  // position, or the whole path when no position is diagonal.
  int split = 0;
};

inline int compute_split(const std::vector<Cell>& path) {
  for (size_t k = 0; k < path.size(); ++k)
    if (path[k].row == path[k].col) return static_cast<int>(k) + 1;
  return static_cast<int>(path.size());
}

// Insert a into T along the forward transition graph, starting from the
// initial state with outer value a in row one.
inline std::pair<Tableau, BumpRecord> sp_insert(const Tableau& T, int a) {
  assert(T.is_increasing_shifted());
  InsertionState state{T, Outer{true, 1, a}};
  BumpRecord rec;
  const int guard = std::max(T.rows(), T.columns()) + 3;
  while (!state.terminal()) {
    assert(static_cast<int>(rec.path.size()) <= guard);
    auto [step, next] = forward_step(state);
    rec.path.push_back(step.pos);
    rec.kinds.push_back(step.kind);
    state = std::move(next);
  }
  rec.split = compute_split(rec.path);
  return {state.base, std::move(rec)};
}

// Insertion with doubled entries; positions of the bumping path coincide with
// the doubled walk.
inline std::pair<Tableau, BumpRecord> o_insert(const Tableau& T, int a) {
  auto [doubled, rec] = sp_insert(scale2(T), 2 * a);
  return {halve(doubled), std::move(rec)};
}

enum class InsertionMode { sp, o };

inline Tableau p_tableau(const Word& w, InsertionMode mode) {
  Tableau t;
  if (mode == InsertionMode::sp) {
    for (int a : w) t = sp_insert(t, a).first;
    return t;
  }
  for (int a : w) t = sp_insert(t, 2 * a).first;
  return halve(t);
}

namespace detail {

inline void record_in_q(SetValuedTableau& q, int n, const Step& last) {
  switch (last.kind) {
    case StepKind::R1:
      q.add(last.pos, unprimed(n));
      return;
    case StepKind::C1:
      q.add(last.pos, primed(n));
      return;
    case StepKind::R2: {
      int col = last.pos.col - 1, row = 0;
      for (auto& [cell, _] : q.cells())
        if (cell.col == col) row = std::max(row, cell.row);
      if (row == 0) throw not_symplectic("recording rule has no target box");
      q.add({row, col}, unprimed(n));
      return;
    }
    case StepKind::C2: {
      int row = last.pos.row - 1, col = 0;
      for (auto& [cell, _] : q.cells())
        if (cell.row == row) col = std::max(col, cell.col);
      if (col == 0) throw not_symplectic("recording rule has no target box");
      q.add({row, col}, primed(n));
      return;
    }
    default:
      throw not_symplectic("walk ended in a diagonal transition");
  }
}

}  // namespace detail

struct PQPair {
  Tableau p;
  SetValuedTableau q;
  bool operator==(const PQPair&) const = default;
};

// The insertion and recording tableaux of w. In sp mode the word must be a
// symplectic Hecke word for the recording tableau to be defined; in o mode
// every word is accepted (its doubling has all even letters).
inline PQPair p_and_q(const Word& w, InsertionMode mode) {
  Word work = mode == InsertionMode::sp ? w : scale2(w);
  if (!symplectic_fold(work))
    throw not_symplectic("word is not a symplectic Hecke word");
  Tableau p;
  SetValuedTableau q;
  for (size_t n = 0; n < work.size(); ++n) {
    auto [next, rec] = sp_insert(p, work[n]);
    p = std::move(next);
    detail::record_in_q(q, static_cast<int>(n) + 1,
                        {rec.kinds.back(), rec.path.back()});
  }
  assert(is_standard(q));
  if (mode == InsertionMode::o) p = halve(p);
  return {std::move(p), std::move(q)};
}

// ---------------------------------------------------------------------------
// Admissibility

inline bool is_weakly_admissible(const InsertionState& s) {
  if (s.terminal()) return true;
  const Tableau& T = s.base;
  const int b = s.outer->value;
  if (s.outer->in_row) {
    const int i = s.outer->index;
    if (i == 1) return true;
    for (int x = i; T.has(i - 1, x); ++x)
      if (*T.value(i - 1, x) <= b && b < T.value_or_inf(i, x)) return true;
    return false;
  }
  const int j = s.outer->index;
  if (T.value(j - 1, j) == b) return true;
  for (int x = 1; x < j && T.has(x, j - 1); ++x)
    if (*T.value(x, j - 1) <= b && b < T.value_or_inf(x, j)) return true;
  return false;
}

inline bool is_symplectic_word(const Word& w) {
  return symplectic_fold(w).has_value();
}

// Weak admissibility, a symplectic reading word, and the two corner-side
// conditions.
inline bool is_admissible(const InsertionState& s) {
  if (!is_weakly_admissible(s)) return false;
  if (!is_symplectic_word(state_word(s))) return false;
  if (s.terminal()) return true;
  const Tableau& T = s.base;
  const int b = s.outer->value;
  if (s.outer->in_row) {
    const int i = s.outer->index;
    if (T.value(i - 1, i) == b && !T.has(i, i)) return false;
    return true;
  }
  const int j = s.outer->index;
  if (T.value(j - 1, j) == b && T.has(j, j) && b % 2 == 0) return false;
  for (int x = 1; T.has(x, j - 1); ++x)
    if (*T.value(x, j - 1) == b && x == 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Inverse transitions

struct InverseSeed {
  Cell corner;
  bool row_flavor = true;
};

// One step of the inverse transition graph. Terminal states need a seed
// naming an inner or outer corner and a flavor; all other admissible
// non-initial states have a unique outgoing edge.
inline std::pair<InverseKind, InsertionState> inverse_step(
    const InsertionState& V, std::optional<InverseSeed> seed = {}) {
  if (!is_admissible(V)) throw not_admissible("state is not admissible");
  const Tableau& T = V.base;

  if (V.terminal()) {
    if (!seed) throw bad_seed("terminal states require a seed");
    const auto [i, j] = seed->corner;
    Corners cs = corners(T);
    const bool inner = cs.inner.count({i, j}) > 0;
    const bool outer = cs.outer.count({i, j}) > 0;
    if (!inner && !outer) throw bad_seed("seed is not a corner");
    if (seed->row_flavor) {
      if (inner)
        return {InverseKind::iR1,
                {T.without(i, j), Outer{true, i, *T.value(i, j)}}};
      if (i >= j) throw bad_seed("row seeds at outer corners require i < j");
      int v = std::max(T.has(i - 1, j) ? *T.value(i - 1, j) : -1,
                       T.has(i, j - 1) ? *T.value(i, j - 1) : -1);
      return {InverseKind::iR2, {T, Outer{true, i, v}}};
    }
    if (inner) {
      if (i >= j) throw bad_seed("column seeds at inner corners require i < j");
      return {InverseKind::iC1,
              {T.without(i, j), Outer{false, j, *T.value(i, j)}}};
    }
    if (i <= 1) throw bad_seed("column seeds at outer corners require i > 1");
    int v = std::max(T.has(i - 1, j) ? *T.value(i - 1, j) : -1,
                     T.has(i, j - 1) ? *T.value(i, j - 1) : -1);
    return {InverseKind::iC2, {T, Outer{false, j, v}}};
  }

  if (V.initial())
    throw not_admissible("initial states have no inverse edge");
  const int b = V.outer->value;

  if (V.outer->in_row) {
    const int i = V.outer->index;
    int x = 0;
    for (int c = i; T.has(i - 1, c); ++c)
      if (*T.value(i - 1, c) <= b) x = c;
    if (x == 0) throw not_admissible("no pivot column above the outer box");
    const int piv = *T.value(i - 1, x);
    if (piv == b) {
      int v = std::max(T.has(i - 1, x - 1) ? *T.value(i - 1, x - 1) : -1,
                       i > 2 ? (T.has(i - 2, x) ? *T.value(i - 2, x) : -1) : -1);
      return {InverseKind::iR3, {T, Outer{true, i - 1, v}}};
    }
    return {InverseKind::iR4,
            {T.with(i - 1, x, b), Outer{true, i - 1, piv}}};
  }

  const int j = V.outer->index;
  const auto diag = T.value(j - 1, j - 1);
  if (diag && *diag <= b) {
    if (*diag == b) {
      if (!T.has(j - 2, j - 1))
        throw not_admissible("missing neighbor for a diagonal-valued outer box");
      const int e = *T.value(j - 2, j - 1);
      if (e % 2 == 0) return {InverseKind::iD2, {T, Outer{true, j - 1, e}}};
      return {InverseKind::iC3a, {T, Outer{false, j - 1, e}}};
    }
    if (b % 2 == 0) {
      if (T.value(j - 1, j) == b) {
        int v = std::max(*diag, T.has(j - 2, j) ? *T.value(j - 2, j) : -1);
        return {InverseKind::iD1, {T, Outer{true, j - 1, v}}};
      }
      if (b < T.value_or_inf(j - 1, j))
        return {InverseKind::iD3,
                {T.with(j - 1, j - 1, b), Outer{true, j - 1, *diag}}};
      throw not_admissible("outer box exceeds its row bound");
    }
    return {InverseKind::iD4, {T, Outer{true, j - 1, *diag - 1}}};
  }

  int x = 0;
  for (int r = 1; r < j - 1 && T.has(r, j - 1); ++r)
    if (*T.value(r, j - 1) <= b) x = r;
  if (x == 0) throw not_admissible("no pivot row left of the outer box");
  const int piv = *T.value(x, j - 1);
  if (piv == b) {
    int v = std::max(T.has(x - 1, j - 1) ? *T.value(x - 1, j - 1) : -1,
                     T.has(x, j - 2) ? *T.value(x, j - 2) : -1);
    return {InverseKind::iC3b, {T, Outer{false, j - 1, v}}};
  }
  return {InverseKind::iC4,
          {T.with(x, j - 1, b), Outer{false, j - 1, piv}}};
}

struct InverseWalk {
  std::vector<InverseKind> kinds;
  InsertionState initial;  // has outer in row one
};

inline InverseWalk inverse_walk(const Tableau& terminal, InverseSeed seed) {
  InverseWalk out;
  auto [k0, state] = inverse_step(InsertionState{terminal, std::nullopt}, seed);
  out.kinds.push_back(k0);
  while (!state.initial()) {
    auto [k, next] = inverse_step(state);
    out.kinds.push_back(k);
    state = std::move(next);
  }
  out.initial = std::move(state);
  return out;
}

// ---------------------------------------------------------------------------
// Uninsertion

struct UninsertResult {
  Tableau p;
  SetValuedTableau q;
  Word w;
};

// One uninsertion: strips the largest label from Q, walks the inverse graph
// from the seeded corner of P, and prepends the recovered letter to w.
inline UninsertResult uninsert(const Tableau& P, const SetValuedTableau& Q,
                               const Word& w) {
  if (Q.length() == 0) throw empty_q("recording tableau is empty");
  if (!is_standard(Q)) throw not_standard("recording tableau must be standard");
  auto shape_p = P.shifted_shape();
  auto shape_q = Q.shifted_shape();
  if (!shape_p || !shape_q || !(*shape_p == *shape_q))
    throw ValidationError("ShapeMismatch", "P and Q must share a shifted shape");
  Word rp = row_word(P);
  rp.insert(rp.end(), w.begin(), w.end());
  if (!is_symplectic_word(rp))
    throw not_symplectic("row(P)w must be a symplectic Hecke word");

  const int n = Q.length();
  auto loc = Q.find_value(n);
  assert(loc);
  const auto [cell, primed_flag] = *loc;
  const bool singleton = Q.entry(cell.row, cell.col)->size() == 1;

  InverseSeed seed;
  if (singleton) {
    seed = {cell, !primed_flag};
  } else {
    Corners cs = corners(P);
    bool found = false;
    if (!primed_flag) {
      for (const Cell& c : cs.outer)
        if (c.col == cell.col + 1) { seed = {c, true}; found = true; }
    } else {
      for (const Cell& c : cs.outer)
        if (c.row == cell.row + 1) { seed = {c, false}; found = true; }
    }
    if (!found) throw not_admissible("no outer corner for the seed rule");
  }

  InverseWalk walk = inverse_walk(P, seed);
  UninsertResult out;
  out.p = walk.initial.base;
  out.q = Q;
  out.q.remove(cell, {n, primed_flag});
  out.w = Word{walk.initial.outer->value};
  out.w.insert(out.w.end(), w.begin(), w.end());
  return out;
}

// Full inverse of p_and_q.
inline Word reconstruct_word(const Tableau& P, const SetValuedTableau& Q,
                             InsertionMode mode) {
  Tableau p = mode == InsertionMode::sp ? P : scale2(P);
  SetValuedTableau q = Q;
  Word w;
  while (q.length() > 0) {
    UninsertResult r = uninsert(p, q, w);
    p = std::move(r.p);
    q = std::move(r.q);
    w = std::move(r.w);
  }
  if (!p.empty())
    throw ValidationError("ShapeMismatch", "uninsertion left a nonempty tableau");
  return mode == InsertionMode::sp ? w : halve(w);
}

// Semistandard recording tableau of a weakly increasing factorization.
inline SetValuedTableau semistandard_record(const Word& w,
                                            const std::vector<int>& fac,
                                            InsertionMode mode) {
  if (fac.size() != w.size())
    throw not_a_factorization("factorization length must match the word");
  for (size_t k = 0; k < fac.size(); ++k) {
    if (fac[k] < 1) throw not_a_factorization("labels must be positive");
    if (k + 1 < fac.size()) {
      if (fac[k] > fac[k + 1])
        throw not_a_factorization("labels must weakly increase");
      if (w[k] > w[k + 1] && fac[k] == fac[k + 1])
        throw not_a_factorization("labels must rise strictly at descents");
    }
  }
  return relabel(p_and_q(w, mode).q, fac);
}

// ---------------------------------------------------------------------------
// Direct Coxeter-Knuth bumping

enum class CkMode { fpf, inv };

namespace detail {

struct LineInsert {
  std::optional<int> bumped;  // value carried to the next line, if any
  Cell pos;                   // recorded bumping-path position
};

// Insert c into row r or column r of T; fpf enables the equal-bump shift and
// the leading parity rule.
inline LineInsert line_insert(Tableau& T, bool is_row, int r, int c,
                              CkMode mode) {
  std::vector<std::pair<Cell, int>> line;
  if (is_row)
    for (int col = r; T.has(r, col); ++col) line.push_back({{r, col}, *T.value(r, col)});
  else
    for (int row = 1; T.has(row, r); ++row) line.push_back({{row, r}, *T.value(row, r)});

  for (size_t k = 0; k < line.size(); ++k) {
    const auto [cell, v] = line[k];
    if (v < c) continue;
    if (v == c) {
      if (mode == CkMode::fpf) {
        Cell next = is_row ? Cell{cell.row, cell.col + 1}
                           : Cell{cell.row + 1, cell.col};
        return {c + 1, next};
      }
      return {c + 1, cell};
    }
    if (mode == CkMode::fpf && is_row && k == 0 && (v - c) % 2 != 0)
      return {c + 2, cell};
    T = T.with(cell.row, cell.col, c);
    return {v, cell};
  }
  Cell end = is_row ? Cell{r, r + static_cast<int>(line.size())}
                    : Cell{static_cast<int>(line.size()) + 1, r};
  T = T.with(end.row, end.col, c);
  return {std::nullopt, end};
}

}  // namespace detail

// Row-and-column bumping form of the insertion, defined on (FPF-)involution
// words: rows until a diagonal position is bumped, columns afterwards.
inline std::pair<Tableau, std::vector<Cell>> ck_insert(const Tableau& T, int a,
                                                       CkMode mode) {
  Word w = row_word(T);
  w.push_back(a);
  if (mode == CkMode::fpf) {
    auto z = symplectic_fold(w);
    if (!z || static_cast<int>(w.size()) != length_stats(*z).ell_hat)
      throw not_reduced_word("row(T)a must be an FPF-involution word");
  } else {
    Involution y = orthogonal_fold(w);
    if (static_cast<int>(w.size()) != length_stats(y).ell_hat)
      throw not_reduced_word("row(T)a must be an involution word");
  }

  Tableau out = T;
  std::vector<Cell> path;
  bool diag = false;
  int carry = a;
  for (int line = 1;; ++line) {
    auto res = detail::line_insert(out, !diag, line, carry, mode);
    path.push_back(res.pos);
    if (!res.bumped) break;
    carry = *res.bumped;
    diag = diag || (res.pos.row == res.pos.col);
  }
  return {out, std::move(path)};
}

}  // namespace shifted_hecke
