#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "shifted_hecke/errors.hpp"
#include "shifted_hecke/permutation.hpp"

namespace shifted_hecke {

struct Cell {
  int row = 0, col = 0;
  auto operator<=>(const Cell&) const = default;
};

// Strictly decreasing parts. Weakly decreasing shapes (for the unshifted
// enumerators) are plain vectors checked at the call site.
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
      bool ok = parts_[i] > 0 && (i == 0 || parts_[i - 1] > parts_[i]);
      if (!ok)
        throw ValidationError("BadShape", "parts must be strictly decreasing");
    }
  }
  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  // Cells of the shifted diagram, row-major.
  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= rows(); ++i)
      for (int j = 0; j < parts_[i - 1]; ++j) out.push_back({i, i + j});
    return out;
  }
  bool operator==(const StrictPartition&) const = default;
  auto operator<=>(const StrictPartition&) const = default;

 private:
  std::vector<int> parts_;
};

enum class DiagramKind { shifted, young };

inline std::vector<Cell> diagram_cells(const std::vector<int>& shape,
                                       DiagramKind kind) {
  std::vector<Cell> out;
  for (int i = 1; i <= static_cast<int>(shape.size()); ++i)
    for (int j = 0; j < shape[i - 1]; ++j)
      out.push_back({i, kind == DiagramKind::shifted ? i + j : 1 + j});
  return out;
}

// A tableau is any map from a finite subset of P x P to P. Shifted-ness and
// increasing-ness are queried, not enforced, so the same type carries
// insertion states mid-walk.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::map<Cell, int> cells) : cells_(std::move(cells)) {}

  static Tableau of_shape(const StrictPartition& shape,
                          const std::vector<int>& row_major_values) {
    auto cs = shape.cells();
    if (cs.size() != row_major_values.size())
      throw ValidationError("BadShape", "value count does not match shape");
    std::map<Cell, int> m;
    for (size_t k = 0; k < cs.size(); ++k) m[cs[k]] = row_major_values[k];
    return Tableau(std::move(m));
  }

  bool empty() const { return cells_.empty(); }
  int box_count() const { return static_cast<int>(cells_.size()); }
  bool has(int r, int c) const { return cells_.count({r, c}) > 0; }
  std::optional<int> value(int r, int c) const {
    auto it = cells_.find({r, c});
    if (it == cells_.end()) return std::nullopt;
    return it->second;
  }
  // Value with absent cells treated as +infinity.
  int value_or_inf(int r, int c) const {
    auto v = value(r, c);
    return v ? *v : kInf;
  }
  static constexpr int kInf = 1 << 28;

  const std::map<Cell, int>& cells() const { return cells_; }

  Tableau with(int r, int c, int v) const {
    Tableau t = *this;
    t.cells_[{r, c}] = v;
    return t;
  }
  Tableau without(int r, int c) const {
    Tableau t = *this;
    t.cells_.erase({r, c});
    return t;
  }

  int rows() const {
    int m = 0;
    for (auto& [cell, _] : cells_) m = std::max(m, cell.row);
    return m;
  }
  int columns() const {
    int m = 0;
    for (auto& [cell, _] : cells_) m = std::max(m, cell.col);
    return m;
  }
  int row_length(int r) const {
    int n = 0;
    for (auto& [cell, _] : cells_) n += (cell.row == r);
    return n;
  }
  int column_height(int c) const {
    int n = 0;
    for (auto& [cell, _] : cells_) n += (cell.col == c);
    return n;
  }

  // Shape as a strict partition when the domain is a shifted diagram.
  std::optional<StrictPartition> shifted_shape() const {
    std::vector<int> parts(rows(), 0);
    for (auto& [cell, _] : cells_) ++parts[cell.row - 1];
    for (int i = 1; i <= rows(); ++i)
      for (int j = 0; j < parts[i - 1]; ++j)
        if (!has(i, i + j)) return std::nullopt;
    for (size_t i = 0; i + 1 < parts.size(); ++i)
      if (parts[i] <= parts[i + 1]) return std::nullopt;
    if (!parts.empty() && parts.back() == 0) return std::nullopt;
    return StrictPartition(parts);
  }

  bool is_increasing() const {
    for (auto& [a, va] : cells_)
      for (auto& [b, vb] : cells_)
        if (a != b && a.row <= b.row && a.col <= b.col && va >= vb) return false;
    return true;
  }
  bool is_increasing_shifted() const {
    return shifted_shape().has_value() && is_increasing();
  }

  bool operator==(const Tableau&) const = default;
  auto operator<=>(const Tableau&) const = default;

 private:
  std::map<Cell, int> cells_;
};

enum class ReadingOrder { row, col, ne, sw };

// Entries ordered so that (-i,j), (j,-i), (j-i,i) or (j-i,-i) increases
// lexicographically, for the row, column, NE- and SW-diagonal words.
inline Word reading_word(const Tableau& t, ReadingOrder order) {
  std::vector<std::pair<std::pair<int, int>, int>> keyed;
  for (auto& [cell, v] : t.cells()) {
    std::pair<int, int> key;
    switch (order) {
      case ReadingOrder::row: key = {-cell.row, cell.col}; break;
      case ReadingOrder::col: key = {cell.col, -cell.row}; break;
      case ReadingOrder::ne: key = {cell.col - cell.row, cell.row}; break;
      case ReadingOrder::sw: key = {cell.col - cell.row, -cell.row}; break;
    }
    keyed.push_back({key, v});
  }
  std::sort(keyed.begin(), keyed.end());
  Word w;
  for (auto& [_, v] : keyed) w.push_back(v);
  return w;
}

inline Word row_word(const Tableau& t) {
  return reading_word(t, ReadingOrder::row);
}
inline Word column_word(const Tableau& t) {
  return reading_word(t, ReadingOrder::col);
}

struct ClosurePredicates {
  bool row_column = true;
  bool row_diagonal = true;
  bool column_diagonal = true;
};

inline ClosurePredicates closure_predicates(const Tableau& t) {
  ClosurePredicates out;
  for (auto& [a, _] : t.cells())
    for (auto& [b, __] : t.cells()) {
      if (a == b || a.row > b.row || a.col > b.col) continue;
      out.row_column &= t.has(a.row, b.col);
      int delta = (b.col - b.row) - (a.col - a.row);
      if (delta >= 0) out.row_diagonal &= t.has(b.row, b.col - delta);
      if (delta <= 0) out.column_diagonal &= t.has(a.row - delta, a.col);
    }
  return out;
}

struct Corners {
  std::set<Cell> inner;  // removable
  std::set<Cell> outer;  // addable
};

inline Corners corners(const Tableau& t) {
  if (!t.shifted_shape())
    throw ValidationError("BadShape", "corners require a shifted tableau");
  Corners out;
  for (auto& [cell, _] : t.cells())
    if (!t.has(cell.row, cell.col + 1) && !t.has(cell.row + 1, cell.col))
      out.inner.insert(cell);
  for (int i = 1; i <= t.rows() + 1; ++i) {
    int j = i + t.row_length(i);
    if ((i == j || t.has(i, j - 1)) && (i == 1 || t.has(i - 1, j)))
      out.outer.insert({i, j});
  }
  return out;
}

inline Tableau scale2(const Tableau& t) {
  std::map<Cell, int> m;
  for (auto& [cell, v] : t.cells()) m[cell] = 2 * v;
  return Tableau(std::move(m));
}

inline Tableau halve(const Tableau& t) {
  std::map<Cell, int> m;
  for (auto& [cell, v] : t.cells()) {
    if (v % 2 != 0) throw odd_entry("halve requires all entries even");
    m[cell] = v / 2;
  }
  return Tableau(std::move(m));
}

inline Word scale2(const Word& w) {
  Word out;
  for (int x : w) out.push_back(2 * x);
  return out;
}

inline Word halve(const Word& w) {
  Word out;
  for (int x : w) {
    if (x % 2 != 0) throw odd_entry("halve requires all letters even");
    out.push_back(x / 2);
  }
  return out;
}

// Letter of the marked alphabet 1' < 1 < 2' < 2 < ...
struct MarkedLetter {
  int value = 1;
  bool primed = false;
  int code() const { return 2 * value - (primed ? 1 : 0); }
  static MarkedLetter from_code(int c) { return {(c + 1) / 2, c % 2 == 1}; }
  auto operator<=>(const MarkedLetter& o) const { return code() <=> o.code(); }
  bool operator==(const MarkedLetter& o) const { return code() == o.code(); }
};

inline MarkedLetter unprimed(int v) { return {v, false}; }
inline MarkedLetter primed(int v) { return {v, true}; }

// Map from cells to nonempty sorted multisets of marked letters. Standard,
// semistandard and marked flavors are predicates over the same storage.
class SetValuedTableau {
 public:
  SetValuedTableau() = default;
  explicit SetValuedTableau(std::map<Cell, std::vector<MarkedLetter>> cells)
      : cells_(std::move(cells)) {
    for (auto& [cell, ms] : cells_) {
      if (ms.empty())
        throw ValidationError("BadTableau", "cells must be nonempty");
      std::sort(cells_[cell].begin(), cells_[cell].end());
    }
  }

  bool empty() const { return cells_.empty(); }
  const std::map<Cell, std::vector<MarkedLetter>>& cells() const {
    return cells_;
  }
  bool has(int r, int c) const { return cells_.count({r, c}) > 0; }
  const std::vector<MarkedLetter>* entry(int r, int c) const {
    auto it = cells_.find({r, c});
    return it == cells_.end() ? nullptr : &it->second;
  }

  int length() const {
    int n = 0;
    for (auto& [_, ms] : cells_) n += static_cast<int>(ms.size());
    return n;
  }

  int max_value() const {
    int m = 0;
    for (auto& [_, ms] : cells_)
      for (auto& l : ms) m = std::max(m, l.value);
    return m;
  }

  void add(Cell cell, MarkedLetter l) {
    auto& ms = cells_[cell];
    ms.insert(std::upper_bound(ms.begin(), ms.end(), l), l);
  }
  // Removes one copy; drops the cell when it empties.
  void remove(Cell cell, MarkedLetter l) {
    auto& ms = cells_.at(cell);
    auto it = std::find(ms.begin(), ms.end(), l);
    if (it == ms.end())
      throw ValidationError("BadTableau", "letter not present");
    ms.erase(it);
    if (ms.empty()) cells_.erase(cell);
  }

  std::optional<Cell> find(MarkedLetter l) const {
    for (auto& [cell, ms] : cells_)
      if (std::find(ms.begin(), ms.end(), l) != ms.end()) return cell;
    return std::nullopt;
  }
  // Cell holding value v as either v or v'; for standard tableaux this is
  // unique.
  std::optional<std::pair<Cell, bool>> find_value(int v) const {
    for (auto& [cell, ms] : cells_)
      for (auto& l : ms)
        if (l.value == v) return std::make_pair(cell, l.primed);
    return std::nullopt;
  }

  std::optional<StrictPartition> shifted_shape() const {
    std::map<Cell, int> plain;
    for (auto& [cell, _] : cells_) plain[cell] = 1;
    return Tableau(std::move(plain)).shifted_shape();
  }

  int rows() const {
    int m = 0;
    for (auto& [cell, _] : cells_) m = std::max(m, cell.row);
    return m;
  }
  int columns() const {
    int m = 0;
    for (auto& [cell, _] : cells_) m = std::max(m, cell.col);
    return m;
  }

  // Multiplicity of each value, as a weak composition.
  std::vector<int> weight() const {
    std::vector<int> w(max_value(), 0);
    for (auto& [_, ms] : cells_)
      for (auto& l : ms) ++w[l.value - 1];
    return w;
  }

  bool operator==(const SetValuedTableau&) const = default;
  auto operator<=>(const SetValuedTableau&) const = default;

 private:
  std::map<Cell, std::vector<MarkedLetter>> cells_;
};

namespace detail {
inline MarkedLetter cell_min(const std::vector<MarkedLetter>& ms) {
  return ms.front();
}
inline MarkedLetter cell_max(const std::vector<MarkedLetter>& ms) {
  return ms.back();
}
}  // namespace detail

// Increasing in the set-valued sense: max of a cell below the min of every
// distinct cell weakly southeast of it.
inline bool is_increasing(const SetValuedTableau& t) {
  for (auto& [a, ma] : t.cells())
    for (auto& [b, mb] : t.cells())
      if (a != b && a.row <= b.row && a.col <= b.col &&
          !(detail::cell_max(ma) < detail::cell_min(mb)))
        return false;
  return true;
}

inline bool is_marked(const SetValuedTableau& t) {
  for (auto& [_, ms] : t.cells())
    if (ms.size() != 1) return false;
  return true;
}

inline bool is_standard(const SetValuedTableau& t) {
  if (!t.shifted_shape() || !is_increasing(t)) return false;
  int n = t.length();
  std::vector<int> seen(n + 1, 0);
  for (auto& [cell, ms] : t.cells())
    for (auto& l : ms) {
      if (l.primed && cell.row == cell.col) return false;
      if (l.value > n || seen[l.value]++) return false;
    }
  return true;
}

// The four semistandard conditions for shifted weak set-valued tableaux.
inline bool is_semistandard_weak(const SetValuedTableau& t) {
  if (!t.shifted_shape()) return false;
  for (auto& [a, ma] : t.cells())
    for (auto& [b, mb] : t.cells())
      if (a != b && a.row <= b.row && a.col <= b.col &&
          detail::cell_min(mb) < detail::cell_max(ma))
        return false;
  std::set<std::pair<int, int>> col_unprimed, row_primed;
  for (auto& [cell, ms] : t.cells()) {
    std::set<int> here_unprimed, here_primed;
    for (auto& l : ms) {
      if (l.primed && cell.row == cell.col) return false;
      if (l.primed) here_primed.insert(l.value);
      else here_unprimed.insert(l.value);
    }
    for (int v : here_unprimed)
      if (!col_unprimed.insert({cell.col, v}).second) return false;
    for (int v : here_primed)
      if (!row_primed.insert({cell.row, v}).second) return false;
  }
  return true;
}

// Semistandard with set entries (no repeated letter in a cell).
inline bool is_semistandard_set(const SetValuedTableau& t) {
  for (auto& [_, ms] : t.cells())
    for (size_t k = 0; k + 1 < ms.size(); ++k)
      if (ms[k] == ms[k + 1]) return false;
  return is_semistandard_weak(t);
}

// Descent set of a standard shifted set-valued tableau.
inline std::set<int> tableau_descents(const SetValuedTableau& q) {
  if (!is_standard(q)) throw not_standard("descents require a standard tableau");
  const int n = q.length();
  std::vector<Cell> where(n + 1);
  std::vector<bool> prime(n + 1);
  for (auto& [cell, ms] : q.cells())
    for (auto& l : ms) {
      where[l.value] = cell;
      prime[l.value] = l.primed;
    }
  std::set<int> des;
  for (int i = 1; i < n; ++i) {
    bool is_des =
        (!prime[i] && prime[i + 1]) ||
        (!prime[i] && !prime[i + 1] && where[i + 1].row > where[i].row) ||
        (prime[i] && prime[i + 1] && where[i + 1].col > where[i].col);
    if (is_des) des.insert(i);
  }
  return des;
}

// Complement clauses: i is not a descent when i' precedes an unprimed i+1,
// when an unprimed pair does not climb rows, or when a primed pair does not
// advance columns. (The same-axis comparisons are forced; recording tableaux
// such as the one for 2243 realize an unprimed pair one row up in the same
// column, which is a descent.)
inline std::set<int> tableau_non_descents(const SetValuedTableau& q) {
  if (!is_standard(q)) throw not_standard("descents require a standard tableau");
  const int n = q.length();
  std::vector<Cell> where(n + 1);
  std::vector<bool> prime(n + 1);
  for (auto& [cell, ms] : q.cells())
    for (auto& l : ms) {
      where[l.value] = cell;
      prime[l.value] = l.primed;
    }
  std::set<int> out;
  for (int i = 1; i < n; ++i) {
    if ((prime[i] && !prime[i + 1]) ||
        (!prime[i] && !prime[i + 1] && where[i + 1].row <= where[i].row) ||
        (prime[i] && prime[i + 1] && where[i + 1].col <= where[i].col))
      out.insert(i);
  }
  return out;
}

// Relabel a standard tableau along a weakly increasing sequence: j becomes
// seq[j-1], primes preserved.
inline SetValuedTableau relabel(const SetValuedTableau& std_tab,
                                const std::vector<int>& seq) {
  if (static_cast<int>(seq.size()) != std_tab.length())
    throw not_a_factorization("sequence length must equal tableau length");
  std::map<Cell, std::vector<MarkedLetter>> cells;
  for (auto& [cell, ms] : std_tab.cells())
    for (auto& l : ms)
      cells[cell].push_back({seq[l.value - 1], l.primed});
  return SetValuedTableau(std::move(cells));
}

struct Standardization {
  SetValuedTableau standard;
  std::vector<int> sequence;  // weakly increasing; replays onto `standard`
};

// Substitution in the order 1, 2', 2, 3', 3, ...: unprimed copies of a value
// are renumbered left to right, primed copies bottom to top.
inline Standardization standardize(const SetValuedTableau& q) {
  if (!is_semistandard_weak(q))
    throw not_semistandard("standardize requires a semistandard tableau");
  SetValuedTableau out;
  std::vector<int> seq;
  int counter = 0;
  for (int a = 1; a <= q.max_value(); ++a) {
    for (bool want_primed : {true, false}) {
      std::vector<std::pair<int, Cell>> hits;  // sort key, cell
      for (auto& [cell, ms] : q.cells()) {
        int copies = 0;
        for (auto& l : ms)
          if (l.value == a && l.primed == want_primed) ++copies;
        for (int c = 0; c < copies; ++c)
          hits.push_back({want_primed ? cell.row : cell.col, cell});
      }
      std::sort(hits.begin(), hits.end(),
                [](auto& x, auto& y) { return x.first < y.first; });
      for (auto& [_, cell] : hits) {
        ++counter;
        out.add(cell, {counter, want_primed});
        seq.push_back(a);
      }
    }
  }
  return {out, seq};
}

// All increasing tableaux of the given shape with entries <= max_entry, in
// lexicographic order of their row-major value sequences.
inline std::vector<Tableau> enumerate_increasing(const std::vector<int>& shape,
                                                 DiagramKind kind,
                                                 int max_entry,
                                                 long long budget = 20'000'000) {
  for (size_t i = 0; i + 1 < shape.size(); ++i) {
    bool ok = kind == DiagramKind::shifted ? shape[i] > shape[i + 1]
                                           : shape[i] >= shape[i + 1];
    if (!ok || shape[i + 1] <= 0)
      throw ValidationError("BadShape", "invalid shape for diagram kind");
  }
  std::vector<Cell> cs = diagram_cells(shape, kind);
  std::vector<Tableau> out;
  std::map<Cell, int> vals;
  long long nodes = 0;
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == cs.size()) {
      out.push_back(Tableau(vals));
      return;
    }
    Cell c = cs[k];
    int lo = 1;
    if (auto it = vals.find({c.row, c.col - 1}); it != vals.end())
      lo = std::max(lo, it->second + 1);
    if (auto it = vals.find({c.row - 1, c.col}); it != vals.end())
      lo = std::max(lo, it->second + 1);
    for (int v = lo; v <= max_entry; ++v) {
      if (++nodes > budget) throw CapExceeded("tableau enumeration budget");
      vals[c] = v;
      rec(k + 1);
    }
    vals.erase(c);
  };
  rec(0);
  return out;
}

inline std::vector<Tableau> enumerate_increasing_shifted(
    const StrictPartition& shape, int max_entry) {
  return enumerate_increasing(shape.parts(), DiagramKind::shifted, max_entry);
}

enum class SetFlavor {
  standard,        // standard shifted set-valued
  marked,          // standard with singleton cells
  shifted_sets,    // semistandard shifted set-valued
  shifted_weak,    // semistandard shifted weak (multisets)
  shifted_marked,  // semistandard shifted marked (singleton sets)
  young_sets,      // semistandard set-valued on an unshifted diagram
};

namespace detail {

// Standard shifted set-valued tableaux of the given shape and exact length n:
// place the values 1..n in order. Value v may join cell c only while every
// cell weakly southeast of c is still empty; this keeps cell maxima below the
// minima of later comparable cells.
inline void enumerate_standard(
    const StrictPartition& shape, int n, bool singletons_only,
    const std::function<bool(const SetValuedTableau&)>& visit, bool& stop) {
  const std::vector<Cell> cs = shape.cells();
  const int ncells = static_cast<int>(cs.size());
  if (n < ncells) return;
  if (singletons_only && n != ncells) return;

  std::vector<std::vector<int>> southeast(ncells);
  for (int a = 0; a < ncells; ++a)
    for (int b = 0; b < ncells; ++b)
      if (a != b && cs[a].row <= cs[b].row && cs[a].col <= cs[b].col)
        southeast[a].push_back(b);

  std::vector<std::vector<MarkedLetter>> entry(ncells);
  int empty_cells = ncells;

  std::function<void(int)> place = [&](int v) {
    if (stop) return;
    if (v > n) {
      if (empty_cells > 0) return;
      std::map<Cell, std::vector<MarkedLetter>> m;
      for (int k = 0; k < ncells; ++k) m[cs[k]] = entry[k];
      SetValuedTableau t(std::move(m));
      assert(is_standard(t));
      if (!visit(t)) stop = true;
      return;
    }
    if (n - v + 1 < empty_cells) return;
    for (int k = 0; k < ncells && !stop; ++k) {
      if (singletons_only && !entry[k].empty()) continue;
      bool blocked = false;
      for (int b : southeast[k]) blocked |= !entry[b].empty();
      if (blocked) continue;
      for (bool pr : {false, true}) {
        if (pr && cs[k].row == cs[k].col) continue;
        if (entry[k].empty()) --empty_cells;
        entry[k].push_back({v, pr});
        place(v + 1);
        entry[k].pop_back();
        if (entry[k].empty()) ++empty_cells;
        if (stop) return;
      }
    }
  };
  place(1);
}

}  // namespace detail

// Streams set-valued tableaux of the given flavor; the callback returns false
// to stop early. For standard flavors max_value is ignored (values are forced
// to 1..|T|); max_length bounds |T|.
inline void for_each_setvalued(
    const std::vector<int>& shape, SetFlavor flavor, int max_value,
    int max_length, const std::function<bool(const SetValuedTableau&)>& visit) {
  if (flavor == SetFlavor::standard || flavor == SetFlavor::marked) {
    StrictPartition sp(shape);
    bool stop = false;
    for (int n = sp.size(); n <= max_length && !stop; ++n) {
      detail::enumerate_standard(sp, n, flavor == SetFlavor::marked, visit,
                                 stop);
      if (flavor == SetFlavor::marked) break;  // marked means |T| = #cells
    }
    return;
  }

  const DiagramKind kind = flavor == SetFlavor::young_sets
                               ? DiagramKind::young
                               : DiagramKind::shifted;
  if (kind == DiagramKind::shifted) {
    StrictPartition validate(shape);
    (void)validate;
  }
  for (size_t i = 0; i + 1 < shape.size(); ++i)
    if (kind == DiagramKind::young && shape[i] < shape[i + 1])
      throw ValidationError("BadShape", "shape must be weakly decreasing");
  const std::vector<Cell> cs = diagram_cells(shape, kind);
  const bool multisets = flavor == SetFlavor::shifted_weak;
  const bool singletons = flavor == SetFlavor::shifted_marked;
  const bool young = flavor == SetFlavor::young_sets;
  if (static_cast<int>(cs.size()) > max_length) return;

  std::map<Cell, std::vector<MarkedLetter>> cells;
  std::set<std::pair<int, int>> col_unprimed, row_primed;  // (col,v), (row,v)
  bool stop = false;

  // Choose the sorted entry of cell k letter by letter, then move on.
  std::function<void(size_t, int)> fill = [&](size_t k, int budget) {
    if (stop) return;
    if (k == cs.size()) {
      SetValuedTableau t(cells);
      if (!visit(t)) stop = true;
      return;
    }
    const Cell c = cs[k];
    // Lower bound from the left and lower neighbors.
    int lo = 1;
    auto bound = [&](Cell nb, bool strict) {
      auto it = cells.find(nb);
      if (it != cells.end() && !it->second.empty())
        lo = std::max(lo, it->second.back().code() + (strict ? 1 : 0));
    };
    bound({c.row, c.col - 1}, false);
    bound({c.row - 1, c.col}, young);  // Buch: strict between rows
    const int remaining_cells = static_cast<int>(cs.size()) - 1 -
                                static_cast<int>(k);

    std::function<void(int, int)> letters = [&](int from_code, int used) {
      if (stop) return;
      auto& ms = cells[c];
      if (!ms.empty()) {
        // close this cell and continue
        if (budget - used >= remaining_cells)
          fill(k + 1, budget - used);
        if (stop) return;
      }
      if (used + 1 + remaining_cells > budget) return;
      for (int code = from_code; code <= 2 * max_value; ++code) {
        MarkedLetter l = MarkedLetter::from_code(code);
        if (l.primed && (young || c.row == c.col)) continue;
        if (!multisets && !ms.empty() && ms.back() == l) continue;
        if (singletons && !ms.empty()) continue;
        bool dup_in_cell =
            std::find(ms.begin(), ms.end(), l) != ms.end();
        // repeats within one box are fine; the exclusions are per box
        if (!dup_in_cell) {
          if (!l.primed && col_unprimed.count({c.col, l.value})) continue;
          if (l.primed && row_primed.count({c.row, l.value})) continue;
        }
        bool fresh_col = false, fresh_row = false;
        if (!l.primed && !dup_in_cell)
          fresh_col = col_unprimed.insert({c.col, l.value}).second;
        if (l.primed && !dup_in_cell)
          fresh_row = row_primed.insert({c.row, l.value}).second;
        ms.push_back(l);
        letters(multisets ? code : code + 1, used + 1);
        ms.pop_back();
        if (fresh_col) col_unprimed.erase({c.col, l.value});
        if (fresh_row) row_primed.erase({c.row, l.value});
        if (stop) return;
      }
      if (ms.empty()) cells.erase(c);
    };
    letters(lo, 0);
    cells.erase(c);
  };
  fill(0, max_length);
}

// Materializing facade with a hard cap on the number of results.
inline std::vector<SetValuedTableau> enumerate_setvalued(
    const std::vector<int>& shape, SetFlavor flavor, int max_value,
    int max_length, long long budget = 5'000'000) {
  std::vector<SetValuedTableau> out;
  for_each_setvalued(shape, flavor, max_value, max_length,
                     [&](const SetValuedTableau& t) {
                       if (static_cast<long long>(out.size()) >= budget)
                         throw CapExceeded("set-valued enumeration budget");
                       out.push_back(t);
                       return true;
                     });
  return out;
}

}  // namespace shifted_hecke
