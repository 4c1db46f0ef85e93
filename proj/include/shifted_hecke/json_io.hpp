#pragma once

#include <json.hpp>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "shifted_hecke/insertion.hpp"
#include "shifted_hecke/permutation.hpp"
#include "shifted_hecke/series.hpp"
#include "shifted_hecke/tableaux.hpp"

namespace shifted_hecke {

using nlohmann::json;

inline json to_json(const Permutation& p) { return json(p.oneline()); }
inline json to_json(const Involution& y) { return to_json(y.perm()); }
inline json to_json(const FpfInvolution& z) { return json(z.prefix()); }
inline json to_json(const std::optional<FpfInvolution>& z) {
  if (!z) return json("zero");
  return to_json(*z);
}

inline json word_to_json(const Word& w) { return json(w); }

inline json to_json(const std::set<Word>& ws) {
  json arr = json::array();
  for (const Word& w : ws) arr.push_back(w);
  return arr;
}

inline json entry_to_json(const MarkedLetter& l) {
  return json{{"n", l.value}, {"primed", l.primed}};
}

namespace detail {

inline json shape_to_json(const Tableau& plain) {
  auto shape = plain.shifted_shape();
  json out;
  if (shape) {
    out["kind"] = "shifted";
    out["shape"] = shape->parts();
    return out;
  }
  // fall back to row lengths; used only for non-shifted domains
  std::vector<int> rows(plain.rows(), 0);
  for (auto& [cell, _] : plain.cells()) ++rows[cell.row - 1];
  out["kind"] = "young";
  out["shape"] = rows;
  return out;
}

}  // namespace detail

inline json to_json(const Tableau& t) {
  json out = detail::shape_to_json(t);
  json cells = json::array();
  for (auto& [cell, v] : t.cells())
    cells.push_back(json{{"row", cell.row},
                         {"col", cell.col},
                         {"entries", json::array({entry_to_json({v, false})})}});
  out["cells"] = cells;
  return out;
}

inline json to_json(const SetValuedTableau& t) {
  std::map<Cell, int> plain;
  for (auto& [cell, _] : t.cells()) plain[cell] = 1;
  json out = detail::shape_to_json(Tableau(plain));
  json cells = json::array();
  for (auto& [cell, ms] : t.cells()) {
    json entries = json::array();
    for (auto& l : ms) entries.push_back(entry_to_json(l));
    cells.push_back(
        json{{"row", cell.row}, {"col", cell.col}, {"entries", entries}});
  }
  out["cells"] = cells;
  return out;
}

inline SetValuedTableau setvalued_from_json(const json& j) {
  std::map<Cell, std::vector<MarkedLetter>> cells;
  for (const json& c : j.at("cells")) {
    Cell cell{c.at("row").get<int>(), c.at("col").get<int>()};
    for (const json& e : c.at("entries"))
      cells[cell].push_back(
          {e.at("n").get<int>(), e.value("primed", false)});
  }
  return SetValuedTableau(std::move(cells));
}

inline Tableau tableau_from_json(const json& j) {
  std::map<Cell, int> cells;
  for (const json& c : j.at("cells")) {
    const json& entries = c.at("entries");
    if (entries.size() != 1 || entries[0].value("primed", false))
      throw ValidationError("BadTableau",
                            "plain tableaux need single unprimed entries");
    cells[{c.at("row").get<int>(), c.at("col").get<int>()}] =
        entries[0].at("n").get<int>();
  }
  return Tableau(std::move(cells));
}

inline json to_json(const InsertionState& s) {
  json out;
  out["tableau"] = to_json(s.base);
  if (s.outer)
    out["outer"] = json{{"side", s.outer->in_row ? "row" : "col"},
                        {"index", s.outer->index},
                        {"value", s.outer->value}};
  else
    out["outer"] = nullptr;
  return out;
}

inline json coeff_to_json(const BigInt& c) {
  if (c >= std::numeric_limits<long long>::min() &&
      c <= std::numeric_limits<long long>::max())
    return json(static_cast<long long>(c));
  return json(c.str());
}

inline json to_json(const TruncatedSeries& s) {
  json arr = json::array();
  for (auto& [m, c] : s.terms())
    arr.push_back(json{
        {"exps", m.exps}, {"beta", m.beta}, {"coeff", coeff_to_json(c)}});
  return arr;
}

inline std::string partition_key(const std::vector<int>& parts) {
  std::string key;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) key += ',';
    key += std::to_string(parts[i]);
  }
  return key;
}

inline json to_json(const ExpansionReport& r) {
  json coeffs = json::object();
  for (auto& [shape, c] : r.coefficients) coeffs[partition_key(shape)] = c;
  json target;
  std::string mode_name;
  switch (r.mode.family()) {
    case Family::plain:
      mode_name = "plain";
      target = to_json(r.mode.plain_target());
      break;
    case Family::orthogonal:
      mode_name = "o";
      target = to_json(r.mode.orthogonal_target());
      break;
    case Family::symplectic:
      mode_name = "sp";
      target = to_json(r.mode.symplectic_target());
      break;
  }
  return json{{"mode", mode_name},
              {"target", target},
              {"coefficients", coeffs},
              {"verified", r.verified},
              {"truncation", json{{"vars", r.vars}, {"deg", r.deg}}},
              {"residual", to_json(r.residual)}};
}

// ---------------------------------------------------------------------------
// Plain-text rendering, rows drawn bottom-up as in the French convention.

inline std::string render(const SetValuedTableau& t) {
  if (t.empty()) return "(empty)\n";
  int width = 1;
  for (auto& [_, ms] : t.cells()) {
    int w = 0;
    for (auto& l : ms) w += std::to_string(l.value).size() + (l.primed ? 1 : 0);
    width = std::max(width, w);
  }
  std::ostringstream out;
  for (int r = t.rows(); r >= 1; --r) {
    std::string line;
    for (int c = 1; c <= t.columns(); ++c) {
      std::string cell(width, ' ');
      if (auto* ms = t.entry(r, c)) {
        std::string txt;
        for (auto& l : *ms) txt += std::to_string(l.value) + (l.primed ? "'" : "");
        cell = txt + std::string(width - txt.size(), ' ');
      }
      line += cell + ' ';
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

inline std::string render(const Tableau& t) {
  std::map<Cell, std::vector<MarkedLetter>> cells;
  for (auto& [cell, v] : t.cells()) cells[cell] = {unprimed(v)};
  if (cells.empty()) return "(empty)\n";
  return render(SetValuedTableau(std::move(cells)));
}

}  // namespace shifted_hecke
