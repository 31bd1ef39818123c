#pragma once

#include "eqk/mackey.hpp"
#include "eqk/ring.hpp"
#include "eqk/ss.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace eqk {

using json = nlohmann::json;

// Integers are written as JSON numbers when they fit in 64 bits and as decimal strings otherwise.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);

json group_to_json(const FgAb& g);  // {"rank": r, "torsion": [...]}
FgAb group_from_json(const json& j);

/// Lewis data: {"name", "n", "tag", "levels": {"d": group}, "restrictions": {"e>d": matrix},
/// "transfers": {"d>e": matrix}, "weyl": {"d": matrix}}. Matrices are target x source in the
/// normal-form generators of each level.
json mackey_to_json(const MackeyFn& m);
MackeyFn mackey_from_json(const json& j);  // validates the axioms; throws std::invalid_argument

// Matrix in compact text: a 1x1 matrix prints as its entry, otherwise "[[a,b],[c,d]]".
std::string matrix_text(const IntMatrix& m);

// Lewis diagram as text: one line per level from the top down, then the covering arrows.
std::string mackey_ascii(const MackeyFn& m);
// tikz-cd Lewis diagram of the levels along the chain n, n/p, ..., 1 of consecutive divisors.
std::string mackey_tex(const MackeyFn& m);

// Glyph and weight of a summand name such as "⊖^2" or "□̄".
std::pair<Symbol, long> parse_glyph(const std::string& name);
std::string tex_symbol(const std::string& name);

json rep_to_json(const VirtualRep& v);
VirtualRep rep_from_json(const json& j);

json chart_entry_to_json(const ChartEntry& e);
ChartEntry chart_entry_from_json(const json& j);

struct ChartDocument {
  Int q = 3;
  long ell = 2;
  long min = -6;
  long max = 6;
  bool hz = false;
  std::vector<ChartEntry> entries;
  std::vector<std::pair<Bidegree, Bidegree>> alpha_lines;  // HZ charts only
};

ChartDocument make_chart_document(const ChartRequest& req);

json chart_to_json(const ChartDocument& c);
ChartDocument chart_from_json(const json& j);
std::string chart_ascii(const ChartDocument& c);
std::string chart_svg(const ChartDocument& c);
std::string chart_tex(const ChartDocument& c);

// Column width of a UTF-8 string on a terminal (combining marks take no width).
std::size_t display_width(const std::string& s);

}  // namespace eqk
