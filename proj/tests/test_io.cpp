#include "doctest.h"
#include "eqk/figures.hpp"
#include "eqk/io.hpp"

#include <algorithm>

using namespace eqk;

TEST_CASE("integers in JSON") {
  CHECK(int_to_json(Int(-12)) == json(-12));
  const Int big = ipow(Int(10), 30);
  CHECK(int_to_json(big).is_string());
  CHECK(int_from_json(int_to_json(big)) == big);
  CHECK(int_from_json(json(-7)) == -7);
}

TEST_CASE("Mackey functor JSON round trip") {
  for (const MackeyFn& m : {named(Symbol::ominus, 3, 2, 1), named(Symbol::barboxslash, 4), named(Symbol::box, 6),
                            direct_sum({named(Symbol::circle, 2), named(Symbol::oplus, 5, 2, 2)}),
                            named(Symbol::ominus, 7, 6, 3)}) {
    const json j = mackey_to_json(m);
    CHECK(mackey_from_json(json::parse(j.dump())) == m);
  }
  const json j = mackey_to_json(named(Symbol::ominus, 3, 2, 1));
  CHECK(j["levels"]["2"]["torsion"] == json::array({2}));
  CHECK(j["restrictions"]["2->1"] == json::array({json::array({4})}));
  CHECK(j["transfers"]["1->2"] == json::array({json::array({1})}));
}

TEST_CASE("malformed Mackey JSON is rejected") {
  json j = mackey_to_json(named(Symbol::box, 2));
  j["transfers"]["1->2"] = json::array({json::array({3})});
  CHECK_THROWS_AS(mackey_from_json(j), std::invalid_argument);
  json k = mackey_to_json(named(Symbol::box, 2));
  k.erase("weyl");
  CHECK_THROWS_AS(mackey_from_json(k), std::invalid_argument);
}

TEST_CASE("Lewis diagram text") {
  const std::string a = mackey_ascii(named(Symbol::ominus, 3, 2, 1));
  CHECK(a.find("C_2/C_2: Z/2") != std::string::npos);
  CHECK(a.find("res 4") != std::string::npos);
  CHECK(a.find("weyl 3") != std::string::npos);
  const std::string t = mackey_tex(named(Symbol::ominus, 3, 2, 1));
  CHECK(t.find("\\begin{tikzcd}") != std::string::npos);
  CHECK(t.find("\\mathbb{Z}/8") != std::string::npos);
}

TEST_CASE("glyphs") {
  CHECK(parse_glyph("⊖^2") == std::pair(Symbol::ominus, 2L));
  CHECK(parse_glyph("□̄").first == Symbol::barbox);
  CHECK(tex_symbol("⊕^3") == "\\varoplus^{3}");
  CHECK(display_width("□̄⊖^1") == 4);
}

TEST_CASE("chart documents round trip and render") {
  ChartRequest req;
  req.min = -3;
  req.max = 3;
  const ChartDocument doc = make_chart_document(req);
  const ChartDocument back = chart_from_json(json::parse(chart_to_json(doc).dump()));
  REQUIRE(back.entries.size() == doc.entries.size());
  for (std::size_t k = 0; k < doc.entries.size(); ++k) {
    CHECK(back.entries[k].summands == doc.entries[k].summands);
    CHECK(back.entries[k].degree == doc.entries[k].degree);
  }
  CHECK(chart_ascii(doc).find("○⊖^1") == std::string::npos);  // (1,4) is outside this window
  CHECK(chart_svg(doc).find("<svg") == 0);
  CHECK(chart_tex(doc).find("\\varominus^{1}") != std::string::npos);

  req.hz_only = true;
  req.min = -6;
  req.max = 6;
  const ChartDocument hz = make_chart_document(req);
  auto lines = hz.alpha_lines;
  auto expected = reference_hz_chart().alpha_lines;
  std::sort(lines.begin(), lines.end());
  std::sort(expected.begin(), expected.end());
  CHECK(lines == expected);
  CHECK(chart_svg(hz).find("class=\"alpha\"") != std::string::npos);
}
