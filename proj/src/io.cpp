#include "eqk/io.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

namespace eqk {

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(int_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw std::invalid_argument("matrix has the wrong number of rows");
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw std::invalid_argument("matrix has the wrong number of columns");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = int_from_json(j[r][c]);
  }
  return m;
}

json group_to_json(const FgAb& g) {
  json t = json::array();
  for (const auto& d : g.torsion()) t.push_back(int_to_json(d));
  return {{"rank", g.free_rank()}, {"torsion", t}};
}

FgAb group_from_json(const json& j) {
  Vec orders;
  for (const auto& d : j.at("torsion")) orders.push_back(int_from_json(d));
  const FgAb g(orders, j.at("rank").get<std::size_t>());
  return g;
}

namespace {

std::string arrow_key(long from, long to) { return std::to_string(from) + "->" + std::to_string(to); }

}  // namespace

json mackey_to_json(const MackeyFn& m) {
  json levels = json::object(), res = json::object(), tr = json::object(), weyl = json::object();
  for (long d : m.divisors()) {
    levels[std::to_string(d)] = group_to_json(m.level(d));
    weyl[std::to_string(d)] = matrix_to_json(m.weyl(d).matrix());
    for (long e : m.divisors()) {
      if (e == d || e % d != 0) continue;
      res[arrow_key(e, d)] = matrix_to_json(m.restriction(e, d).matrix());
      tr[arrow_key(d, e)] = matrix_to_json(m.transfer(d, e).matrix());
    }
  }
  return {{"name", m.name()}, {"n", m.n()},         {"tag", to_string(m.tag())}, {"levels", levels},
          {"restrictions", res}, {"transfers", tr}, {"weyl", weyl}};
}

MackeyFn mackey_from_json(const json& j) {
  try {
    const long n = j.at("n").get<long>();
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::map<long, FgAb> levels;
    for (long d : divisors(n)) levels[d] = group_from_json(j.at("levels").at(std::to_string(d)));
    auto map_at = [&](const char* field, const std::string& key, long from, long to) {
      const FgAb& s = levels.at(from);
      const FgAb& t = levels.at(to);
      return AbMap(s, t, matrix_from_json(j.at(field).at(key), t.generator_count(), s.generator_count()));
    };
    const MackeyFn m = MackeyFn::build(
        n, [&](long d) { return levels.at(d); },
        [&](long d) { return map_at("weyl", std::to_string(d), d, d); },
        [&](long e, long d) { return map_at("restrictions", arrow_key(e, d), e, d); },
        [&](long d, long e) { return map_at("transfers", arrow_key(d, e), d, e); },
        provenance_from_string(j.value("tag", std::string("other"))), j.value("name", std::string()));
    const auto errors = validate_mackey(m);
    if (!errors.empty()) throw std::invalid_argument("Mackey axioms fail: " + errors.front());
    return m;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed Mackey functor JSON: ") + e.what());
  }
}

std::string matrix_text(const IntMatrix& m) {
  if (m.rows() == 1 && m.cols() == 1) return to_string(m(0, 0));
  if (m.rows() == 0 || m.cols() == 0) return "0";
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    s += r ? ",[" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? "," : "") + to_string(m(r, c));
    s += "]";
  }
  return s + "]";
}

namespace {

// Covering pairs d | e with e / d prime, top down.
std::vector<std::pair<long, long>> covers(const MackeyFn& m) {
  std::vector<std::pair<long, long>> out;
  const auto& ds = m.divisors();
  for (auto it = ds.rbegin(); it != ds.rend(); ++it)
    for (long d : ds)
      if (d != *it && *it % d == 0 && is_prime(*it / d)) out.emplace_back(*it, d);
  return out;
}

// The chain n, n/p_1, ..., 1 dividing out the smallest prime factor each time.
std::vector<long> chain(long n) {
  std::vector<long> out{n};
  while (n > 1) {
    long p = 2;
    while (n % p != 0) ++p;
    n /= p;
    out.push_back(n);
  }
  return out;
}

}  // namespace

std::string mackey_ascii(const MackeyFn& m) {
  std::ostringstream os;
  os << (m.name().empty() ? "(unnamed)" : m.name()) << "  C_" << m.n() << "-Mackey functor\n";
  std::size_t width = 0;
  for (long d : m.divisors()) width = std::max(width, m.level(d).to_string().size());
  const auto& ds = m.divisors();
  for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
    const std::string g = m.level(*it).to_string();
    os << "  C_" << m.n() << "/C_" << *it << ": " << g << std::string(width - g.size(), ' ')
       << "   weyl " << matrix_text(m.weyl(*it).matrix()) << "\n";
  }
  for (const auto& [e, d] : covers(m))
    os << "  " << e << " -> " << d << ": res " << matrix_text(m.restriction(e, d).matrix()) << "   " << d
       << " -> " << e << ": tr " << matrix_text(m.transfer(d, e).matrix()) << "\n";
  return os.str();
}

namespace {

std::string tex_group(const FgAb& g) {
  if (g.is_trivial()) return "0";
  std::string s;
  for (const auto& d : g.torsion()) s += (s.empty() ? "" : " \\oplus ") + std::string("\\mathbb{Z}/") + to_string(d);
  if (g.free_rank() > 0) {
    s += (s.empty() ? "" : " \\oplus ") + std::string("\\mathbb{Z}");
    if (g.free_rank() > 1) s += "^{" + std::to_string(g.free_rank()) + "}";
  }
  return s;
}

}  // namespace

std::string mackey_tex(const MackeyFn& m) {
  const auto levels = chain(m.n());
  std::ostringstream os;
  if (!m.name().empty()) os << "% " << m.name() << "\n";
  os << "\\begin{tikzcd}\n";
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const long d = levels[k];
    os << "  " << tex_group(m.level(d));
    if (k + 1 < levels.size())
      os << " \\arrow[d, bend right, swap, \"" << matrix_text(m.restriction(d, levels[k + 1]).matrix()) << "\"]";
    if (k > 0) os << " \\arrow[u, bend right, swap, \"" << matrix_text(m.transfer(d, levels[k - 1]).matrix()) << "\"]";
    os << " \\arrow[loop right, \"" << matrix_text(m.weyl(d).matrix()) << "\"]";
    os << (k + 1 < levels.size() ? " \\\\\n" : "\n");
  }
  os << "\\end{tikzcd}\n";
  return os.str();
}

std::pair<Symbol, long> parse_glyph(const std::string& name) {
  const auto caret = name.find('^');
  if (caret == std::string::npos) return {symbol_from_string(name), 0};
  return {symbol_from_string(name.substr(0, caret)), std::stol(name.substr(caret + 1))};
}

std::string tex_symbol(const std::string& name) {
  const auto [s, i] = parse_glyph(name);
  switch (s) {
    case Symbol::box: return "\\square";
    case Symbol::boxslash: return "\\boxslash";
    case Symbol::circle: return "\\circ";
    case Symbol::barbox: return "\\overline{\\square}";
    case Symbol::barboxslash: return "\\overline{\\boxslash}";
    case Symbol::barcircle: return "\\overline{\\circ}";
    case Symbol::bullet: return "\\bullet";
    case Symbol::ominus: return "\\varominus^{" + std::to_string(i) + "}";
    case Symbol::oplus: return "\\varoplus^{" + std::to_string(i) + "}";
  }
  return "";
}

json rep_to_json(const VirtualRep& v) {
  return {{"n", v.n}, {"a0", v.a0}, {"a_sigma", v.a_sigma}, {"lambda", v.lambda}};
}

VirtualRep rep_from_json(const json& j) {
  return VirtualRep(j.at("n").get<long>(), j.at("a0").get<long>(), j.value("a_sigma", 0L),
                    j.value("lambda", std::vector<long>{}));
}

json chart_entry_to_json(const ChartEntry& e) {
  json summands = json::array();
  for (const auto& m : e.summands) summands.push_back(mackey_to_json(m));
  json levels = json::object();
  const MackeyFn total = e.total();
  for (long d : total.divisors()) levels[std::to_string(d)] = group_to_json(total.level(d));
  return {{"degree", rep_to_json(e.degree)}, {"x", e.x},           {"y", e.y},
          {"symbols", e.summand_names()},   {"levels", levels}, {"summands", summands}};
}

ChartEntry chart_entry_from_json(const json& j) {
  ChartEntry e;
  e.degree = rep_from_json(j.at("degree"));
  e.x = j.at("x").get<long>();
  e.y = j.at("y").get<long>();
  for (const auto& s : j.at("summands")) e.summands.push_back(mackey_from_json(s));
  if (e.summand_names() != j.at("symbols").get<std::vector<std::string>>())
    throw std::invalid_argument("chart entry symbols disagree with its summands");
  return e;
}

ChartDocument make_chart_document(const ChartRequest& req) {
  ChartDocument c;
  c.q = req.q;
  c.ell = req.ell;
  c.min = req.min;
  c.max = req.max;
  c.hz = req.hz_only;
  c.entries = compute_chart(req);
  if (req.hz_only && req.ell == 2) c.alpha_lines = hz_alpha_lines(req.min, req.max);
  return c;
}

json chart_to_json(const ChartDocument& c) {
  json entries = json::array();
  for (const auto& e : c.entries) entries.push_back(chart_entry_to_json(e));
  json lines = json::array();
  for (const auto& [a, b] : c.alpha_lines) lines.push_back({a.x, a.y, b.x, b.y});
  return {{"q", int_to_json(c.q)}, {"ell", c.ell},         {"min", c.min},          {"max", c.max},
          {"hz", c.hz},            {"entries", entries}, {"alpha_lines", lines}};
}

ChartDocument chart_from_json(const json& j) {
  try {
    ChartDocument c;
    c.q = int_from_json(j.at("q"));
    c.ell = j.at("ell").get<long>();
    c.min = j.at("min").get<long>();
    c.max = j.at("max").get<long>();
    c.hz = j.at("hz").get<bool>();
    for (const auto& e : j.at("entries")) c.entries.push_back(chart_entry_from_json(e));
    for (const auto& l : j.at("alpha_lines")) {
      const auto v = l.get<std::vector<long>>();
      if (v.size() != 4) throw std::invalid_argument("alpha line needs four coordinates");
      c.alpha_lines.push_back({{v[0], v[1]}, {v[2], v[3]}});
    }
    return c;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed chart JSON: ") + e.what());
  }
}

std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (std::size_t k = 0; k < s.size();) {
    const unsigned char c = static_cast<unsigned char>(s[k]);
    const std::size_t len = c < 0x80 ? 1 : c < 0xE0 ? 2 : c < 0xF0 ? 3 : 4;
    unsigned cp = 0;
    if (len == 2 && k + 1 < s.size()) cp = ((c & 0x1F) << 6) | (s[k + 1] & 0x3F);
    if (!(cp >= 0x300 && cp <= 0x36F)) ++w;
    k += len;
  }
  return w;
}

namespace {

std::string cell_text(const ChartEntry& e) {
  std::string s;
  for (const auto& n : e.summand_names()) s += n;
  return s;
}

std::string pad(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return std::string(width > w ? width - w : 0, ' ') + s;
}

std::map<std::pair<long, long>, const ChartEntry*> by_position(const ChartDocument& c) {
  std::map<std::pair<long, long>, const ChartEntry*> out;
  for (const auto& e : c.entries) out[{e.x, e.y}] = &e;
  return out;
}

std::string chart_title(const ChartDocument& c) {
  std::string t = c.hz ? "HZ coefficients" : "K-groups, q = " + to_string(c.q);
  t += ", C_" + std::to_string(c.ell);
  t += c.ell == 2 ? ", coordinates (x, y)" : ", coordinates (|V|, |V^G|)";
  return t;
}

}  // namespace

std::string chart_ascii(const ChartDocument& c) {
  const auto pos = by_position(c);
  std::size_t width = 2;
  for (const auto& e : c.entries) width = std::max(width, display_width(cell_text(e)));
  width += 1;
  std::ostringstream os;
  os << chart_title(c) << "\n";
  for (long y = c.max; y >= c.min; --y) {
    os << pad(std::to_string(y), 4) << " |";
    for (long x = c.min; x <= c.max; ++x) {
      auto it = pos.find({x, y});
      const std::string t = it == pos.end() ? "" : it->second->summands.empty() ? "." : cell_text(*it->second);
      os << pad(t, width);
    }
    os << "\n";
  }
  os << "     +" << std::string(width * static_cast<std::size_t>(c.max - c.min + 1), '-') << "\n      ";
  for (long x = c.min; x <= c.max; ++x) os << pad(std::to_string(x), width);
  os << "\n";
  return os.str();
}

std::string chart_svg(const ChartDocument& c) {
  const long cell = 48, margin = 40;
  const long span = c.max - c.min;
  const long size = span * cell + 2 * margin;
  auto px = [&](long x) { return margin + (x - c.min) * cell; };
  auto py = [&](long y) { return margin + (c.max - y) * cell; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size + 24
     << "\" font-family=\"DejaVu Sans, sans-serif\">\n";
  os << "<title>" << chart_title(c) << "</title>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (long k = c.min; k <= c.max; ++k) {
    os << "<line x1=\"" << px(k) << "\" y1=\"" << py(c.min) << "\" x2=\"" << px(k) << "\" y2=\"" << py(c.max)
       << "\" stroke=\"#eee\"/>\n";
    os << "<line x1=\"" << px(c.min) << "\" y1=\"" << py(k) << "\" x2=\"" << px(c.max) << "\" y2=\"" << py(k)
       << "\" stroke=\"#eee\"/>\n";
    os << "<text x=\"" << px(k) << "\" y=\"" << size - 8 << "\" font-size=\"11\" text-anchor=\"middle\">" << k
       << "</text>\n";
    os << "<text x=\"12\" y=\"" << py(k) + 4 << "\" font-size=\"11\" text-anchor=\"middle\">" << k << "</text>\n";
  }
  if (c.min <= 0 && c.max >= 0) {
    os << "<line x1=\"" << px(0) << "\" y1=\"" << py(c.min) << "\" x2=\"" << px(0) << "\" y2=\"" << py(c.max)
       << "\" stroke=\"#999\"/>\n";
    os << "<line x1=\"" << px(c.min) << "\" y1=\"" << py(0) << "\" x2=\"" << px(c.max) << "\" y2=\"" << py(0)
       << "\" stroke=\"#999\"/>\n";
  }
  for (const auto& [a, b] : c.alpha_lines)
    os << "<line class=\"alpha\" x1=\"" << px(a.x) << "\" y1=\"" << py(a.y) << "\" x2=\"" << px(b.x) << "\" y2=\""
       << py(b.y) << "\" stroke=\"black\"/>\n";
  for (const auto& e : c.entries) {
    if (e.summands.empty()) continue;
    os << "<text x=\"" << px(e.x) << "\" y=\"" << py(e.y) + 6 << "\" font-size=\"16\" text-anchor=\"middle\""
       << " data-x=\"" << e.x << "\" data-y=\"" << e.y << "\">";
    bool first = true;
    for (const auto& n : e.summand_names()) {
      if (!first) os << "<tspan> </tspan>";
      first = false;
      const auto caret = n.find('^');
      if (caret == std::string::npos) {
        os << "<tspan>" << n << "</tspan>";
      } else {
        os << "<tspan>" << n.substr(0, caret) << "</tspan><tspan baseline-shift=\"super\" font-size=\"10\">"
           << n.substr(caret + 1) << "</tspan>";
      }
    }
    os << "</text>\n";
  }
  os << "<text x=\"" << margin << "\" y=\"" << size + 16 << "\" font-size=\"12\">" << chart_title(c) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string chart_tex(const ChartDocument& c) {
  std::ostringstream os;
  os << "\\documentclass[tikz]{standalone}\n\\usepackage{amssymb,stmaryrd}\n\\begin{document}\n";
  os << "% " << chart_title(c) << "\n";
  os << "\\begin{tikzpicture}[scale=0.8]\n";
  os << "  \\draw[gray!30] (" << c.min << "," << c.min << ") grid (" << c.max << "," << c.max << ");\n";
  if (c.min <= 0 && c.max >= 0) {
    os << "  \\draw[gray] (" << c.min << ",0) -- (" << c.max << ",0);\n";
    os << "  \\draw[gray] (0," << c.min << ") -- (0," << c.max << ");\n";
  }
  for (long k = c.min; k <= c.max; ++k) {
    os << "  \\node[below] at (" << k << "," << c.min - 0.3 << ") {\\tiny " << k << "};\n";
    os << "  \\node[left] at (" << c.min - 0.3 << "," << k << ") {\\tiny " << k << "};\n";
  }
  for (const auto& [a, b] : c.alpha_lines)
    os << "  \\draw (" << a.x << "," << a.y << ") -- (" << b.x << "," << b.y << ");\n";
  for (const auto& e : c.entries) {
    if (e.summands.empty()) continue;
    std::string body;
    for (const auto& n : e.summand_names()) body += (body.empty() ? "" : "\\,") + tex_symbol(n);
    os << "  \\node[fill=white, inner sep=1pt] at (" << e.x << "," << e.y << ") {$" << body << "$};\n";
  }
  os << "\\end{tikzpicture}\n\\end{document}\n";
  return os.str();
}

}  // namespace eqk
