#include "cli.hpp"

#include "eqk/io.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace eqk;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "eqk");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("group command") {
  auto r = run({"group", "--q", "3", "--ell", "2", "--deg", "1,4", "--format", "ascii"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "○ ⊕ ⊖^1");
  CHECK(r.out.find("C_2/C_1: Z/8") != std::string::npos);

  CHECK(first_line(run({"group", "--q", "3", "--ell", "2", "--deg", "0,0"}).out) == "□");

  r = run({"group", "--q", "3", "--ell", "4", "--deg", "0,0"});
  CHECK(r.code == cli::usage_error);
  CHECK(r.err.find("not prime") != std::string::npos);

  CHECK(run({"group", "--q", "6", "--deg", "0,0"}).code == cli::usage_error);
  CHECK(run({"group", "--q", "3", "--deg", "0;0"}).code == cli::usage_error);
  CHECK(run({"group", "--q", "3", "--ell", "3", "--deg", "1,0"}).code == cli::usage_error);  // |V| - |V^G| odd
  CHECK(run({"group", "--q", "3"}).code == cli::usage_error);
  CHECK(run({"group", "--q", "3", "--deg", "0,0", "--format", "svg"}).code == cli::usage_error);
  CHECK(run({"group", "--q", "3", "--deg", "0,0", "--format", "tex"}).out.find("tikzcd") != std::string::npos);
}

TEST_CASE("group json round trip") {
  for (const char* deg : {"1,4", "-3,-2", "0,0", "2,7"}) {
    const auto r = run({"--format", "json", "group", "--q", "3", "--deg", deg});
    REQUIRE(r.code == 0);
    const ChartEntry e = chart_entry_from_json(json::parse(r.out));
    VirtualRep v;
    const auto comma = std::string(deg).find(',');
    REQUIRE(chart_degree(2, std::stol(std::string(deg).substr(0, comma)), std::stol(std::string(deg).substr(comma + 1)), v));
    const ChartEntry direct = pi_k_chart(3, 2, v);
    CHECK(e.summands == direct.summands);
    CHECK(e.degree == direct.degree);
    CHECK(chart_entry_to_json(e) == chart_entry_to_json(direct));
  }
}

TEST_CASE("chart and group agree") {
  for (const char* ell : {"2", "3"}) {
    const auto r = run({"--format", "json", "chart", "--q", "4", "--ell", ell, "--min", "-3", "--max", "3"});
    REQUIRE(r.code == 0);
    const ChartDocument doc = chart_from_json(json::parse(r.out));
    CHECK(chart_to_json(doc) == json::parse(r.out));
    REQUIRE_FALSE(doc.entries.empty());
    for (const auto& e : doc.entries) {
      const auto g = run({"--format", "json", "group", "--q", "4", "--ell", ell, "--deg",
                          std::to_string(e.x) + "," + std::to_string(e.y)});
      REQUIRE(g.code == 0);
      CHECK(chart_entry_from_json(json::parse(g.out)).summands == e.summands);
    }
  }
}

TEST_CASE("chart formats and window cap") {
  auto r = run({"--format", "svg", "chart", "--q", "3", "--ell", "2", "--min", "-6", "--max", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("<svg", 0) == 0);
  CHECK(r.out.find("class=\"alpha\"") == std::string::npos);

  r = run({"--format", "tex", "chart", "--hz", "--ell", "2", "--min", "-6", "--max", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\\documentclass") != std::string::npos);

  r = run({"--format", "svg", "chart", "--hz", "--ell", "2", "--min", "-6", "--max", "6"});
  CHECK(r.out.find("class=\"alpha\"") != std::string::npos);

  r = run({"chart", "--q", "4", "--ell", "3", "--min", "-4", "--max", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("⊖^1") != std::string::npos);

  CHECK(run({"chart", "--min", "-100", "--max", "100"}).code == cli::usage_error);
  CHECK(run({"chart", "--min", "-10", "--max", "10", "--window-cap", "20"}).code == 0);
  CHECK(run({"chart", "--min", "3", "--max", "1"}).code == cli::usage_error);
  CHECK(run({"chart", "--ell", "9"}).code == cli::usage_error);
}

TEST_CASE("lewis command") {
  auto r = run({"lewis", "ominus", "--q", "3", "--n", "2", "--i", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("C_2/C_1: Z/8") != std::string::npos);

  r = run({"--format", "json", "lewis", "barbox", "--n", "4"});
  REQUIRE(r.code == 0);
  CHECK(mackey_from_json(json::parse(r.out)) == named(Symbol::barbox, 4));

  CHECK(run({"lewis", "barbox", "--n", "3"}).code == cli::usage_error);
  CHECK(run({"lewis", "hexagon"}).code == cli::usage_error);
}

TEST_CASE("ring command") {
  CHECK(run({"ring", "--q", "5", "t[1]*x[1,0]"}).out == "2*x[1,2]  (bidegree (1,2))\n");
  CHECK(first_line(run({"ring", "--q", "3", "u*x[1,0]"}).out).rfind("x[1,-2]", 0) == 0);
  CHECK(run({"ring", "--q", "3", "x[1,0]*x[2,1]"}).out == "0\n");

  const auto j = json::parse(run({"--format", "json", "ring", "--q", "5", "t[1]*x[1,0]"}).out);
  CHECK(j["element"] == "2*x[1,2]");
  CHECK(j["bidegree"] == json::array({1, 2}));

  auto r = run({"ring", "--q", "3", "x[1,"});
  CHECK(r.code == cli::usage_error);
  CHECK(r.err.find("parse error") != std::string::npos);
  CHECK(run({"ring", "--q", "6", "u"}).code == cli::usage_error);
}

TEST_CASE("gfp command") {
  CHECK(run({"gfp", "--n", "9"}).out == "Z/3[x], |x|=2\n");
  CHECK(run({"gfp", "--n", "6"}).out == "0\n");
  CHECK(run({"gfp", "--n", "1"}).out == "Z (degree 0)\n");
  CHECK(run({"gfp", "--n", "0"}).code == cli::usage_error);
}

TEST_CASE("verify command") {
  auto r = run({"verify", "--suite", "norm-iso", "--qmax", "7", "--nmax", "6"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line, last;
  std::size_t records = 0;
  while (std::getline(lines, line)) {
    const auto j = json::parse(line);
    if (j.contains("check")) {
      ++records;
      CHECK(j["status"] == "pass");
      CHECK(j.contains("parameters"));
      CHECK(j.contains("expected"));
      CHECK(j.contains("got"));
    }
    last = line;
  }
  CHECK(records > 0);
  CHECK(json::parse(last)["status"] == "pass");

  CHECK(run({"verify", "--suite", "charts", "--q", "3"}).code == 0);
  CHECK(run({"verify", "--suite", "gfp"}).code == 0);
  CHECK(run({"verify", "--suite", "nonsense"}).code == cli::usage_error);
  // No charts exist for a non-prime-power q, so the comparison is a usage error rather than a failure.
  CHECK(run({"verify", "--suite", "charts", "--q", "6"}).code == cli::usage_error);
  // Chart glyphs do not depend on q.
  CHECK(run({"verify", "--suite", "charts", "--q", "5"}).code == 0);
}

TEST_CASE("global flags") {
  const std::string path = "eqk_cli_test_out.txt";
  CHECK(run({"--out", path, "gfp", "--n", "4"}).out.empty());
  std::ifstream f(path);
  std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(content == "Z/2[x], |x|=2\n");
  std::remove(path.c_str());

  CHECK(run({"--format", "pdf", "gfp", "--n", "4"}).code == cli::usage_error);
  CHECK(run({}).code == cli::usage_error);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--seed", "7", "verify", "--suite", "gfp"}).code == 0);
}
