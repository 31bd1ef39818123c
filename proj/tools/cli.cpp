#include "cli.hpp"

#include "eqk/io.hpp"
#include "eqk/ring.hpp"
#include "eqk/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace eqk::cli {
namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_prime_ell(long ell) {
  if (!is_prime(ell))
    throw UsageError("--ell " + std::to_string(ell) +
                     " is not prime; only cyclic groups of prime order are covered (see \"Scope\" in README.md)");
}

void require_prime_power(const Int& q) {
  if (q < 2 || prime_of_prime_power(q) == 0) throw UsageError("--q " + q.get_str() + " is not a prime power");
}

Int parse_int(const std::string& s, const char* flag) {
  Int v;
  if (s.empty() || v.set_str(s, 10) != 0) throw UsageError(std::string(flag) + " expects an integer, got '" + s + "'");
  return v;
}

std::pair<long, long> parse_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("--deg expects x,y; got '" + s + "'");
  try {
    std::size_t a = 0, b = 0;
    const long x = std::stol(s.substr(0, comma), &a);
    const long y = std::stol(s.substr(comma + 1), &b);
    if (a != comma || b != s.size() - comma - 1) throw std::invalid_argument(s);
    return {x, y};
  } catch (const std::logic_error&) {
    throw UsageError("--deg expects x,y; got '" + s + "'");
  }
}

struct Globals {
  std::string format = "ascii";
  std::uint64_t seed = 1;
  std::string out_file;
};

std::string group_text(const ChartEntry& e, long ell, long x, long y, const std::string& format) {
  if (format == "json") {
    json j = chart_entry_to_json(e);
    j["ell"] = ell;
    j["coordinates"] = {x, y};
    return j.dump(2) + "\n";
  }
  std::ostringstream s;
  if (format == "tex") {
    s << "% " << e.symbol() << "\n";
    for (const auto& m : e.summands) s << mackey_tex(m) << "\n";
    return s.str();
  }
  if (format == "svg") throw UsageError("group output supports ascii, json and tex");
  s << e.symbol() << "\n";
  for (std::size_t k = 0; k < e.summands.size(); ++k) {
    s << "\n" << e.summand_names()[k] << ":\n" << mackey_ascii(e.summands[k]);
  }
  return s.str();
}

std::string lewis_text(const MackeyFn& m, const std::string& format) {
  if (format == "json") return mackey_to_json(m).dump(2) + "\n";
  if (format == "tex") return mackey_tex(m) + "\n";
  if (format == "svg") throw UsageError("lewis output supports ascii, json and tex");
  return mackey_ascii(m);
}

std::string ring_text(const RingElem& e, const std::string& format) {
  const auto degs = e.degrees();
  if (format == "json") {
    json j{{"q", int_to_json(e.q())}, {"element", e.to_string()}};
    j["bidegree"] = degs.size() == 1 ? json{degs[0].x, degs[0].y} : json(nullptr);
    if (degs.size() > 1) {
      j["bidegrees"] = json::array();
      for (const auto& d : degs) j["bidegrees"].push_back({d.x, d.y});
    }
    return j.dump() + "\n";
  }
  if (format != "ascii") throw UsageError("ring output supports ascii and json");
  std::string s = e.to_string();
  if (degs.size() == 1)
    s += "  (bidegree (" + std::to_string(degs[0].x) + "," + std::to_string(degs[0].y) + "))";
  else if (degs.size() > 1)
    s += "  (inhomogeneous)";
  return s + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant algebraic K-groups of finite fields with cyclic Galois action", "eqk"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"ascii", "json", "tex", "svg"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--out", g.out_file, "Write output to FILE");
  app.fallthrough();

  std::string q_text = "3", deg_text;
  long ell = 2;
  auto* group = app.add_subcommand("group", "K-group Mackey functor(s) at one degree");
  group->add_option("--q", q_text, "Field size (prime power)")->capture_default_str();
  group->add_option("--ell", ell, "Order of the cyclic group (prime)")->capture_default_str();
  group->add_option("--deg", deg_text, "x,y for ell = 2; |V|,|V^G| for odd ell")->required();

  std::string chart_q = "3";
  long chart_ell = 2, lo = -6, hi = 6, cap = 64;
  bool hz = false;
  unsigned threads = 0;
  auto* chart = app.add_subcommand("chart", "Chart of K-groups (or HZ coefficients) on a square window");
  chart->add_option("--q", chart_q, "Field size (prime power)")->capture_default_str();
  chart->add_option("--ell", chart_ell, "Order of the cyclic group (prime)")->capture_default_str();
  chart->add_option("--min", lo, "Lower window bound")->capture_default_str();
  chart->add_option("--max", hi, "Upper window bound")->capture_default_str();
  chart->add_flag("--hz", hz, "Constant Z coefficients instead of K-theory");
  chart->add_option("--window-cap", cap, "Largest accepted window width")->capture_default_str();
  chart->add_option("--threads", threads, "Worker threads (0: hardware concurrency)");

  std::string symbol, lewis_q = "3";
  long lewis_n = 2, lewis_i = 1;
  auto* lewis = app.add_subcommand("lewis", "Lewis diagram of a named Mackey functor");
  lewis->add_option("symbol", symbol, "box, boxslash, circle, barbox, barboxslash, barcircle, bullet, ominus, oplus")
      ->required();
  lewis->add_option("--q", lewis_q, "Field size, for ominus and oplus")->capture_default_str();
  lewis->add_option("--n", lewis_n, "Order of the cyclic group")->capture_default_str();
  lewis->add_option("--i", lewis_i, "Weight, for ominus and oplus")->capture_default_str();

  std::string ring_q = "3", expression;
  auto* ring = app.add_subcommand("ring", "Normal form of an element of the C_2 coefficient ring");
  ring->add_option("--q", ring_q, "Field size (prime power)")->capture_default_str();
  ring->add_option("expression", expression, "e.g. \"t[1]*x[1,0]\"")->required();

  std::string suite = "all";
  long qmax = 7, nmax = 6;
  std::optional<long> verify_q;
  auto* verify = app.add_subcommand("verify", "Run a verification suite; JSON lines on output");
  verify->add_option("--suite", suite, "Suite name or all")->capture_default_str();
  verify->add_option("--qmax", qmax, "Largest field size in the module grid")->capture_default_str();
  verify->add_option("--nmax", nmax, "Largest group order in the module grid")->capture_default_str();
  verify->add_option("--q", verify_q, "Field size for the chart comparison");

  long gfp_n = 1;
  auto* gfp = app.add_subcommand("gfp", "Geometric fixed point coefficients of HZ for C_n");
  gfp->add_option("--n", gfp_n, "Group order")->required();

  std::vector<std::string> rev(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  std::ostringstream buffer;
  int status = ok;
  try {
    if (group->parsed()) {
      require_prime_ell(ell);
      const Int q = parse_int(q_text, "--q");
      require_prime_power(q);
      const auto [x, y] = parse_pair(deg_text);
      VirtualRep v;
      if (!chart_degree(ell, x, y, v))
        throw UsageError("(" + std::to_string(x) + "," + std::to_string(y) + ") is not a degree for ell = " +
                         std::to_string(ell));
      buffer << group_text(pi_k_chart(q, ell, v), ell, x, y, g.format);
    } else if (chart->parsed()) {
      require_prime_ell(chart_ell);
      if (lo > hi) throw UsageError("--min must not exceed --max");
      if (hi - lo > cap)
        throw UsageError("window width " + std::to_string(hi - lo) + " exceeds the cap " + std::to_string(cap) +
                         " (raise it with --window-cap)");
      ChartRequest req;
      req.q = parse_int(chart_q, "--q");
      require_prime_power(req.q);
      req.ell = chart_ell;
      req.min = lo;
      req.max = hi;
      req.hz_only = hz;
      req.threads = threads;
      const ChartDocument doc = make_chart_document(req);
      if (g.format == "json") buffer << chart_to_json(doc).dump(2) << "\n";
      else if (g.format == "svg") buffer << chart_svg(doc);
      else if (g.format == "tex") buffer << chart_tex(doc);
      else buffer << chart_ascii(doc);
    } else if (lewis->parsed()) {
      Symbol s;
      try {
        s = symbol_from_string(symbol);
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
      if (lewis_n < 1) throw UsageError("--n must be positive");
      if (needs_even_order(s) && lewis_n % 2 != 0)
        throw UsageError(symbol_name(s) + " needs a group of even order");
      const Int q = parse_int(lewis_q, "--q");
      if (has_weight(s)) require_prime_power(q);
      const MackeyFn m = has_weight(s) ? named(s, q, lewis_n, lewis_i) : named(s, lewis_n);
      buffer << lewis_text(m, g.format);
    } else if (ring->parsed()) {
      const Int q = parse_int(ring_q, "--q");
      require_prime_power(q);
      RingElem e(q);
      try {
        e = parse_ring_element(q, expression);
      } catch (const RingError& ex) {
        throw UsageError(ex.what());
      }
      buffer << ring_text(e, g.format);
    } else if (verify->parsed()) {
      if (!is_suite(suite)) throw UsageError("unknown suite '" + suite + "'");
      if (qmax < 2 || nmax < 1) throw UsageError("--qmax must be at least 2 and --nmax at least 1");
      VerifyOptions opts = options_for_bounds(qmax, nmax);
      opts.seed = g.seed;
      if (verify_q) {
        require_prime_power(*verify_q);
        opts.chart_q = *verify_q;
      }
      const SuiteSummary summary =
          run_suite(suite, opts, [&](const CheckRecord& r) { buffer << r.to_json().dump() << "\n"; });
      buffer << json{{"suite", suite},
                     {"checks", summary.checks},
                     {"failures", summary.failures},
                     {"status", summary.ok() ? "pass" : "fail"}}
                    .dump()
             << "\n";
      if (!summary.ok()) status = verification_failure;
    } else if (gfp->parsed()) {
      if (gfp_n < 1) throw UsageError("--n must be positive");
      const auto r = geometric_fixed_points_hz(gfp_n);
      if (g.format == "json") buffer << json{{"n", gfp_n}, {"ring", r.describe()}}.dump() << "\n";
      else buffer << r.describe() << "\n";
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }

  if (g.out_file.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(g.out_file);
    if (!f) {
      err << "error: cannot write " << g.out_file << "\n";
      return usage_error;
    }
    f << buffer.str();
  }
  return status;
}

}  // namespace eqk::cli
