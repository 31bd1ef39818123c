#include "doctest.h"
#include "eqk/ss.hpp"

using namespace eqk;

namespace {

VirtualRep bideg(long x, long y) { return VirtualRep::from_bidegree({x, y}); }

std::string e2_name(const E2Page& p, long s, long t) {
  const MackeyFn* e = p.at(s, t);
  return e ? e->name() : "0";
}

}  // namespace

TEST_CASE("E2 pages on the axes") {
  const VirtualRep w = bideg(0, 1);  // orientation reversing, |W| = 0
  const E2Page hoss = e2_page(SsKind::hoss, 3, 2, w, {0, 6, 0, 6});
  REQUIRE(hoss.at(2, 0));
  CHECK(find_isomorphism(*hoss.at(2, 0), named(Symbol::bullet, 2)));
  CHECK(hoss.at(1, 0) == nullptr);  // barred circle vanishes for C_2
  const E2Page hoss4 = e2_page(SsKind::hoss, 3, 4, VirtualRep(4, -1, 1, {0}), {0, 4, 0, 0});
  REQUIRE(hoss4.at(1, 0));
  CHECK(find_isomorphism(*hoss4.at(1, 0), named(Symbol::barcircle, 4)));
  REQUIRE(hoss.at(0, 1));
  CHECK(find_isomorphism(*hoss.at(0, 1), named(Symbol::oplus, 3, 2, 1)));
  for (const auto& [pos, e] : hoss.entries) CHECK((pos.first == 0 || pos.second == 0));

  const E2Page hfpss = e2_page(SsKind::hfpss, 3, 2, w, {-6, 0, 0, 6});
  REQUIRE(hfpss.at(0, 1));
  CHECK(find_isomorphism(*hfpss.at(0, 1), named(Symbol::oplus, 3, 2, 1)));
  REQUIRE(hfpss.at(-1, 0));
  CHECK(find_isomorphism(*hfpss.at(-1, 0), named(Symbol::bullet, 2)));

  const E2Page tate = e2_page(SsKind::tate, 3, 2, w, {-4, 4, 1, 6});
  CHECK(tate.entries.empty());
  CHECK(e2_name(tate, 0, 0) == "0");
}

TEST_CASE("collapse certificates") {
  const VirtualRep w = bideg(0, 1);
  const auto cert = certify_collapse(e2_page(SsKind::hoss, 3, 2, w, {0, 6, 0, 6}));
  CHECK_FALSE(cert.empty());
  for (const auto& c : cert) CHECK(c.r >= 2);

  const auto none = certify_collapse(e2_page(SsKind::hfpss, 3, 2, bideg(0, 0), {-6, 0, 0, 6}));
  CHECK(none.empty());

  E2Page fake;
  fake.kind = SsKind::hoss;
  fake.n = 2;
  fake.window = {0, 4, 0, 4};
  fake.entries.emplace(std::make_pair(2L, 0L), named(Symbol::box, 2));
  fake.entries.emplace(std::make_pair(0L, 1L), named(Symbol::box, 2));
  CHECK_THROWS_AS(certify_collapse(fake), CollapseError);
}

TEST_CASE("homotopy of orbits, fixed points and fiber") {
  CHECK(pi_fixed(3, 2, bideg(-2, 0)).symbol() == "○");
  CHECK(pi_orbits(3, 2, bideg(3, 0)).symbol() == "⊖^2 ⊕ ○");
  CHECK(pi_fixed(3, 2, bideg(2, 0)).symbol() == "0");
  CHECK(pi_fiber(3, 2, bideg(1, 0)).symbol() == "⊖^1");
  CHECK(pi_fiber(3, 2, bideg(1, 1)).symbol() == "⊕^1");
  CHECK(pi_fiber(3, 2, bideg(0, 0)).symbol() == "0");
  CHECK(pi_orbits(3, 2, bideg(0, 1)).symbol() == "⊞̄");
  CHECK(pi_fixed(3, 2, bideg(0, 1)).symbol() == "□̄");
  CHECK(pi_fixed(3, 2, bideg(-3, 0)).symbol() == "0");
  CHECK(pi_fixed(3, 2, bideg(-3, 1)).symbol() == "•");
}

TEST_CASE("assembled E2 pages agree with the closed forms") {
  for (long q : {3, 5})
    for (long n : {2, 4})
      for (long d = -4; d <= 5; ++d)
        for (long sg : {0, 1}) {
          const VirtualRep v(n, d - sg, sg, std::vector<long>((n - 1) / 2, 0));
          CAPTURE(v.to_string());
          const ChartEntry a = assemble_from_e2(SsKind::hoss, q, n, v);
          const ChartEntry b = pi_orbits(q, n, v);
          REQUIRE(a.summands.size() == b.summands.size());
          for (std::size_t k = 0; k < a.summands.size(); ++k)
            CHECK(find_isomorphism(a.summands[k], b.summands[k]));
          const ChartEntry c = assemble_from_e2(SsKind::hfpss, q, n, v);
          const ChartEntry e = pi_fixed(q, n, v);
          REQUIRE(c.summands.size() == e.summands.size());
          for (std::size_t k = 0; k < c.summands.size(); ++k)
            CHECK(find_isomorphism(c.summands[k], e.summands[k]));
        }
}

TEST_CASE("HZ coefficients") {
  CHECK(hz_coeff(2, bideg(0, 2)).symbol() == "⊞");
  CHECK(hz_coeff(2, bideg(-3, -3)).symbol() == "○");
  CHECK(hz_coeff(3, VirtualRep::from_dimensions(3, 0, -4)).symbol() == "⊞");
  CHECK(hz_coeff(2, bideg(0, 1)).symbol() == "□̄");
  CHECK(hz_coeff(2, bideg(0, 3)).symbol() == "⊞̄");
  CHECK(hz_coeff(2, bideg(1, 4)).symbol() == "○");
  CHECK_THROWS_AS(hz_coeff(4, VirtualRep(4, 0)), std::invalid_argument);
}

TEST_CASE("K-group charts") {
  CHECK(pi_k_chart(3, 2, bideg(1, 4)).symbol() == "○ ⊕ ⊖^1");
  CHECK(pi_k_chart(3, 2, bideg(0, 0)).symbol() == "□");
  CHECK(pi_k_chart(3, 2, bideg(1, 1)).symbol() == "⊕^1");
  const ChartEntry e = pi_k_chart(4, 3, VirtualRep::trivial(3, 1));
  REQUIRE(e.summands.size() == 1);
  const MackeyFn& m = e.summands[0];
  CHECK(m.level(3) == FgAb::cyclic(3));
  CHECK(m.level(1) == FgAb::cyclic(63));
  CHECK(m.restriction(3, 1).matrix()(0, 0) == 21);
  CHECK_THROWS_AS(pi_k_chart(3, 4, VirtualRep(4, 1)), std::invalid_argument);
}

TEST_CASE("charts are ordered and complete") {
  ChartRequest req;
  const auto chart = compute_chart(req);
  CHECK(chart.size() == 169);
  CHECK(std::is_sorted(chart.begin(), chart.end(),
                       [](const ChartEntry& a, const ChartEntry& b) { return std::pair(a.x, a.y) < std::pair(b.x, b.y); }));
  req.ell = 3;
  req.q = 4;
  req.min = -4;
  req.max = 4;
  const auto odd = compute_chart(req);
  for (const auto& e : odd) CHECK((e.x - e.y) % 2 == 0);
  req.threads = 1;
  const auto serial = compute_chart(req);
  REQUIRE(serial.size() == odd.size());
  for (std::size_t k = 0; k < odd.size(); ++k) CHECK(serial[k].symbol() == odd[k].symbol());
}

TEST_CASE("geometric fixed points") {
  CHECK(geometric_fixed_points_hz(4).describe() == "Z/2[x], |x|=2");
  CHECK(geometric_fixed_points_hz(9).describe() == "Z/3[x], |x|=2");
  CHECK(geometric_fixed_points_hz(6).describe() == "0");
  CHECK(geometric_fixed_points_hz(1).describe() == "Z (degree 0)");
}
