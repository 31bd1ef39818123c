#include "doctest.h"
#include "eqk/ring.hpp"
#include "eqk/ss.hpp"

using namespace eqk;

namespace {

RingElem P(long q, const std::string& s) { return parse_ring_element(q, s); }

}  // namespace

TEST_CASE("gradings") {
  CHECK(grade(Monomial::u()) == Bidegree{0, -2});
  CHECK(grade(Monomial::alpha()) == Bidegree{-1, -1});
  CHECK(grade(Monomial::t(3)) == Bidegree{0, 6});
  CHECK(grade(Monomial::x(1, 4)) == Bidegree{1, 4});
  CHECK(grade(Monomial::y(2, 1)) == Bidegree{1, 4});
}

TEST_CASE("additive orders") {
  CHECK(*order_of(Monomial::x(1, 0), 3) == 2);
  CHECK(*order_of(Monomial::x(1, 1), 3) == 4);
  CHECK(*order_of(Monomial::alpha(), 3) == 2);
  CHECK(*order_of(Monomial::y(1, 1), 3) == 2);
  CHECK_FALSE(order_of(Monomial::u(2), 3).has_value());
  CHECK_FALSE(order_of(Monomial::t(1), 3).has_value());
}

TEST_CASE("multiplication examples") {
  CHECK((P(3, "u") * P(3, "x[1,0]")).to_string() == "x[1,-2]");
  CHECK((P(5, "t[1]") * P(5, "x[1,0]")).to_string() == "2*x[1,2]");
  CHECK((P(3, "x[1,0]") * P(3, "x[1,0]")).is_zero());
  CHECK((P(3, "a") * P(3, "y[1,1]")).is_zero());
  CHECK((P(3, "a") * P(3, "y[2,1]")) == P(3, "y[1,1]"));
  CHECK((P(3, "t[1]") * P(3, "u")).to_string() == "2");
  CHECK((P(3, "t[1]") * P(3, "t[2]")).to_string() == "2*t[3]");
  CHECK((P(3, "u^3") * P(3, "t[1]")).to_string() == "2*u^2");
  CHECK((P(3, "u") * P(3, "t[2]")).to_string() == "t[1]");
  CHECK(P(3, "2*a").is_zero());
  CHECK(P(3, "x[1,0]*x[2,1]").is_zero());
  CHECK_THROWS_AS(P(3, "u") * P(5, "u"), RingError);
}

TEST_CASE("parser and printer round trip") {
  for (const char* s : {"0", "1", "-3*u^2", "u*a + 2*t[1] - u", "x[1,-2] + y[2,1]", "3*u^2*a^0", "7 - 2*t[3]"}) {
    const RingElem e = P(5, s);
    CHECK(P(5, e.to_string()) == e);
  }
  CHECK(P(3, "3*u^2*a^0").to_string() == "3*u^2");
  CHECK_THROWS_AS(P(3, "u +"), RingError);
  CHECK_THROWS_AS(P(3, "z"), RingError);
  CHECK_THROWS_AS(P(3, "y[0,1]"), RingError);
  CHECK_THROWS_AS(P(3, "t[0]"), RingError);
}

TEST_CASE("ring axioms on random homogeneous triples") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coord(-8, 8);
  for (long q : {3, 5}) {
    for (int n = 0; n < 200; ++n) {
      const RingElem a = random_homogeneous(q, {coord(rng), coord(rng)}, rng);
      const RingElem b = random_homogeneous(q, {coord(rng), coord(rng)}, rng);
      const RingElem c = random_homogeneous(q, {coord(rng), coord(rng)}, rng);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (a.in_square_zero_part() && b.in_square_zero_part()) CHECK((a * b).is_zero());
    }
  }
}

TEST_CASE("relations hold and are homogeneous") {
  for (long q : {3, 5, 4}) {
    for (const auto& r : relation_instances(q, 6)) {
      CAPTURE(r.family);
      CHECK(r.left * r.right == r.expected);
    }
    for (const auto& h : check_homogeneity(relation_instances(q, 6))) CHECK(h.ok);
  }
}

TEST_CASE("ring groups match the top level of the K chart") {
  for (long q : {3, 5})
    for (long x = -6; x <= 6; ++x)
      for (long y = -6; y <= 6; ++y) {
        CAPTURE(x);
        CAPTURE(y);
        const ChartEntry e = pi_k_chart(q, 2, VirtualRep::from_bidegree({x, y}));
        CHECK(ring_group_at(q, {x, y}) == e.total().level(2));
      }
}
