#include "doctest.h"
#include "eqk/catalog.hpp"

#include <random>

using namespace eqk;

namespace {

Int scalar_of(const AbMap& f) {
  REQUIRE(f.matrix().rows() == 1);
  REQUIRE(f.matrix().cols() == 1);
  return f.matrix()(0, 0);
}

}  // namespace

TEST_CASE("orientation") {
  CHECK(orientation(VirtualRep(2, 0, 1)) == Orientation::reversing);
  CHECK(orientation(VirtualRep(3, 0, 0, {1})) == Orientation::preserving);
  CHECK(orientation(VirtualRep(2, 0, 2)) == Orientation::preserving);
}

TEST_CASE("orientation is additive") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> dist(-5, 5);
  for (int k = 0; k < 200; ++k) {
    const long n = 2 * (1 + static_cast<long>(rng() % 3));
    const VirtualRep a(n, dist(rng), dist(rng), std::vector<long>((n - 1) / 2, dist(rng)));
    const VirtualRep b(n, dist(rng), dist(rng), std::vector<long>((n - 1) / 2, dist(rng)));
    const bool ra = orientation(a) == Orientation::reversing;
    const bool rb = orientation(b) == Orientation::reversing;
    CHECK((orientation(a + b) == Orientation::reversing) == (ra != rb));
  }
}

TEST_CASE("representation dimensions") {
  const VirtualRep v(6, 1, 2, {1, -1});
  CHECK(v.dim() == 3);
  CHECK(v.fixed_dim(6) == 1);
  CHECK(v.fixed_dim(3) == 3);   // index 2: sign fixed, neither rotation fixed
  CHECK(v.fixed_dim(2) == -1);  // lambda_2 fixed by the order 2 subgroup
  CHECK(v.fixed_dim(1) == 3);
  CHECK(VirtualRep::from_bidegree({1, 4}).a0 == -3);
  CHECK(VirtualRep::from_bidegree({1, 4}).bidegree() == Bidegree{1, 4});
  const VirtualRep w = VirtualRep::from_dimensions(3, 0, -4);
  CHECK(w.dim() == 0);
  CHECK(w.fixed_dim(3) == -4);
  CHECK_THROWS_AS(VirtualRep(3, 0, 1), std::invalid_argument);
}

TEST_CASE("quillen_k") {
  CHECK(quillen_k(3, 1) == FgAb::cyclic(2));
  CHECK(quillen_k(4, 2).is_trivial());
  CHECK(quillen_k(2, 0) == FgAb::free(1));
  CHECK(quillen_k(5, 3) == FgAb::cyclic(24));
  CHECK_THROWS_AS(quillen_k(2, -1), std::invalid_argument);
}

TEST_CASE("underlying modules") {
  const GModule a = underlying_k_module(3, 2, VirtualRep::from_bidegree({1, 0}));
  CHECK(a.group() == FgAb::cyclic(8));
  CHECK(a.action() == AbMap::scalar(FgAb::cyclic(8), 3));
  const GModule b = underlying_k_module(3, 2, VirtualRep::from_bidegree({1, 1}));
  CHECK(b.action() == AbMap::scalar(FgAb::cyclic(8), 5));
  const GModule c = underlying_k_module(3, 2, VirtualRep::from_bidegree({0, 1}));
  CHECK(c == GModule::sign_z(2));
  CHECK(underlying_k_module(3, 2, VirtualRep::from_bidegree({2, 0})).group().is_trivial());
  CHECK(underlying_k_module(3, 2, VirtualRep::from_bidegree({-1, 0})).group().is_trivial());
}

TEST_CASE("underlying group agrees with Quillen on orientation preserving degrees") {
  for (long q : {2, 3, 4, 5})
    for (long n : {1, 2, 3, 4})
      for (long d = 0; d <= 7; ++d) {
        const GModule m = underlying_k_module(q, n, VirtualRep::trivial(n, d));
        CHECK(m.group() == quillen_k(ipow(q, n), d));
      }
}

TEST_CASE("named functor examples") {
  const MackeyFn om = named(Symbol::ominus, 3, 2, 1);
  CHECK(om.level(2) == FgAb::cyclic(2));
  CHECK(om.level(1) == FgAb::cyclic(8));
  CHECK(scalar_of(om.restriction(2, 1)) == 4);
  CHECK(scalar_of(om.transfer(1, 2)) == 1);
  CHECK(scalar_of(om.weyl(1)) == 3);

  const MackeyFn op = named(Symbol::oplus, 3, 2, 1);
  CHECK(op.level(2) == FgAb::cyclic(4));
  CHECK(op.level(1) == FgAb::cyclic(8));
  CHECK(scalar_of(op.restriction(2, 1)) == floor_mod(Int(-2), Int(8)));
  CHECK(scalar_of(op.transfer(1, 2)) == 1);

  const MackeyFn bc = named(Symbol::barcircle, 4);
  CHECK(bc.level(2) == FgAb::cyclic(2));
  CHECK(bc.weyl(2) == AbMap::scalar(FgAb::cyclic(2), -1));
  CHECK(bc.level(4).is_trivial());
  CHECK(bc.level(1).is_trivial());

  const MackeyFn o3 = named(Symbol::ominus, 4, 3, 1);
  CHECK(o3.level(3) == FgAb::cyclic(3));
  CHECK(o3.level(1) == FgAb::cyclic(63));
  CHECK(scalar_of(o3.restriction(3, 1)) == 21);

  CHECK_THROWS_AS(named(Symbol::barbox, 3), std::invalid_argument);
  CHECK_THROWS_AS(named(Symbol::oplus, 3, 5, 1), std::invalid_argument);
}

TEST_CASE("closed forms agree with the functorial constructions") {
  for (long n : {1, 2, 3, 4, 5, 6}) {
    for (Symbol s : {Symbol::box, Symbol::boxslash, Symbol::circle, Symbol::barbox, Symbol::barboxslash,
                     Symbol::barcircle, Symbol::bullet}) {
      if (needs_even_order(s) && n % 2 != 0) continue;
      const SymbolSpec spec{s, 2, n, 0};
      const MackeyFn c = closed_form(spec);
      CAPTURE(symbol_name(s));
      CAPTURE(n);
      CHECK(validate_mackey(c).empty());
      CHECK(find_isomorphism(functorial(spec), c));
    }
    for (long q : {2, 3, 4, 5, 7})
      for (long i : {1, 2})
        for (Symbol s : {Symbol::ominus, Symbol::oplus}) {
          if (needs_even_order(s) && n % 2 != 0) continue;
          const SymbolSpec spec{s, q, n, i};
          const MackeyFn c = closed_form(spec);
          CHECK(validate_mackey(c).empty());
          CHECK(find_isomorphism(functorial(spec), c));
        }
  }
}

TEST_CASE("norm kernels and cokernels match the summary table") {
  for (long n : {2, 4, 6}) {
    const auto z = norm_mackey_morphism(GModule::trivial_z(n));
    CHECK(z.kernel.is_zero());
    CHECK(find_isomorphism(z.cokernel, closed_form({Symbol::circle, 2, n, 0})));
    const auto s = norm_mackey_morphism(GModule::sign_z(n));
    CHECK(find_isomorphism(s.kernel, closed_form({Symbol::bullet, 2, n, 0})));
    CHECK(find_isomorphism(s.cokernel, closed_form({Symbol::barcircle, 2, n, 0})));
    for (bool tw : {false, true}) {
      const auto k = norm_mackey_morphism(k_module(3, n, 1, tw));
      CHECK(k.kernel.is_zero());
      CHECK(k.cokernel.is_zero());
    }
  }
}
