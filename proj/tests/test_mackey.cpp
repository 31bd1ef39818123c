#include "doctest.h"
#include "eqk/catalog.hpp"
#include "eqk/mackey.hpp"

using namespace eqk;

namespace {

Int scalar_of(const AbMap& f) {
  REQUIRE(f.matrix().rows() == 1);
  REQUIRE(f.matrix().cols() == 1);
  return f.matrix()(0, 0);
}

}  // namespace

TEST_CASE("fixed point functor of Z is box") {
  const MackeyFn r = fixed_point_mackey(GModule::trivial_z(2));
  CHECK(r.level(2) == FgAb::free(1));
  CHECK(r.level(1) == FgAb::free(1));
  CHECK(scalar_of(r.restriction(2, 1)) == 1);
  CHECK(scalar_of(r.transfer(1, 2)) == 2);
  CHECK(validate_mackey(r).empty());
  CHECK(r.same_data(closed_form({Symbol::box, 2, 2, 0})));
}

TEST_CASE("fixed point functor of K_1(F_9)") {
  const MackeyFn r = fixed_point_mackey(k_module(3, 2, 1, false));
  CHECK(r.level(2) == FgAb::cyclic(2));
  CHECK(r.level(1) == FgAb::cyclic(8));
  CHECK(validate_mackey(r).empty());
  CHECK(find_isomorphism(r, closed_form({Symbol::ominus, 3, 2, 1})));
}

TEST_CASE("fixed point functor of the sign module") {
  const MackeyFn r = fixed_point_mackey(GModule::sign_z(2));
  CHECK(r.level(2).is_trivial());
  CHECK(r.level(1) == FgAb::free(1));
  CHECK(r.weyl(1) == AbMap::scalar(FgAb::free(1), -1));
}

TEST_CASE("orbit functors") {
  const MackeyFn l = orbit_mackey(GModule::trivial_z(2));
  CHECK(scalar_of(l.transfer(1, 2)) == 1);
  CHECK(scalar_of(l.restriction(2, 1)) == 2);

  const MackeyFn ls = orbit_mackey(GModule::sign_z(2));
  CHECK(ls.level(2) == FgAb::cyclic(2));
  CHECK(ls.restriction(2, 1).is_zero());
  CHECK(scalar_of(ls.transfer(1, 2)) == 1);

  const GModule k = k_module(3, 2, 1, false);
  CHECK(find_isomorphism(orbit_mackey(k), fixed_point_mackey(k)));
}

TEST_CASE("validate_mackey catches a corrupted transfer") {
  const FgAb z = FgAb::free(1);
  const MackeyFn bad = MackeyFn::build(
      2, [&](long) { return z; }, [&](long) { return AbMap::identity(z); },
      [&](long, long) { return AbMap::identity(z); }, [&](long, long) { return AbMap::scalar(z, 3); });
  const auto errors = validate_mackey(bad);
  REQUIRE_FALSE(errors.empty());
  bool found = false;
  for (const auto& e : errors) found = found || e == "double coset (d,e,f)=(1,1,2)";
  CHECK(found);
  CHECK(validate_mackey(fixed_point_mackey(k_module(2, 6, 2, false))).empty());
}

TEST_CASE("norm morphism kernels and cokernels") {
  const auto z = norm_mackey_morphism(GModule::trivial_z(2));
  CHECK(z.kernel.is_zero());
  CHECK(z.cokernel.level(2) == FgAb::cyclic(2));
  CHECK(z.cokernel.level(1).is_trivial());

  const auto s = norm_mackey_morphism(GModule::sign_z(2));
  CHECK(s.kernel.level(2) == FgAb::cyclic(2));
  CHECK(s.kernel.level(1).is_trivial());

  for (long n : {1, 2, 3, 4, 6}) {
    const auto k = norm_mackey_morphism(k_module(3, n, 1, false));
    CHECK(k.kernel.is_zero());
    CHECK(k.cokernel.is_zero());
    CHECK(validate_mackey(k.kernel).empty());
  }
}

TEST_CASE("hom_is_zero certificates") {
  CHECK(hom_is_zero(named(Symbol::bullet, 2), named(Symbol::oplus, 3, 2, 1)));
  CHECK(hom_is_zero(named(Symbol::circle, 2), named(Symbol::ominus, 3, 2, 1)));
  CHECK_FALSE(hom_is_zero(named(Symbol::box, 2), named(Symbol::box, 2)));
}

TEST_CASE("splitting retraction") {
  const MackeyFn sub = named(Symbol::ominus, 3, 2, 1);
  const MackeyFn quot = named(Symbol::circle, 2);
  const MackeyFn sum = direct_sum({sub, quot});
  CHECK(sum.name() == "⊖^1 ⊕ ○");
  MackeyMor inc{sub, sum, {}};
  for (long d : {1L, 2L}) inc.maps[d] = direct_sum({sub.level(d), quot.level(d)}).injections[0];
  REQUIRE(validate_morphism(inc).empty());
  const MackeyMor phi = splitting_retraction(inc);
  CHECK(validate_morphism(phi).empty());
  CHECK(compose(phi, inc).maps == identity_morphism(sub).maps);

  const MackeyFn box = named(Symbol::box, 2);
  const MackeyMor id = splitting_retraction(identity_morphism(box));
  CHECK(id.maps == identity_morphism(box).maps);

  MackeyMor not_iso{box, box, {}};
  for (long d : {1L, 2L}) not_iso.maps[d] = AbMap::scalar(FgAb::free(1), 2);
  CHECK_THROWS_AS(splitting_retraction(not_iso), std::invalid_argument);
}

TEST_CASE("direct sums of Mackey functors are valid") {
  const MackeyFn s = direct_sum({named(Symbol::oplus, 5, 2, 2), named(Symbol::barcircle, 2), named(Symbol::bullet, 2)});
  CHECK(validate_mackey(s).empty());
  CHECK(s.level(1) == FgAb::cyclic(624));
}
