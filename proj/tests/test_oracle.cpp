#include "doctest.h"
#include "eqk/catalog.hpp"
#include "eqk/oracle.hpp"

#include <random>

using namespace eqk;
using oracle::Complex;

namespace {

GModule scalar_module(long n, long order, long a) {
  const FgAb g = FgAb::cyclic(order);
  return GModule(n, AbMap::scalar(g, a));
}

}  // namespace

TEST_CASE("oracle quotient groups") {
  CHECK(oracle::quotient_group(IntMatrix{{2, 4}, {6, 8}}) == FgAb({2, 4}, 0));
  CHECK(oracle::quotient_group(IntMatrix{{2, 0}, {0, 3}}) == FgAb::cyclic(6));
  CHECK(oracle::quotient_group(IntMatrix{{4, 0}, {0, 6}}) == FgAb({2, 12}, 0));
  CHECK(oracle::quotient_group(IntMatrix{{0}, {0}}) == FgAb::free(2));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (int k = 0; k < 100; ++k) {
    IntMatrix m(3, 4);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 4; ++c) m(r, c) = dist(rng);
    CHECK(oracle::quotient_group(m) == normalize_presentation(3, m).group);
  }
}

TEST_CASE("resolution cohomology examples") {
  CHECK(oracle::resolution_cohomology(GModule::trivial_z(2), 2, 2) == FgAb::cyclic(2));
  CHECK(oracle::resolution_cohomology(scalar_module(3, 7, 2), 3, 0).is_trivial());
  CHECK(oracle::resolution_cohomology(scalar_module(2, 8, 3), 2, 1).is_trivial());
  CHECK(oracle::enumerated_order(scalar_module(3, 7, 2), 3, 0, Complex::cohomology) == 1);
  CHECK(oracle::enumerated_order(scalar_module(2, 8, 3), 2, 1, Complex::cohomology) == 1);
  CHECK(oracle::resolution_cohomology(GModule::sign_z(2), 2, 1) == FgAb::cyclic(2));
  CHECK(oracle::resolution_cohomology(GModule::trivial_z(2), 2, 0, Complex::homology) == FgAb::free(1));
  CHECK(oracle::resolution_cohomology(GModule::trivial_z(2), 2, 1, Complex::homology) == FgAb::cyclic(2));
  CHECK(oracle::resolution_cohomology(GModule::trivial_z(2), 2, -2, Complex::tate) == FgAb::cyclic(2));
  CHECK(oracle::PeriodicResolution(k_module(3, 4, 1, false), 4).is_complex());
  CHECK_THROWS_AS(oracle::resolution_cohomology(GModule::trivial_z(4), 3, 0), std::invalid_argument);
}

TEST_CASE("resolution cohomology matches the closed forms") {
  for (long q : {2, 3, 5})
    for (long n : {2, 3, 4})
      for (bool tw : {false, true}) {
        if (tw && n % 2) continue;
        const GModule m = k_module(q, n, 1, tw);
        for (long sub : divisors(n))
          for (long s = 0; s <= 4; ++s) {
            CHECK(oracle::resolution_cohomology(m, sub, s) == group_cohomology(m, sub, s));
            CHECK(oracle::resolution_cohomology(m, sub, s, Complex::homology) == group_homology(m, sub, s));
            CHECK(oracle::resolution_cohomology(m, sub, s - 2, Complex::tate) == tate_cohomology(m, sub, s - 2));
          }
      }
}

TEST_CASE("exhaustive hom search") {
  CHECK(oracle::exhaustive_hom_search(named(Symbol::circle, 2), named(Symbol::ominus, 3, 2, 1)).empty());
  CHECK(oracle::exhaustive_hom_search(named(Symbol::bullet, 2), named(Symbol::oplus, 3, 2, 1)).empty());
  const MackeyFn box4 = oracle::truncate_mod(named(Symbol::box, 2), 4);
  CHECK(validate_mackey(box4).empty());
  const auto homs = oracle::exhaustive_hom_search(box4, box4);
  CHECK_FALSE(homs.empty());
  bool has_identity = false;
  for (const auto& f : homs) has_identity = has_identity || f.maps == identity_morphism(box4).maps;
  CHECK(has_identity);
  CHECK_THROWS_AS(oracle::exhaustive_hom_search(named(Symbol::box, 2), named(Symbol::box, 2)), oracle::BoundExceeded);
  CHECK_THROWS_AS(oracle::exhaustive_hom_search(named(Symbol::ominus, 9, 2, 1), named(Symbol::ominus, 9, 2, 1)),
                  oracle::BoundExceeded);
}

TEST_CASE("random extensions split") {
  for (const auto& [sub, quot] : {std::pair{named(Symbol::ominus, 3, 2, 1), named(Symbol::circle, 2)},
                                  std::pair{named(Symbol::box, 2), named(Symbol::circle, 2)},
                                  std::pair{named(Symbol::barbox, 4), named(Symbol::barcircle, 4)},
                                  std::pair{named(Symbol::oplus, 3, 2, 1), MackeyFn::zero(2)}}) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto ext = oracle::random_extension(sub, quot, seed);
      REQUIRE(validate_mackey(ext.middle).empty());
      REQUIRE(validate_morphism(ext.inclusion).empty());
      const MackeyMor phi = splitting_retraction(ext.inclusion);
      CHECK(validate_morphism(phi).empty());
      CHECK(compose(phi, ext.inclusion).maps == identity_morphism(sub).maps);
    }
  }
}
