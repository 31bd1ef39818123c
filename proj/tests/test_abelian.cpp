#include "doctest.h"
#include "eqk/abelian.hpp"

#include <random>

using namespace eqk;

namespace {

bool is_chain(const IntMatrix& d) {
  Int prev = 1;
  bool seen_zero = false;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
    const Int& v = d(i, i);
    if (v < 0) return false;
    if (seen_zero && v != 0) return false;
    if (v == 0) {
      seen_zero = true;
      continue;
    }
    if (v % prev != 0) return false;
    prev = v;
  }
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c)
      if (r != c && d(r, c) != 0) return false;
  return true;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> dist(-9, 9);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("smith normal form on small matrices") {
  auto id = smith_normal_form(IntMatrix{{1, 0}, {0, 1}});
  CHECK(id.D == IntMatrix{{1, 0}, {0, 1}});

  auto f = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  CHECK(f.D == IntMatrix{{2, 0}, {0, 4}});

  auto z = smith_normal_form(IntMatrix{{0}});
  CHECK(z.D == IntMatrix{{0}});
  CHECK(z.rank == 0);
}

TEST_CASE("smith normal form identities on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    const IntMatrix a = random_matrix(rng, r, c);
    const SmithForm f = smith_normal_form(a);
    CHECK(f.U * a * f.V == f.D);
    CHECK(abs(f.U.determinant()) == 1);
    CHECK(abs(f.V.determinant()) == 1);
    CHECK(f.U * f.U_inverse == IntMatrix::identity(r));
    CHECK(f.V * f.V_inverse == IntMatrix::identity(c));
    CHECK(is_chain(f.D));
    const IntMatrix k = integer_kernel(a);
    CHECK((a * k).is_zero());
    CHECK(k.cols() == c - f.rank);
  }
}

TEST_CASE("solve_integer") {
  const IntMatrix a{{2, 4}, {6, 8}};
  auto x = solve_integer(a, {2, 6});
  REQUIRE(x);
  CHECK(a * *x == Vec{2, 6});
  CHECK_FALSE(solve_integer(IntMatrix{{2}}, {1}));
}

TEST_CASE("group normal form and printing") {
  CHECK(FgAb::from_cyclic_orders({4, 6}) == FgAb({2, 12}, 0));
  CHECK(FgAb::from_cyclic_orders({1, 0, 3}) == FgAb({3}, 1));
  CHECK(FgAb({2, 8}, 2).to_string() == "Z/2 + Z/8 + Z^2");
  CHECK(FgAb().to_string() == "0");
  CHECK_THROWS_AS(FgAb({2, 3}, 0), std::invalid_argument);
  CHECK_THROWS_AS(FgAb({1}, 0), std::invalid_argument);
}

TEST_CASE("cokernel examples") {
  const FgAb z = FgAb::free(1);
  CHECK(cokernel(AbMap::scalar(z, 2)).group == FgAb::cyclic(2));
  CHECK(cokernel(AbMap::zero(FgAb::cyclic(2), FgAb())).group.is_trivial());
  CHECK(cokernel(AbMap::identity(FgAb::cyclic(8))).group.is_trivial());
}

TEST_CASE("kernel examples") {
  const FgAb z = FgAb::free(1);
  CHECK(kernel(AbMap::scalar(z, 2)).group.is_trivial());
  auto k = kernel(AbMap::zero(FgAb::cyclic(2), z));
  CHECK(k.group == FgAb::cyclic(2));
  CHECK(is_isomorphism(k.inclusion));
}

TEST_CASE("is_isomorphism examples") {
  CHECK(is_isomorphism(AbMap::identity(FgAb::cyclic(8))));
  CHECK_FALSE(is_isomorphism(AbMap::scalar(FgAb::free(1), 2)));
  // Z/2 -> Z/2 given by the class of 4 in the invariants of Z/8; as a map Z/2 -> Z/8 it is injective
  const AbMap n(FgAb::cyclic(2), FgAb::cyclic(8), IntMatrix{{4}});
  CHECK(is_injective(n));
  CHECK_FALSE(is_surjective(n));
}

TEST_CASE("ill-defined maps are rejected") {
  CHECK_THROWS_AS(AbMap(FgAb::cyclic(2), FgAb::cyclic(8), IntMatrix{{1}}), std::invalid_argument);
  CHECK_THROWS_AS(AbMap(FgAb::cyclic(2), FgAb::free(1), IntMatrix{{1}}), std::invalid_argument);
}

TEST_CASE("kernel and cokernel properties on random maps") {
  std::mt19937_64 rng(11);
  const std::vector<FgAb> groups = {FgAb::free(2), FgAb({2, 4}, 0), FgAb({3}, 1), FgAb({6}, 0),
                                    FgAb({2, 2, 4}, 0), FgAb({}, 3), FgAb({4, 12}, 1)};
  for (int trial = 0; trial < 150; ++trial) {
    const FgAb& s = groups[rng() % groups.size()];
    const FgAb& t = groups[rng() % groups.size()];
    // a random well-defined map: scale each column by the exponent-compatible factor
    IntMatrix m = random_matrix(rng, t.generator_count(), s.generator_count());
    for (std::size_t c = 0; c < s.generator_count(); ++c) {
      const Int o = s.generator_order(c);
      for (std::size_t r = 0; r < t.generator_count(); ++r) {
        const Int to = t.generator_order(r);
        if (o == 0) continue;
        if (to == 0) {
          m(r, c) = 0;
        } else {
          m(r, c) *= to / gcd(to, o);
        }
      }
    }
    const AbMap f(s, t, m);
    const auto k = kernel(f);
    CHECK(compose(f, k.inclusion).is_zero());
    CHECK(is_injective(k.inclusion));
    const auto c = cokernel(f);
    CHECK(compose(c.projection, f).is_zero());
    CHECK(is_surjective(c.projection));
    // first isomorphism theorem on orders when everything is finite
    if (s.is_finite() && t.is_finite()) {
      const Int im = *s.order() / *k.group.order();
      CHECK(*t.order() == im * *c.group.order());
      CHECK(*image(f).group.order() == im);
    }
    // every element of the source that f kills factors through the kernel
    for (std::size_t j = 0; j < k.group.generator_count(); ++j) {
      Vec e(k.group.generator_count(), Int(0));
      e[j] = 1;
      CHECK(t.is_zero_element(f(k.inclusion(e))));
    }
  }
}

TEST_CASE("normal form is presentation independent") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t g = 1 + rng() % 4;
    const IntMatrix rel = random_matrix(rng, g, 1 + rng() % 4);
    const Normalized a = normalize_presentation(g, rel);
    // change basis by a random unimodular matrix
    IntMatrix u = IntMatrix::identity(g);
    for (int step = 0; step < 6 && g > 1; ++step) {
      const std::size_t i = rng() % g, j = (i + 1 + rng() % (g - 1)) % g;
      u.add_row_multiple(i, j, Int(static_cast<long>(rng() % 5) - 2));
    }
    const Normalized b = normalize_presentation(g, u * rel);
    CHECK(a.group == b.group);
  }
}

TEST_CASE("direct sums, inverses and factorization") {
  const auto ds = direct_sum({FgAb::cyclic(2), FgAb::cyclic(4), FgAb::free(1)});
  CHECK(ds.group == FgAb({2, 4}, 1));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const AbMap pi = compose(ds.projections[i], ds.injections[j]);
      if (i == j)
        CHECK(pi == AbMap::identity(pi.source()));
      else
        CHECK(pi.is_zero());
    }

  const FgAb z8 = FgAb::cyclic(8);
  const AbMap three = AbMap::scalar(z8, 3);
  CHECK(compose(inverse(three), three) == AbMap::identity(z8));
  CHECK(three.power(2) == AbMap::identity(z8));

  const AbMap four(FgAb::cyclic(2), z8, IntMatrix{{4}});
  const AbMap twice_four(FgAb::cyclic(2), z8, IntMatrix{{4}});
  auto g = factor_through_injection(twice_four, four);
  REQUIRE(g);
  CHECK(*g == AbMap::identity(FgAb::cyclic(2)));
  const AbMap gen(FgAb::free(1), z8, IntMatrix{{1}});
  CHECK_FALSE(factor_through_injection(gen, four));
}
