#pragma once

#include "eqk/abelian.hpp"
#include "eqk/catalog.hpp"

#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqk {

/// Normal-form monomial of the C_2-graded K-theory ring, written as B ⊕ M ⊕ N.
///   B: u^a α^c, or the formal class t_m = 2/u^m (m >= 1, then a = c = 0)
///   M: y_{j,k}, j, k >= 1
///   N: x_{i,b}, i >= 1
struct Monomial {
  enum class Part { base, y, x };
  Part part = Part::base;
  long a = 0, c = 0, m = 0;  // base
  long j = 0, k = 0;         // y
  long i = 0, b = 0;         // x

  static Monomial base(long a, long c, long m = 0);
  static Monomial one() { return base(0, 0); }
  static Monomial u(long a = 1) { return base(a, 0); }
  static Monomial alpha(long c = 1) { return base(0, c); }
  static Monomial t(long m) { return base(0, 0, m); }
  static Monomial y(long j, long k);
  static Monomial x(long i, long b);

  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial&) const = default;
  std::string to_string() const;
};

Bidegree grade(const Monomial& m);
// Additive order; nullopt for the infinite-order classes u^a and t_m.
std::optional<Int> order_of(const Monomial& m, const Int& q);

struct RingError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class RingElem {
 public:
  explicit RingElem(Int q = 3);
  RingElem(Int q, const Monomial& m, const Int& coeff = 1);

  const Int& q() const { return q_; }
  const std::map<Monomial, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coefficient(const Monomial& m) const;
  // Set of bidegrees with a nonzero term.
  std::vector<Bidegree> degrees() const;
  bool is_homogeneous() const;
  // Zero B-component.
  bool in_square_zero_part() const;

  RingElem operator+(const RingElem& rhs) const;
  RingElem operator-(const RingElem& rhs) const;
  RingElem operator-() const;
  RingElem scaled(const Int& k) const;
  bool operator==(const RingElem& rhs) const;

  // Canonical text form, e.g. "2*x[1,2] + u^2*a"; "0" for the zero element.
  std::string to_string() const;

 private:
  void add(const Monomial& m, const Int& coeff);

  Int q_;
  std::map<Monomial, Int> terms_;
};

RingElem multiply(const RingElem& lhs, const RingElem& rhs);
RingElem operator*(const RingElem& lhs, const RingElem& rhs);

// Parses sums of products of factors: integers, u, u^k, a, a^k, t[m], x[i,b], y[j,k].
RingElem parse_ring_element(const Int& q, const std::string& text);

// Every normal-form monomial of the given bidegree.
std::vector<Monomial> monomials_at(const Bidegree& d);
// Additive group spanned by the monomials of the given bidegree.
FgAb ring_group_at(const Int& q, const Bidegree& d);

RingElem random_homogeneous(const Int& q, const Bidegree& d, std::mt19937_64& rng);

// Pairs (x, y) -> (x - 1, y - 1) where multiplication by alpha is nonzero on the B ⊕ M part,
// with both ends in [min, max]^2. These are the alpha-lines of the HZ chart.
std::vector<std::pair<Bidegree, Bidegree>> hz_alpha_lines(long min, long max);

/// One instance of a defining relation: left * right == expected.
struct RelationInstance {
  std::string family;
  RingElem left, right, expected;
};

// Instances of the defining relations with indices drawn from the bidegree window [-w, w]^2.
std::vector<RelationInstance> relation_instances(const Int& q, long w);

struct HomogeneityRecord {
  std::string relation;
  Bidegree lhs;
  Bidegree rhs;
  bool ok = false;
};

// For each relation with nonzero right side, compares the bidegree of both sides.
std::vector<HomogeneityRecord> check_homogeneity(const std::vector<RelationInstance>& relations);

}  // namespace eqk
