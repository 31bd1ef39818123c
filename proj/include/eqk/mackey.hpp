#pragma once

#include "eqk/abelian.hpp"
#include "eqk/gmodule.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eqk {

// Which adjunction certifies a functor: image of R (fixed points), image of L (orbits), both, or neither.
enum class Provenance { fixed_point, orbit, both, other };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);
bool in_image_of_fixed_points(Provenance p);
bool in_image_of_orbits(Provenance p);

/// A C_n-Mackey functor.
///
/// Level d (for d | n) is the value on C_n/C_d, where C_d is the subgroup of order d.
/// For d | e, restriction(e, d) maps level e to level d and transfer(d, e) maps level d
/// to level e. weyl(d) is the action of the chosen generator of C_n on level d.
class MackeyFn {
 public:
  using LevelFn = std::function<FgAb(long)>;
  using WeylFn = std::function<AbMap(long)>;
  using PairFn = std::function<AbMap(long, long)>;  // arguments (from, to)

  MackeyFn() = default;

  // Builds every level and every structure map for d | e. The pair callbacks receive
  // (e, d) for restrictions and (d, e) for transfers and are only called with d != e.
  static MackeyFn build(long n, const LevelFn& level, const WeylFn& weyl, const PairFn& restriction,
                        const PairFn& transfer, Provenance tag = Provenance::other, std::string name = "");

  static MackeyFn zero(long n);

  long n() const { return n_; }
  const std::vector<long>& divisors() const { return divisors_; }
  const FgAb& level(long d) const;
  const AbMap& weyl(long d) const;
  const AbMap& restriction(long e, long d) const;
  const AbMap& transfer(long d, long e) const;

  Provenance tag() const { return tag_; }
  const std::string& name() const { return name_; }
  MackeyFn with_name(std::string name) const;
  MackeyFn with_tag(Provenance tag) const;

  bool is_zero() const;
  // Same levels and structure maps; names and tags are ignored.
  bool same_data(const MackeyFn& rhs) const;
  bool operator==(const MackeyFn& rhs) const = default;

 private:
  long n_ = 1;
  std::vector<long> divisors_;
  std::map<long, FgAb> levels_;
  std::map<long, AbMap> weyl_;
  std::map<std::pair<long, long>, AbMap> restrictions_;  // key (e, d)
  std::map<std::pair<long, long>, AbMap> transfers_;     // key (d, e)
  Provenance tag_ = Provenance::other;
  std::string name_;
};

// Axiom violations, each naming the witnessing divisors; empty means valid.
std::vector<std::string> validate_mackey(const MackeyFn& m);

struct MackeyMor {
  MackeyFn source;
  MackeyFn target;
  std::map<long, AbMap> maps;

  const AbMap& at(long d) const { return maps.at(d); }
};

std::vector<std::string> validate_morphism(const MackeyMor& f);
MackeyMor identity_morphism(const MackeyFn& m);
MackeyMor compose(const MackeyMor& after, const MackeyMor& before);
bool is_zero(const MackeyMor& f);
bool is_isomorphism(const MackeyMor& f);

struct MackeyKernel {
  MackeyFn functor;
  MackeyMor inclusion;
};

struct MackeyCokernel {
  MackeyFn functor;
  MackeyMor projection;
};

MackeyKernel kernel(const MackeyMor& f);
MackeyCokernel cokernel(const MackeyMor& f);

// The functors R (fixed points) and L (orbits) from C_n-modules.
MackeyFn fixed_point_mackey(const GModule& m);
MackeyFn orbit_mackey(const GModule& m);

struct NormData {
  MackeyMor norm;  // L(M) -> R(M)
  MackeyFn kernel;
  MackeyFn cokernel;
};

NormData norm_mackey_morphism(const GModule& m);

// Level-wise direct sum; the structure maps are block diagonal.
MackeyFn direct_sum(const std::vector<MackeyFn>& summands);

// True when every morphism m -> n is certifiably zero: m vanishes at the bottom level and
// n lies in the image of R. False means "cannot certify", not "a nonzero map exists".
bool hom_is_zero(const MackeyFn& m, const MackeyFn& n);

// Unique extension of a bottom-level map phi: source(1) -> target(1) when target is of fixed-point
// type. Returns nullopt when some level does not factor.
std::optional<MackeyMor> extend_into_fixed_points(const MackeyFn& source, const MackeyFn& target, const AbMap& phi);
// Dual extension when source is of orbit type (transfers from the bottom are surjective).
std::optional<MackeyMor> extend_from_orbits(const MackeyFn& source, const MackeyFn& target, const AbMap& psi);

// For f: A -> P injective with f(1) an isomorphism and A of fixed-point type, the retraction
// P -> A extending f(1)^{-1}. Throws std::invalid_argument if f(1) is not an isomorphism.
MackeyMor splitting_retraction(const MackeyMor& f);

// Searches for an isomorphism a -> b: adjunction extensions of the bottom identity first, then a
// level-wise search over unit scalars when every level is cyclic.
std::optional<MackeyMor> find_isomorphism(const MackeyFn& a, const MackeyFn& b);

}  // namespace eqk
