#pragma once

#include "eqk/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eqk {

/// Finitely generated abelian group Z/d_1 + ... + Z/d_t + Z^r in invariant-factor form.
///
/// Generators are ordered torsion first (d_1 | d_2 | ... | d_t, each d_j >= 2), then the
/// free generators. Elements are coordinate vectors in this basis.
class FgAb {
 public:
  FgAb() = default;
  FgAb(Vec torsion, std::size_t free_rank);

  static FgAb cyclic(const Int& order);  // order 0 gives Z, order 1 the trivial group
  static FgAb free(std::size_t rank);
  // Normal form of a direct sum of cyclic groups with the given orders (0 = infinite).
  static FgAb from_cyclic_orders(const Vec& orders);

  const Vec& torsion() const { return torsion_; }
  std::size_t free_rank() const { return free_rank_; }
  std::size_t generator_count() const { return torsion_.size() + free_rank_; }
  // Order of the j-th generator; 0 for a free generator.
  Int generator_order(std::size_t j) const;

  bool is_trivial() const { return generator_count() == 0; }
  bool is_finite() const { return free_rank_ == 0; }
  std::optional<Int> order() const;  // nullopt when infinite

  Vec reduce(Vec x) const;  // canonical coordinates
  bool is_zero_element(const Vec& x) const;
  Vec zero_element() const { return Vec(generator_count(), Int(0)); }

  // Diagonal relation matrix of the presentation (zeros on free generators).
  IntMatrix relation_matrix() const;

  bool operator==(const FgAb& rhs) const = default;
  std::string to_string() const;  // e.g. "Z/2 + Z/8 + Z^2", "0"

 private:
  Vec torsion_;
  std::size_t free_rank_ = 0;
};

/// A presented group rewritten in invariant-factor form.
///
/// `to_normal` maps presentation coordinates to normal-form coordinates and
/// `from_normal` sends each normal-form generator to a representative in the presentation.
struct Normalized {
  FgAb group;
  IntMatrix to_normal;
  IntMatrix from_normal;
};

Normalized normalize_presentation(std::size_t generators, const IntMatrix& relations);

/// Homomorphism between normal-form groups, stored as a target x source integer matrix
/// with each row reduced modulo the order of its target generator.
class AbMap {
 public:
  AbMap() = default;
  // Throws std::invalid_argument when the matrix does not respect the source relations.
  AbMap(FgAb source, FgAb target, IntMatrix matrix);

  static AbMap zero(const FgAb& source, const FgAb& target);
  static AbMap identity(const FgAb& group);
  static AbMap scalar(const FgAb& group, const Int& c);

  const FgAb& source() const { return source_; }
  const FgAb& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  Vec operator()(const Vec& x) const;
  bool is_zero() const { return matrix_.is_zero(); }
  bool operator==(const AbMap& rhs) const = default;

  AbMap operator+(const AbMap& rhs) const;
  AbMap operator-(const AbMap& rhs) const;
  AbMap operator-() const;
  AbMap power(unsigned long k) const;  // endomorphisms only

 private:
  FgAb source_;
  FgAb target_;
  IntMatrix matrix_;
};

// after ∘ before
AbMap compose(const AbMap& after, const AbMap& before);

struct KernelResult {
  FgAb group;
  AbMap inclusion;
};

struct CokernelResult {
  FgAb group;
  AbMap projection;
  IntMatrix section;  // column j lifts cokernel generator j to the target
};

KernelResult kernel(const AbMap& f);
CokernelResult cokernel(const AbMap& f);
KernelResult image(const AbMap& f);
bool is_injective(const AbMap& f);
bool is_surjective(const AbMap& f);
bool is_isomorphism(const AbMap& f);

// Some x with f(x) = y, if y lies in the image.
std::optional<Vec> preimage(const AbMap& f, const Vec& y);
// Inverse of an isomorphism; throws std::invalid_argument otherwise.
AbMap inverse(const AbMap& f);
// The unique g with `injection` ∘ g = f, when f lands in the image of the injection.
std::optional<AbMap> factor_through_injection(const AbMap& f, const AbMap& injection);

struct DirectSum {
  FgAb group;
  std::vector<AbMap> injections;
  std::vector<AbMap> projections;
};

DirectSum direct_sum(const std::vector<FgAb>& summands);
// Block map between direct sums: blocks[i][j] maps summand j of the source to summand i of the target.
AbMap block_map(const DirectSum& source, const DirectSum& target, const std::vector<std::vector<AbMap>>& blocks);

}  // namespace eqk
