#pragma once

#include "eqk/abelian.hpp"

namespace eqk {

/// A module over C_n: an abelian group with the action of the distinguished generator.
class GModule {
 public:
  GModule() = default;
  // Throws std::invalid_argument unless `action` is an automorphism with action^n = 1.
  GModule(long n, AbMap action);

  static GModule trivial_z(long n);
  static GModule sign_z(long n);  // Z with the generator acting by -1; n even
  static GModule zero(long n);

  long n() const { return n_; }
  const FgAb& group() const { return action_.source(); }
  const AbMap& action() const { return action_; }
  // The generator of the order m subgroup, i.e. action^(n/m).
  AbMap subgroup_generator(long m) const;

  bool operator==(const GModule& rhs) const = default;

 private:
  long n_ = 1;
  AbMap action_;
};

// K_{2i-1}(F_{q^n}) = Z/(q^{ni}-1) with the generator acting by q^i, or by -q^i when twisted.
GModule k_module(const Int& q, long n, long i, bool twisted);

void require_divisor(long n, long m);
std::vector<long> divisors(long n);

KernelResult invariants(const GModule& m, long sub);
CokernelResult coinvariants(const GModule& m, long sub);
// Sum of the translates by the order `sub` subgroup, as an endomorphism of the module.
AbMap norm_element(const GModule& m, long sub);
// Induced map from coinvariants to invariants.
AbMap norm_map(const GModule& m, long sub);

FgAb group_cohomology(const GModule& m, long sub, long s);
FgAb group_homology(const GModule& m, long sub, long s);
FgAb tate_cohomology(const GModule& m, long sub, long s);

}  // namespace eqk
