#include "eqk/gmodule.hpp"

#include <stdexcept>
#include <string>

namespace eqk {

GModule::GModule(long n, AbMap action) : n_(n), action_(std::move(action)) {
  if (n_ < 1) throw std::invalid_argument("GModule: group order must be positive");
  if (action_.source() != action_.target()) throw std::invalid_argument("GModule: action is not an endomorphism");
  if (!(action_.power(static_cast<unsigned long>(n_)) == AbMap::identity(group())))
    throw std::invalid_argument("GModule: action^n is not the identity");
}

GModule GModule::trivial_z(long n) { return GModule(n, AbMap::identity(FgAb::free(1))); }

GModule GModule::sign_z(long n) {
  if (n % 2 != 0) throw std::invalid_argument("GModule::sign_z: the sign module needs n even");
  return GModule(n, AbMap::scalar(FgAb::free(1), -1));
}

GModule GModule::zero(long n) { return GModule(n, AbMap::identity(FgAb())); }

AbMap GModule::subgroup_generator(long m) const {
  require_divisor(n_, m);
  return action_.power(static_cast<unsigned long>(n_ / m));
}

GModule k_module(const Int& q, long n, long i, bool twisted) {
  if (q < 2 || prime_of_prime_power(q) == 0) throw std::invalid_argument("k_module: q must be a prime power");
  if (i < 1) throw std::invalid_argument("k_module: i must be positive");
  if (n < 1) throw std::invalid_argument("k_module: n must be positive");
  if (twisted && n % 2 != 0) throw std::invalid_argument("k_module: the twisted module needs n even");
  const FgAb g = FgAb::cyclic(ipow(q, static_cast<unsigned long>(n * i)) - 1);
  const Int qi = ipow(q, static_cast<unsigned long>(i));
  return GModule(n, AbMap::scalar(g, twisted ? Int(-qi) : qi));
}

void require_divisor(long n, long m) {
  if (m < 1 || n % m != 0)
    throw std::invalid_argument(std::to_string(m) + " is not a divisor of " + std::to_string(n));
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

KernelResult invariants(const GModule& m, long sub) {
  return kernel(m.subgroup_generator(sub) - AbMap::identity(m.group()));
}

CokernelResult coinvariants(const GModule& m, long sub) {
  return cokernel(m.subgroup_generator(sub) - AbMap::identity(m.group()));
}

AbMap norm_element(const GModule& m, long sub) {
  const AbMap h = m.subgroup_generator(sub);
  AbMap sum = AbMap::zero(m.group(), m.group());
  AbMap term = AbMap::identity(m.group());
  for (long j = 0; j < sub; ++j) {
    sum = sum + term;
    term = compose(h, term);
  }
  return sum;
}

AbMap norm_map(const GModule& m, long sub) {
  const AbMap n = norm_element(m, sub);
  const AbMap h = m.subgroup_generator(sub);
  if (!compose(n, h - AbMap::identity(m.group())).is_zero())
    throw std::logic_error("norm_map: norm does not vanish on (h - 1)");
  const auto inv = invariants(m, sub);
  const auto coinv = coinvariants(m, sub);
  const AbMap lifted(coinv.group, m.group(), n.matrix() * coinv.section);
  auto out = factor_through_injection(lifted, inv.inclusion);
  if (!out) throw std::logic_error("norm_map: norm does not land in the invariants");
  return *out;
}

FgAb group_cohomology(const GModule& m, long sub, long s) {
  if (s < 0) throw std::invalid_argument("group_cohomology: negative degree");
  if (s == 0) return invariants(m, sub).group;
  const AbMap n = norm_map(m, sub);
  return s % 2 == 1 ? kernel(n).group : cokernel(n).group;
}

FgAb group_homology(const GModule& m, long sub, long s) {
  if (s < 0) throw std::invalid_argument("group_homology: negative degree");
  if (s == 0) return coinvariants(m, sub).group;
  const AbMap n = norm_map(m, sub);
  return s % 2 == 1 ? cokernel(n).group : kernel(n).group;
}

FgAb tate_cohomology(const GModule& m, long sub, long s) {
  const AbMap n = norm_map(m, sub);
  return (s % 2 != 0) ? kernel(n).group : cokernel(n).group;
}

}  // namespace eqk
