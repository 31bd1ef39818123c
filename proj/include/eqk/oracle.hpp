#pragma once

#include "eqk/mackey.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

// Brute-force and resolution-based cross-checks. Nothing here calls the kernel, cokernel or
// normal form routines of the main library; the lattice arithmetic is reimplemented below.
namespace eqk::oracle {

// Invariant factors of Z^rows / (column span of a), as a normal-form group.
FgAb quotient_group(const IntMatrix& a);

enum class Complex { cohomology, homology, tate };

/// The 2-periodic complex of a cyclic subgroup C_m acting on M: every term is M and the
/// differentials alternate between D1 = h - 1 and D2 = 1 + h + ... + h^{m-1}, h = action^{n/m}.
struct PeriodicResolution {
  GModule module;
  long m = 1;
  IntMatrix d1, d2;
  IntMatrix relations;  // M = Z^g / span(relations)

  PeriodicResolution(const GModule& module, long m);
  // The differential leaving position s of the chosen complex.
  const IntMatrix& differential(Complex c, long s) const;
  // D1 D2 and D2 D1 vanish modulo the relations.
  bool is_complex() const;
};

// H^s (s >= 0), H_s (s >= 0) or the Tate group in degree s, from the periodic complex.
FgAb resolution_cohomology(const GModule& m, long sub, long s, Complex c = Complex::cohomology);

// Order of the same group found by listing every element of M; M must be finite with at most
// `bound` elements.
Int enumerated_order(const GModule& m, long sub, long s, Complex c, std::uint64_t bound = 4096);

struct BoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All nonzero morphisms a -> b, by backtracking over level maps from the bottom level up.
// Throws BoundExceeded when some level is infinite or has more than `bound` elements.
std::vector<MackeyMor> exhaustive_hom_search(const MackeyFn& a, const MackeyFn& b, std::uint64_t bound = 64);

// Level-wise reduction mod k, a finite stand-in for functors with free levels.
MackeyFn truncate_mod(const MackeyFn& m, const Int& k);

struct RandomExtension {
  MackeyFn middle;
  MackeyMor inclusion;  // sub -> middle
  std::uint64_t seed = 0;
  int attempts = 0;
  bool twisted = false;  // true when a random non-block-diagonal structure satisfied the axioms
};

// An extension 0 -> sub -> P -> quot -> 0 with randomly chosen off-diagonal structure maps.
// Random upper triangular structure maps are tried first; after `retries` failures the
// diagonal structure is conjugated by a random unipotent level automorphism.
RandomExtension random_extension(const MackeyFn& sub, const MackeyFn& quot, std::uint64_t seed, int retries = 8);

}  // namespace eqk::oracle
