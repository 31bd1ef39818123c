#pragma once

#include "eqk/gmodule.hpp"
#include "eqk/mackey.hpp"

#include <string>
#include <vector>

namespace eqk {

/// Motivic C_2 bidegree: (x, y) is the virtual representation (x - y) + y·sigma.
struct Bidegree {
  long x = 0;
  long y = 0;
  bool operator==(const Bidegree&) const = default;
  auto operator<=>(const Bidegree&) const = default;
};

/// Virtual real representation of C_n as multiplicities of the real irreducibles:
/// trivial, sign (n even only) and the rotations lambda_j, 1 <= j <= (n-1)/2.
struct VirtualRep {
  long n = 1;
  long a0 = 0;
  long a_sigma = 0;
  std::vector<long> lambda;

  VirtualRep() = default;
  VirtualRep(long n, long a0, long a_sigma = 0, std::vector<long> lambda = {});

  static VirtualRep trivial(long n, long dim);
  static VirtualRep from_bidegree(const Bidegree& b);
  // For odd prime n: the representation a0 + k·lambda_1 with the given |V| and |V^{C_n}|.
  static VirtualRep from_dimensions(long n, long dim, long fixed_dim);

  long dim() const;
  // |V^{C_m}| for the subgroup of order m.
  long fixed_dim(long m) const;
  Bidegree bidegree() const;  // n = 2 only

  VirtualRep operator+(const VirtualRep& rhs) const;
  VirtualRep plus_trivial(long k) const;
  bool operator==(const VirtualRep&) const = default;
  std::string to_string() const;
};

enum class Orientation { preserving, reversing };

Orientation orientation(const VirtualRep& v);
std::string to_string(Orientation o);

// K_d(F_q): Z for d = 0, Z/(q^i - 1) for d = 2i - 1, 0 for even d > 0.
FgAb quillen_k(const Int& q, long d);

// The C_n-module pi^e_V of equivariant K-theory of F_{q^n}.
GModule underlying_k_module(const Int& q, long n, const VirtualRep& v);

enum class Symbol { box, boxslash, circle, barbox, barboxslash, barcircle, bullet, ominus, oplus };

Symbol symbol_from_string(const std::string& s);  // accepts CLI names and glyphs
std::string symbol_name(Symbol s);                // CLI name, e.g. "barbox"
std::string glyph(Symbol s, long i = 0);          // e.g. "□̄", "⊖^2"
bool needs_even_order(Symbol s);
bool has_weight(Symbol s);  // ominus / oplus take (q, i)

struct SymbolSpec {
  Symbol symbol = Symbol::box;
  Int q = 2;
  long n = 1;
  long i = 0;
};

// Closed-form Lewis data for a named functor.
MackeyFn closed_form(const SymbolSpec& s);
// The same functor built from L, R and the norm kernel/cokernel of the matching module.
MackeyFn functorial(const SymbolSpec& s);
// Closed form, after checking it is isomorphic to the functorial construction.
MackeyFn named(const SymbolSpec& s);

MackeyFn named(Symbol s, long n);
MackeyFn named(Symbol s, const Int& q, long n, long i);

}  // namespace eqk
