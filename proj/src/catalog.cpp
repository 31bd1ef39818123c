#include "eqk/catalog.hpp"

#include <sstream>
#include <stdexcept>

namespace eqk {

VirtualRep::VirtualRep(long n_, long a0_, long a_sigma_, std::vector<long> lambda_)
    : n(n_), a0(a0_), a_sigma(a_sigma_), lambda(std::move(lambda_)) {
  if (n < 1) throw std::invalid_argument("VirtualRep: group order must be positive");
  if (n % 2 != 0 && a_sigma != 0) throw std::invalid_argument("VirtualRep: no sign representation for odd n");
  const std::size_t rotations = static_cast<std::size_t>((n - 1) / 2);
  if (lambda.empty()) lambda.assign(rotations, 0);
  if (lambda.size() != rotations)
    throw std::invalid_argument("VirtualRep: expected " + std::to_string(rotations) + " rotation multiplicities");
}

VirtualRep VirtualRep::trivial(long n, long dim) { return VirtualRep(n, dim); }

VirtualRep VirtualRep::from_bidegree(const Bidegree& b) { return VirtualRep(2, b.x - b.y, b.y); }

VirtualRep VirtualRep::from_dimensions(long n, long dim, long fixed_dim) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("VirtualRep::from_dimensions: n must be an odd prime");
  if ((dim - fixed_dim) % 2 != 0)
    throw std::invalid_argument("VirtualRep::from_dimensions: |V| and |V^G| must have the same parity");
  std::vector<long> lambda(static_cast<std::size_t>((n - 1) / 2), 0);
  lambda[0] = (dim - fixed_dim) / 2;
  return VirtualRep(n, fixed_dim, 0, lambda);
}

long VirtualRep::dim() const {
  long d = a0 + a_sigma;
  for (long a : lambda) d += 2 * a;
  return d;
}

long VirtualRep::fixed_dim(long m) const {
  require_divisor(n, m);
  long d = a0;
  if ((n / m) % 2 == 0) d += a_sigma;
  for (std::size_t j = 0; j < lambda.size(); ++j)
    if (static_cast<long>(j + 1) % m == 0) d += 2 * lambda[j];
  return d;
}

Bidegree VirtualRep::bidegree() const {
  if (n != 2) throw std::invalid_argument("VirtualRep::bidegree: only defined for C_2");
  return {dim(), a_sigma};
}

VirtualRep VirtualRep::operator+(const VirtualRep& rhs) const {
  if (n != rhs.n) throw std::invalid_argument("VirtualRep: mismatched group orders");
  VirtualRep out = *this;
  out.a0 += rhs.a0;
  out.a_sigma += rhs.a_sigma;
  for (std::size_t j = 0; j < lambda.size(); ++j) out.lambda[j] += rhs.lambda[j];
  return out;
}

VirtualRep VirtualRep::plus_trivial(long k) const {
  VirtualRep out = *this;
  out.a0 += k;
  return out;
}

std::string VirtualRep::to_string() const {
  std::ostringstream os;
  os << a0;
  if (n % 2 == 0) os << " + " << a_sigma << "σ";
  for (std::size_t j = 0; j < lambda.size(); ++j) os << " + " << lambda[j] << "λ" << (j + 1);
  return os.str();
}

Orientation orientation(const VirtualRep& v) {
  return (v.a_sigma % 2 != 0) ? Orientation::reversing : Orientation::preserving;
}

std::string to_string(Orientation o) { return o == Orientation::preserving ? "preserving" : "reversing"; }

FgAb quillen_k(const Int& q, long d) {
  if (d < 0) throw std::invalid_argument("quillen_k: negative degree");
  if (d == 0) return FgAb::free(1);
  if (d % 2 == 0) return FgAb();
  return FgAb::cyclic(ipow(q, static_cast<unsigned long>((d + 1) / 2)) - 1);
}

GModule underlying_k_module(const Int& q, long n, const VirtualRep& v) {
  if (v.n != n) throw std::invalid_argument("underlying_k_module: representation is for a different group");
  const bool reversing = orientation(v) == Orientation::reversing;
  const long d = v.dim();
  if (d == 0) return reversing ? GModule::sign_z(n) : GModule::trivial_z(n);
  if (d > 0 && d % 2 == 1) return k_module(q, n, (d + 1) / 2, reversing);
  return GModule::zero(n);
}

Symbol symbol_from_string(const std::string& s) {
  static const std::vector<std::pair<std::string, Symbol>> table = {
      {"box", Symbol::box},       {"boxslash", Symbol::boxslash},       {"circle", Symbol::circle},
      {"barbox", Symbol::barbox}, {"barboxslash", Symbol::barboxslash}, {"barcircle", Symbol::barcircle},
      {"bullet", Symbol::bullet}, {"ominus", Symbol::ominus},           {"oplus", Symbol::oplus},
      {"□", Symbol::box},         {"⊞", Symbol::boxslash},              {"○", Symbol::circle},
      {"□̄", Symbol::barbox},      {"⊞̄", Symbol::barboxslash},           {"○̄", Symbol::barcircle},
      {"•", Symbol::bullet},      {"⊖", Symbol::ominus},                {"⊕", Symbol::oplus}};
  for (const auto& [name, sym] : table)
    if (name == s) return sym;
  throw std::invalid_argument("unknown symbol: " + s);
}

std::string symbol_name(Symbol s) {
  switch (s) {
    case Symbol::box: return "box";
    case Symbol::boxslash: return "boxslash";
    case Symbol::circle: return "circle";
    case Symbol::barbox: return "barbox";
    case Symbol::barboxslash: return "barboxslash";
    case Symbol::barcircle: return "barcircle";
    case Symbol::bullet: return "bullet";
    case Symbol::ominus: return "ominus";
    case Symbol::oplus: return "oplus";
  }
  return "";
}

std::string glyph(Symbol s, long i) {
  switch (s) {
    case Symbol::box: return "□";
    case Symbol::boxslash: return "⊞";
    case Symbol::circle: return "○";
    case Symbol::barbox: return "□̄";
    case Symbol::barboxslash: return "⊞̄";
    case Symbol::barcircle: return "○̄";
    case Symbol::bullet: return "•";
    case Symbol::ominus: return "⊖^" + std::to_string(i);
    case Symbol::oplus: return "⊕^" + std::to_string(i);
  }
  return "";
}

bool needs_even_order(Symbol s) {
  return s == Symbol::barbox || s == Symbol::barboxslash || s == Symbol::barcircle || s == Symbol::bullet ||
         s == Symbol::oplus;
}

bool has_weight(Symbol s) { return s == Symbol::ominus || s == Symbol::oplus; }

namespace {

// Map between groups with at most one generator each, given by multiplication by c.
AbMap cyclic_map(const FgAb& from, const FgAb& to, const Int& c) {
  IntMatrix m(to.generator_count(), from.generator_count());
  if (m.rows() == 1 && m.cols() == 1) m(0, 0) = c;
  return AbMap(from, to, m);
}

void check_spec(const SymbolSpec& s) {
  if (s.n < 1) throw std::invalid_argument("named functor: group order must be positive");
  if (needs_even_order(s.symbol) && s.n % 2 != 0)
    throw std::invalid_argument("named functor " + symbol_name(s.symbol) + " needs an even group order");
  if (has_weight(s.symbol)) {
    if (s.i < 1) throw std::invalid_argument("named functor: weight i must be positive");
    if (s.q < 2 || prime_of_prime_power(s.q) == 0) throw std::invalid_argument("named functor: q must be a prime power");
  }
}

Provenance provenance_of(Symbol s) {
  switch (s) {
    case Symbol::box:
    case Symbol::barbox: return Provenance::fixed_point;
    case Symbol::boxslash:
    case Symbol::barboxslash: return Provenance::orbit;
    case Symbol::ominus:
    case Symbol::oplus: return Provenance::both;
    default: return Provenance::other;
  }
}

MackeyFn k_theory_closed_form(const SymbolSpec& s) {
  const Int qi = ipow(s.q, static_cast<unsigned long>(s.i));
  const Int a = s.symbol == Symbol::oplus ? Int(-qi) : qi;
  const long n = s.n;
  auto h = [&](long d) { return ipow(a, static_cast<unsigned long>(n / d)); };
  auto level = [&](long d) { return FgAb::cyclic(abs(h(d) - 1)); };
  return MackeyFn::build(
      n, level, [&](long d) { return cyclic_map(level(d), level(d), a); },
      [&](long e, long d) {
        Int sum = 0, term = 1;
        for (long r = 0; r < e / d; ++r) {
          sum += term;
          term *= h(e);
        }
        return cyclic_map(level(e), level(d), sum);
      },
      [&](long d, long e) { return cyclic_map(level(d), level(e), 1); }, provenance_of(s.symbol),
      glyph(s.symbol, s.i));
}

}  // namespace

MackeyFn closed_form(const SymbolSpec& s) {
  check_spec(s);
  const long n = s.n;
  const FgAb z = FgAb::free(1);
  const FgAb z2 = FgAb::cyclic(2);
  const FgAb none;
  auto even_index = [n](long d) { return (n / d) % 2 == 0; };
  MackeyFn::LevelFn level;
  MackeyFn::WeylFn weyl;
  MackeyFn::PairFn res, tr;
  switch (s.symbol) {
    case Symbol::ominus:
    case Symbol::oplus: return k_theory_closed_form(s);
    case Symbol::box:
      level = [&](long) { return z; };
      weyl = [&](long) { return AbMap::identity(z); };
      res = [&](long, long) { return AbMap::identity(z); };
      tr = [&](long d, long e) { return AbMap::scalar(z, e / d); };
      break;
    case Symbol::boxslash:
      level = [&](long) { return z; };
      weyl = [&](long) { return AbMap::identity(z); };
      res = [&](long e, long d) { return AbMap::scalar(z, e / d); };
      tr = [&](long, long) { return AbMap::identity(z); };
      break;
    case Symbol::circle:
      level = [&](long d) { return FgAb::cyclic(d); };
      weyl = [&](long d) { return AbMap::identity(level(d)); };
      res = [&](long e, long d) { return cyclic_map(level(e), level(d), 1); };
      tr = [&](long d, long e) { return cyclic_map(level(d), level(e), e / d); };
      break;
    case Symbol::barbox:
      level = [&](long d) { return even_index(d) ? z : none; };
      weyl = [&](long d) { return AbMap::scalar(level(d), -1); };
      res = [&](long e, long d) { return cyclic_map(level(e), level(d), 1); };
      tr = [&](long d, long e) { return cyclic_map(level(d), level(e), e / d); };
      break;
    case Symbol::barboxslash:
      level = [&](long d) { return even_index(d) ? z : z2; };
      weyl = [&](long d) { return AbMap::scalar(level(d), -1); };
      res = [&](long e, long d) {
        const Int c = even_index(e) ? Int(e / d) : Int((e / d) % 2);
        return cyclic_map(level(e), level(d), c);
      };
      tr = [&](long d, long e) { return cyclic_map(level(d), level(e), 1); };
      break;
    case Symbol::bullet:
      level = [&](long d) { return even_index(d) ? none : z2; };
      weyl = [&](long d) { return AbMap::identity(level(d)); };
      res = [&](long e, long d) { return cyclic_map(level(e), level(d), 1); };
      tr = [&](long d, long e) { return cyclic_map(level(d), level(e), 1); };
      break;
    case Symbol::barcircle:
      level = [&](long d) { return even_index(d) ? FgAb::cyclic(d) : none; };
      weyl = [&](long d) { return AbMap::scalar(level(d), -1); };
      res = [&](long e, long d) { return cyclic_map(level(e), level(d), 1); };
      tr = [&](long d, long e) { return cyclic_map(level(d), level(e), e / d); };
      break;
  }
  return MackeyFn::build(n, level, weyl, res, tr, provenance_of(s.symbol), glyph(s.symbol, s.i));
}

MackeyFn functorial(const SymbolSpec& s) {
  check_spec(s);
  const long n = s.n;
  MackeyFn out;
  switch (s.symbol) {
    case Symbol::box: out = fixed_point_mackey(GModule::trivial_z(n)); break;
    case Symbol::boxslash: out = orbit_mackey(GModule::trivial_z(n)); break;
    case Symbol::circle: out = norm_mackey_morphism(GModule::trivial_z(n)).cokernel; break;
    case Symbol::barbox: out = fixed_point_mackey(GModule::sign_z(n)); break;
    case Symbol::barboxslash: out = orbit_mackey(GModule::sign_z(n)); break;
    case Symbol::bullet: out = norm_mackey_morphism(GModule::sign_z(n)).kernel; break;
    case Symbol::barcircle: out = norm_mackey_morphism(GModule::sign_z(n)).cokernel; break;
    case Symbol::ominus: out = fixed_point_mackey(k_module(s.q, n, s.i, false)); break;
    case Symbol::oplus: out = fixed_point_mackey(k_module(s.q, n, s.i, true)); break;
  }
  return out.with_tag(provenance_of(s.symbol)).with_name(glyph(s.symbol, s.i));
}

MackeyFn named(const SymbolSpec& s) {
  MackeyFn closed = closed_form(s);
  if (!find_isomorphism(functorial(s), closed))
    throw std::logic_error("named: closed form of " + glyph(s.symbol, s.i) + " disagrees with its construction");
  return closed;
}

MackeyFn named(Symbol s, long n) { return named(SymbolSpec{s, 2, n, 0}); }

MackeyFn named(Symbol s, const Int& q, long n, long i) { return named(SymbolSpec{s, q, n, i}); }

}  // namespace eqk
