#include "eqk/ring.hpp"

#include <algorithm>
#include <cctype>

namespace eqk {

Monomial Monomial::base(long a, long c, long m) {
  if (a < 0 || c < 0 || m < 0) throw RingError("monomial exponents must be non-negative");
  if (m > 0 && (a != 0 || c != 0)) throw RingError("t[m] does not combine with u or a in normal form");
  Monomial r;
  r.a = a;
  r.c = c;
  r.m = m;
  return r;
}

Monomial Monomial::y(long j, long k) {
  if (j < 1 || k < 1) throw RingError("y[j,k] needs j, k >= 1");
  Monomial r;
  r.part = Part::y;
  r.j = j;
  r.k = k;
  return r;
}

Monomial Monomial::x(long i, long b) {
  if (i < 1) throw RingError("x[i,b] needs i >= 1");
  Monomial r;
  r.part = Part::x;
  r.i = i;
  r.b = b;
  return r;
}

std::string Monomial::to_string() const {
  switch (part) {
    case Part::y: return "y[" + std::to_string(j) + "," + std::to_string(k) + "]";
    case Part::x: return "x[" + std::to_string(i) + "," + std::to_string(b) + "]";
    case Part::base: break;
  }
  if (m > 0) return "t[" + std::to_string(m) + "]";
  std::string s;
  auto factor = [&](const char* v, long e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  };
  factor("u", a);
  factor("a", c);
  return s.empty() ? "1" : s;
}

Bidegree grade(const Monomial& m) {
  switch (m.part) {
    case Monomial::Part::y: return {m.j - 1, m.j + 2 * m.k};
    case Monomial::Part::x: return {2 * m.i - 1, m.b};
    case Monomial::Part::base: break;
  }
  return {-m.c, 2 * m.m - 2 * m.a - m.c};
}

std::optional<Int> order_of(const Monomial& m, const Int& q) {
  switch (m.part) {
    case Monomial::Part::y: return Int(2);
    case Monomial::Part::x: return ipow(q, m.i) - (m.b % 2 == 0 ? 1 : -1);
    case Monomial::Part::base: break;
  }
  if (m.c > 0) return Int(2);
  return std::nullopt;
}

RingElem::RingElem(Int q) : q_(std::move(q)) {
  if (q_ < 2 || prime_of_prime_power(q_) == 0) throw RingError("q must be a prime power");
}

RingElem::RingElem(Int q, const Monomial& m, const Int& coeff) : RingElem(std::move(q)) { add(m, coeff); }

void RingElem::add(const Monomial& m, const Int& coeff) {
  Int c = terms_.count(m) ? terms_.at(m) + coeff : coeff;
  if (const auto ord = order_of(m, q_)) c = floor_mod(c, *ord);
  if (c == 0)
    terms_.erase(m);
  else
    terms_[m] = c;
}

Int RingElem::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

std::vector<Bidegree> RingElem::degrees() const {
  std::vector<Bidegree> out;
  for (const auto& [m, c] : terms_) {
    const Bidegree d = grade(m);
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool RingElem::is_homogeneous() const { return degrees().size() <= 1; }

bool RingElem::in_square_zero_part() const {
  for (const auto& [m, c] : terms_)
    if (m.part == Monomial::Part::base) return false;
  return true;
}

RingElem RingElem::operator+(const RingElem& rhs) const {
  if (q_ != rhs.q_) throw RingError("elements for different q");
  RingElem r = *this;
  for (const auto& [m, c] : rhs.terms_) r.add(m, c);
  return r;
}

RingElem RingElem::operator-() const { return scaled(-1); }

RingElem RingElem::operator-(const RingElem& rhs) const { return *this + (-rhs); }

RingElem RingElem::scaled(const Int& k) const {
  RingElem r(q_);
  for (const auto& [m, c] : terms_) r.add(m, c * k);
  return r;
}

bool RingElem::operator==(const RingElem& rhs) const { return q_ == rhs.q_ && terms_ == rhs.terms_; }

std::string RingElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    const Int mag = neg ? Int(-c) : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    const std::string mono = m.to_string();
    if (mono == "1")
      s += eqk::to_string(mag);
    else if (mag == 1)
      s += mono;
    else
      s += eqk::to_string(mag) + "*" + mono;
  }
  return s;
}

namespace {

// Product of two monomials as (coefficient, monomial); coefficient 0 means the product vanishes.
std::pair<Int, Monomial> mono_mul(const Monomial& p, const Monomial& r) {
  using Part = Monomial::Part;
  const std::pair<Int, Monomial> zero{0, Monomial::one()};
  if (p.part != Part::base && r.part != Part::base) return zero;
  if (p.part != Part::base) return mono_mul(r, p);
  switch (r.part) {
    case Part::base:
      if (p.m > 0 && r.m > 0) return {2, Monomial::t(p.m + r.m)};
      if (p.m > 0 || r.m > 0) {
        const Monomial& t = p.m > 0 ? p : r;
        const Monomial& o = p.m > 0 ? r : p;
        if (o.c > 0) return zero;
        if (o.a >= t.m) return {2, Monomial::u(o.a - t.m)};
        return {1, Monomial::t(t.m - o.a)};
      }
      return {1, Monomial::base(p.a + r.a, p.c + r.c)};
    case Part::y:
      if (p.m > 0 || r.j - p.c < 1 || r.k - p.a < 1) return zero;
      return {1, Monomial::y(r.j - p.c, r.k - p.a)};
    case Part::x:
      if (p.m > 0) return {2, Monomial::x(r.i, r.b + 2 * p.m)};
      if (p.c > 0) return zero;
      return {1, Monomial::x(r.i, r.b - 2 * p.a)};
  }
  return zero;
}

}  // namespace

RingElem multiply(const RingElem& lhs, const RingElem& rhs) {
  if (lhs.q() != rhs.q()) throw RingError("cannot multiply elements for different q");
  RingElem out(lhs.q());
  for (const auto& [m1, c1] : lhs.terms())
    for (const auto& [m2, c2] : rhs.terms()) {
      const auto [c, m] = mono_mul(m1, m2);
      if (c != 0) out = out + RingElem(lhs.q(), m, c * c1 * c2);
    }
  return out;
}

RingElem operator*(const RingElem& lhs, const RingElem& rhs) { return multiply(lhs, rhs); }

namespace {

class Parser {
 public:
  Parser(const Int& q, const std::string& text) : q_(q), s_(text) {}

  RingElem parse() {
    RingElem total(q_);
    skip();
    bool neg = false;
    if (peek() == '-' || peek() == '+') neg = get() == '-';
    for (;;) {
      RingElem t = term();
      total = total + (neg ? -t : t);
      skip();
      if (pos_ == s_.size()) break;
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      neg = op == '-';
    }
    return total;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw RingError("parse error at position " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  char get() {
    const char c = peek();
    if (c == '\0') fail("unexpected end of input");
    ++pos_;
    return c;
  }
  void expect(char c) {
    if (get() != c) fail(std::string("expected '") + c + "'");
  }
  std::string digits() {
    skip();
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
    if (d.empty()) fail("expected a number");
    return d;
  }
  long integer() {
    bool neg = false;
    if (peek() == '-') {
      ++pos_;
      neg = true;
    }
    const std::string d = digits();
    if (d.size() > 15) fail("index too large");
    const long v = std::stol(d);
    return neg ? -v : v;
  }
  long exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    const long e = integer();
    if (e < 0) fail("negative exponent");
    return e;
  }
  std::pair<long, long> pair() {
    expect('[');
    const long a = integer();
    expect(',');
    const long b = integer();
    expect(']');
    return {a, b};
  }

  RingElem term() {
    RingElem t = factor();
    while (peek() == '*') {
      ++pos_;
      t = t * factor();
    }
    return t;
  }

  RingElem factor() {
    const char c = peek();
    try {
      if (std::isdigit(static_cast<unsigned char>(c))) return RingElem(q_, Monomial::one(), Int(digits()));
      ++pos_;
      switch (c) {
        case 'u': return RingElem(q_, Monomial::u(exponent()));
        case 'a': return RingElem(q_, Monomial::alpha(exponent()));
        case 't': {
          expect('[');
          const long m = integer();
          expect(']');
          if (m < 1) fail("t[m] needs m >= 1");
          return RingElem(q_, Monomial::t(m));
        }
        case 'x': {
          const auto [i, b] = pair();
          return RingElem(q_, Monomial::x(i, b));
        }
        case 'y': {
          const auto [j, k] = pair();
          return RingElem(q_, Monomial::y(j, k));
        }
        default: --pos_; fail("unexpected character");
      }
    } catch (const RingError& e) {
      const std::string what = e.what();
      if (what.rfind("parse error", 0) == 0) throw;
      fail(what);
    }
  }

  Int q_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElem parse_ring_element(const Int& q, const std::string& text) { return Parser(q, text).parse(); }

std::vector<Monomial> monomials_at(const Bidegree& d) {
  std::vector<Monomial> out;
  const long x = d.x, y = d.y;
  if (x == 0 && y > 0 && y % 2 == 0) out.push_back(Monomial::t(y / 2));
  if (x <= 0 && y <= x && (x - y) % 2 == 0) out.push_back(Monomial::base((x - y) / 2, -x));
  const long j = x + 1;
  if (j >= 1 && y - j >= 2 && (y - j) % 2 == 0) out.push_back(Monomial::y(j, (y - j) / 2));
  if (x >= 1 && x % 2 == 1) out.push_back(Monomial::x((x + 1) / 2, y));
  std::sort(out.begin(), out.end());
  return out;
}

FgAb ring_group_at(const Int& q, const Bidegree& d) {
  Vec orders;
  for (const auto& m : monomials_at(d)) orders.push_back(order_of(m, q).value_or(Int(0)));
  return FgAb::from_cyclic_orders(orders);
}

RingElem random_homogeneous(const Int& q, const Bidegree& d, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coeff(-6, 6);
  RingElem r(q);
  for (const auto& m : monomials_at(d)) r = r + RingElem(q, m, coeff(rng));
  return r;
}

std::vector<std::pair<Bidegree, Bidegree>> hz_alpha_lines(long min, long max) {
  std::vector<std::pair<Bidegree, Bidegree>> out;
  const Int q = 3;  // the B ⊕ M part does not depend on q
  const RingElem alpha(q, Monomial::alpha());
  for (long x = min + 1; x <= max; ++x)
    for (long y = min + 1; y <= max; ++y)
      for (const auto& m : monomials_at({x, y})) {
        if (m.part == Monomial::Part::x) continue;
        if (!multiply(alpha, RingElem(q, m)).is_zero()) {
          out.push_back({{x, y}, {x - 1, y - 1}});
          break;
        }
      }
  return out;
}

std::vector<RelationInstance> relation_instances(const Int& q, long w) {
  std::vector<RelationInstance> out;
  auto el = [&](const Monomial& m, const Int& c = 1) { return RingElem(q, m, c); };
  const RingElem zero(q);
  const RingElem two(q, Monomial::one(), 2);
  const RingElem u = el(Monomial::u()), alpha = el(Monomial::alpha());
  out.push_back({"2a = 0", two, alpha, zero});
  for (long x = -w; x <= w; ++x)
    for (long y = -w; y <= w; ++y)
      for (const auto& m : monomials_at({x, y})) {
        const RingElem e = el(m);
        if (m.part == Monomial::Part::y) {
          out.push_back({"a y[j,k] = y[j-1,k]", alpha, e,
                         m.j > 1 ? el(Monomial::y(m.j - 1, m.k)) : zero});
          out.push_back({"u y[j,k] = y[j,k-1]", u, e, m.k > 1 ? el(Monomial::y(m.j, m.k - 1)) : zero});
          out.push_back({"2 y[j,k] = 0", two, e, zero});
        }
        if (m.part == Monomial::Part::x) {
          out.push_back({"u x[i,b] = x[i,b-2]", u, e, el(Monomial::x(m.i, m.b - 2))});
          out.push_back({"a x[i,b] = 0", alpha, e, zero});
          out.push_back({"(q^i - (-1)^b) x[i,b] = 0", RingElem(q, Monomial::one(), *order_of(m, q)), e, zero});
          for (long mm = 1; mm <= 2; ++mm)
            out.push_back({"t[m] x[i,b] = 2 x[i,b+2m]", el(Monomial::t(mm)), e, el(Monomial::x(m.i, m.b + 2 * mm), 2)});
        }
        if (m.part != Monomial::Part::base)
          for (const auto& other : {Monomial::y(1, 1), Monomial::y(2, 3), Monomial::x(1, 0), Monomial::x(2, -1)})
            out.push_back({"square zero", e, el(other), zero});
      }
  return out;
}

std::vector<HomogeneityRecord> check_homogeneity(const std::vector<RelationInstance>& relations) {
  std::vector<HomogeneityRecord> out;
  for (const auto& r : relations) {
    if (r.expected.is_zero()) continue;
    const auto dl = r.left.degrees(), dr = r.right.degrees(), de = r.expected.degrees();
    if (dl.size() != 1 || dr.size() != 1 || de.size() != 1) {
      out.push_back({r.family, {}, {}, false});
      continue;
    }
    const Bidegree lhs{dl[0].x + dr[0].x, dl[0].y + dr[0].y};
    out.push_back({r.family, lhs, de[0], lhs == de[0]});
  }
  return out;
}

}  // namespace eqk
