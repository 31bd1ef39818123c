#include "eqk/mackey.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eqk {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::fixed_point: return "fixed_point";
    case Provenance::orbit: return "orbit";
    case Provenance::both: return "both";
    case Provenance::other: return "other";
  }
  return "other";
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "fixed_point") return Provenance::fixed_point;
  if (s == "orbit") return Provenance::orbit;
  if (s == "both") return Provenance::both;
  if (s == "other") return Provenance::other;
  throw std::invalid_argument("unknown provenance tag: " + s);
}

bool in_image_of_fixed_points(Provenance p) { return p == Provenance::fixed_point || p == Provenance::both; }
bool in_image_of_orbits(Provenance p) { return p == Provenance::orbit || p == Provenance::both; }

MackeyFn MackeyFn::build(long n, const LevelFn& level, const WeylFn& weyl, const PairFn& restriction,
                         const PairFn& transfer, Provenance tag, std::string name) {
  MackeyFn m;
  m.n_ = n;
  m.divisors_ = eqk::divisors(n);
  m.tag_ = tag;
  m.name_ = std::move(name);
  for (long d : m.divisors_) m.levels_[d] = level(d);
  for (long d : m.divisors_) {
    AbMap a = weyl(d);
    if (a.source() != m.levels_[d] || a.target() != m.levels_[d])
      throw std::invalid_argument("MackeyFn: Weyl action at level " + std::to_string(d) + " has the wrong shape");
    m.weyl_[d] = std::move(a);
  }
  for (long e : m.divisors_)
    for (long d : m.divisors_) {
      if (e % d != 0) continue;
      if (d == e) {
        m.restrictions_[{e, d}] = AbMap::identity(m.levels_[d]);
        m.transfers_[{d, e}] = AbMap::identity(m.levels_[d]);
        continue;
      }
      AbMap r = restriction(e, d);
      AbMap t = transfer(d, e);
      if (r.source() != m.levels_[e] || r.target() != m.levels_[d])
        throw std::invalid_argument("MackeyFn: restriction " + std::to_string(e) + "->" + std::to_string(d) +
                                    " has the wrong shape");
      if (t.source() != m.levels_[d] || t.target() != m.levels_[e])
        throw std::invalid_argument("MackeyFn: transfer " + std::to_string(d) + "->" + std::to_string(e) +
                                    " has the wrong shape");
      m.restrictions_[{e, d}] = std::move(r);
      m.transfers_[{d, e}] = std::move(t);
    }
  return m;
}

MackeyFn MackeyFn::zero(long n) {
  const FgAb z;
  return build(
      n, [&](long) { return z; }, [&](long) { return AbMap::identity(z); },
      [&](long, long) { return AbMap::zero(z, z); }, [&](long, long) { return AbMap::zero(z, z); }, Provenance::both,
      "0");
}

const FgAb& MackeyFn::level(long d) const {
  auto it = levels_.find(d);
  if (it == levels_.end()) throw std::out_of_range("MackeyFn: no level " + std::to_string(d));
  return it->second;
}

const AbMap& MackeyFn::weyl(long d) const {
  auto it = weyl_.find(d);
  if (it == weyl_.end()) throw std::out_of_range("MackeyFn: no level " + std::to_string(d));
  return it->second;
}

const AbMap& MackeyFn::restriction(long e, long d) const {
  auto it = restrictions_.find({e, d});
  if (it == restrictions_.end())
    throw std::out_of_range("MackeyFn: no restriction " + std::to_string(e) + "->" + std::to_string(d));
  return it->second;
}

const AbMap& MackeyFn::transfer(long d, long e) const {
  auto it = transfers_.find({d, e});
  if (it == transfers_.end())
    throw std::out_of_range("MackeyFn: no transfer " + std::to_string(d) + "->" + std::to_string(e));
  return it->second;
}

MackeyFn MackeyFn::with_name(std::string name) const {
  MackeyFn out = *this;
  out.name_ = std::move(name);
  return out;
}

MackeyFn MackeyFn::with_tag(Provenance tag) const {
  MackeyFn out = *this;
  out.tag_ = tag;
  return out;
}

bool MackeyFn::is_zero() const {
  for (const auto& [d, g] : levels_)
    if (!g.is_trivial()) return false;
  return true;
}

bool MackeyFn::same_data(const MackeyFn& rhs) const {
  return n_ == rhs.n_ && levels_ == rhs.levels_ && weyl_ == rhs.weyl_ && restrictions_ == rhs.restrictions_ &&
         transfers_ == rhs.transfers_;
}

namespace {

std::string pair_label(const char* what, long a, long b) {
  std::ostringstream os;
  os << what << " (" << a << "," << b << ")";
  return os.str();
}

}  // namespace

std::vector<std::string> validate_mackey(const MackeyFn& m) {
  std::vector<std::string> out;
  const long n = m.n();
  const auto& divs = m.divisors();
  for (long d : divs) {
    if (!(m.weyl(d).power(static_cast<unsigned long>(n / d)) == AbMap::identity(m.level(d))))
      out.push_back("weyl order at level " + std::to_string(d));
  }
  for (long e : divs)
    for (long d : divs) {
      if (e % d != 0 || d == e) continue;
      const AbMap& r = m.restriction(e, d);
      const AbMap& t = m.transfer(d, e);
      if (!(compose(r, m.weyl(e)) == compose(m.weyl(d), r))) out.push_back(pair_label("weyl/restriction", e, d));
      if (!(compose(t, m.weyl(d)) == compose(m.weyl(e), t))) out.push_back(pair_label("weyl/transfer", d, e));
      const AbMap inner = m.weyl(d).power(static_cast<unsigned long>(n / e));
      if (!(compose(inner, r) == r)) out.push_back(pair_label("restriction not fixed by C_e", e, d));
      if (!(compose(t, inner) == t)) out.push_back(pair_label("transfer not constant on C_e orbits", d, e));
    }
  for (long f : divs)
    for (long e : divs)
      for (long d : divs) {
        if (f % e != 0 || e % d != 0) continue;
        if (!(m.restriction(f, d) == compose(m.restriction(e, d), m.restriction(f, e))))
          out.push_back("restriction transitivity (" + std::to_string(f) + "," + std::to_string(e) + "," +
                        std::to_string(d) + ")");
        if (!(m.transfer(d, f) == compose(m.transfer(e, f), m.transfer(d, e))))
          out.push_back("transfer transitivity (" + std::to_string(d) + "," + std::to_string(e) + "," +
                        std::to_string(f) + ")");
      }
  // double coset formula: R^f_e T^f_d = sum_k T^e_g a_g^{k n/f} R^d_g, g = gcd(d,e)
  for (long f : divs)
    for (long d : divs)
      for (long e : divs) {
        if (f % d != 0 || f % e != 0) continue;
        const long g = std::gcd(d, e);
        const long l = d / g * e;
        const AbMap lhs = compose(m.restriction(f, e), m.transfer(d, f));
        AbMap rhs = AbMap::zero(m.level(d), m.level(e));
        const AbMap step = m.weyl(g).power(static_cast<unsigned long>(n / f));
        AbMap conj = AbMap::identity(m.level(g));
        for (long k = 0; k < f / l; ++k) {
          rhs = rhs + compose(m.transfer(g, e), compose(conj, m.restriction(d, g)));
          conj = compose(step, conj);
        }
        if (!(lhs == rhs))
          out.push_back("double coset (d,e,f)=(" + std::to_string(d) + "," + std::to_string(e) + "," +
                        std::to_string(f) + ")");
      }
  return out;
}

std::vector<std::string> validate_morphism(const MackeyMor& f) {
  std::vector<std::string> out;
  const MackeyFn& a = f.source;
  const MackeyFn& b = f.target;
  if (a.n() != b.n()) return {"group orders differ"};
  for (long d : a.divisors()) {
    auto it = f.maps.find(d);
    if (it == f.maps.end()) {
      out.push_back("missing level " + std::to_string(d));
      continue;
    }
    if (it->second.source() != a.level(d) || it->second.target() != b.level(d)) {
      out.push_back("shape at level " + std::to_string(d));
      continue;
    }
    if (!(compose(it->second, a.weyl(d)) == compose(b.weyl(d), it->second)))
      out.push_back("weyl at level " + std::to_string(d));
  }
  if (!out.empty()) return out;
  for (long e : a.divisors())
    for (long d : a.divisors()) {
      if (e % d != 0 || d == e) continue;
      if (!(compose(f.at(d), a.restriction(e, d)) == compose(b.restriction(e, d), f.at(e))))
        out.push_back(pair_label("restriction", e, d));
      if (!(compose(f.at(e), a.transfer(d, e)) == compose(b.transfer(d, e), f.at(d))))
        out.push_back(pair_label("transfer", d, e));
    }
  return out;
}

MackeyMor identity_morphism(const MackeyFn& m) {
  MackeyMor f{m, m, {}};
  for (long d : m.divisors()) f.maps[d] = AbMap::identity(m.level(d));
  return f;
}

MackeyMor compose(const MackeyMor& after, const MackeyMor& before) {
  MackeyMor f{before.source, after.target, {}};
  for (long d : before.source.divisors()) f.maps[d] = compose(after.at(d), before.at(d));
  return f;
}

bool is_zero(const MackeyMor& f) {
  for (const auto& [d, m] : f.maps)
    if (!m.is_zero()) return false;
  return true;
}

bool is_isomorphism(const MackeyMor& f) {
  if (!validate_morphism(f).empty()) return false;
  for (const auto& [d, m] : f.maps)
    if (!is_isomorphism(m)) return false;
  return true;
}

MackeyKernel kernel(const MackeyMor& f) {
  const MackeyFn& a = f.source;
  std::map<long, KernelResult> ks;
  for (long d : a.divisors()) ks.emplace(d, kernel(f.at(d)));
  auto through = [&](const AbMap& into_a, long d) {
    auto g = factor_through_injection(into_a, ks.at(d).inclusion);
    if (!g) throw std::logic_error("kernel: structure map does not preserve the kernel");
    return *g;
  };
  MackeyFn k = MackeyFn::build(
      a.n(), [&](long d) { return ks.at(d).group; },
      [&](long d) { return through(compose(a.weyl(d), ks.at(d).inclusion), d); },
      [&](long e, long d) { return through(compose(a.restriction(e, d), ks.at(e).inclusion), d); },
      [&](long d, long e) { return through(compose(a.transfer(d, e), ks.at(d).inclusion), e); });
  MackeyMor inc{k, a, {}};
  for (long d : a.divisors()) inc.maps[d] = ks.at(d).inclusion;
  return {k, inc};
}

MackeyCokernel cokernel(const MackeyMor& f) {
  const MackeyFn& b = f.target;
  std::map<long, CokernelResult> cs;
  for (long d : b.divisors()) cs.emplace(d, cokernel(f.at(d)));
  // structure map x: level `from` -> level `to` of the target, pushed to the quotients
  auto induced = [&](const AbMap& x, long from, long to, const AbMap& image_check) {
    if (!compose(cs.at(to).projection, image_check).is_zero())
      throw std::logic_error("cokernel: structure map does not preserve the image");
    return AbMap(cs.at(from).group, cs.at(to).group, cs.at(to).projection.matrix() * x.matrix() * cs.at(from).section);
  };
  MackeyFn c = MackeyFn::build(
      b.n(), [&](long d) { return cs.at(d).group; },
      [&](long d) { return induced(b.weyl(d), d, d, compose(b.weyl(d), f.at(d))); },
      [&](long e, long d) { return induced(b.restriction(e, d), e, d, compose(b.restriction(e, d), f.at(e))); },
      [&](long d, long e) { return induced(b.transfer(d, e), d, e, compose(b.transfer(d, e), f.at(d))); });
  MackeyMor proj{b, c, {}};
  for (long d : b.divisors()) proj.maps[d] = cs.at(d).projection;
  return {c, proj};
}

namespace {

// sum_{k < e/d} h_e^k: the relative norm from C_d to C_e
AbMap relative_norm(const GModule& m, long d, long e) {
  const AbMap h = m.subgroup_generator(e);
  AbMap sum = AbMap::zero(m.group(), m.group());
  AbMap term = AbMap::identity(m.group());
  for (long k = 0; k < e / d; ++k) {
    sum = sum + term;
    term = compose(h, term);
  }
  return sum;
}

AbMap must_factor(const AbMap& f, const AbMap& inclusion, const char* what) {
  auto g = factor_through_injection(f, inclusion);
  if (!g) throw std::logic_error(std::string(what) + " does not land in the invariants");
  return *g;
}

}  // namespace

MackeyFn fixed_point_mackey(const GModule& m) {
  std::map<long, KernelResult> inv;
  for (long d : divisors(m.n())) inv.emplace(d, invariants(m, d));
  return MackeyFn::build(
      m.n(), [&](long d) { return inv.at(d).group; },
      [&](long d) { return must_factor(compose(m.action(), inv.at(d).inclusion), inv.at(d).inclusion, "weyl"); },
      [&](long e, long d) { return must_factor(inv.at(e).inclusion, inv.at(d).inclusion, "restriction"); },
      [&](long d, long e) {
        return must_factor(compose(relative_norm(m, d, e), inv.at(d).inclusion), inv.at(e).inclusion, "transfer");
      },
      Provenance::fixed_point);
}

MackeyFn orbit_mackey(const GModule& m) {
  std::map<long, CokernelResult> co;
  for (long d : divisors(m.n())) co.emplace(d, coinvariants(m, d));
  auto push = [&](const IntMatrix& x, long from, long to) {
    return AbMap(co.at(from).group, co.at(to).group, co.at(to).projection.matrix() * x * co.at(from).section);
  };
  return MackeyFn::build(
      m.n(), [&](long d) { return co.at(d).group; }, [&](long d) { return push(m.action().matrix(), d, d); },
      [&](long e, long d) { return push(relative_norm(m, d, e).matrix(), e, d); },
      [&](long d, long e) { return push(IntMatrix::identity(m.group().generator_count()), d, e); },
      Provenance::orbit);
}

NormData norm_mackey_morphism(const GModule& m) {
  MackeyMor norm{orbit_mackey(m), fixed_point_mackey(m), {}};
  for (long d : divisors(m.n())) norm.maps[d] = norm_map(m, d);
  const auto errors = validate_morphism(norm);
  if (!errors.empty()) throw std::logic_error("norm_mackey_morphism: not natural: " + errors.front());
  return {norm, kernel(norm).functor, cokernel(norm).functor};
}

MackeyFn direct_sum(const std::vector<MackeyFn>& summands) {
  if (summands.empty()) throw std::invalid_argument("direct_sum: no summands");
  const long n = summands.front().n();
  std::string name;
  for (const auto& s : summands) {
    if (s.n() != n) throw std::invalid_argument("direct_sum: mismatched group orders");
    if (s.is_zero() && summands.size() > 1) continue;
    name += (name.empty() ? "" : " ⊕ ") + s.name();
  }
  if (name.empty()) name = "0";
  std::map<long, DirectSum> sums;
  for (long d : divisors(n)) {
    std::vector<FgAb> gs;
    for (const auto& s : summands) gs.push_back(s.level(d));
    sums.emplace(d, direct_sum(gs));
  }
  auto diag = [&](long from, long to, const std::function<AbMap(const MackeyFn&)>& pick) {
    std::vector<std::vector<AbMap>> blocks(summands.size());
    for (std::size_t i = 0; i < summands.size(); ++i)
      for (std::size_t j = 0; j < summands.size(); ++j)
        blocks[i].push_back(i == j ? pick(summands[i]) : AbMap::zero(summands[j].level(from), summands[i].level(to)));
    return block_map(sums.at(from), sums.at(to), blocks);
  };
  bool all_r = true, all_l = true;
  for (const auto& s : summands) {
    all_r = all_r && in_image_of_fixed_points(s.tag());
    all_l = all_l && in_image_of_orbits(s.tag());
  }
  const Provenance tag = all_r && all_l ? Provenance::both
                         : all_r        ? Provenance::fixed_point
                         : all_l        ? Provenance::orbit
                                        : Provenance::other;
  return MackeyFn::build(
      n, [&](long d) { return sums.at(d).group; },
      [&](long d) { return diag(d, d, [&](const MackeyFn& s) { return s.weyl(d); }); },
      [&](long e, long d) { return diag(e, d, [&](const MackeyFn& s) { return s.restriction(e, d); }); },
      [&](long d, long e) { return diag(d, e, [&](const MackeyFn& s) { return s.transfer(d, e); }); }, tag, name);
}

bool hom_is_zero(const MackeyFn& m, const MackeyFn& n) {
  return m.level(1).is_trivial() && in_image_of_fixed_points(n.tag());
}

std::optional<MackeyMor> extend_into_fixed_points(const MackeyFn& source, const MackeyFn& target, const AbMap& phi) {
  MackeyMor out{source, target, {}};
  for (long d : source.divisors()) {
    const AbMap down = compose(phi, source.restriction(d, 1));
    auto g = factor_through_injection(down, target.restriction(d, 1));
    if (!g) return std::nullopt;
    out.maps[d] = *g;
  }
  return out;
}

std::optional<MackeyMor> extend_from_orbits(const MackeyFn& source, const MackeyFn& target, const AbMap& psi) {
  MackeyMor out{source, target, {}};
  for (long d : source.divisors()) {
    const AbMap& up = source.transfer(1, d);
    const std::size_t k = source.level(d).generator_count();
    IntMatrix m(target.level(d).generator_count(), k);
    for (std::size_t j = 0; j < k; ++j) {
      Vec e(k, Int(0));
      e[j] = 1;
      auto y = preimage(up, e);
      if (!y) return std::nullopt;
      m.set_column(j, target.transfer(1, d)(psi(*y)));
    }
    try {
      out.maps[d] = AbMap(source.level(d), target.level(d), m);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }
  return out;
}

MackeyMor splitting_retraction(const MackeyMor& f) {
  if (!is_isomorphism(f.at(1))) throw std::invalid_argument("splitting_retraction: not an isomorphism at level 1");
  for (const auto& [d, m] : f.maps)
    if (!is_injective(m))
      throw std::invalid_argument("splitting_retraction: not injective at level " + std::to_string(d));
  auto phi = extend_into_fixed_points(f.target, f.source, inverse(f.at(1)));
  if (!phi) throw std::invalid_argument("splitting_retraction: source is not of fixed-point type");
  return *phi;
}

namespace {

struct UnitSearch {
  const MackeyFn& a;
  const MackeyFn& b;
  std::vector<long> order;
  std::map<long, std::vector<AbMap>> candidates;
  std::map<long, AbMap> chosen;

  bool consistent(long d) const {
    const AbMap& f = chosen.at(d);
    if (!(compose(f, a.weyl(d)) == compose(b.weyl(d), f))) return false;
    for (const auto& [c, g] : chosen) {
      if (c == d) continue;
      if (d % c == 0) {
        if (!(compose(g, a.restriction(d, c)) == compose(b.restriction(d, c), f))) return false;
        if (!(compose(f, a.transfer(c, d)) == compose(b.transfer(c, d), g))) return false;
      } else if (c % d == 0) {
        if (!(compose(f, a.restriction(c, d)) == compose(b.restriction(c, d), g))) return false;
        if (!(compose(g, a.transfer(d, c)) == compose(b.transfer(d, c), f))) return false;
      }
    }
    return true;
  }

  bool run(std::size_t idx) {
    if (idx == order.size()) return true;
    const long d = order[idx];
    for (const auto& cand : candidates.at(d)) {
      chosen[d] = cand;
      if (consistent(d) && run(idx + 1)) return true;
      chosen.erase(d);
    }
    return false;
  }
};

constexpr long kUnitSearchLimit = 4096;

}  // namespace

std::optional<MackeyMor> find_isomorphism(const MackeyFn& a, const MackeyFn& b) {
  if (a.n() != b.n()) return std::nullopt;
  for (long d : a.divisors())
    if (a.level(d) != b.level(d)) return std::nullopt;
  const FgAb& bottom = a.level(1);
  for (const Int& sign : {Int(1), Int(-1)}) {
    const AbMap phi = AbMap::scalar(bottom, sign);
    if (auto f = extend_into_fixed_points(a, b, phi); f && is_isomorphism(*f)) return f;
    if (auto f = extend_from_orbits(a, b, phi); f && is_isomorphism(*f)) return f;
  }
  UnitSearch search{a, b, a.divisors(), {}, {}};
  for (long d : a.divisors()) {
    const FgAb& g = a.level(d);
    std::vector<AbMap> units;
    if (g.is_trivial()) {
      units.push_back(AbMap::identity(g));
    } else if (g.generator_count() == 1) {
      const Int o = g.generator_order(0);
      if (o == 0) {
        units = {AbMap::scalar(g, 1), AbMap::scalar(g, -1)};
      } else {
        if (o > kUnitSearchLimit) return std::nullopt;
        for (Int u = 1; u < o; ++u)
          if (gcd(u, o) == 1) units.push_back(AbMap::scalar(g, u));
      }
    } else {
      return std::nullopt;
    }
    search.candidates[d] = std::move(units);
  }
  if (!search.run(0)) return std::nullopt;
  MackeyMor f{a, b, search.chosen};
  if (!is_isomorphism(f)) return std::nullopt;
  return f;
}

}  // namespace eqk
