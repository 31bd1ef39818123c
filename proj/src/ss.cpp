#include "eqk/ss.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace eqk {

std::string to_string(SsKind k) {
  switch (k) {
    case SsKind::hoss: return "HOSS";
    case SsKind::hfpss: return "HFPSS";
    case SsKind::tate: return "TATE";
  }
  return "";
}

const MackeyFn* E2Page::at(long s, long t) const {
  auto it = entries.find({s, t});
  return it == entries.end() ? nullptr : &it->second;
}

GModule underlying_module(Coefficients c, const Int& q, long n, const VirtualRep& v) {
  if (c == Coefficients::k_theory) return underlying_k_module(q, n, v);
  if (v.dim() != 0) return GModule::zero(n);
  return orientation(v) == Orientation::reversing ? GModule::sign_z(n) : GModule::trivial_z(n);
}

namespace {

// L(M) and R(M) are both certified once the norm is an isomorphism.
Provenance edge_tag(const NormData& nd, Provenance base) {
  return (nd.kernel.is_zero() && nd.cokernel.is_zero()) ? Provenance::both : base;
}

MackeyFn homology_from(const GModule& m, const NormData& nd, long s) {
  if (s < 0) throw std::invalid_argument("homology_mackey: negative degree");
  if (s == 0) return orbit_mackey(m).with_tag(edge_tag(nd, Provenance::orbit));
  return s % 2 == 1 ? nd.cokernel : nd.kernel;
}

MackeyFn cohomology_from(const GModule& m, const NormData& nd, long s) {
  if (s < 0) throw std::invalid_argument("cohomology_mackey: negative degree");
  if (s == 0) return fixed_point_mackey(m).with_tag(edge_tag(nd, Provenance::fixed_point));
  return s % 2 == 1 ? nd.kernel : nd.cokernel;
}

MackeyFn tate_from(const NormData& nd, long s) { return s % 2 != 0 ? nd.kernel : nd.cokernel; }

}  // namespace

MackeyFn homology_mackey(const GModule& m, long s) { return homology_from(m, norm_mackey_morphism(m), s); }
MackeyFn cohomology_mackey(const GModule& m, long s) { return cohomology_from(m, norm_mackey_morphism(m), s); }
MackeyFn tate_mackey(const GModule& m, long s) { return tate_from(norm_mackey_morphism(m), s); }

E2Page e2_page(SsKind kind, const Int& q, long n, const VirtualRep& base, const Window& window, Coefficients c) {
  if (base.n != n) throw std::invalid_argument("e2_page: representation is for a different group");
  E2Page page{kind, c, q, n, base, window, {}};
  for (long t = window.tmin; t <= window.tmax; ++t) {
    const GModule m = underlying_module(c, q, n, base.plus_trivial(t));
    if (m.group().is_trivial()) continue;
    const NormData nd = norm_mackey_morphism(m);
    for (long s = window.smin; s <= window.smax; ++s) {
      MackeyFn e;
      switch (kind) {
        case SsKind::hoss:
          if (s < 0) continue;
          e = homology_from(m, nd, s);
          break;
        case SsKind::hfpss:
          if (s > 0) continue;
          e = cohomology_from(m, nd, -s);
          break;
        case SsKind::tate: e = tate_from(nd, -s); break;
      }
      if (!e.is_zero()) page.entries.emplace(std::make_pair(s, t), std::move(e));
    }
  }
  return page;
}

std::vector<CertificateItem> certify_collapse(const E2Page& page) {
  std::vector<CertificateItem> out;
  for (const auto& [pos, src] : page.entries) {
    const auto [s, t] = pos;
    for (long r = 2;; ++r) {
      const long ts = s - r, tt = t + r - 1;
      if (!page.window.contains(ts, tt)) {
        // targets only move further out of the window as r grows
        if (ts < page.window.smin || tt > page.window.tmax) break;
        continue;
      }
      const MackeyFn* tgt = page.at(ts, tt);
      if (tgt == nullptr) continue;
      if (!hom_is_zero(src, *tgt))
        throw CollapseError("cannot certify d" + std::to_string(r) + ": (" + std::to_string(s) + "," +
                            std::to_string(t) + ") -> (" + std::to_string(ts) + "," + std::to_string(tt) + ")");
      out.push_back({pos, {ts, tt}, r, "source vanishes at the bottom level; target lies in the image of R"});
    }
  }
  return out;
}

std::string ChartEntry::symbol() const {
  if (summands.empty()) return "0";
  std::string s;
  for (const auto& m : summands) s += (s.empty() ? "" : " ⊕ ") + m.name();
  return s;
}

std::vector<std::string> ChartEntry::summand_names() const {
  std::vector<std::string> out;
  for (const auto& m : summands) out.push_back(m.name());
  return out;
}

MackeyFn ChartEntry::total() const {
  if (summands.empty()) return MackeyFn::zero(degree.n);
  return direct_sum(summands);
}

namespace {

ChartEntry entry(const VirtualRep& v, std::vector<MackeyFn> summands) {
  ChartEntry e;
  e.degree = v;
  if (v.n == 2) {
    e.x = v.dim();
    e.y = v.a_sigma;
  } else {
    e.x = v.dim();
    e.y = v.fixed_dim(v.n);
  }
  for (auto& m : summands)
    if (!m.is_zero()) e.summands.push_back(std::move(m));
  return e;
}

MackeyFn sym(Symbol s, long n, const Int& q = 2, long i = 0) { return closed_form({s, q, n, i}); }

bool reversing(const VirtualRep& v) { return orientation(v) == Orientation::reversing; }

}  // namespace

ChartEntry pi_orbits(const Int& q, long n, const VirtualRep& v) {
  const long d = v.dim();
  const bool rev = reversing(v);
  if (d == 0) return entry(v, {sym(rev ? Symbol::barboxslash : Symbol::boxslash, n)});
  if (d > 0 && d % 2 == 1) {
    const long i = (d + 1) / 2;
    if (rev) return entry(v, {sym(Symbol::oplus, n, q, i), sym(Symbol::barcircle, n)});
    return entry(v, {sym(Symbol::ominus, n, q, i), sym(Symbol::circle, n)});
  }
  if (d > 0 && rev) return entry(v, {sym(Symbol::bullet, n)});
  return entry(v, {});
}

ChartEntry pi_fixed(const Int& q, long n, const VirtualRep& v) {
  const long d = v.dim();
  const bool rev = reversing(v);
  if (d == 0) return entry(v, {sym(rev ? Symbol::barbox : Symbol::box, n)});
  if (d > 0 && d % 2 == 1) return entry(v, {sym(rev ? Symbol::oplus : Symbol::ominus, n, q, (d + 1) / 2)});
  if (d < 0 && d % 2 == 0) return entry(v, {sym(rev ? Symbol::barcircle : Symbol::circle, n)});
  if (d < 0 && rev) return entry(v, {sym(Symbol::bullet, n)});
  return entry(v, {});
}

ChartEntry pi_fiber(const Int& q, long n, const VirtualRep& v) {
  const long d = v.dim();
  if (d > 0 && d % 2 == 1) return entry(v, {sym(reversing(v) ? Symbol::oplus : Symbol::ominus, n, q, (d + 1) / 2)});
  return entry(v, {});
}

ChartEntry assemble_from_e2(SsKind kind, const Int& q, long n, const VirtualRep& v) {
  if (kind == SsKind::tate) throw std::invalid_argument("assemble_from_e2: the Tate page has no edge assembly");
  const long k = v.dim();
  const VirtualRep base = v.plus_trivial(-k);
  const long reach = std::abs(k) + 3;
  const Window w = kind == SsKind::hoss ? Window{0, reach, 0, reach} : Window{-reach, 0, 0, reach};
  const E2Page page = e2_page(kind, q, n, base, w);
  certify_collapse(page);
  // filtration pieces on the line s + t = k; the lowest s is the subobject
  std::vector<MackeyFn> pieces;
  for (long s = w.smin; s <= w.smax; ++s) {
    if (const MackeyFn* e = page.at(s, k - s)) pieces.push_back(*e);
  }
  if (pieces.size() > 2) throw std::logic_error("assemble_from_e2: more than two filtration pieces");
  if (pieces.size() == 2) {
    const MackeyFn& sub = pieces[0];
    const MackeyFn& quot = pieces[1];
    if (!in_image_of_fixed_points(sub.tag()) || !quot.level(1).is_trivial())
      throw std::logic_error("assemble_from_e2: extension is not certified split");
  }
  return entry(v, pieces);
}

ChartEntry hz_coeff(long ell, const VirtualRep& v) {
  if (!is_prime(ell)) throw std::invalid_argument("hz_coeff: ell must be prime");
  if (v.n != ell) throw std::invalid_argument("hz_coeff: representation is for a different group");
  const long n = ell;
  auto one = [&](Symbol s) { return entry(v, {sym(s, n)}); };
  const ChartEntry zero = entry(v, {});
  if (ell == 2) {
    const long x = v.dim(), y = v.a_sigma;
    if (x == y) return x > 0 ? zero : x == 0 ? one(Symbol::box) : one(Symbol::circle);
    if (x == 0 && y < 0) return one(y % 2 == 0 ? Symbol::box : Symbol::barbox);
    if (x == 0 && y > 0) {
      if (y % 2 == 0) return one(Symbol::boxslash);
      return one(y >= 3 ? Symbol::barboxslash : Symbol::barbox);
    }
    if (x < 0 && x > y) return (x - y) % 2 == 0 ? one(Symbol::circle) : zero;
    if (x > 0 && y >= x + 3) return (x - y) % 2 != 0 ? one(Symbol::circle) : zero;
    return zero;
  }
  const long d = v.dim(), f = v.fixed_dim(ell);
  if (f == 0) return d > 0 ? zero : d == 0 ? one(Symbol::box) : one(Symbol::circle);
  if (f > 0 && d == 0) return one(Symbol::box);
  if (f < 0 && d == 0) return one(Symbol::boxslash);
  if (f > 0 && d < 0) return f % 2 == 0 ? one(Symbol::circle) : zero;
  if (f < 0 && d > 0) return (f <= -3 && f % 2 != 0) ? one(Symbol::circle) : zero;
  return zero;
}

namespace {

// Explicit case list for the K-groups at prime order; `h` is the coefficient answer used by
// the fall-through case.
ChartEntry explicit_k_chart(const Int& q, long ell, const VirtualRep& v, const ChartEntry& h) {
  const long n = ell;
  const long d = v.dim();
  // a = x - y for C_2, a = |V^G| for odd ell
  const long a = ell == 2 ? v.dim() - v.a_sigma : v.fixed_dim(ell);
  const bool a_odd = a % 2 != 0;
  if (d > 0 && d % 2 == 0) {
    if (a > -3 || !a_odd) return entry(v, {});
    if (a < -3 && a_odd) return entry(v, {sym(Symbol::circle, n)});
    return h;
  }
  if (d > 0) {
    const long i = (d + 1) / 2;
    if (a <= -3 && a_odd) return entry(v, {sym(Symbol::circle, n), sym(Symbol::ominus, n, q, i)});
    if (a > -3 && a_odd) return entry(v, {sym(Symbol::ominus, n, q, i)});
    if (ell == 2) return entry(v, {sym(Symbol::oplus, n, q, i)});
  }
  return h;
}

}  // namespace

ChartEntry pi_k_chart(const Int& q, long ell, const VirtualRep& v) {
  if (!is_prime(ell)) throw std::invalid_argument("pi_k_chart: ell must be prime");
  if (q < 2 || prime_of_prime_power(q) == 0) throw std::invalid_argument("pi_k_chart: q must be a prime power");
  const ChartEntry h = hz_coeff(ell, v);
  const ChartEntry f = pi_fiber(q, ell, v);
  ChartEntry out = explicit_k_chart(q, ell, v, h);
  std::vector<std::string> split = h.summand_names();
  for (const auto& s : f.summand_names()) split.push_back(s);
  if (out.summand_names() != split)
    throw std::logic_error("pi_k_chart: case analysis disagrees with the splitting at " + v.to_string());
  return out;
}

bool chart_degree(long ell, long x, long y, VirtualRep& out) {
  if (ell == 2) {
    out = VirtualRep::from_bidegree({x, y});
    return true;
  }
  if ((x - y) % 2 != 0) return false;
  out = VirtualRep::from_dimensions(ell, x, y);
  return true;
}

std::vector<ChartEntry> compute_chart(const ChartRequest& req) {
  if (!is_prime(req.ell)) throw std::invalid_argument("compute_chart: ell must be prime");
  if (req.min > req.max) throw std::invalid_argument("compute_chart: empty window");
  std::vector<std::pair<long, long>> coords;
  for (long x = req.min; x <= req.max; ++x)
    for (long y = req.min; y <= req.max; ++y) {
      VirtualRep v;
      if (chart_degree(req.ell, x, y, v)) coords.emplace_back(x, y);
    }
  std::vector<ChartEntry> results(coords.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < coords.size(); k = next++) {
      VirtualRep v;
      chart_degree(req.ell, coords[k].first, coords[k].second, v);
      results[k] = req.hz_only ? hz_coeff(req.ell, v) : pi_k_chart(req.q, req.ell, v);
    }
  };
  unsigned threads = req.threads ? req.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(coords.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  // merge by degree key
  std::map<std::pair<long, long>, ChartEntry> merged;
  for (auto& e : results) merged.emplace(std::make_pair(e.x, e.y), std::move(e));
  std::vector<ChartEntry> out;
  for (auto& [k, e] : merged) out.push_back(std::move(e));
  return out;
}

std::string GeometricFixedPoints::describe() const {
  switch (kind) {
    case Kind::integers: return "Z (degree 0)";
    case Kind::polynomial: return "Z/" + std::to_string(ell) + "[x], |x|=2";
    case Kind::zero: return "0";
  }
  return "0";
}

GeometricFixedPoints geometric_fixed_points_hz(long n) {
  if (n < 1) throw std::invalid_argument("geometric_fixed_points_hz: n must be positive");
  if (n == 1) return {GeometricFixedPoints::Kind::integers, 0};
  const Int p = prime_of_prime_power(n);
  if (p != 0) return {GeometricFixedPoints::Kind::polynomial, p.get_si()};
  return {GeometricFixedPoints::Kind::zero, 0};
}

}  // namespace eqk
