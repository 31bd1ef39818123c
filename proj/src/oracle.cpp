#include "eqk/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace eqk::oracle {

namespace {

struct Gcdext {
  Int g, x, y;
};

Gcdext gcdext(const Int& a, const Int& b) {
  Gcdext r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Replaces columns (c, j) of m by (x c + y j, -(b/g) c + (a/g) j), a unimodular change.
void mix_columns(IntMatrix& m, std::size_t c, std::size_t j, const Int& x, const Int& y, const Int& bg, const Int& ag) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Int u = m(r, c), v = m(r, j);
    m(r, c) = x * u + y * v;
    m(r, j) = -bg * u + ag * v;
  }
}

struct ColumnEchelon {
  IntMatrix e;  // a * u
  IntMatrix u;
  std::size_t rank = 0;
};

ColumnEchelon column_echelon(const IntMatrix& a) {
  ColumnEchelon r{a, IntMatrix(a.cols(), a.cols()), 0};
  for (std::size_t k = 0; k < a.cols(); ++k) r.u(k, k) = 1;
  std::size_t c = 0;
  for (std::size_t row = 0; row < a.rows() && c < a.cols(); ++row) {
    for (std::size_t j = c + 1; j < a.cols(); ++j) {
      if (r.e(row, j) == 0) continue;
      const Int p = r.e(row, c), s = r.e(row, j);
      const Gcdext g = gcdext(p, s);
      const Int bg = s / g.g, ag = p / g.g;
      mix_columns(r.e, c, j, g.x, g.y, bg, ag);
      mix_columns(r.u, c, j, g.x, g.y, bg, ag);
    }
    if (r.e(row, c) != 0) ++c;
  }
  r.rank = c;
  return r;
}

IntMatrix first_columns(const IntMatrix& m, std::size_t count) {
  IntMatrix out(m.rows(), count);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < count; ++c) out(r, c) = m(r, c);
  return out;
}

IntMatrix side_by_side(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

IntMatrix transposed(const IntMatrix& a) {
  IntMatrix t(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
  return t;
}

IntMatrix product(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

// Basis of the lattice spanned by the columns of s.
IntMatrix lattice_basis(const IntMatrix& s) {
  const ColumnEchelon ce = column_echelon(s);
  return first_columns(ce.e, ce.rank);
}

// Basis of {x : a x = 0}.
IntMatrix lattice_kernel(const IntMatrix& a) {
  const ColumnEchelon ce = column_echelon(a);
  IntMatrix k(a.cols(), a.cols() - ce.rank);
  for (std::size_t r = 0; r < a.cols(); ++r)
    for (std::size_t c = ce.rank; c < a.cols(); ++c) k(r, c - ce.rank) = ce.u(r, c);
  return k;
}

// Coordinates of the columns of v in the basis k (full column rank); throws if some column
// is outside the lattice.
IntMatrix coordinates(const IntMatrix& k, const IntMatrix& v) {
  const std::size_t rank = k.cols();
  const ColumnEchelon ce = column_echelon(transposed(k));
  const IntMatrix p = transposed(ce.u);  // p k = [t; 0], t upper triangular
  const IntMatrix t = product(p, k);
  const IntMatrix w = product(p, v);
  IntMatrix c(rank, v.cols());
  for (std::size_t col = 0; col < v.cols(); ++col) {
    for (std::size_t r = rank; r < w.rows(); ++r)
      if (w(r, col) != 0) throw std::logic_error("oracle: vector outside the lattice");
    for (std::size_t ii = rank; ii-- > 0;) {
      Int acc = w(ii, col);
      for (std::size_t jj = ii + 1; jj < rank; ++jj) acc -= t(ii, jj) * c(jj, col);
      if (acc % t(ii, ii) != 0) throw std::logic_error("oracle: vector outside the lattice");
      c(ii, col) = acc / t(ii, ii);
    }
  }
  return c;
}

}  // namespace

FgAb quotient_group(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t rows = a.rows(), cols = a.cols();
  Vec diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pivot: smallest nonzero entry of the remaining block
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (a(r, c) != 0 && (pr == rows || abs(a(r, c)) < abs(a(pr, pc)))) pr = r, pc = c;
    if (pr == rows) break;
    for (std::size_t c = 0; c < cols; ++c) std::swap(a(t, c), a(pr, c));
    for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, t), a(r, pc));
    bool clean = true;
    for (std::size_t r = t + 1; r < rows; ++r) {
      const Int qt = a(r, t) / a(t, t);
      for (std::size_t c = t; c < cols; ++c) a(r, c) -= qt * a(t, c);
      if (a(r, t) != 0) clean = false;
    }
    for (std::size_t c = t + 1; c < cols; ++c) {
      const Int qt = a(t, c) / a(t, t);
      for (std::size_t r = t; r < rows; ++r) a(r, c) -= qt * a(r, t);
      if (a(t, c) != 0) clean = false;
    }
    if (!clean) continue;
    // divisibility of the rest by the pivot
    std::size_t bad = rows;
    for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
      for (std::size_t c = t + 1; c < cols; ++c)
        if (a(r, c) % a(t, t) != 0) {
          bad = r;
          break;
        }
    if (bad != rows) {
      for (std::size_t c = t; c < cols; ++c) a(t, c) += a(bad, c);
      continue;
    }
    diag.push_back(abs(a(t, t)));
    ++t;
  }
  Vec torsion;
  for (const auto& d : diag)
    if (d > 1) torsion.push_back(d);
  std::sort(torsion.begin(), torsion.end());
  return FgAb(torsion, rows - diag.size());
}

PeriodicResolution::PeriodicResolution(const GModule& mod, long sub) : module(mod), m(sub) {
  if (sub < 1 || mod.n() % sub != 0) throw std::invalid_argument("oracle: subgroup order must divide n");
  const FgAb& g = mod.group();
  const std::size_t k = g.generator_count();
  const IntMatrix h = mod.subgroup_generator(sub).matrix();
  relations = IntMatrix(k, k);
  for (std::size_t j = 0; j < k; ++j) relations(j, j) = g.generator_order(j);
  d1 = h;
  for (std::size_t j = 0; j < k; ++j) d1(j, j) -= 1;
  d2 = IntMatrix(k, k);
  IntMatrix power(k, k);
  for (std::size_t j = 0; j < k; ++j) power(j, j) = 1;
  for (long s = 0; s < sub; ++s) {
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) d2(r, c) += power(r, c);
    power = product(h, power);
  }
}

const IntMatrix& PeriodicResolution::differential(Complex c, long s) const {
  // cohomology and Tate: d^s leaves position s; homology: the boundary leaving position s
  if (c == Complex::homology) return s % 2 != 0 ? d1 : d2;
  return s % 2 == 0 ? d1 : d2;
}

bool PeriodicResolution::is_complex() const {
  auto vanishes = [&](const IntMatrix& x) {
    for (std::size_t c = 0; c < x.cols(); ++c)
      for (std::size_t r = 0; r < x.rows(); ++r) {
        const Int o = relations(r, r);
        if (o == 0 ? x(r, c) != 0 : x(r, c) % o != 0) return false;
      }
    return true;
  };
  return vanishes(product(d1, d2)) && vanishes(product(d2, d1));
}

namespace {

// ker(out) / im(in) inside Z^g / relations; a null matrix pointer stands for the zero map.
FgAb subquotient(const IntMatrix* out, const IntMatrix* in, const IntMatrix& relations) {
  const std::size_t g = relations.rows();
  IntMatrix kbasis;
  if (out == nullptr) {
    kbasis = IntMatrix(g, g);
    for (std::size_t j = 0; j < g; ++j) kbasis(j, j) = 1;
  } else {
    const IntMatrix ker = lattice_kernel(side_by_side(*out, relations));
    IntMatrix proj(g, ker.cols());
    for (std::size_t r = 0; r < g; ++r)
      for (std::size_t c = 0; c < ker.cols(); ++c) proj(r, c) = ker(r, c);
    kbasis = lattice_basis(proj);
  }
  if (kbasis.cols() == 0) return FgAb();
  const IntMatrix boundaries = in == nullptr ? relations : side_by_side(*in, relations);
  return quotient_group(coordinates(kbasis, boundaries));
}

}  // namespace

FgAb resolution_cohomology(const GModule& m, long sub, long s, Complex c) {
  if (c != Complex::tate && s < 0) throw std::invalid_argument("oracle: negative degree");
  const PeriodicResolution res(m, sub);
  switch (c) {
    case Complex::cohomology:
      return subquotient(&res.differential(c, s), s == 0 ? nullptr : &res.differential(c, s - 1), res.relations);
    case Complex::homology:
      return subquotient(s == 0 ? nullptr : &res.differential(c, s), &res.differential(c, s + 1), res.relations);
    case Complex::tate: return subquotient(&res.differential(c, s), &res.differential(c, s - 1), res.relations);
  }
  return FgAb();
}

namespace {

std::vector<Vec> elements(const FgAb& g, std::uint64_t bound) {
  if (!g.is_finite()) throw BoundExceeded("oracle: infinite group " + g.to_string());
  const auto order = g.order();
  if (*order > bound) throw BoundExceeded("oracle: group " + g.to_string() + " exceeds the enumeration bound");
  std::vector<Vec> out{Vec()};
  for (const auto& d : g.torsion()) {
    std::vector<Vec> next;
    for (const auto& prefix : out)
      for (Int x = 0; x < d; ++x) {
        Vec v = prefix;
        v.push_back(x);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

Vec apply_mod(const IntMatrix& m, const Vec& x, const FgAb& target) {
  Vec y(m.rows(), Int(0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) y[r] += m(r, c) * x[c];
    const Int o = target.generator_order(r);
    if (o != 0) {
      y[r] %= o;
      if (y[r] < 0) y[r] += o;
    }
  }
  return y;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

}  // namespace

Int enumerated_order(const GModule& m, long sub, long s, Complex c, std::uint64_t bound) {
  const PeriodicResolution res(m, sub);
  const FgAb& g = m.group();
  const IntMatrix* out = nullptr;
  const IntMatrix* in = nullptr;
  switch (c) {
    case Complex::cohomology:
      out = &res.differential(c, s);
      if (s > 0) in = &res.differential(c, s - 1);
      break;
    case Complex::homology:
      if (s > 0) out = &res.differential(c, s);
      in = &res.differential(c, s + 1);
      break;
    case Complex::tate:
      out = &res.differential(c, s);
      in = &res.differential(c, s - 1);
      break;
  }
  const auto all = elements(g, bound);
  Int cycles = 0;
  std::set<Vec> boundaries;
  for (const auto& x : all) {
    if (out == nullptr || is_zero_vec(apply_mod(*out, x, g))) ++cycles;
    boundaries.insert(in == nullptr ? Vec(g.generator_count(), Int(0)) : apply_mod(*in, x, g));
  }
  return cycles / Int(boundaries.size());
}

namespace {

// Every homomorphism a -> b between finite groups, as matrices.
std::vector<AbMap> all_homs(const FgAb& a, const FgAb& b, std::uint64_t bound) {
  const auto targets = elements(b, bound);
  std::vector<std::vector<Vec>> choices;
  for (std::size_t j = 0; j < a.generator_count(); ++j) {
    const Int o = a.generator_order(j);
    std::vector<Vec> ok;
    for (const auto& y : targets) {
      Vec scaled = y;
      for (auto& v : scaled) v *= o;
      if (b.is_zero_element(scaled)) ok.push_back(y);
    }
    choices.push_back(std::move(ok));
  }
  std::vector<AbMap> out;
  std::vector<std::size_t> idx(choices.size(), 0);
  for (;;) {
    IntMatrix mat(b.generator_count(), a.generator_count());
    for (std::size_t j = 0; j < choices.size(); ++j)
      for (std::size_t r = 0; r < b.generator_count(); ++r) mat(r, j) = choices[j][idx[j]][r];
    out.emplace_back(a, b, mat);
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

}  // namespace

std::vector<MackeyMor> exhaustive_hom_search(const MackeyFn& a, const MackeyFn& b, std::uint64_t bound) {
  if (a.n() != b.n()) throw std::invalid_argument("oracle: functors for different groups");
  const auto& ds = a.divisors();
  std::map<long, std::vector<AbMap>> candidates;
  for (long d : ds) {
    if (!a.level(d).is_finite() || !b.level(d).is_finite() || *a.level(d).order() > bound ||
        *b.level(d).order() > bound)
      throw BoundExceeded("oracle: level " + std::to_string(d) + " exceeds the search bound");
    for (auto& f : all_homs(a.level(d), b.level(d), bound))
      if (compose(f, a.weyl(d)) == compose(b.weyl(d), f)) candidates[d].push_back(std::move(f));
  }
  std::vector<MackeyMor> found;
  std::map<long, AbMap> chosen;
  // divisors are ascending, so every proper divisor of ds[k] is chosen before it
  auto search = [&](auto&& self, std::size_t k) -> void {
    if (k == ds.size()) {
      MackeyMor f{a, b, chosen};
      if (!is_zero(f)) found.push_back(std::move(f));
      return;
    }
    const long e = ds[k];
    for (const auto& f : candidates[e]) {
      bool ok = true;
      for (long d : ds) {
        if (d >= e || e % d != 0) continue;
        const AbMap& g = chosen.at(d);
        if (!(compose(b.restriction(e, d), f) == compose(g, a.restriction(e, d))) ||
            !(compose(f, a.transfer(d, e)) == compose(b.transfer(d, e), g))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen[e] = f;
      self(self, k + 1);
      chosen.erase(e);
    }
  };
  search(search, 0);
  return found;
}

namespace {

struct Truncation {
  FgAb group;
  std::vector<std::size_t> kept;  // surviving generators of the original group
};

Truncation truncate_group(const FgAb& g, const Int& k) {
  Truncation t;
  Vec orders;
  for (std::size_t j = 0; j < g.generator_count(); ++j) {
    const Int o = g.generator_order(j);
    const Int r = o == 0 ? k : Int(gcd(o, k));
    if (r > 1) {
      orders.push_back(r);
      t.kept.push_back(j);
    }
  }
  t.group = FgAb(orders, 0);
  return t;
}

}  // namespace

MackeyFn truncate_mod(const MackeyFn& m, const Int& k) {
  if (k < 2) throw std::invalid_argument("oracle: truncation modulus must be at least 2");
  std::map<long, Truncation> levels;
  for (long d : m.divisors()) levels[d] = truncate_group(m.level(d), k);
  auto induced = [&](const AbMap& f, long from, long to) {
    const Truncation& s = levels.at(from);
    const Truncation& t = levels.at(to);
    IntMatrix mat(t.kept.size(), s.kept.size());
    for (std::size_t r = 0; r < t.kept.size(); ++r)
      for (std::size_t c = 0; c < s.kept.size(); ++c) mat(r, c) = f.matrix()(t.kept[r], s.kept[c]);
    return AbMap(s.group, t.group, mat);
  };
  return MackeyFn::build(
      m.n(), [&](long d) { return levels.at(d).group; }, [&](long d) { return induced(m.weyl(d), d, d); },
      [&](long e, long d) { return induced(m.restriction(e, d), e, d); },
      [&](long d, long e) { return induced(m.transfer(d, e), d, e); }, Provenance::other,
      m.name() + " mod " + to_string(k));
}

namespace {

AbMap random_hom(const FgAb& a, const FgAb& b, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-3, 3);
  IntMatrix mat(b.generator_count(), a.generator_count());
  for (std::size_t r = 0; r < b.generator_count(); ++r)
    for (std::size_t c = 0; c < a.generator_count(); ++c) {
      const Int src = a.generator_order(c), tgt = b.generator_order(r);
      if (src == 0)
        mat(r, c) = dist(rng);
      else if (tgt != 0)
        mat(r, c) = Int(dist(rng)) * (tgt / Int(gcd(tgt, src)));
    }
  return AbMap(a, b, mat);
}

}  // namespace

RandomExtension random_extension(const MackeyFn& sub, const MackeyFn& quot, std::uint64_t seed, int retries) {
  if (sub.n() != quot.n()) throw std::invalid_argument("oracle: functors for different groups");
  const long n = sub.n();
  const auto& ds = sub.divisors();
  std::mt19937_64 rng(seed);
  std::map<long, DirectSum> sums;
  for (long d : ds) sums[d] = direct_sum({sub.level(d), quot.level(d)});
  // block upper triangular map with the given off-diagonal block
  auto block = [&](const AbMap& top, const AbMap& corner, const AbMap& bottom, long from, long to) {
    return block_map(sums.at(from), sums.at(to), {{top, corner}, {AbMap::zero(sub.level(from), quot.level(to)), bottom}});
  };
  auto zero_corner = [&](long from, long to) { return AbMap::zero(quot.level(from), sub.level(to)); };
  std::map<long, AbMap> weyl;
  std::map<std::pair<long, long>, AbMap> res, tr;
  auto build = [&](const std::string& name) {
    return MackeyFn::build(
        n, [&](long d) { return sums.at(d).group; }, [&](long d) { return weyl.at(d); },
        [&](long e, long d) { return res.at({e, d}); }, [&](long d, long e) { return tr.at({d, e}); },
        Provenance::other, name);
  };
  const std::string name = "ext(" + sub.name() + ", " + quot.name() + ")";
  RandomExtension out;
  out.seed = seed;
  auto inclusion = [&](const MackeyFn& middle) {
    MackeyMor f{sub, middle, {}};
    for (long d : ds) f.maps[d] = sums.at(d).injections[0];
    return f;
  };
  for (int attempt = 1; attempt <= retries; ++attempt) {
    out.attempts = attempt;
    for (long d : ds) weyl[d] = block(sub.weyl(d), random_hom(quot.level(d), sub.level(d), rng), quot.weyl(d), d, d);
    for (long e : ds)
      for (long d : ds) {
        if (d == e || e % d != 0) continue;
        res[{e, d}] = block(sub.restriction(e, d), random_hom(quot.level(e), sub.level(d), rng),
                            quot.restriction(e, d), e, d);
        tr[{d, e}] = block(sub.transfer(d, e), random_hom(quot.level(d), sub.level(e), rng), quot.transfer(d, e), d, e);
      }
    MackeyFn middle = build(name);
    if (validate_mackey(middle).empty()) {
      out.twisted = true;
      out.inclusion = inclusion(middle);
      out.middle = std::move(middle);
      return out;
    }
  }
  // conjugate the split structure by theta_d = [[1, beta_d], [0, 1]]
  std::map<long, AbMap> theta, theta_inv;
  for (long d : ds) {
    const AbMap beta = random_hom(quot.level(d), sub.level(d), rng);
    theta[d] = block(AbMap::identity(sub.level(d)), beta, AbMap::identity(quot.level(d)), d, d);
    theta_inv[d] = block(AbMap::identity(sub.level(d)), -beta, AbMap::identity(quot.level(d)), d, d);
  }
  auto conj = [&](const AbMap& f, long from, long to) { return compose(theta.at(to), compose(f, theta_inv.at(from))); };
  for (long d : ds) weyl[d] = conj(block(sub.weyl(d), zero_corner(d, d), quot.weyl(d), d, d), d, d);
  for (long e : ds)
    for (long d : ds) {
      if (d == e || e % d != 0) continue;
      res[{e, d}] = conj(block(sub.restriction(e, d), zero_corner(e, d), quot.restriction(e, d), e, d), e, d);
      tr[{d, e}] = conj(block(sub.transfer(d, e), zero_corner(d, e), quot.transfer(d, e), d, e), d, e);
    }
  out.middle = build(name);
  out.inclusion = inclusion(out.middle);
  return out;
}

}  // namespace eqk::oracle
