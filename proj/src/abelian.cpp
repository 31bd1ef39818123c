#include "eqk/abelian.hpp"

#include <sstream>
#include <stdexcept>

namespace eqk {

FgAb::FgAb(Vec torsion, std::size_t free_rank) : torsion_(std::move(torsion)), free_rank_(free_rank) {
  for (std::size_t j = 0; j < torsion_.size(); ++j) {
    if (torsion_[j] < 2) throw std::invalid_argument("FgAb: invariant factors must be >= 2");
    if (j > 0 && torsion_[j] % torsion_[j - 1] != 0)
      throw std::invalid_argument("FgAb: invariant factors must form a divisibility chain");
  }
}

FgAb FgAb::cyclic(const Int& order) {
  if (order < 0) throw std::invalid_argument("FgAb::cyclic: negative order");
  if (order == 0) return FgAb({}, 1);
  if (order == 1) return FgAb();
  return FgAb({order}, 0);
}

FgAb FgAb::free(std::size_t rank) { return FgAb({}, rank); }

FgAb FgAb::from_cyclic_orders(const Vec& orders) {
  Vec diag;
  for (const auto& o : orders) diag.push_back(abs(o));
  return normalize_presentation(diag.size(), IntMatrix::diagonal(diag)).group;
}

Int FgAb::generator_order(std::size_t j) const {
  if (j < torsion_.size()) return torsion_[j];
  if (j < generator_count()) return 0;
  throw std::out_of_range("FgAb::generator_order");
}

std::optional<Int> FgAb::order() const {
  if (free_rank_ > 0) return std::nullopt;
  Int o = 1;
  for (const auto& d : torsion_) o *= d;
  return o;
}

Vec FgAb::reduce(Vec x) const {
  if (x.size() != generator_count()) throw std::invalid_argument("FgAb::reduce: wrong coordinate count");
  for (std::size_t j = 0; j < torsion_.size(); ++j) x[j] = floor_mod(x[j], torsion_[j]);
  return x;
}

bool FgAb::is_zero_element(const Vec& x) const {
  const Vec r = reduce(x);
  for (const auto& v : r)
    if (v != 0) return false;
  return true;
}

IntMatrix FgAb::relation_matrix() const {
  Vec diag = torsion_;
  diag.resize(generator_count(), Int(0));
  return IntMatrix::diagonal(diag);
}

std::string FgAb::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& d : torsion_) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  if (free_rank_ > 0) {
    os << (first ? "" : " + ") << "Z";
    if (free_rank_ > 1) os << '^' << free_rank_;
  }
  return os.str();
}

Normalized normalize_presentation(std::size_t generators, const IntMatrix& relations) {
  if (relations.rows() != generators) throw std::invalid_argument("normalize_presentation: shape mismatch");
  const SmithForm f = smith_normal_form(relations);
  std::vector<std::size_t> torsion_idx, free_idx;
  Vec torsion;
  for (std::size_t i = 0; i < generators; ++i) {
    if (i < f.rank) {
      if (f.D(i, i) != 1) {
        torsion_idx.push_back(i);
        torsion.push_back(f.D(i, i));
      }
    } else {
      free_idx.push_back(i);
    }
  }
  std::vector<std::size_t> kept = torsion_idx;
  kept.insert(kept.end(), free_idx.begin(), free_idx.end());
  Normalized out{FgAb(torsion, free_idx.size()), f.U.select_rows(kept), f.U_inverse.select_cols(kept)};
  // reduce the coordinate map so it is canonical on torsion rows
  for (std::size_t r = 0; r < torsion.size(); ++r)
    for (std::size_t c = 0; c < out.to_normal.cols(); ++c)
      out.to_normal(r, c) = floor_mod(out.to_normal(r, c), torsion[r]);
  return out;
}

AbMap::AbMap(FgAb source, FgAb target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.generator_count() || matrix_.cols() != source_.generator_count())
    throw std::invalid_argument("AbMap: matrix shape does not match source/target");
  for (std::size_t r = 0; r < target_.torsion().size(); ++r)
    for (std::size_t c = 0; c < matrix_.cols(); ++c) matrix_(r, c) = floor_mod(matrix_(r, c), target_.torsion()[r]);
  for (std::size_t c = 0; c < source_.torsion().size(); ++c) {
    const Int& o = source_.torsion()[c];
    for (std::size_t r = 0; r < matrix_.rows(); ++r) {
      const Int t = target_.generator_order(r);
      const bool ok = (t == 0) ? matrix_(r, c) == 0 : (o * matrix_(r, c)) % t == 0;
      if (!ok) throw std::invalid_argument("AbMap: matrix does not respect the source relations");
    }
  }
}

AbMap AbMap::zero(const FgAb& source, const FgAb& target) {
  return AbMap(source, target, IntMatrix(target.generator_count(), source.generator_count()));
}

AbMap AbMap::identity(const FgAb& group) {
  return AbMap(group, group, IntMatrix::identity(group.generator_count()));
}

AbMap AbMap::scalar(const FgAb& group, const Int& c) {
  return AbMap(group, group, IntMatrix::identity(group.generator_count()).scaled(c));
}

Vec AbMap::operator()(const Vec& x) const { return target_.reduce(matrix_ * x); }

AbMap AbMap::operator+(const AbMap& rhs) const {
  if (source_ != rhs.source_ || target_ != rhs.target_) throw std::invalid_argument("AbMap sum: mismatched groups");
  return AbMap(source_, target_, matrix_ + rhs.matrix_);
}

AbMap AbMap::operator-(const AbMap& rhs) const { return *this + (-rhs); }

AbMap AbMap::operator-() const { return AbMap(source_, target_, -matrix_); }

AbMap AbMap::power(unsigned long k) const {
  if (source_ != target_) throw std::invalid_argument("AbMap::power: not an endomorphism");
  AbMap out = identity(source_);
  AbMap base = *this;
  while (k > 0) {
    if (k & 1UL) out = compose(base, out);
    base = compose(base, base);
    k >>= 1;
  }
  return out;
}

AbMap compose(const AbMap& after, const AbMap& before) {
  if (before.target() != after.source()) throw std::invalid_argument("compose: mismatched groups");
  return AbMap(before.source(), after.target(), after.matrix() * before.matrix());
}

namespace {

// Subgroup of `g` generated by the columns of `gens`, with its inclusion.
KernelResult present_subgroup(const FgAb& g, const IntMatrix& gens) {
  const std::size_t k = gens.cols();
  const IntMatrix rel_lattice = integer_kernel(IntMatrix::hconcat(gens, g.relation_matrix()));
  const IntMatrix relations = rel_lattice.row_range(0, k);
  const Normalized n = normalize_presentation(k, relations);
  return {n.group, AbMap(n.group, g, gens * n.from_normal)};
}

}  // namespace

KernelResult kernel(const AbMap& f) {
  const std::size_t s = f.source().generator_count();
  const IntMatrix lattice = integer_kernel(IntMatrix::hconcat(f.matrix(), f.target().relation_matrix()));
  return present_subgroup(f.source(), lattice.row_range(0, s));
}

CokernelResult cokernel(const AbMap& f) {
  const std::size_t t = f.target().generator_count();
  const Normalized n = normalize_presentation(t, IntMatrix::hconcat(f.target().relation_matrix(), f.matrix()));
  return {n.group, AbMap(f.target(), n.group, n.to_normal), n.from_normal};
}

KernelResult image(const AbMap& f) { return present_subgroup(f.target(), f.matrix()); }

bool is_injective(const AbMap& f) { return kernel(f).group.is_trivial(); }
bool is_surjective(const AbMap& f) { return cokernel(f).group.is_trivial(); }
bool is_isomorphism(const AbMap& f) { return is_injective(f) && is_surjective(f); }

std::optional<Vec> preimage(const AbMap& f, const Vec& y) {
  const std::size_t s = f.source().generator_count();
  auto sol = solve_integer(IntMatrix::hconcat(f.matrix(), f.target().relation_matrix()), y);
  if (!sol) return std::nullopt;
  sol->resize(s);
  return f.source().reduce(*sol);
}

AbMap inverse(const AbMap& f) {
  if (!is_isomorphism(f)) throw std::invalid_argument("inverse: map is not an isomorphism");
  const std::size_t t = f.target().generator_count();
  IntMatrix m(f.source().generator_count(), t);
  for (std::size_t j = 0; j < t; ++j) {
    Vec e(t, Int(0));
    e[j] = 1;
    m.set_column(j, *preimage(f, e));
  }
  return AbMap(f.target(), f.source(), m);
}

std::optional<AbMap> factor_through_injection(const AbMap& f, const AbMap& injection) {
  if (f.target() != injection.target()) throw std::invalid_argument("factor_through_injection: mismatched targets");
  const std::size_t s = f.source().generator_count();
  IntMatrix m(injection.source().generator_count(), s);
  for (std::size_t j = 0; j < s; ++j) {
    auto x = preimage(injection, f.matrix().column(j));
    if (!x) return std::nullopt;
    m.set_column(j, *x);
  }
  return AbMap(f.source(), injection.source(), m);
}

DirectSum direct_sum(const std::vector<FgAb>& summands) {
  std::size_t total = 0;
  IntMatrix rel(0, 0);
  for (const auto& g : summands) {
    total += g.generator_count();
    rel = IntMatrix::block_diagonal(rel, g.relation_matrix());
  }
  const Normalized n = normalize_presentation(total, rel);
  DirectSum out{n.group, {}, {}};
  std::size_t offset = 0;
  for (const auto& g : summands) {
    const std::size_t k = g.generator_count();
    IntMatrix embed(total, k);
    for (std::size_t j = 0; j < k; ++j) embed(offset + j, j) = 1;
    out.injections.emplace_back(g, n.group, n.to_normal * embed);
    out.projections.emplace_back(n.group, g, embed.transpose() * n.from_normal);
    offset += k;
  }
  return out;
}

AbMap block_map(const DirectSum& source, const DirectSum& target, const std::vector<std::vector<AbMap>>& blocks) {
  AbMap out = AbMap::zero(source.group, target.group);
  for (std::size_t i = 0; i < target.injections.size(); ++i)
    for (std::size_t j = 0; j < source.projections.size(); ++j)
      out = out + compose(target.injections[i], compose(blocks.at(i).at(j), source.projections[j]));
  return out;
}

}  // namespace eqk
