#pragma once

#include "eqk/catalog.hpp"
#include "eqk/mackey.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eqk {

enum class SsKind { hoss, hfpss, tate };
enum class Coefficients { k_theory, hz };

std::string to_string(SsKind k);

struct Window {
  long smin = 0, smax = 0, tmin = 0, tmax = 0;
  bool contains(long s, long t) const { return s >= smin && s <= smax && t >= tmin && t <= tmax; }
};

/// E2 page over a finite window. Entry (s, t) is the (co)homology Mackey functor of the
/// underlying module in degree W + t; only nonzero entries are stored.
/// Differentials run d^r: (s, t) -> (s - r, t + r - 1) for r >= 2.
struct E2Page {
  SsKind kind = SsKind::hoss;
  Coefficients coefficients = Coefficients::k_theory;
  Int q = 2;
  long n = 1;
  VirtualRep base;
  Window window;
  std::map<std::pair<long, long>, MackeyFn> entries;

  const MackeyFn* at(long s, long t) const;
};

// Underlying module of the coefficient spectrum in degree v.
GModule underlying_module(Coefficients c, const Int& q, long n, const VirtualRep& v);

// Mackey functor versions of H_s, H^s and the Tate groups, built from the norm morphism.
MackeyFn homology_mackey(const GModule& m, long s);
MackeyFn cohomology_mackey(const GModule& m, long s);
MackeyFn tate_mackey(const GModule& m, long s);

E2Page e2_page(SsKind kind, const Int& q, long n, const VirtualRep& base, const Window& window,
               Coefficients coefficients = Coefficients::k_theory);

struct CertificateItem {
  std::pair<long, long> source;
  std::pair<long, long> target;
  long r = 2;
  std::string reason;
};

struct CollapseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Certifies every differential between nonzero entries of the window as zero; throws
// CollapseError when some differential cannot be certified.
std::vector<CertificateItem> certify_collapse(const E2Page& page);

/// Value of a homotopy Mackey functor at one degree, kept as a list of named summands.
struct ChartEntry {
  VirtualRep degree;
  long x = 0;  // plotting coordinates: (x, y) bidegree for C_2, (|V|, |V^G|) otherwise
  long y = 0;
  std::vector<MackeyFn> summands;

  std::string symbol() const;  // "0" when there are no summands
  std::vector<std::string> summand_names() const;
  MackeyFn total() const;  // level-wise direct sum
};

ChartEntry pi_orbits(const Int& q, long n, const VirtualRep& v);
ChartEntry pi_fixed(const Int& q, long n, const VirtualRep& v);
ChartEntry pi_fiber(const Int& q, long n, const VirtualRep& v);

// Assembles the homotopy Mackey functor from a certified E2 page, splitting the extension
// when the filtration pieces allow it. The summands are the functorially built E2 entries.
ChartEntry assemble_from_e2(SsKind kind, const Int& q, long n, const VirtualRep& v);

ChartEntry hz_coeff(long ell, const VirtualRep& v);
ChartEntry pi_k_chart(const Int& q, long ell, const VirtualRep& v);

// Degree at chart coordinates: bidegree (x, y) for ell = 2, (|V|, |V^G|) for odd ell.
// Returns false when the coordinates do not describe a representation.
bool chart_degree(long ell, long x, long y, VirtualRep& out);

struct ChartRequest {
  Int q = 3;
  long ell = 2;
  long min = -6;
  long max = 6;
  bool hz_only = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

// All chart entries in the square window, ordered by (x, y). Evaluated concurrently.
std::vector<ChartEntry> compute_chart(const ChartRequest& req);

struct GeometricFixedPoints {
  enum class Kind { integers, polynomial, zero } kind = Kind::zero;
  long ell = 0;
  std::string describe() const;
};

GeometricFixedPoints geometric_fixed_points_hz(long n);

}  // namespace eqk
