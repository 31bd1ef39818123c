#pragma once

#include "eqk/io.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace eqk {

/// One line of a verification report.
struct CheckRecord {
  std::string check;
  json parameters;
  json expected;
  json got;
  bool pass = false;

  json to_json() const;  // {check, parameters, expected, got, status}
};

struct VerifyOptions {
  std::vector<long> qs{2, 3, 4, 5, 7};
  std::vector<long> ns{1, 2, 3, 4, 6};
  std::vector<long> weights{1, 2, 3};
  std::vector<long> chart_qs{2, 3, 4, 5, 7, 9};  // splitting and Quillen checks
  std::vector<long> ells{2, 3, 5};
  long chart_q = 3;  // reference chart comparison
  long window = 6;
  std::uint64_t seed = 1;
  int seeds_per_pair = 50;
  int ring_samples = 500;
  std::uint64_t search_bound = 64;
};

// Grid restricted to prime powers q <= qmax and 1 <= n <= nmax.
VerifyOptions options_for_bounds(long qmax, long nmax);

struct SuiteSummary {
  std::size_t checks = 0;
  std::size_t failures = 0;
  bool ok() const { return checks > 0 && failures == 0; }
};

using RecordSink = std::function<void(const CheckRecord&)>;

// cohomology, norm-iso, tate, mackey-axioms, splitting, charts, k-split, quillen, ring, gfp,
// collapse; "all" runs every suite.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
SuiteSummary run_suite(const std::string& name, const VerifyOptions& opts, const RecordSink& sink);

}  // namespace eqk
