#pragma once

#include "eqk/catalog.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace eqk {

/// Hand-entered reference charts for C_2 on the window [-6, 6]^2, written as summand glyphs per
/// bidegree (zero entries omitted). Used to check the computed charts, never to produce them.
struct ReferenceChart {
  std::map<std::pair<long, long>, std::vector<std::string>> entries;
  std::vector<std::pair<Bidegree, Bidegree>> alpha_lines;
};

// Coefficients of HZ, including its alpha-lines.
const ReferenceChart& reference_hz_chart();
// K-groups; the glyphs do not depend on q.
const ReferenceChart& reference_k_chart();

}  // namespace eqk
