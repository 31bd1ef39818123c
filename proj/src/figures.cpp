#include "eqk/figures.hpp"

namespace eqk {

namespace {

ReferenceChart build_hz() {
  ReferenceChart c;
  auto put = [&](long x, long y, const char* s) { c.entries[{x, y}].push_back(s); };
  auto line = [&](long x, long y) { c.alpha_lines.push_back({{x, y}, {x - 1, y - 1}}); };
  for (long y : {0, -2, -4, -6}) put(0, y, "□");
  for (long y : {1, -1, -3, -5}) put(0, y, "□̄");
  for (long y : {2, 4, 6}) put(0, y, "⊞");
  for (long y : {3, 5}) put(0, y, "⊞̄");
  // negative cone: the u-towers and their alpha-multiples
  for (long i = 1; i <= 6; ++i) put(-i, -i, "○");
  for (long i = 1; i <= 4; ++i) put(-i, -2 - i, "○");
  for (long i = 1; i <= 2; ++i) put(-i, -4 - i, "○");
  // positive cone
  put(1, 4, "○");
  put(2, 5, "○");
  put(3, 6, "○");
  put(1, 6, "○");

  for (long i = 0; i < 6; ++i) line(-i, -i);
  for (long i = 0; i < 4; ++i) line(-i, -2 - i);
  for (long i = 0; i < 2; ++i) line(-i, -4 - i);
  line(1, 4);
  line(2, 5);
  line(3, 6);
  line(1, 6);
  return c;
}

ReferenceChart build_k() {
  ReferenceChart c = build_hz();
  c.alpha_lines.clear();
  for (long i = 1; i <= 3; ++i)
    for (long y = -6; y <= 6; ++y)
      c.entries[{2 * i - 1, y}].push_back((y % 2 == 0 ? "⊖^" : "⊕^") + std::to_string(i));
  return c;
}

}  // namespace

const ReferenceChart& reference_hz_chart() {
  static const ReferenceChart c = build_hz();
  return c;
}

const ReferenceChart& reference_k_chart() {
  static const ReferenceChart c = build_k();
  return c;
}

}  // namespace eqk
