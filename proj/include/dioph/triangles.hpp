#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace dioph {

// Integer third sides b for a triangle with sides k and a.
struct ThirdSideSet {
  std::int64_t k = 0;
  std::int64_t a = 0;
  std::set<std::int64_t> options;     // strict triangle inequality
  std::set<std::int64_t> degenerate;  // some inequality holds with equality
};

// Precondition k1 == 1 (throws std::invalid_argument otherwise). True iff a
// triangle with a unit side and the two given integer sides exists, i.e. the
// two sides are equal.
bool lemma1_check(std::int64_t k1, std::pair<std::int64_t, std::int64_t> sides);

// All positive b with |a - b| < k < a + b. They lie in the window
// a-(k-1) .. a+(k-1). Throws std::invalid_argument unless k, a >= 1.
ThirdSideSet third_side_options(std::int64_t k, std::int64_t a);

// Bounds [lo, hi] of the window above, clipped to b >= 1; lo > hi when empty.
// With allow_flat the bounds also admit flat triangles.
std::pair<std::int64_t, std::int64_t> third_side_window(std::int64_t k, std::int64_t a,
                                                        bool allow_flat = false);

using IntTriangle = std::array<std::int64_t, 3>;  // (k, a, b), a <= b

// Non-degenerate integer triangles with one side k and a <= b <= amax,
// sorted lexicographically.
std::vector<IntTriangle> enumerate_triangles(std::int64_t k, std::int64_t amax);

}  // namespace dioph
