#include "dioph/triangles.hpp"

#include <algorithm>
#include <stdexcept>

namespace dioph {

bool lemma1_check(std::int64_t k1, std::pair<std::int64_t, std::int64_t> sides) {
  if (k1 != 1) throw std::invalid_argument("lemma1_check: the fixed side must be 1");
  const auto [b, c] = sides;
  if (b < 1 || c < 1) throw std::invalid_argument("lemma1_check: sides must be positive");
  // (1, b, b) is always a proper triangle for b >= 1.
  return b == c;
}

std::pair<std::int64_t, std::int64_t> third_side_window(std::int64_t k, std::int64_t a,
                                                        bool allow_flat) {
  const std::int64_t slack = allow_flat ? 0 : 1;
  // |a - b| <= k - slack  and  a + b >= k + slack
  const std::int64_t lo = std::max({a - k + slack, k + slack - a, std::int64_t{1}});
  const std::int64_t hi = a + k - slack;
  return {lo, hi};
}

ThirdSideSet third_side_options(std::int64_t k, std::int64_t a) {
  if (k < 1 || a < 1) throw std::invalid_argument("third_side_options: k and a must be positive");
  ThirdSideSet out{k, a, {}, {}};
  const auto [lo, hi] = third_side_window(k, a);
  for (auto b = lo; b <= hi; ++b) out.options.insert(b);
  for (const auto b : {a + k, a - k, k - a}) {
    if (b >= 1) out.degenerate.insert(b);
  }
  return out;
}

std::vector<IntTriangle> enumerate_triangles(std::int64_t k, std::int64_t amax) {
  std::vector<IntTriangle> out;
  for (std::int64_t a = 1; a <= amax; ++a) {
    const auto [lo, hi] = third_side_window(k, a);
    for (auto b = std::max(lo, a); b <= std::min(hi, amax); ++b) out.push_back({k, a, b});
  }
  return out;
}

}  // namespace dioph
