#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace dioph {

// Labeled quadrilateral ABCD: four sides along the closed polyline
// A->B->C->D->A and the two diagonals AC, BD. Positions fix the roles.
struct QuadDistances {
  std::int64_t ab = 1;
  std::int64_t bc = 1;
  std::int64_t cd = 1;
  std::int64_t da = 1;
  std::int64_t ac = 1;
  std::int64_t bd = 1;

  // Distance between vertices i, j in {0=A, 1=B, 2=C, 3=D}; i != j.
  std::int64_t between(int i, int j) const;

  // Tuple order (ab, bc, cd, da, ac, bd).
  std::array<std::int64_t, 6> tuple() const { return {ab, bc, cd, da, ac, bd}; }
  static QuadDistances from_tuple(const std::array<std::int64_t, 6>& t) {
    return {t[0], t[1], t[2], t[3], t[4], t[5]};
  }

  bool valid() const { return ab >= 1 && bc >= 1 && cd >= 1 && da >= 1 && ac >= 1 && bd >= 1; }

  // "(ab,bc,cd,da;ac,bd)"
  std::string str() const;

  friend auto operator<=>(const QuadDistances& a, const QuadDistances& b) {
    return a.tuple() <=> b.tuple();
  }
  friend bool operator==(const QuadDistances&, const QuadDistances&) = default;
  friend std::ostream& operator<<(std::ostream& os, const QuadDistances& q);
};

// Vertex triples of the four faces, in the order ABC, ABD, ACD, BCD.
inline constexpr std::array<std::array<int, 3>, 4> kFaces{{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};

inline constexpr std::array<char, 4> kVertexNames{'A', 'B', 'C', 'D'};

}  // namespace dioph
