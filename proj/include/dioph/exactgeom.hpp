#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>

#include "dioph/quad_distances.hpp"
#include "dioph/rat.hpp"
#include "dioph/surd.hpp"

namespace dioph {

// 16 * area^2 of a triangle from its three squared side lengths. Works for
// any exact ring (int64_t, __int128, Rat); callers pick a wide enough type.
template <class T>
T cm3_of(const T& x, const T& y, const T& z) {
  return T(2) * (x * y + y * z + z * x) - (x * x + y * y + z * z);
}

// Bordered 5x5 Cayley-Menger determinant from the six squared distances in
// QuadDistances tuple order (ab, bc, cd, da, ac, bd). Equals 288 * volume^2 of
// the tetrahedron ABCD, so the regular tetrahedron with unit edges gives 4.
template <class T>
T cm4_of(const std::array<T, 6>& sq) {
  const T& d01 = sq[0];
  const T& d12 = sq[1];
  const T& d23 = sq[2];
  const T& d03 = sq[3];
  const T& d02 = sq[4];
  const T& d13 = sq[5];
  // Opposite edge pairs (01,23), (02,13), (03,12); faces 012, 013, 023, 123.
  const T v = d01 * d23 * (d02 + d03 + d12 + d13 - d01 - d23) +
              d02 * d13 * (d01 + d03 + d12 + d23 - d02 - d13) +
              d03 * d12 * (d01 + d02 + d13 + d23 - d03 - d12) -
              d01 * d12 * d02 - d01 * d13 * d03 - d02 * d23 * d03 - d12 * d23 * d13;
  return T(2) * v;
}

template <class T>
std::array<T, 6> squared_tuple(const QuadDistances& q) {
  const auto t = q.tuple();
  std::array<T, 6> out{};
  for (std::size_t i = 0; i < 6; ++i) out[i] = T(t[i]) * T(t[i]);
  return out;
}

// Throws std::domain_error on a negative argument.
Rat cm3(const Rat& d01sq, const Rat& d02sq, const Rat& d12sq);

Rat cm4(const QuadDistances& q);

// Non-strict triangle inequality on three lengths.
bool triangle_ok(std::int64_t a, std::int64_t b, std::int64_t c);

struct PlanarEmbedding {
  // A, B, C, D. A = (0,0), B = (|AB|, 0), C in the closed upper half-plane.
  std::array<Point, 4> points;
  // Shared squarefree radicand of every coordinate; 1 when all coordinates
  // are rational, 0 when all four points lie on the x-axis.
  std::int64_t radicand = 0;
};

struct NotRealizable {
  enum class Reason { TriangleABC, TriangleABD, TriangleACD, TriangleBCD, NonPlanar };
  Reason reason;
  std::string detail;
};

using EmbedResult = std::variant<PlanarEmbedding, NotRealizable>;

EmbedResult embed(const QuadDistances& q);

const char* to_string(NotRealizable::Reason r);

}  // namespace dioph
