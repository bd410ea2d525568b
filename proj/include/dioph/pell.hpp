#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dioph/quad_distances.hpp"
#include "dioph/rat.hpp"

namespace dioph {

// (x, y) with x^2 - D*y^2 = 1. y = 0 only for the trivial solution (1, 0).
struct PellSolution {
  BigInt x;
  BigInt y;
  std::int64_t D = 0;
  friend bool operator==(const PellSolution& a, const PellSolution& b) {
    return a.x == b.x && a.y == b.y && a.D == b.D;
  }
};

bool satisfies_pell(const PellSolution& s);

// Least positive solution from the periodic continued fraction of sqrt(D).
// Throws std::domain_error for D < 2 or a perfect square.
PellSolution pell_fundamental(std::int64_t D);

// First `count` positive solutions in increasing order.
std::vector<PellSolution> pell_stream(std::int64_t D, std::size_t count);

enum class Composition {
  Plus,   // (xp*xq + D*yp*yq, xp*yq + yp*xq): product of the units
  Minus,  // (xp*xq - D*yp*yq, |xp*yq - yp*xq|): quotient of the units
};

// Throws std::invalid_argument when the two discriminants differ.
PellSolution pell_compose(const PellSolution& p, const PellSolution& q,
                          Composition sign = Composition::Plus);

// For D = 12 and odd x: b = (x - 1)/2, c = y, so that b(b + 1) = 3c^2.
std::pair<BigInt, BigInt> pell_to_quad(const PellSolution& s);

// Side-2 quadrilateral attached to a (b, c) pair: A, B at distance 2, D the
// apex with |DA| = |DB| = 2c, and C with |CB| = b, |CA| = b + 1, |CD| = c.
// Labeled as (ab, bc, cd, da; ac, bd) = (2, b, c, 2c; b + 1, 2c).
QuadDistances side2_family_quad(std::int64_t b, std::int64_t c);

}  // namespace dioph
