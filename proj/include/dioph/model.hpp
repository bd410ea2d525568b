#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dioph/exactgeom.hpp"
#include "dioph/quad_distances.hpp"
#include "dioph/rat.hpp"
#include "dioph/surd.hpp"

namespace dioph {

// Raised when a shape predicate is called on a configuration outside its
// domain (e.g. the Ptolemy test on a non-convex labeling).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class ConfigKind {
  NonMetric,            // some face violates the triangle inequality
  NonPlanar,            // metric, but the Cayley-Menger determinant is non-zero
  DegenerateCollinear,  // planar with three collinear points
  Convex,               // convex position, A->B->C->D in hull order
  Concave,              // one point strictly inside the triangle of the others
  Crossed,              // convex position, but A->B->C->D self-intersects
};

struct ConfigClass {
  ConfigKind kind = ConfigKind::NonMetric;
  // Failing face ("ACD"), collinear triple ("ABD") or interior vertex ("C").
  std::string detail;
  friend bool operator==(const ConfigClass&, const ConfigClass&) = default;
};

const char* to_string(ConfigKind k);

ConfigClass classify(const QuadDistances& q);

bool is_polygon(ConfigKind k);  // Convex or Concave

// Relabeling: vertex i of the result is vertex order[i] of q.
QuadDistances relabel(const QuadDistances& q, const std::array<int, 4>& order);

// The eight vertex orders preserving the 4-cycle A-B-C-D (rotations first).
inline constexpr std::array<std::array<int, 4>, 8> kDihedralOrders{{
    {0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2},
    {0, 3, 2, 1}, {3, 2, 1, 0}, {2, 1, 0, 3}, {1, 0, 3, 2},
}};

// Lexicographically least tuple (ab, bc, cd, da, ac, bd) over the dihedral orbit.
QuadDistances canonical_form(const QuadDistances& q);

// Ptolemy equality ac*bd == ab*cd + bc*da. Requires a Convex labeling.
bool is_cyclic(const QuadDistances& q);

// Pitot equality ab + cd == bc + da. Requires a Convex labeling.
bool is_tangential(const QuadDistances& q);

enum class ParallelSides { None, PairBcAd, PairAbCd, Parallelogram };

const char* to_string(ParallelSides p);

// Exact parallelism of opposite sides read off the embedding. Requires a
// Convex or Concave labeling.
ParallelSides is_trapezoid(const QuadDistances& q);

// Side and diagonal data of a quadrilateral with BC parallel to AD. Only the
// parallel sides enter unsquared, so rational-coordinate trapezoids can be
// measured exactly.
struct TrapezoidMeasure {
  Rat ab_sq;
  Rat cd_sq;
  Rat ac_sq;
  Rat bd_sq;
  Rat bc;
  Rat da;
};

// ac^2 + bd^2 - ab^2 - cd^2 - 2*bc*da; zero for every trapezoid with BC || AD.
Rat trapezoid_diagonal_identity(const TrapezoidMeasure& m);

// (da + bc)(ab^2 - cd^2) - (da - bc)(ac^2 - bd^2); zero for every trapezoid
// and parallelogram with BC || AD.
Rat trapezoid_product_identity(const TrapezoidMeasure& m);

// Integer versions. The diagonal identity requires BC || AD; the product
// identity accepts either parallel pair and rotates the labels so that the
// parallel pair becomes BC, AD.
Rat trapezoid_diagonal_identity(const QuadDistances& q);
Rat trapezoid_product_identity(const QuadDistances& q);

struct ShapeFlags {
  bool cyclic = false;
  bool tangential = false;
  bool trapezoid = false;
  bool parallelogram = false;
  friend bool operator==(const ShapeFlags&, const ShapeFlags&) = default;
};

enum class DistanceRole { Side, Diagonal };

const char* to_string(DistanceRole r);

struct KRole {
  std::int64_t k = 0;
  DistanceRole role = DistanceRole::Side;
  friend bool operator==(const KRole&, const KRole&) = default;
};

struct CatalogEntry {
  QuadDistances canonical;
  ConfigClass cls;
  ShapeFlags flags;
  std::vector<KRole> k_roles;
  std::int64_t radicand = 0;
  std::array<Point, 4> coords;  // exact embedding of the canonical labeling
  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

// Canonicalizes q, classifies it and fills flags, coordinates and the roles
// in which the distance k occurs. Non-realizable input yields an entry with
// empty coordinates and all flags false.
CatalogEntry make_catalog_entry(const QuadDistances& q, std::int64_t k);

// Roles in which the value k occurs in q (side first).
std::vector<KRole> roles_of(const QuadDistances& q, std::int64_t k);

}  // namespace dioph
