#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dioph/model.hpp"
#include "dioph/surd.hpp"

namespace dioph {

enum class RoleFilter { Side, Diagonal, Any };
enum class ShapeFilter { Convex, Concave, Any };

const char* to_string(RoleFilter r);
const char* to_string(ShapeFilter s);

struct SearchConfig {
  int n = 4;
  std::int64_t k = 1;
  RoleFilter role = RoleFilter::Any;
  std::int64_t dmax = 10;  // bound on every pairwise distance, diagonals included
  ShapeFilter shape = ShapeFilter::Any;
  bool require_cyclic = false;
  bool require_tangential = false;
  bool require_trapezoid = false;
  // Also emit DegenerateCollinear labelings (only with shape Any, n = 4).
  bool include_degenerate = false;
  int threads = 1;
  // Stop after this many candidate tuples; 0 means unbounded.
  std::uint64_t budget = 0;

  friend bool operator==(const SearchConfig&, const SearchConfig&) = default;
};

// Throws std::invalid_argument naming the violated constraint.
void validate(const SearchConfig& cfg);

struct SearchResult {
  std::vector<CatalogEntry> entries;  // canonical, sorted, duplicate-free
  std::uint64_t visited = 0;          // candidate tuples that reached the planarity gate
  std::size_t partitions_done = 0;    // completed prefix of the partition list
  std::size_t partitions_total = 0;
  bool complete = true;  // false when the budget stopped the run early
};

struct SearchProgress {
  std::size_t partitions_done = 0;
  std::size_t partitions_total = 0;
  std::uint64_t visited = 0;
  const std::vector<CatalogEntry>* entries = nullptr;  // merged prefix
};

struct SearchHooks {
  // Called with the merged state of the completed partition prefix, at most
  // once per `progress_every` visited tuples, from a worker thread. Calls are
  // serialized and partitions_done is strictly increasing.
  std::function<void(const SearchProgress&)> on_progress;
  std::uint64_t progress_every = 0;
  // Skip the first resume->partitions_done partitions and seed the output
  // with resume->entries.
  const SearchResult* resume = nullptr;
};

// Every realizable labeled quadrilateral with all six distances <= dmax and
// the distance k in the requested role, classified, flagged and
// canonicalized. Requires cfg.n == 4. Output is independent of cfg.threads.
SearchResult enumerate_quads(const SearchConfig& cfg, const SearchHooks& hooks = {});

// Number of partitions enumerate_quads splits cfg into.
std::size_t quad_partition_count(const SearchConfig& cfg);

// n planar points, no three collinear, integer pairwise distances <= dmax,
// and some pair at distance exactly k.
struct PointSetRecord {
  int n = 0;
  // Upper triangle (row-major, i < j) of the canonical distance matrix: the
  // lexicographically least over all vertex orders.
  std::vector<std::int64_t> distances;
  std::int64_t radicand = 0;
  std::vector<Point> coords;  // embedding of the canonical vertex order
  friend bool operator==(const PointSetRecord&, const PointSetRecord&) = default;
};

struct PointSetResult {
  std::vector<PointSetRecord> sets;  // sorted by distances
  std::uint64_t visited = 0;
  bool complete = true;
};

// Supports 3 <= n <= 7; n >= 6 is exploratory (combinatorial growth).
PointSetResult enumerate_ngon_pointsets(int n, std::int64_t k, std::int64_t dmax,
                                        std::uint64_t budget = 0);

// Distance (i, j) of a record, i != j.
std::int64_t pointset_distance(const PointSetRecord& r, int i, int j);

// Degenerate configurations with A on segment BD, |AB| = |BC| = a, |AC| = k,
// |AD| = b and |CD| = b + cd_offset, validated by exact embedding. b ranges
// over 1 .. a*k*k (the cosine law forces b <= a*k^2).
struct ApexPair {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend auto operator<=>(const ApexPair&, const ApexPair&) = default;
};

std::vector<ApexPair> collinear_apex_pairs(std::int64_t k, std::int64_t cd_offset, std::int64_t amax);

// The labeled degenerate quadrilateral (B, A, C, D) behind an ApexPair.
QuadDistances collinear_apex_quad(std::int64_t k, std::int64_t cd_offset, const ApexPair& p);

}  // namespace dioph
