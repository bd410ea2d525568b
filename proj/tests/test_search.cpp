#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "dioph/search.hpp"
#include "dioph/triangles.hpp"
#include "oracles.hpp"

using namespace dioph;

namespace {

SearchConfig cfg_of(std::int64_t k, RoleFilter role, std::int64_t dmax, ShapeFilter shape = ShapeFilter::Any) {
  SearchConfig c;
  c.k = k;
  c.role = role;
  c.dmax = dmax;
  c.shape = shape;
  return c;
}

oracle::NaiveFilter naive_of(const SearchConfig& c) {
  return {c.k, c.role, c.dmax, c.shape, c.require_cyclic, c.require_tangential, c.require_trapezoid,
          c.include_degenerate};
}

}  // namespace

TEST_CASE("pruned search equals the naive enumeration") {
  std::vector<SearchConfig> cfgs;
  for (std::int64_t k = 1; k <= 4; ++k) {
    for (auto role : {RoleFilter::Side, RoleFilter::Diagonal, RoleFilter::Any}) cfgs.push_back(cfg_of(k, role, 6));
  }
  auto c = cfg_of(2, RoleFilter::Any, 6);
  c.include_degenerate = true;
  cfgs.push_back(c);
  c = cfg_of(3, RoleFilter::Any, 6, ShapeFilter::Convex);
  c.require_cyclic = true;
  cfgs.push_back(c);
  c = cfg_of(3, RoleFilter::Side, 6, ShapeFilter::Concave);
  cfgs.push_back(c);
  c = cfg_of(3, RoleFilter::Any, 6, ShapeFilter::Convex);
  c.require_tangential = true;
  cfgs.push_back(c);
  c = cfg_of(3, RoleFilter::Any, 6);
  c.require_trapezoid = true;
  cfgs.push_back(c);
  for (const auto& cfg : cfgs) {
    CAPTURE(cfg.k);
    CAPTURE(to_string(cfg.role));
    CHECK(oracle::keys(enumerate_quads(cfg).entries) == oracle::naive_quads(naive_of(cfg)));
  }
}

TEST_CASE("reference catalogs") {
  CHECK(enumerate_quads(cfg_of(1, RoleFilter::Any, 15)).entries.empty());
  const auto side2 = enumerate_quads(cfg_of(2, RoleFilter::Side, 8, ShapeFilter::Convex)).entries;
  REQUIRE(side2.size() == 1);
  CHECK(side2[0].canonical == QuadDistances{2, 3, 2, 4, 4, 4});
  auto c = cfg_of(2, RoleFilter::Diagonal, 12, ShapeFilter::Convex);
  c.require_cyclic = true;
  CHECK(enumerate_quads(c).entries.empty());
}

TEST_CASE("output is sorted, canonical and revalidates") {
  auto c = cfg_of(3, RoleFilter::Any, 14);
  c.include_degenerate = true;
  const auto entries = enumerate_quads(c).entries;
  REQUIRE(!entries.empty());
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) CHECK(entries[i].canonical < entries[i + 1].canonical);
  for (const auto& e : entries) {
    CHECK(canonical_form(e.canonical) == e.canonical);
    CHECK(make_catalog_entry(e.canonical, 3) == e);
    CHECK(classify(e.canonical) == e.cls);
    const auto t = e.canonical.tuple();
    CHECK(*std::max_element(t.begin(), t.end()) <= 14);
    CHECK(std::find(t.begin(), t.end(), 3) != t.end());
  }
}

TEST_CASE("results grow monotonically with dmax") {
  for (std::int64_t k = 2; k <= 3; ++k) {
    std::set<QuadDistances> prev;
    for (std::int64_t d = k; d <= 16; ++d) {
      const auto cur = oracle::keys(enumerate_quads(cfg_of(k, RoleFilter::Any, d)).entries);
      CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
      prev = cur;
    }
  }
}

TEST_CASE("thread count does not change the output") {
  auto base = cfg_of(3, RoleFilter::Any, 18);
  const auto one = enumerate_quads(base);
  for (int t : {2, 4, 8}) {
    base.threads = t;
    const auto many = enumerate_quads(base);
    CHECK(many.entries == one.entries);
    CHECK(many.visited == one.visited);
  }
}

TEST_CASE("configuration errors") {
  SearchConfig c;
  c.k = 0;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = cfg_of(5, RoleFilter::Any, 4);
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = cfg_of(2, RoleFilter::Any, 8);
  c.n = 5;
  c.shape = ShapeFilter::Convex;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = cfg_of(2, RoleFilter::Any, 8, ShapeFilter::Concave);
  c.require_cyclic = true;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = cfg_of(2, RoleFilter::Any, 8, ShapeFilter::Convex);
  c.include_degenerate = true;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = cfg_of(2, RoleFilter::Any, 8);
  c.n = 5;
  CHECK_THROWS_AS(enumerate_quads(c), std::invalid_argument);
}

TEST_CASE("budget yields a marked partial result") {
  auto c = cfg_of(3, RoleFilter::Any, 20);
  const auto full = enumerate_quads(c);
  CHECK(full.complete);
  c.budget = full.visited / 3;
  const auto part = enumerate_quads(c);
  CHECK_FALSE(part.complete);
  CHECK(part.partitions_done < part.partitions_total);
  const auto fk = oracle::keys(full.entries);
  const auto pk = oracle::keys(part.entries);
  CHECK(std::includes(fk.begin(), fk.end(), pk.begin(), pk.end()));
}

TEST_CASE("resuming from a progress snapshot reproduces the full run") {
  auto c = cfg_of(3, RoleFilter::Any, 16);
  c.threads = 3;
  const auto full = enumerate_quads(c);
  std::vector<SearchResult> snaps;
  SearchHooks hooks;
  hooks.progress_every = 500;
  hooks.on_progress = [&](const SearchProgress& p) {
    if (!snaps.empty()) CHECK(p.partitions_done > snaps.back().partitions_done);
    SearchResult s;
    s.entries = *p.entries;
    s.visited = p.visited;
    s.partitions_done = p.partitions_done;
    snaps.push_back(s);
  };
  const auto watched = enumerate_quads(c, hooks);
  CHECK(watched.entries == full.entries);
  REQUIRE(snaps.size() >= 2);
  for (const auto& snap : {snaps.front(), snaps[snaps.size() / 2]}) {
    SearchHooks resume;
    resume.resume = &snap;
    const auto r = enumerate_quads(c, resume);
    CHECK(r.entries == full.entries);
    CHECK(r.visited == full.visited);
    CHECK(r.complete);
  }
}

TEST_CASE("point sets of four points match the quadrilateral catalog") {
  for (std::int64_t k = 2; k <= 4; ++k) {
    const std::int64_t dmax = 14;
    std::set<std::vector<std::int64_t>> from_quads;
    for (const auto& e : enumerate_quads(cfg_of(k, RoleFilter::Any, dmax)).entries) {
      std::array<int, 4> p{0, 1, 2, 3};
      std::vector<std::int64_t> best;
      do {
        std::vector<std::int64_t> t;
        for (int i = 0; i < 4; ++i) {
          for (int j = i + 1; j < 4; ++j) t.push_back(e.canonical.between(p[i], p[j]));
        }
        if (best.empty() || t < best) best = t;
      } while (std::next_permutation(p.begin(), p.end()));
      from_quads.insert(best);
    }
    std::set<std::vector<std::int64_t>> from_sets;
    for (const auto& s : enumerate_ngon_pointsets(4, k, dmax).sets) from_sets.insert(s.distances);
    CHECK(from_sets == from_quads);
  }
}

TEST_CASE("point sets of three points are the triangles") {
  for (std::int64_t k = 1; k <= 5; ++k) {
    const auto sets = enumerate_ngon_pointsets(3, k, 20).sets;
    std::size_t expected = 0;
    for (const auto& t : enumerate_triangles(k, 20)) {
      if (t[2] <= 20) ++expected;
    }
    CHECK(sets.size() == expected);
  }
}

TEST_CASE("five-point sets") {
  CHECK(enumerate_ngon_pointsets(5, 1, 10).sets.empty());
  CHECK(enumerate_ngon_pointsets(5, 2, 10).sets.empty());
  // With a distance 3 and every distance at most 8 there is exactly one set.
  const auto k3 = enumerate_ngon_pointsets(5, 3, 8);
  REQUIRE(k3.sets.size() == 1);
  const auto& s = k3.sets[0];
  CHECK(s.distances == std::vector<std::int64_t>{3, 5, 7, 7, 7, 5, 8, 8, 3, 7});
  CHECK(s.radicand == 3);
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      const auto d = pointset_distance(s, i, j);
      CHECK(squared_distance(s.coords[i], s.coords[j]) == Surd(Rat(d * d)));
      for (int l = j + 1; l < 5; ++l) CHECK(orientation(s.coords[i], s.coords[j], s.coords[l]).sign() != 0);
    }
  }
  CHECK_THROWS_AS(enumerate_ngon_pointsets(8, 3, 8), std::invalid_argument);
  const auto partial = enumerate_ngon_pointsets(5, 3, 12, 50);
  CHECK_FALSE(partial.complete);
}

TEST_CASE("collinear apex pairs agree with the divisor scan") {
  CHECK(collinear_apex_pairs(3, 1, 100) == std::vector<ApexPair>{{5, 40}, {6, 16}, {9, 8}});
  CHECK(collinear_apex_pairs(3, 2, 100) == std::vector<ApexPair>{{3, 5}, {6, 2}});
  for (std::int64_t k = 2; k <= 6; ++k) {
    for (std::int64_t off = 1; off < k; ++off) {
      CAPTURE(k);
      CAPTURE(off);
      CHECK(collinear_apex_pairs(k, off, 60) == oracle::collinear_by_divisors(k, off, 60));
    }
  }
  for (const auto& p : collinear_apex_pairs(3, 1, 100)) {
    const auto q = collinear_apex_quad(3, 1, p);
    CHECK(oracle::cayley_menger_det(oracle::squares(q)) == 0);
    CHECK(classify(q).kind == ConfigKind::DegenerateCollinear);
  }
}
