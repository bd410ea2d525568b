#include "dioph/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "dioph/exactgeom.hpp"
#include "dioph/triangles.hpp"

namespace dioph {

const char* to_string(RoleFilter r) {
  switch (r) {
    case RoleFilter::Side: return "side";
    case RoleFilter::Diagonal: return "diagonal";
    case RoleFilter::Any: return "any";
  }
  return "?";
}

const char* to_string(ShapeFilter s) {
  switch (s) {
    case ShapeFilter::Convex: return "convex";
    case ShapeFilter::Concave: return "concave";
    case ShapeFilter::Any: return "any";
  }
  return "?";
}

void validate(const SearchConfig& cfg) {
  const auto fail = [](const std::string& m) { throw std::invalid_argument(m); };
  if (cfg.n < 3 || cfg.n > 7) fail("n must be in 3..7");
  if (cfg.k < 1) fail("k must be >= 1");
  if (cfg.dmax < 1) fail("dmax must be >= 1");
  if (cfg.k > cfg.dmax) fail("k must not exceed dmax");
  if (cfg.threads < 1) fail("threads must be >= 1");
  const bool flags = cfg.require_cyclic || cfg.require_tangential || cfg.require_trapezoid;
  if (cfg.n != 4) {
    if (cfg.shape != ShapeFilter::Any || flags || cfg.role != RoleFilter::Any || cfg.include_degenerate) {
      fail("n != 4 is point-set mode: shape and role must be 'any' with no shape flags");
    }
  }
  if (cfg.include_degenerate && (cfg.shape != ShapeFilter::Any || flags)) {
    fail("degenerate configurations can only be requested with shape 'any' and no shape flags");
  }
  if ((cfg.require_cyclic || cfg.require_tangential) && cfg.shape == ShapeFilter::Concave) {
    fail("cyclic and tangential flags are only defined for convex labelings");
  }
}

namespace {

using i128 = __int128;

enum class FixedRole { SideAB, DiagonalAC };

struct Partition {
  FixedRole fixed;
  std::int64_t outer;
};

std::vector<Partition> partitions_of(const SearchConfig& cfg) {
  std::vector<Partition> out;
  const auto add = [&](FixedRole f) {
    for (std::int64_t v = 1; v <= cfg.dmax; ++v) out.push_back({f, v});
  };
  if (cfg.role != RoleFilter::Diagonal) add(FixedRole::SideAB);
  if (cfg.role != RoleFilter::Side) add(FixedRole::DiagonalAC);
  return out;
}

bool accept(const CatalogEntry& e, const SearchConfig& cfg) {
  const auto kind = e.cls.kind;
  if (kind == ConfigKind::DegenerateCollinear) return cfg.include_degenerate;
  if (!is_polygon(kind)) return false;
  if (cfg.shape == ShapeFilter::Convex && kind != ConfigKind::Convex) return false;
  if (cfg.shape == ShapeFilter::Concave && kind != ConfigKind::Concave) return false;
  if (cfg.require_cyclic && !e.flags.cyclic) return false;
  if (cfg.require_tangential && !e.flags.tangential) return false;
  if (cfg.require_trapezoid && !e.flags.trapezoid) return false;
  return true;
}

class PartitionWorker {
 public:
  explicit PartitionWorker(const SearchConfig& cfg)
      : cfg_(cfg),
        flat_(cfg.include_degenerate),
        convex_only_(cfg.shape == ShapeFilter::Convex || cfg.require_cyclic || cfg.require_tangential) {}

  std::uint64_t run(const Partition& p, std::vector<CatalogEntry>& out) {
    visited_ = 0;
    out_ = &out;
    if (p.fixed == FixedRole::SideAB) {
      side_case(p.outer);
    } else {
      diagonal_case(p.outer);
    }
    return visited_;
  }

 private:
  // Window for the third side of a face that contains the k edge.
  std::pair<std::int64_t, std::int64_t> k_window(std::int64_t other) const {
    auto [lo, hi] = third_side_window(cfg_.k, other, flat_);
    return {lo, std::min(hi, cfg_.dmax)};
  }

  // Range of the edge shared by two faces with side pairs (x1, y1), (x2, y2).
  std::pair<std::int64_t, std::int64_t> shared_range(std::int64_t x1, std::int64_t y1, std::int64_t x2,
                                                     std::int64_t y2) const {
    const std::int64_t s = flat_ ? 0 : 1;
    const std::int64_t lo = std::max({std::abs(x1 - y1) + s, std::abs(x2 - y2) + s, std::int64_t{1}});
    const std::int64_t hi = std::min({x1 + y1 - s, x2 + y2 - s, cfg_.dmax});
    return {lo, hi};
  }

  // ab = k, outer loop on ac.
  void side_case(std::int64_t ac) {
    const std::int64_t ab = cfg_.k;
    const auto [bc_lo, bc_hi] = k_window(ac);
    for (auto bc = bc_lo; bc <= bc_hi; ++bc) {
      for (std::int64_t da = 1; da <= cfg_.dmax; ++da) {
        const auto [bd_lo, bd_hi] = k_window(da);
        for (auto bd = bd_lo; bd <= bd_hi; ++bd) {
          const auto [cd_lo, cd_hi] = shared_range(ac, da, bc, bd);
          for (auto cd = cd_lo; cd <= cd_hi; ++cd) test({ab, bc, cd, da, ac, bd});
        }
      }
    }
  }

  // ac = k, outer loop on ab.
  void diagonal_case(std::int64_t ab) {
    const std::int64_t ac = cfg_.k;
    const auto [bc_lo, bc_hi] = k_window(ab);
    for (auto bc = bc_lo; bc <= bc_hi; ++bc) {
      for (std::int64_t da = 1; da <= cfg_.dmax; ++da) {
        const auto [cd_lo, cd_hi] = k_window(da);
        for (auto cd = cd_lo; cd <= cd_hi; ++cd) {
          const auto [bd_lo, bd_hi] = shared_range(ab, da, bc, cd);
          for (auto bd = bd_lo; bd <= bd_hi; ++bd) test({ab, bc, cd, da, ac, bd});
        }
      }
    }
  }

  void test(const QuadDistances& q) {
    if (convex_only_) {
      // Diagonal sums exceed opposite side sums in a convex quadrilateral.
      if (q.ac + q.bd <= q.ab + q.cd || q.ac + q.bd <= q.bc + q.da) return;
      // Ptolemy inequality.
      const i128 lhs = i128(q.ac) * q.bd;
      const i128 rhs = i128(q.ab) * q.cd + i128(q.bc) * q.da;
      if (lhs > rhs) return;
      if (cfg_.require_cyclic && lhs != rhs) return;
      if (cfg_.require_tangential && q.ab + q.cd != q.bc + q.da) return;
    }
    ++visited_;
    if (cm4_of(squared_tuple<i128>(q)) != 0) return;
    CatalogEntry e = make_catalog_entry(q, cfg_.k);
    if (accept(e, cfg_)) out_->push_back(std::move(e));
  }

  const SearchConfig& cfg_;
  bool flat_;
  bool convex_only_;
  std::uint64_t visited_ = 0;
  std::vector<CatalogEntry>* out_ = nullptr;
};

}  // namespace

std::size_t quad_partition_count(const SearchConfig& cfg) { return partitions_of(cfg).size(); }

SearchResult enumerate_quads(const SearchConfig& cfg, const SearchHooks& hooks) {
  validate(cfg);
  if (cfg.n != 4) throw std::invalid_argument("enumerate_quads requires n = 4");

  const auto parts = partitions_of(cfg);
  const std::size_t total = parts.size();
  std::size_t start = 0;
  std::map<QuadDistances, CatalogEntry> merged;
  std::uint64_t visited_prefix = 0;
  if (hooks.resume) {
    start = std::min(hooks.resume->partitions_done, total);
    visited_prefix = hooks.resume->visited;
    for (const auto& e : hooks.resume->entries) merged.emplace(e.canonical, e);
  }

  std::vector<std::vector<CatalogEntry>> found(total);
  std::vector<std::uint64_t> unit_visited(total, 0);
  std::vector<char> done(total, 0);
  std::size_t prefix = start;
  std::uint64_t since_progress = 0;
  std::mutex mu;
  std::atomic<std::size_t> next{start};
  std::atomic<std::uint64_t> visited_total{visited_prefix};

  const auto flatten = [&] {
    std::vector<CatalogEntry> v;
    v.reserve(merged.size());
    for (const auto& [key, e] : merged) v.push_back(e);
    return v;
  };

  // Caller holds mu.
  const auto advance_prefix = [&] {
    while (prefix < total && done[prefix]) {
      for (auto& e : found[prefix]) merged.emplace(e.canonical, std::move(e));
      found[prefix].clear();
      visited_prefix += unit_visited[prefix];
      since_progress += unit_visited[prefix];
      ++prefix;
    }
    if (hooks.on_progress && hooks.progress_every > 0 && since_progress >= hooks.progress_every) {
      since_progress = 0;
      const auto snapshot = flatten();
      hooks.on_progress({prefix, total, visited_prefix, &snapshot});
    }
  };

  const auto worker = [&] {
    PartitionWorker w(cfg);
    for (;;) {
      if (cfg.budget > 0 && visited_total.load() >= cfg.budget) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= total) return;
      std::vector<CatalogEntry> local;
      const std::uint64_t v = w.run(parts[i], local);
      visited_total.fetch_add(v);
      std::lock_guard lock(mu);
      found[i] = std::move(local);
      unit_visited[i] = v;
      done[i] = 1;
      advance_prefix();
    }
  };

  const int nthreads = std::max(1, std::min<int>(cfg.threads, static_cast<int>(total - start)));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SearchResult r;
  r.entries = flatten();
  r.visited = visited_prefix;
  r.partitions_done = prefix;
  r.partitions_total = total;
  r.complete = prefix == total;
  return r;
}

std::vector<ApexPair> collinear_apex_pairs(std::int64_t k, std::int64_t cd_offset, std::int64_t amax) {
  if (k < 1 || cd_offset < 1) throw std::invalid_argument("collinear_apex_pairs: k and offset must be positive");
  std::vector<ApexPair> out;
  for (std::int64_t a = 1; a <= amax; ++a) {
    if (2 * a <= k) continue;  // triangle B, A, C with sides a, a, k must be proper
    for (std::int64_t b = 1; b <= a * k * k; ++b) {
      const ApexPair p{a, b};
      const QuadDistances q = collinear_apex_quad(k, cd_offset, p);
      if (cm4_of(squared_tuple<i128>(q)) != 0) continue;
      const auto c = classify(q);
      // Only B, A, D may be collinear; the configuration must still embed.
      if (c.kind == ConfigKind::DegenerateCollinear && c.detail == "ABD" &&
          std::holds_alternative<PlanarEmbedding>(embed(q))) {
        out.push_back(p);
      }
    }
  }
  return out;
}

QuadDistances collinear_apex_quad(std::int64_t k, std::int64_t cd_offset, const ApexPair& p) {
  // Vertex order (B, A, C, D): ab = |BA|, bc = |AC|, cd = |CD|, da = |DB|,
  // ac = |BC|, bd = |AD|.
  return {p.a, k, p.b + cd_offset, p.a + p.b, p.a, p.b};
}

}  // namespace dioph
