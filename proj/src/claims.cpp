#include "dioph/claims.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dioph {

const char* to_string(Verdict v) {
  return v == Verdict::HoldsUpToBound ? "HOLDS_UP_TO_BOUND" : "REFUTED";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Claim {
  ClaimInfo info;
  std::function<void(ClaimReport&, std::int64_t, int)> run;
};

SearchConfig quad_config(std::int64_t k, RoleFilter role, std::int64_t dmax, ShapeFilter shape, int threads) {
  SearchConfig c;
  c.k = k;
  c.role = role;
  c.dmax = dmax;
  c.shape = shape;
  c.threads = threads;
  return c;
}

// Runs the quad search and keeps the entries the predicate rejects.
std::function<void(ClaimReport&, std::int64_t, int)> quad_claim(
    std::function<SearchConfig(std::int64_t, int)> make,
    std::function<bool(const CatalogEntry&)> violates) {
  return [make, violates](ClaimReport& r, std::int64_t dmax, int threads) {
    r.config = make(dmax, threads);
    const auto res = enumerate_quads(r.config);
    r.visited = res.visited;
    for (const auto& e : res.entries) {
      if (violates(e)) r.witnesses.push_back(e);
    }
  };
}

std::function<void(ClaimReport&, std::int64_t, int)> pointset_claim(int n, std::int64_t k) {
  return [n, k](ClaimReport& r, std::int64_t dmax, int) {
    r.config = SearchConfig{};
    r.config.n = n;
    r.config.k = k;
    r.config.dmax = dmax;
    if (dmax < k) return;
    const auto res = enumerate_ngon_pointsets(n, k, dmax);
    r.visited = res.visited;
    r.pointset_witnesses = res.sets;
  };
}

std::string pairs_str(const std::vector<ApexPair>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << '(' << v[i].a << ',' << v[i].b << ')';
  os << '}';
  return os.str();
}

// Validated pairs must agree with the closed form; the note compares both
// against a reference listing.
std::function<void(ClaimReport&, std::int64_t, int)> collinear_claim(std::int64_t k, std::int64_t offset,
                                                                     std::vector<ApexPair> reference) {
  return [k, offset, reference](ClaimReport& r, std::int64_t amax, int) {
    r.config = SearchConfig{};
    r.config.k = k;
    r.config.dmax = amax;
    r.config.include_degenerate = true;
    const auto found = collinear_apex_pairs(k, offset, amax);
    const auto formula = collinear_formula_pairs(k, offset, amax);
    r.visited = 0;
    for (std::int64_t a = 1; a <= amax; ++a) r.visited += static_cast<std::uint64_t>(a * k * k);
    std::vector<ApexPair> diff;
    std::set_symmetric_difference(found.begin(), found.end(), formula.begin(), formula.end(),
                                  std::back_inserter(diff));
    r.pair_witnesses = diff;
    for (const auto& p : diff) r.witnesses.push_back(make_catalog_entry(collinear_apex_quad(k, offset, p), k));

    std::vector<ApexPair> in_range;
    for (const auto& p : reference) {
      if (p.a <= amax) in_range.push_back(p);
    }
    std::vector<ApexPair> missing, spurious;
    std::set_difference(found.begin(), found.end(), in_range.begin(), in_range.end(), std::back_inserter(missing));
    std::set_difference(in_range.begin(), in_range.end(), found.begin(), found.end(), std::back_inserter(spurious));
    std::ostringstream note;
    note << "validated " << pairs_str(found) << "; closed form " << pairs_str(formula) << "; reference list "
         << pairs_str(in_range);
    if (missing.empty() && spurious.empty()) {
      note << " agrees";
    } else {
      note << " disagrees: not realizable " << pairs_str(spurious) << ", unlisted " << pairs_str(missing);
    }
    r.note = note.str();
  };
}

bool has_distance(const QuadDistances& q, std::int64_t v) {
  const auto t = q.tuple();
  return std::find(t.begin(), t.end(), v) != t.end();
}

const std::vector<Claim>& registry() {
  static const std::vector<Claim> claims = [] {
    std::vector<Claim> c;
    c.push_back({{"NO_DISTANCE_ONE", "no quadrilateral has a side or diagonal of length 1"},
                 quad_claim([](std::int64_t d, int t) { return quad_config(1, RoleFilter::Any, d, ShapeFilter::Any, t); },
                            [](const CatalogEntry&) { return true; })});
    c.push_back({{"SIDE2_ALL_CYCLIC", "every convex quadrilateral with a side of length 2 is cyclic"},
                 quad_claim([](std::int64_t d, int t) { return quad_config(2, RoleFilter::Side, d, ShapeFilter::Convex, t); },
                            [](const CatalogEntry& e) { return !e.flags.cyclic; })});
    c.push_back({{"NO_CYCLIC_DIAGONAL_2", "no cyclic quadrilateral has a diagonal of length 2"},
                 quad_claim(
                     [](std::int64_t d, int t) {
                       auto cfg = quad_config(2, RoleFilter::Diagonal, d, ShapeFilter::Convex, t);
                       cfg.require_cyclic = true;
                       return cfg;
                     },
                     [](const CatalogEntry&) { return true; })});
    c.push_back({{"NO_TANGENTIAL_DIAGONAL_2", "no tangential quadrilateral has a diagonal of length 2"},
                 quad_claim(
                     [](std::int64_t d, int t) {
                       auto cfg = quad_config(2, RoleFilter::Diagonal, d, ShapeFilter::Convex, t);
                       cfg.require_tangential = true;
                       return cfg;
                     },
                     [](const CatalogEntry&) { return true; })});
    c.push_back({{"NO_SIDE2_PARALLELOGRAM", "no parallelogram has a side of length 2"},
                 quad_claim(
                     [](std::int64_t d, int t) {
                       auto cfg = quad_config(2, RoleFilter::Side, d, ShapeFilter::Convex, t);
                       cfg.require_trapezoid = true;
                       return cfg;
                     },
                     [](const CatalogEntry& e) { return e.flags.parallelogram; })});
    c.push_back({{"UNIQUE_SIDE2_TRAPEZOID", "the only trapezoid with a side of length 2 is (2,3,2,4;4,4)"},
                 quad_claim(
                     [](std::int64_t d, int t) {
                       auto cfg = quad_config(2, RoleFilter::Side, d, ShapeFilter::Convex, t);
                       cfg.require_trapezoid = true;
                       return cfg;
                     },
                     [](const CatalogEntry& e) { return e.canonical != QuadDistances{2, 3, 2, 4, 4, 4}; })});
    c.push_back({{"NO_TANGENTIAL_SIDE2_XIV",
                  "no tangential quadrilateral with a side of length 2 has the apex shape of the Pell family"},
                 quad_claim(
                     [](std::int64_t d, int t) {
                       auto cfg = quad_config(2, RoleFilter::Side, d, ShapeFilter::Convex, t);
                       cfg.require_tangential = true;
                       return cfg;
                     },
                     [](const CatalogEntry& e) { return side2_parameters(e.canonical).has_value(); })});
    c.push_back({{"SIDE2_PELL_RELATION",
                  "every convex quadrilateral with a side of length 2 has the Pell family shape with "
                  "(2b+1)^2 - 12c^2 = 1"},
                 quad_claim([](std::int64_t d, int t) { return quad_config(2, RoleFilter::Side, d, ShapeFilter::Convex, t); },
                            [](const CatalogEntry& e) {
                              const auto p = side2_parameters(e.canonical);
                              return !p || !satisfies_side2_pell(*p);
                            })});
    c.push_back({{"K3_BOUNDS", "quadrilaterals with a distance 3 exist and none of them has a distance 1"},
                 [](ClaimReport& r, std::int64_t dmax, int threads) {
                   r.config = quad_config(3, RoleFilter::Any, dmax, ShapeFilter::Any, threads);
                   if (dmax < 3) {
                     r.note = "no quadrilateral with a distance 3 up to bound";
                     return;
                   }
                   const auto res = enumerate_quads(r.config);
                   r.visited = res.visited;
                   for (const auto& e : res.entries) {
                     if (has_distance(e.canonical, 1)) r.witnesses.push_back(e);
                   }
                   if (res.entries.empty()) r.note = "no quadrilateral with a distance 3 up to bound";
                 }});
    c.push_back({{"NO_PENTAGON_DISTANCE_ONE", "no five-point integer distance set has a distance 1"},
                 pointset_claim(5, 1)});
    c.push_back({{"NO_PENTAGON_DISTANCE_2", "no five-point integer distance set has a distance 2"},
                 pointset_claim(5, 2)});
    c.push_back({{"NO_PENTAGON_DISTANCE_3", "no five-point integer distance set has a distance 3"},
                 pointset_claim(5, 3)});
    c.push_back({{"COLLINEAR_K3_OFFSET1",
                  "A on segment BD, |AB| = |BC| = a, |AC| = 3, |AD| = b, |CD| = b + 1: validated pairs match "
                  "b = 8a/(2a - 9)"},
                 collinear_claim(3, 1, {{5, 16}, {9, 8}})});
    c.push_back({{"COLLINEAR_K3_OFFSET2",
                  "A on segment BD, |AB| = |BC| = a, |AC| = 3, |AD| = b, |CD| = b + 2: validated pairs match "
                  "b = 5a/(4a - 9)"},
                 collinear_claim(3, 2, {{3, 2}, {5, 5}})});
    return c;
  }();
  return claims;
}

}  // namespace

const std::vector<ClaimInfo>& registered_claims() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> v;
    for (const auto& c : registry()) v.push_back(c.info);
    return v;
  }();
  return infos;
}

bool is_registered_claim(const std::string& id) {
  const auto& r = registry();
  return std::any_of(r.begin(), r.end(), [&](const Claim& c) { return c.info.id == id; });
}

ClaimReport verify_claim(const std::string& claim_id, std::int64_t dmax, int threads) {
  const auto& r = registry();
  const auto it = std::find_if(r.begin(), r.end(), [&](const Claim& c) { return c.info.id == claim_id; });
  if (it == r.end()) throw std::invalid_argument("unknown claim: " + claim_id);
  if (dmax < 1) throw std::invalid_argument("dmax must be >= 1");

  ClaimReport rep;
  rep.claim_id = claim_id;
  rep.statement = it->info.statement;
  const auto t0 = Clock::now();
  it->run(rep, dmax, threads);
  rep.elapsed = Clock::now() - t0;
  const bool refuted = !rep.witnesses.empty() || !rep.pointset_witnesses.empty() || !rep.pair_witnesses.empty() ||
                       (claim_id == "K3_BOUNDS" && !rep.note.empty());
  rep.verdict = refuted ? Verdict::Refuted : Verdict::HoldsUpToBound;
  return rep;
}

std::optional<Side2Parameters> side2_parameters(const QuadDistances& q) {
  std::array<int, 4> p{0, 1, 2, 3};
  std::optional<Side2Parameters> best;
  do {
    const int x = p[0], y = p[1], apex = p[2], m = p[3];
    if ((x - y + 4) % 4 != 1 && (y - x + 4) % 4 != 1) continue;  // XY must be a side
    if (q.between(x, y) != 2) continue;
    if (q.between(apex, x) != q.between(apex, y)) continue;
    const auto mx = q.between(m, x);
    const auto my = q.between(m, y);
    if (std::abs(mx - my) != 1) continue;
    const Side2Parameters cand{std::min(mx, my), q.between(m, apex)};
    if (!best || satisfies_side2_pell(cand)) best = cand;
    if (satisfies_side2_pell(cand)) return best;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

bool satisfies_side2_pell(const Side2Parameters& p) {
  const BigInt x = to_big(2 * p.b + 1);
  const BigInt y = to_big(p.c);
  return x * x - 12 * y * y == 1;
}

std::vector<ApexPair> collinear_formula_pairs(std::int64_t k, std::int64_t cd_offset, std::int64_t amax) {
  std::vector<ApexPair> out;
  for (std::int64_t a = 1; a <= amax; ++a) {
    if (2 * a <= k) continue;
    const std::int64_t num = a * (k * k - cd_offset * cd_offset);
    const std::int64_t den = 2 * a * cd_offset - k * k;
    if (den <= 0 || num <= 0 || num % den != 0) continue;
    out.push_back({a, num / den});
  }
  return out;
}

}  // namespace dioph
