#include "dioph/model.hpp"

#include <algorithm>
#include <optional>

namespace dioph {

namespace {

using i128 = __int128;

std::string face_name(const std::array<int, 3>& f) {
  return {kVertexNames[f[0]], kVertexNames[f[1]], kVertexNames[f[2]]};
}

i128 face_cm3(const QuadDistances& q, const std::array<int, 3>& f) {
  const i128 x = q.between(f[0], f[1]);
  const i128 y = q.between(f[1], f[2]);
  const i128 z = q.between(f[0], f[2]);
  return cm3_of<i128>(x * x, y * y, z * z);
}

int orient(const std::array<Point, 4>& p, int i, int j, int k) {
  return sign_of(orientation(p[i], p[j], p[k]));
}

ConfigClass classify_impl(const QuadDistances& q, std::optional<PlanarEmbedding>* out) {
  for (const auto& f : kFaces) {
    if (!triangle_ok(q.between(f[0], f[1]), q.between(f[1], f[2]), q.between(f[0], f[2]))) {
      return {ConfigKind::NonMetric, face_name(f)};
    }
  }
  if (cm4_of(squared_tuple<i128>(q)) != 0) return {ConfigKind::NonPlanar, ""};

  auto result = embed(q);
  if (auto* bad = std::get_if<NotRealizable>(&result)) {
    // Unreachable after the two checks above; surface it rather than guess.
    return {ConfigKind::NonPlanar, bad->detail};
  }
  const auto& e = std::get<PlanarEmbedding>(result);
  if (out) *out = e;

  for (const auto& f : kFaces) {
    if (face_cm3(q, f) == 0) return {ConfigKind::DegenerateCollinear, face_name(f)};
  }

  const auto& p = e.points;
  // Diagonals AC and BD cross iff each separates the endpoints of the other.
  if (orient(p, 0, 2, 1) * orient(p, 0, 2, 3) < 0 && orient(p, 1, 3, 0) * orient(p, 1, 3, 2) < 0) {
    return {ConfigKind::Convex, ""};
  }
  for (int inner = 0; inner < 4; ++inner) {
    std::array<int, 3> t{};
    int n = 0;
    for (int v = 0; v < 4; ++v) {
      if (v != inner) t[n++] = v;
    }
    const int whole = orient(p, t[0], t[1], t[2]);
    if (orient(p, t[0], t[1], inner) == whole && orient(p, t[1], t[2], inner) == whole &&
        orient(p, t[2], t[0], inner) == whole) {
      return {ConfigKind::Concave, std::string(1, kVertexNames[inner])};
    }
  }
  return {ConfigKind::Crossed, ""};
}

bool ptolemy_equal(const QuadDistances& q) {
  return i128(q.ac) * q.bd == i128(q.ab) * q.cd + i128(q.bc) * q.da;
}

bool pitot_equal(const QuadDistances& q) { return q.ab + q.cd == q.bc + q.da; }

ParallelSides parallel_sides(const std::array<Point, 4>& p) {
  const auto cross = [&](int a0, int a1, int b0, int b1) {
    const Surd ux = p[a1].x - p[a0].x;
    const Surd uy = p[a1].y - p[a0].y;
    const Surd vx = p[b1].x - p[b0].x;
    const Surd vy = p[b1].y - p[b0].y;
    return sign_of(ux * vy - uy * vx);
  };
  const bool bc_ad = cross(1, 2, 0, 3) == 0;
  const bool ab_cd = cross(0, 1, 2, 3) == 0;
  if (bc_ad && ab_cd) return ParallelSides::Parallelogram;
  if (bc_ad) return ParallelSides::PairBcAd;
  if (ab_cd) return ParallelSides::PairAbCd;
  return ParallelSides::None;
}

void require_kind(const QuadDistances& q, bool allow_concave, const char* what) {
  const auto c = classify(q);
  if (c.kind == ConfigKind::Convex || (allow_concave && c.kind == ConfigKind::Concave)) return;
  throw PreconditionError(std::string(what) + ": " + q.str() + " is " + to_string(c.kind));
}

TrapezoidMeasure measure(const QuadDistances& q) {
  const auto sq = [](std::int64_t v) { return Rat(v) * Rat(v); };
  return {sq(q.ab), sq(q.cd), sq(q.ac), sq(q.bd), Rat(q.bc), Rat(q.da)};
}

}  // namespace

const char* to_string(ConfigKind k) {
  switch (k) {
    case ConfigKind::NonMetric: return "NonMetric";
    case ConfigKind::NonPlanar: return "NonPlanar";
    case ConfigKind::DegenerateCollinear: return "DegenerateCollinear";
    case ConfigKind::Convex: return "Convex";
    case ConfigKind::Concave: return "Concave";
    case ConfigKind::Crossed: return "Crossed";
  }
  return "?";
}

const char* to_string(ParallelSides p) {
  switch (p) {
    case ParallelSides::None: return "none";
    case ParallelSides::PairBcAd: return "pair_BC_AD";
    case ParallelSides::PairAbCd: return "pair_AB_CD";
    case ParallelSides::Parallelogram: return "parallelogram";
  }
  return "?";
}

const char* to_string(DistanceRole r) { return r == DistanceRole::Side ? "side" : "diagonal"; }

ConfigClass classify(const QuadDistances& q) { return classify_impl(q, nullptr); }

bool is_polygon(ConfigKind k) { return k == ConfigKind::Convex || k == ConfigKind::Concave; }

QuadDistances relabel(const QuadDistances& q, const std::array<int, 4>& o) {
  return {q.between(o[0], o[1]), q.between(o[1], o[2]), q.between(o[2], o[3]),
          q.between(o[3], o[0]), q.between(o[0], o[2]), q.between(o[1], o[3])};
}

QuadDistances canonical_form(const QuadDistances& q) {
  QuadDistances best = q;
  for (const auto& o : kDihedralOrders) best = std::min(best, relabel(q, o));
  return best;
}

bool is_cyclic(const QuadDistances& q) {
  require_kind(q, false, "is_cyclic");
  return ptolemy_equal(q);
}

bool is_tangential(const QuadDistances& q) {
  require_kind(q, false, "is_tangential");
  return pitot_equal(q);
}

ParallelSides is_trapezoid(const QuadDistances& q) {
  std::optional<PlanarEmbedding> e;
  const auto c = classify_impl(q, &e);
  if (!is_polygon(c.kind)) {
    throw PreconditionError("is_trapezoid: " + q.str() + " is " + to_string(c.kind));
  }
  return parallel_sides(e->points);
}

Rat trapezoid_diagonal_identity(const TrapezoidMeasure& m) {
  return m.ac_sq + m.bd_sq - m.ab_sq - m.cd_sq - Rat(2) * m.bc * m.da;
}

Rat trapezoid_product_identity(const TrapezoidMeasure& m) {
  return (m.da + m.bc) * (m.ab_sq - m.cd_sq) - (m.da - m.bc) * (m.ac_sq - m.bd_sq);
}

Rat trapezoid_diagonal_identity(const QuadDistances& q) {
  const auto p = is_trapezoid(q);
  if (p != ParallelSides::PairBcAd && p != ParallelSides::Parallelogram) {
    throw PreconditionError("trapezoid_diagonal_identity: BC is not parallel to AD in " + q.str());
  }
  return trapezoid_diagonal_identity(measure(q));
}

Rat trapezoid_product_identity(const QuadDistances& q) {
  const auto p = is_trapezoid(q);
  if (p == ParallelSides::None) {
    throw PreconditionError("trapezoid_product_identity: no parallel sides in " + q.str());
  }
  // Rotating by one vertex maps AB || CD onto BC || AD.
  const QuadDistances r = p == ParallelSides::PairAbCd ? relabel(q, {1, 2, 3, 0}) : q;
  return trapezoid_product_identity(measure(r));
}

std::vector<KRole> roles_of(const QuadDistances& q, std::int64_t k) {
  std::vector<KRole> out;
  if (q.ab == k || q.bc == k || q.cd == k || q.da == k) out.push_back({k, DistanceRole::Side});
  if (q.ac == k || q.bd == k) out.push_back({k, DistanceRole::Diagonal});
  return out;
}

CatalogEntry make_catalog_entry(const QuadDistances& q, std::int64_t k) {
  CatalogEntry e;
  e.canonical = canonical_form(q);
  std::optional<PlanarEmbedding> emb;
  e.cls = classify_impl(e.canonical, &emb);
  e.k_roles = roles_of(e.canonical, k);
  if (!emb) return e;
  e.radicand = emb->radicand;
  e.coords = emb->points;
  if (e.cls.kind == ConfigKind::Convex) {
    e.flags.cyclic = ptolemy_equal(e.canonical);
    e.flags.tangential = pitot_equal(e.canonical);
  }
  if (is_polygon(e.cls.kind)) {
    const auto p = parallel_sides(emb->points);
    e.flags.trapezoid = p != ParallelSides::None;
    e.flags.parallelogram = p == ParallelSides::Parallelogram;
  }
  return e;
}

}  // namespace dioph
