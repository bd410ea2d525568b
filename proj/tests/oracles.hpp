#pragma once

// Slow reference implementations used as test oracles. None of them share
// code paths with the pruned library routines they check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "dioph/model.hpp"
#include "dioph/search.hpp"

namespace oracle {

using dioph::BigInt;

// Determinant of the bordered 5x5 Cayley-Menger matrix by fraction-free
// Bareiss elimination with row pivoting.
inline BigInt cayley_menger_det(const std::array<BigInt, 6>& sq) {
  // Tuple order (ab, bc, cd, da, ac, bd) -> symmetric matrix on A, B, C, D.
  BigInt d[4][4];
  const int idx[6][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}};
  for (int i = 0; i < 4; ++i) d[i][i] = 0;
  for (int e = 0; e < 6; ++e) {
    d[idx[e][0]][idx[e][1]] = sq[e];
    d[idx[e][1]][idx[e][0]] = sq[e];
  }
  BigInt m[5][5];
  m[0][0] = 0;
  for (int i = 1; i < 5; ++i) {
    m[0][i] = 1;
    m[i][0] = 1;
    for (int j = 1; j < 5; ++j) m[i][j] = d[i - 1][j - 1];
  }
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < 4; ++k) {
    if (m[k][k] == 0) {
      int p = k + 1;
      while (p < 5 && m[p][k] == 0) ++p;
      if (p == 5) return 0;
      for (int j = 0; j < 5; ++j) std::swap(m[k][j], m[p][j]);
      sign = -sign;
    }
    for (int i = k + 1; i < 5; ++i) {
      for (int j = k + 1; j < 5; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[4][4];
}

inline std::array<BigInt, 6> squares(const dioph::QuadDistances& q) {
  std::array<BigInt, 6> out;
  const auto t = q.tuple();
  for (int i = 0; i < 6; ++i) out[i] = dioph::to_big(t[i]) * dioph::to_big(t[i]);
  return out;
}

// All b >= 1 with a strict triangle (k, a, b), by scanning b = 1 .. a + k.
inline std::set<std::int64_t> third_sides(std::int64_t k, std::int64_t a) {
  std::set<std::int64_t> out;
  for (std::int64_t b = 1; b <= a + k + 1; ++b) {
    if (k + a > b && k + b > a && a + b > k) out.insert(b);
  }
  return out;
}

struct NaiveFilter {
  std::int64_t k = 1;
  dioph::RoleFilter role = dioph::RoleFilter::Any;
  std::int64_t dmax = 1;
  dioph::ShapeFilter shape = dioph::ShapeFilter::Any;
  bool cyclic = false;
  bool tangential = false;
  bool trapezoid = false;
  bool degenerate = false;
};

// Six nested loops over [1, dmax]^6 with no pruning; every tuple goes
// through classify and the shape predicates.
inline std::set<dioph::QuadDistances> naive_quads(const NaiveFilter& f) {
  using namespace dioph;
  std::set<QuadDistances> out;
  const std::int64_t n = f.dmax;
  for (std::int64_t ab = 1; ab <= n; ++ab)
    for (std::int64_t bc = 1; bc <= n; ++bc)
      for (std::int64_t cd = 1; cd <= n; ++cd)
        for (std::int64_t da = 1; da <= n; ++da)
          for (std::int64_t ac = 1; ac <= n; ++ac)
            for (std::int64_t bd = 1; bd <= n; ++bd) {
              const bool side = ab == f.k || bc == f.k || cd == f.k || da == f.k;
              const bool diag = ac == f.k || bd == f.k;
              if (f.role == RoleFilter::Side && !side) continue;
              if (f.role == RoleFilter::Diagonal && !diag) continue;
              if (!side && !diag) continue;
              const QuadDistances q{ab, bc, cd, da, ac, bd};
              const auto kind = classify(q).kind;
              bool keep = kind == ConfigKind::Convex || kind == ConfigKind::Concave ||
                          (f.degenerate && kind == ConfigKind::DegenerateCollinear);
              if (!keep) continue;
              if (f.shape == ShapeFilter::Convex && kind != ConfigKind::Convex) continue;
              if (f.shape == ShapeFilter::Concave && kind != ConfigKind::Concave) continue;
              if (f.cyclic && !(kind == ConfigKind::Convex && is_cyclic(q))) continue;
              if (f.tangential && !(kind == ConfigKind::Convex && is_tangential(q))) continue;
              if (f.trapezoid && is_trapezoid(q) == ParallelSides::None) continue;
              out.insert(canonical_form(q));
            }
  return out;
}

inline std::set<dioph::QuadDistances> keys(const std::vector<dioph::CatalogEntry>& entries) {
  std::set<dioph::QuadDistances> out;
  for (const auto& e : entries) out.insert(e.canonical);
  return out;
}

// The b in a collinear apex configuration follows from the cosine law:
// b * (2a*off - k^2) = a * (k^2 - off^2). Scan divisors of the right side.
inline std::vector<dioph::ApexPair> collinear_by_divisors(std::int64_t k, std::int64_t off, std::int64_t amax) {
  std::vector<dioph::ApexPair> out;
  for (std::int64_t a = 1; a <= amax; ++a) {
    if (2 * a <= k) continue;
    const std::int64_t den = 2 * a * off - k * k;
    const std::int64_t num = a * (k * k - off * off);
    if (den <= 0 || num <= 0) continue;
    for (std::int64_t b = 1; b * den <= num; ++b) {
      if (b * den == num) out.push_back({a, b});
    }
  }
  return out;
}

}  // namespace oracle
