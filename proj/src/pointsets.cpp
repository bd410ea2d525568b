#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "dioph/exactgeom.hpp"
#include "dioph/search.hpp"
#include "dioph/triangles.hpp"

namespace dioph {

namespace {

using i128 = __int128;

// A point placed against the base A = (0,0), B = (k,0), scaled by 2k:
// x = X / (2k), y = R * sqrt(s) / (2k).
struct Candidate {
  std::int64_t to_a;
  std::int64_t to_b;
  i128 X;
  i128 R;
};

struct Group {
  std::uint64_t radicand;
  std::vector<Candidate> cands;
  std::vector<std::vector<std::int64_t>> dist;  // 0 = incompatible
};

class CliqueSearch {
 public:
  CliqueSearch(int n, std::int64_t k, std::int64_t dmax, std::uint64_t budget)
      : n_(n), k_(k), dmax_(dmax), budget_(budget) {}

  PointSetResult run() {
    std::map<std::uint64_t, std::vector<Candidate>> by_radicand;
    for (std::int64_t u = 1; u <= dmax_; ++u) {
      const auto [lo, hi] = third_side_window(k_, u);
      for (auto v = lo; v <= std::min(hi, dmax_); ++v) {
        const i128 area = cm3_of<i128>(i128(k_) * k_, i128(u) * u, i128(v) * v);
        const auto split = squarefree_split(static_cast<std::uint64_t>(area));
        const i128 X = i128(k_) * k_ + i128(u) * u - i128(v) * v;
        const i128 R = split.root;
        by_radicand[split.core].push_back({u, v, X, R});
        by_radicand[split.core].push_back({u, v, X, -R});
      }
    }
    for (auto& [s, cands] : by_radicand) {
      if (!out_of_budget()) search_group(Group{s, std::move(cands), {}});
    }
    PointSetResult r;
    r.visited = visited_;
    r.complete = !out_of_budget();
    for (const auto& [key, rec] : found_) r.sets.push_back(rec);
    return r;
  }

 private:
  bool out_of_budget() const { return budget_ > 0 && visited_ >= budget_; }

  void search_group(Group g) {
    const std::size_t m = g.cands.size();
    const i128 scale = i128(4) * k_ * k_;
    const i128 two_k2 = i128(2) * k_ * k_;
    const i128 s = g.radicand;
    g.dist.assign(m, std::vector<std::int64_t>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        ++visited_;
        const auto& p = g.cands[i];
        const auto& q = g.cands[j];
        if (p.X * q.R == q.X * p.R) continue;                         // collinear with A
        if ((p.X - two_k2) * q.R == (q.X - two_k2) * p.R) continue;   // collinear with B
        const i128 dx = p.X - q.X;
        const i128 dy = p.R - q.R;
        const i128 d2 = dx * dx + dy * dy * s;
        if (d2 % scale != 0) continue;
        std::uint64_t root = 0;
        if (!is_perfect_square(static_cast<std::uint64_t>(d2 / scale), &root)) continue;
        if (root < 1 || static_cast<std::int64_t>(root) > dmax_) continue;
        g.dist[i][j] = g.dist[j][i] = static_cast<std::int64_t>(root);
      }
    }
    group_ = &g;
    chosen_.clear();
    std::vector<std::size_t> all(m);
    std::iota(all.begin(), all.end(), 0);
    extend(all);
    group_ = nullptr;
  }

  bool collinear(std::size_t i, std::size_t j, std::size_t l) const {
    const auto& a = group_->cands[i];
    const auto& b = group_->cands[j];
    const auto& c = group_->cands[l];
    return (b.X - a.X) * (c.R - a.R) - (b.R - a.R) * (c.X - a.X) == 0;
  }

  void extend(const std::vector<std::size_t>& pool) {
    if (out_of_budget()) return;
    if (static_cast<int>(chosen_.size()) == n_ - 2) {
      emit();
      return;
    }
    for (std::size_t idx = 0; idx < pool.size(); ++idx) {
      const std::size_t c = pool[idx];
      bool ok = true;
      for (std::size_t a = 0; a < chosen_.size() && ok; ++a) {
        for (std::size_t b = a + 1; b < chosen_.size() && ok; ++b) {
          ok = !collinear(chosen_[a], chosen_[b], c);
        }
      }
      if (!ok) continue;
      ++visited_;
      std::vector<std::size_t> next;
      for (std::size_t j = idx + 1; j < pool.size(); ++j) {
        if (group_->dist[c][pool[j]] != 0) next.push_back(pool[j]);
      }
      chosen_.push_back(c);
      extend(next);
      chosen_.pop_back();
    }
  }

  void emit() {
    const int n = n_;
    std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, 0));
    d[0][1] = d[1][0] = k_;
    for (int i = 0; i < n - 2; ++i) {
      const auto& c = group_->cands[chosen_[i]];
      d[0][i + 2] = d[i + 2][0] = c.to_a;
      d[1][i + 2] = d[i + 2][1] = c.to_b;
      for (int j = i + 1; j < n - 2; ++j) {
        d[i + 2][j + 2] = d[j + 2][i + 2] = group_->dist[chosen_[i]][chosen_[j]];
      }
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::int64_t> best;
    do {
      std::vector<std::int64_t> t;
      t.reserve(n * (n - 1) / 2);
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) t.push_back(d[perm[i]][perm[j]]);
      }
      if (best.empty() || t < best) best = std::move(t);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (found_.count(best)) return;
    PointSetRecord rec;
    rec.n = n;
    rec.distances = best;
    embed_record(rec);
    found_.emplace(best, std::move(rec));
  }

  static void embed_record(PointSetRecord& rec) {
    const auto dist = [&](int i, int j) { return pointset_distance(rec, i, j); };
    const auto sq = [](std::int64_t v) { return Rat(v) * Rat(v); };
    const std::int64_t base = dist(0, 1);
    const Rat two_base = Rat(2) * Rat(base);
    rec.coords.assign(rec.n, Point{});
    rec.coords[1] = {Surd(Rat(base)), Surd(0)};
    for (int i = 2; i < rec.n; ++i) {
      const Rat x = (sq(base) + sq(dist(0, i)) - sq(dist(1, i))) / two_base;
      const Rat h2 = cm3_of<Rat>(sq(base), sq(dist(0, i)), sq(dist(1, i))) / (two_base * two_base);
      const Surd y = Surd::sqrt_of(h2);
      if (i == 2) {
        rec.radicand = y.is_rational() ? 1 : y.radicand();
        rec.coords[2] = {Surd(x), y};
        continue;
      }
      rec.coords[i] = {Surd(x), y};
      if (squared_distance(rec.coords[2], rec.coords[i]) != Surd(sq(dist(2, i)))) {
        rec.coords[i].y = -y;
      }
    }
  }

  int n_;
  std::int64_t k_;
  std::int64_t dmax_;
  std::uint64_t budget_;
  std::uint64_t visited_ = 0;
  const Group* group_ = nullptr;
  std::vector<std::size_t> chosen_;
  std::map<std::vector<std::int64_t>, PointSetRecord> found_;
};

}  // namespace

std::int64_t pointset_distance(const PointSetRecord& r, int i, int j) {
  if (i == j) return 0;
  if (i > j) std::swap(i, j);
  // Row-major upper triangle offset.
  const int offset = i * r.n - i * (i + 1) / 2 + (j - i - 1);
  return r.distances.at(static_cast<std::size_t>(offset));
}

PointSetResult enumerate_ngon_pointsets(int n, std::int64_t k, std::int64_t dmax, std::uint64_t budget) {
  if (n < 3 || n > 7) throw std::invalid_argument("enumerate_ngon_pointsets: n must be in 3..7");
  if (k < 1 || dmax < k) throw std::invalid_argument("enumerate_ngon_pointsets: need 1 <= k <= dmax");
  return CliqueSearch(n, k, dmax, budget).run();
}

}  // namespace dioph
