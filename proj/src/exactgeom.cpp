#include "dioph/exactgeom.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dioph {

std::int64_t QuadDistances::between(int i, int j) const {
  if (i > j) std::swap(i, j);
  switch (i * 4 + j) {
    case 1: return ab;
    case 2: return ac;
    case 3: return da;
    case 6: return bc;
    case 7: return bd;
    case 11: return cd;
    default: throw std::out_of_range("QuadDistances::between: bad vertex pair");
  }
}

std::string QuadDistances::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadDistances& q) {
  return os << '(' << q.ab << ',' << q.bc << ',' << q.cd << ',' << q.da << ';' << q.ac << ',' << q.bd
            << ')';
}

Rat cm3(const Rat& d01sq, const Rat& d02sq, const Rat& d12sq) {
  if (d01sq.sign() < 0 || d02sq.sign() < 0 || d12sq.sign() < 0) {
    throw std::domain_error("cm3: squared distances must be non-negative");
  }
  return cm3_of(d01sq, d02sq, d12sq);
}

Rat cm4(const QuadDistances& q) { return cm4_of(squared_tuple<Rat>(q)); }

bool triangle_ok(std::int64_t a, std::int64_t b, std::int64_t c) {
  return a + b >= c && b + c >= a && a + c >= b;
}

const char* to_string(NotRealizable::Reason r) {
  switch (r) {
    case NotRealizable::Reason::TriangleABC: return "triangle ABC";
    case NotRealizable::Reason::TriangleABD: return "triangle ABD";
    case NotRealizable::Reason::TriangleACD: return "triangle ACD";
    case NotRealizable::Reason::TriangleBCD: return "triangle BCD";
    case NotRealizable::Reason::NonPlanar: return "non-planar";
  }
  return "?";
}

namespace {

using i128 = __int128;

std::uint64_t cm3_u64(std::int64_t a, std::int64_t b, std::int64_t c) {
  const i128 v = cm3_of<i128>(i128(a) * a, i128(b) * b, i128(c) * c);
  if (v < 0) throw std::logic_error("cm3 negative after triangle check");
  if (v > static_cast<i128>(UINT64_MAX)) throw std::overflow_error("embed: distances too large");
  return static_cast<std::uint64_t>(v);
}

Rat rat_u(std::uint64_t v) { return Rat(BigInt(static_cast<unsigned long>(v))); }

}  // namespace

EmbedResult embed(const QuadDistances& q) {
  using Reason = NotRealizable::Reason;
  constexpr std::array<Reason, 4> kReasons{Reason::TriangleABC, Reason::TriangleABD,
                                           Reason::TriangleACD, Reason::TriangleBCD};
  for (std::size_t f = 0; f < kFaces.size(); ++f) {
    const auto& t = kFaces[f];
    const auto x = q.between(t[0], t[1]);
    const auto y = q.between(t[1], t[2]);
    const auto z = q.between(t[0], t[2]);
    if (!triangle_ok(x, y, z)) {
      std::ostringstream os;
      os << to_string(kReasons[f]) << " violates the triangle inequality (" << x << ", " << y << ", " << z << ")";
      return NotRealizable{kReasons[f], os.str()};
    }
  }
  if (cm4_of(squared_tuple<i128>(q)) != 0) {
    return NotRealizable{Reason::NonPlanar, "Cayley-Menger determinant is non-zero"};
  }

  const std::uint64_t area_c = cm3_u64(q.ab, q.bc, q.ac);
  const std::uint64_t area_d = cm3_u64(q.ab, q.bd, q.da);
  const auto split_c = squarefree_split(area_c);
  const auto split_d = squarefree_split(area_d);
  std::uint64_t s = area_c != 0 ? split_c.core : split_d.core;
  if (area_c != 0 && area_d != 0 && split_c.core != split_d.core) {
    // Cannot happen for a planar configuration; kept as a hard failure.
    return NotRealizable{Reason::NonPlanar, "apex heights live in different quadratic fields"};
  }

  const Rat ab(q.ab);
  const Rat two_ab = Rat(2) * ab;
  const auto sq = [](std::int64_t v) { return Rat(v) * Rat(v); };
  const auto srad = static_cast<std::int64_t>(s);

  PlanarEmbedding e;
  e.radicand = srad;
  e.points[0] = {Surd(0), Surd(0)};
  e.points[1] = {Surd(ab), Surd(0)};
  const Rat xc = (sq(q.ab) + sq(q.ac) - sq(q.bc)) / two_ab;
  const Rat xd = (sq(q.ab) + sq(q.da) - sq(q.bd)) / two_ab;
  e.points[2] = {Surd(xc), Surd(Rat(0), rat_u(split_c.root) / two_ab, srad)};
  const Surd yd(Rat(0), rat_u(split_d.root) / two_ab, srad);

  const Surd target(sq(q.cd));
  for (const Surd& cand : {yd, -yd}) {
    e.points[3] = {Surd(xd), cand};
    if (squared_distance(e.points[2], e.points[3]) == target) return e;
  }
  return NotRealizable{Reason::NonPlanar, "no reflection of D matches |CD|"};
}

}  // namespace dioph
