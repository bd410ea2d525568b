#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dioph/exactgeom.hpp"
#include "dioph/search.hpp"
#include "oracles.hpp"

using namespace dioph;

TEST_CASE("rat stays in lowest terms") {
  const Rat r(BigInt(6), BigInt(-4));
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Rat(5).str() == "5/1");
  CHECK(Rat::parse("10/4") == Rat(BigInt(5), BigInt(2)));
  CHECK(Rat::parse("-7") == Rat(-7));
  CHECK_THROWS(Rat(BigInt(1), BigInt(0)));
  CHECK_THROWS(Rat(1) / Rat(0));
  CHECK(Rat(1) / Rat(3) + Rat(1) / Rat(6) == Rat(BigInt(1), BigInt(2)));
  CHECK(Rat(BigInt(1), BigInt(3)) < Rat(BigInt(1), BigInt(2)));
}

TEST_CASE("rat parse round-trips str") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 5000);
  for (int i = 0; i < 500; ++i) {
    const Rat r(BigInt(num(rng)), BigInt(den(rng)));
    CHECK(Rat::parse(r.str()) == r);
  }
}

TEST_CASE("squarefree split and perfect squares") {
  const auto s = squarefree_split(72);
  CHECK(s.root == 6);
  CHECK(s.core == 2);
  CHECK(squarefree_split(1).core == 1);
  std::uint64_t r = 0;
  CHECK(is_perfect_square(144, &r));
  CHECK(r == 12);
  CHECK_FALSE(is_perfect_square(145));
  for (std::uint64_t n = 1; n < 3000; ++n) {
    const auto sp = squarefree_split(n);
    CHECK(sp.root * sp.root * sp.core == n);
    for (std::uint64_t p = 2; p * p <= sp.core; ++p) CHECK(sp.core % (p * p) != 0);
  }
}

TEST_CASE("surd normal form and arithmetic") {
  const Surd a = Surd::sqrt_of(Rat(12));
  CHECK(a.base() == Rat(0));
  CHECK(a.coeff() == Rat(2));
  CHECK(a.radicand() == 3);
  CHECK(Surd::sqrt_of(Rat(BigInt(9), BigInt(4))).is_rational());
  CHECK(a * a == Surd(Rat(12)));
  const Surd x(Rat(1), Rat(2), 5);
  const Surd y(Rat(3), Rat(-1), 5);
  // (1 + 2r)(3 - r) = 3 - r + 6r - 2*5 = -7 + 5r with r = sqrt(5)
  CHECK(x * y == Surd(Rat(-7), Rat(5), 5));
  CHECK_THROWS_AS(x + Surd(Rat(0), Rat(1), 2), std::domain_error);
  CHECK(x + Surd(Rat(4)) == Surd(Rat(5), Rat(2), 5));
  CHECK(Surd::parse(x.str()) == x);
  CHECK(Surd::parse("1/2+-3/4*sqrt(7)") == Surd(Rat(BigInt(1), BigInt(2)), Rat(BigInt(-3), BigInt(4)), 7));
}

TEST_CASE("surd sign agrees with floating point away from zero") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> v(-2000, 2000);
  const std::int64_t rads[] = {2, 3, 5, 6, 7, 15, 101};
  for (int i = 0; i < 2000; ++i) {
    const Rat b(BigInt(v(rng)), BigInt(17));
    const Rat c(BigInt(v(rng)), BigInt(13));
    const auto s = rads[i % 7];
    const Surd x(b, c, s);
    const long double f = static_cast<long double>(b.raw().get_d()) +
                          static_cast<long double>(c.raw().get_d()) * std::sqrt(static_cast<long double>(s));
    if (std::fabs(static_cast<double>(f)) > 1e-9) CHECK(x.sign() == (f > 0 ? 1 : -1));
  }
  // Exact zero that floating point cannot certify.
  const Surd z = Surd::sqrt_of(Rat(2)) * Surd::sqrt_of(Rat(2)) - Surd(Rat(2));
  CHECK(z.sign() == 0);
}

TEST_CASE("cm3 is sixteen times the squared area") {
  CHECK(cm3(Rat(9), Rat(16), Rat(25)) == Rat(16 * 36));
  CHECK(cm3(Rat(1), Rat(4), Rat(9)) == Rat(0));  // 1 + 2 = 3
  CHECK_THROWS_AS(cm3(Rat(-1), Rat(1), Rat(1)), std::domain_error);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> side(1, 500);
  for (int i = 0; i < 1000; ++i) {
    const auto a = side(rng), b = side(rng), c = side(rng);
    // Heron: 16 A^2 = (a+b+c)(-a+b+c)(a-b+c)(a+b-c)
    const BigInt heron = BigInt(static_cast<long>(a + b + c)) * static_cast<long>(-a + b + c) *
                         static_cast<long>(a - b + c) * static_cast<long>(a + b - c);
    CHECK(cm3(Rat(a * a), Rat(b * b), Rat(c * c)) == Rat(heron));
    CHECK(cm3_of<std::int64_t>(a * a, b * b, c * c) == heron.get_si());
  }
}

TEST_CASE("cm4 closed form matches the bordered determinant") {
  CHECK(cm4(QuadDistances{1, 1, 1, 1, 1, 1}) == Rat(4));
  CHECK(oracle::cayley_menger_det(oracle::squares({1, 1, 1, 1, 1, 1})) == 4);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> d(1, 300);
  for (int i = 0; i < 2000; ++i) {
    const QuadDistances q{d(rng), d(rng), d(rng), d(rng), d(rng), d(rng)};
    const BigInt ref = oracle::cayley_menger_det(oracle::squares(q));
    CHECK(cm4(q) == Rat(ref));
    CHECK(to_big(cm4_of(squared_tuple<__int128>(q))) == ref);
  }
  // Planar configurations give zero.
  CHECK(cm4(QuadDistances{2, 3, 2, 4, 4, 4}) == Rat(0));
  CHECK(cm4(QuadDistances{3, 4, 3, 4, 5, 5}) == Rat(0));
}

TEST_CASE("embedding reproduces every distance") {
  SearchConfig cfg;
  cfg.k = 3;
  cfg.dmax = 12;
  cfg.include_degenerate = true;
  const auto res = enumerate_quads(cfg);
  REQUIRE(res.entries.size() > 10);
  for (const auto& e : res.entries) {
    const auto emb = embed(e.canonical);
    REQUIRE(std::holds_alternative<PlanarEmbedding>(emb));
    const auto& p = std::get<PlanarEmbedding>(emb).points;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        const auto dist = e.canonical.between(i, j);
        CHECK(squared_distance(p[i], p[j]) == Surd(Rat(dist * dist)));
      }
    }
    CHECK(p[0] == Point{Surd(0), Surd(0)});
    CHECK(p[2].y.sign() >= 0);
  }
}

TEST_CASE("embedding reports the failing face or non-planarity") {
  const auto r1 = embed({1, 1, 5, 5, 1, 5});
  REQUIRE(std::holds_alternative<NotRealizable>(r1));
  const auto r2 = embed({1, 1, 1, 1, 1, 1});
  REQUIRE(std::holds_alternative<NotRealizable>(r2));
  CHECK(std::get<NotRealizable>(r2).reason == NotRealizable::Reason::NonPlanar);
  const auto r3 = embed({3, 1, 1, 1, 1, 1});
  REQUIRE(std::holds_alternative<NotRealizable>(r3));
  CHECK(std::get<NotRealizable>(r3).reason == NotRealizable::Reason::TriangleABC);
}

TEST_CASE("orientation sign") {
  const Point a{Surd(0), Surd(0)}, b{Surd(1), Surd(0)}, c{Surd(0), Surd::sqrt_of(Rat(3))};
  CHECK(orientation(a, b, c).sign() == 1);
  CHECK(orientation(a, c, b).sign() == -1);
  CHECK(orientation(a, b, Point{Surd(5), Surd(0)}).sign() == 0);
}
