#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dioph/model.hpp"
#include "dioph/pell.hpp"

using namespace dioph;

namespace {

// Smallest y >= 1 with 1 + D*y^2 a square.
PellSolution brute_force(std::int64_t D) {
  for (std::int64_t y = 1;; ++y) {
    const BigInt rhs = 1 + BigInt(static_cast<long>(D)) * y * y;
    const BigInt x = sqrt(rhs);
    if (x * x == rhs) return {x, BigInt(static_cast<long>(y)), D};
  }
}

PellSolution sol(long x, long y, std::int64_t D) { return {BigInt(x), BigInt(y), D}; }

}  // namespace

TEST_CASE("fundamental solutions") {
  CHECK(pell_fundamental(12) == sol(7, 2, 12));
  CHECK(pell_fundamental(2) == sol(3, 2, 2));
  CHECK_THROWS_AS(pell_fundamental(4), std::domain_error);
  CHECK_THROWS_AS(pell_fundamental(1), std::domain_error);
  for (std::int64_t D = 2; D <= 60; ++D) {
    if (is_perfect_square(static_cast<std::uint64_t>(D))) continue;
    CHECK(pell_fundamental(D) == brute_force(D));
  }
  // D = 61 needs x with ten digits.
  CHECK(pell_fundamental(61).x == BigInt("1766319049"));
}

TEST_CASE("streams") {
  CHECK(pell_stream(12, 3) == std::vector{sol(7, 2, 12), sol(97, 28, 12), sol(1351, 390, 12)});
  CHECK(pell_stream(12, 1) == std::vector{sol(7, 2, 12)});
  CHECK(pell_stream(3, 2) == std::vector{sol(2, 1, 3), sol(7, 4, 3)});
  const auto s = pell_stream(12, 20);
  for (const auto& p : s) CHECK(satisfies_pell(p));
  for (std::size_t i = 0; i + 1 < 10; ++i) {
    CHECK(s[i + 1].x == 7 * s[i].x + 24 * s[i].y);
    CHECK(s[i + 1].y == 2 * s[i].x + 7 * s[i].y);
  }
}

TEST_CASE("composition") {
  const auto f = sol(7, 2, 12);
  CHECK(pell_compose(f, f) == sol(97, 28, 12));
  CHECK(pell_compose(sol(97, 28, 12), f) == sol(1351, 390, 12));
  CHECK(pell_compose(f, f, Composition::Minus) == sol(1, 0, 12));
  CHECK(pell_compose(sol(97, 28, 12), f, Composition::Minus) == f);
  CHECK(satisfies_pell(sol(1, 0, 12)));
  CHECK_THROWS_AS(pell_compose(f, sol(3, 2, 2)), std::invalid_argument);
}

TEST_CASE("composition identity holds for arbitrary integers") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> v(-1000000, 1000000);
  for (int i = 0; i < 1000; ++i) {
    const BigInt a(v(rng)), b(v(rng)), c(v(rng)), d(v(rng));
    CHECK((a * a - 12 * b * b) * (c * c - 12 * d * d) == (a * c - 12 * b * d) * (a * c - 12 * b * d) -
                                                             12 * (a * d - b * c) * (a * d - b * c));
  }
}

TEST_CASE("pell solutions to side-2 parameters") {
  const auto s = pell_stream(12, 12);
  CHECK(pell_to_quad(s[0]) == std::pair{BigInt(3), BigInt(2)});
  CHECK(pell_to_quad(s[1]) == std::pair{BigInt(48), BigInt(28)});
  CHECK(pell_to_quad(s[2]) == std::pair{BigInt(675), BigInt(390)});
  for (const auto& p : s) {
    const auto [b, c] = pell_to_quad(p);
    CHECK(b * (b + 1) == 3 * c * c);
  }
  CHECK_THROWS_AS(pell_to_quad(sol(3, 2, 2)), std::invalid_argument);
}

TEST_CASE("the family quadrilaterals are convex and cyclic") {
  CHECK(side2_family_quad(3, 2) == QuadDistances{2, 3, 2, 4, 4, 4});
  const auto s = pell_stream(12, 4);
  for (const auto& p : s) {
    const auto [b, c] = pell_to_quad(p);
    const auto q = side2_family_quad(b.get_si(), c.get_si());
    CHECK(classify(q).kind == ConfigKind::Convex);
    CHECK(is_cyclic(q));
  }
}
