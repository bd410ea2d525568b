#include "dioph/pell.hpp"

#include <stdexcept>
#include <string>

#include "dioph/surd.hpp"

namespace dioph {

bool satisfies_pell(const PellSolution& s) {
  return s.x * s.x - BigInt(static_cast<long>(s.D)) * s.y * s.y == 1;
}

PellSolution pell_fundamental(std::int64_t D) {
  if (D < 2) throw std::domain_error("pell: D must be at least 2");
  std::uint64_t a0 = 0;
  if (is_perfect_square(static_cast<std::uint64_t>(D), &a0)) {
    throw std::domain_error("pell: D = " + std::to_string(D) + " is a perfect square");
  }
  const BigInt bigD = static_cast<long>(D);
  std::int64_t m = 0;
  std::int64_t d = 1;
  auto a = static_cast<std::int64_t>(a0);
  BigInt h_prev = 1, h_prev2 = 0;
  BigInt k_prev = 0, k_prev2 = 1;
  // Convergents h/k of sqrt(D); the first with h^2 - D k^2 = 1 is fundamental.
  for (;;) {
    BigInt h = BigInt(static_cast<long>(a)) * h_prev + h_prev2;
    BigInt k = BigInt(static_cast<long>(a)) * k_prev + k_prev2;
    if (h * h - bigD * k * k == 1) return {h, k, D};
    h_prev2 = std::move(h_prev);
    h_prev = std::move(h);
    k_prev2 = std::move(k_prev);
    k_prev = std::move(k);
    m = d * a - m;
    d = (D - m * m) / d;
    a = (static_cast<std::int64_t>(a0) + m) / d;
  }
}

PellSolution pell_compose(const PellSolution& p, const PellSolution& q, Composition sign) {
  if (p.D != q.D) throw std::invalid_argument("pell_compose: mismatched D");
  const BigInt bigD = static_cast<long>(p.D);
  if (sign == Composition::Plus) {
    return {p.x * q.x + bigD * p.y * q.y, p.x * q.y + p.y * q.x, p.D};
  }
  BigInt y = p.x * q.y - p.y * q.x;
  return {p.x * q.x - bigD * p.y * q.y, abs(y), p.D};
}

std::vector<PellSolution> pell_stream(std::int64_t D, std::size_t count) {
  std::vector<PellSolution> out;
  if (count == 0) return out;
  const PellSolution base = pell_fundamental(D);
  out.reserve(count);
  out.push_back(base);
  while (out.size() < count) out.push_back(pell_compose(out.back(), base));
  return out;
}

std::pair<BigInt, BigInt> pell_to_quad(const PellSolution& s) {
  if (s.D != 12) throw std::invalid_argument("pell_to_quad: requires D = 12");
  if (s.x % 2 == 0) throw std::invalid_argument("pell_to_quad: x must be odd");
  return {BigInt((s.x - 1) / 2), s.y};
}

QuadDistances side2_family_quad(std::int64_t b, std::int64_t c) {
  return {2, b, c, 2 * c, b + 1, 2 * c};
}

}  // namespace dioph
