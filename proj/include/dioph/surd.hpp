#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "dioph/rat.hpp"

namespace dioph {

// n = root^2 * core with core squarefree.
struct SquarefreeSplit {
  std::uint64_t root = 0;
  std::uint64_t core = 0;
};

// Trial division; n = 0 gives {0, 0}.
SquarefreeSplit squarefree_split(std::uint64_t n);

bool is_perfect_square(std::uint64_t n, std::uint64_t* root = nullptr);

// Element base + coeff*sqrt(radicand) of the quadratic field Q(sqrt(radicand)).
//
// The radicand is a non-negative squarefree integer. For radicand 0 or 1 the
// coefficient is folded into the base, so coeff() is zero. Binary arithmetic
// between two surds requires equal radicands unless one side has a zero
// coefficient; a mismatch throws std::domain_error.
class Surd {
 public:
  Surd() = default;
  Surd(const Rat& base) : base_(base) {}
  Surd(int v) : base_(v) {}
  Surd(const Rat& base, const Rat& coeff, std::int64_t radicand);

  // sqrt(q) for q >= 0, written over its own squarefree radicand.
  static Surd sqrt_of(const Rat& q);

  // Inverse of str(): "p/q" or "p/q+r/s*sqrt(n)".
  static Surd parse(std::string_view text);

  const Rat& base() const { return base_; }
  const Rat& coeff() const { return coeff_; }
  std::int64_t radicand() const { return radicand_; }
  bool is_rational() const { return coeff_.is_zero(); }

  // Exact sign, computed by comparing base^2 against coeff^2*radicand.
  int sign() const;

  std::string str() const;

  Surd operator-() const;
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Rat& o);

  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
  friend Surd operator/(Surd a, const Rat& b) { return a /= b; }

  friend bool operator==(const Surd& a, const Surd& b);
  friend std::ostream& operator<<(std::ostream& os, const Surd& s);

 private:
  void normalize();
  std::int64_t joint_radicand(const Surd& o) const;

  Rat base_;
  Rat coeff_;
  std::int64_t radicand_ = 0;
};

int sign_of(const Surd& x);

struct Point {
  Surd x;
  Surd y;
  friend bool operator==(const Point&, const Point&) = default;
};

Surd squared_distance(const Point& p, const Point& q);

// Twice the signed area of (p, q, r); positive for counter-clockwise turns.
Surd orientation(const Point& p, const Point& q, const Point& r);

}  // namespace dioph
