#include "dioph/surd.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace dioph {

SquarefreeSplit squarefree_split(std::uint64_t n) {
  if (n == 0) return {0, 0};
  std::uint64_t root = 1;
  std::uint64_t core = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      n /= p * p;
      root *= p;
    }
    if (n % p == 0) {
      n /= p;
      core *= p;
    }
  }
  return {root, core * n};
}

bool is_perfect_square(std::uint64_t n, std::uint64_t* root) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (root) *root = r;
  return r * r == n;
}

namespace {

std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || !v.fits_ulong_p()) throw std::overflow_error("value does not fit in 64 bits: " + v.get_str());
  return v.get_ui();
}

}  // namespace

Surd::Surd(const Rat& base, const Rat& coeff, std::int64_t radicand)
    : base_(base), coeff_(coeff), radicand_(radicand) {
  if (radicand < 0) throw std::domain_error("Surd: negative radicand");
  normalize();
}

void Surd::normalize() {
  if (radicand_ <= 1) {
    if (radicand_ == 1) base_ += coeff_;
    coeff_ = Rat(0);
  }
}

Surd Surd::sqrt_of(const Rat& q) {
  if (q.sign() < 0) throw std::domain_error("Surd::sqrt_of: negative argument");
  if (q.is_zero()) return Surd(Rat(0));
  // sqrt(p/d) = sqrt(p*d)/d
  const BigInt pd = q.num() * q.den();
  const auto split = squarefree_split(to_u64(pd));
  const Rat scale(BigInt(static_cast<unsigned long>(split.root)), q.den());
  if (split.core == 1) return Surd(scale);
  return Surd(Rat(0), scale, static_cast<std::int64_t>(split.core));
}

Surd Surd::parse(std::string_view text) {
  const auto plus = text.find("+", 1);
  if (plus == std::string_view::npos) return Surd(Rat::parse(text));
  const auto star = text.find("*sqrt(", plus);
  if (star == std::string_view::npos || text.back() != ')') {
    throw std::invalid_argument("Surd: malformed '" + std::string(text) + "'");
  }
  const Rat base = Rat::parse(text.substr(0, plus));
  const Rat coeff = Rat::parse(text.substr(plus + 1, star - plus - 1));
  const auto rad_text = text.substr(star + 6, text.size() - star - 7);
  const Rat rad = Rat::parse(rad_text);
  if (!rad.is_integer() || rad.sign() < 0) throw std::invalid_argument("Surd: bad radicand");
  return Surd(base, coeff, static_cast<std::int64_t>(to_u64(rad.num())));
}

int Surd::sign() const {
  const int sb = base_.sign();
  const int sc = coeff_.sign();
  if (sc == 0) return sb;
  if (sb == 0 || sb == sc) return sc;
  const Rat lhs = base_ * base_;
  const Rat rhs = coeff_ * coeff_ * Rat(static_cast<long>(radicand_));
  if (lhs == rhs) return 0;
  return lhs > rhs ? sb : sc;
}

std::string Surd::str() const {
  if (coeff_.is_zero()) return base_.str();
  return base_.str() + "+" + coeff_.str() + "*sqrt(" + std::to_string(radicand_) + ")";
}

std::int64_t Surd::joint_radicand(const Surd& o) const {
  if (o.coeff_.is_zero()) return radicand_;
  if (coeff_.is_zero()) return o.radicand_;
  if (radicand_ != o.radicand_) {
    throw std::domain_error("Surd: radicand mismatch " + std::to_string(radicand_) + " vs " +
                            std::to_string(o.radicand_));
  }
  return radicand_;
}

Surd Surd::operator-() const {
  Surd r = *this;
  r.base_ = -r.base_;
  r.coeff_ = -r.coeff_;
  return r;
}

Surd& Surd::operator+=(const Surd& o) {
  radicand_ = joint_radicand(o);
  base_ += o.base_;
  coeff_ += o.coeff_;
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  radicand_ = joint_radicand(o);
  base_ -= o.base_;
  coeff_ -= o.coeff_;
  return *this;
}

Surd& Surd::operator*=(const Surd& o) {
  const std::int64_t s = joint_radicand(o);
  const Rat b = base_ * o.base_ + coeff_ * o.coeff_ * Rat(static_cast<long>(s));
  const Rat c = base_ * o.coeff_ + coeff_ * o.base_;
  base_ = b;
  coeff_ = c;
  radicand_ = s;
  return *this;
}

Surd& Surd::operator/=(const Rat& o) {
  base_ /= o;
  coeff_ /= o;
  return *this;
}

bool operator==(const Surd& a, const Surd& b) {
  if (a.base_ != b.base_ || a.coeff_ != b.coeff_) return false;
  return a.coeff_.is_zero() || a.radicand_ == b.radicand_;
}

std::ostream& operator<<(std::ostream& os, const Surd& s) { return os << s.str(); }

int sign_of(const Surd& x) { return x.sign(); }

Surd squared_distance(const Point& p, const Point& q) {
  const Surd dx = p.x - q.x;
  const Surd dy = p.y - q.y;
  return dx * dx + dy * dy;
}

Surd orientation(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

}  // namespace dioph
