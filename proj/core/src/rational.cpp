#include "basym/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>

#include "basym/error.hpp"

namespace basym {

namespace {

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) fail(ErrorKind::InvalidArgument, "rational with zero denominator");
  *this = from_wide(n, d);
}

Rational Rational::from_wide(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) d = 1;
  if (!fits(n) || !fits(d)) fail(ErrorKind::Overflow, "rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(n);
  r.den_ = static_cast<std::int64_t>(d);
  return r;
}

Rational Rational::operator-() const { return from_wide(-static_cast<i128>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
  *this = from_wide(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                    static_cast<i128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  *this = from_wide(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) fail(ErrorKind::InvalidArgument, "rational division by zero");
  *this = from_wide(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  i128 l = static_cast<i128>(a.num_) * b.den_;
  i128 r = static_cast<i128>(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::optional<std::vector<Rational>> solve_unique(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n; ++col, ++row) {
    std::size_t p = row;
    while (p < m && a[p][col].is_zero()) ++p;
    if (p == m) return std::nullopt;
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    const Rational inv = Rational(1) / a[row][col];
    for (auto& x : a[row]) x *= inv;
    b[row] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[row][c];
      b[r] -= f * b[row];
    }
  }
  for (std::size_t r = n; r < m; ++r)
    if (!b[r].is_zero()) return std::nullopt;
  b.resize(n);
  return b;
}

}  // namespace basym
