#include "basym/ring.hpp"

#include <algorithm>
#include <limits>

#include "basym/checked.hpp"
#include "basym/error.hpp"

namespace basym {

bool Monomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](Exponent x) { return x == 0; });
}

Exponent Monomial::total() const {
  std::int64_t s = 0;
  for (auto x : e) s += x;
  return static_cast<Exponent>(s);
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  bool overflow = false;
  for (std::size_t i = 0; i < kMaxVars; ++i) overflow |= __builtin_add_overflow(e[i], o.e[i], &r.e[i]);
  if (overflow) fail(ErrorKind::Overflow, "exponent overflow in monomial product");
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = e[i] - o.e[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::max(e[i], o.e[i]);
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e[i] != 0 && o.e[i] != 0) return false;
  return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : m.e) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
  return h;
}

Ring::Ring(PrimeField field, std::vector<std::string> names, std::vector<Degree> degrees, PositivityFunctional phi,
           MonomialOrder order)
    : field_(field), names_(std::move(names)), degrees_(std::move(degrees)), phi_(std::move(phi)), order_(std::move(order)) {
  if (names_.size() > kMaxVars)
    fail(ErrorKind::InvalidArgument, "at most " + std::to_string(kMaxVars) + " ring variables supported");
  if (names_.size() != degrees_.size()) fail(ErrorKind::InvalidArgument, "one degree per variable required");
  if (degrees_.empty()) fail(ErrorKind::InvalidArgument, "ring needs at least one variable");
  group_ = degrees_.front().group();
  for (const auto& d : degrees_) require_same_group(group_, d.group());
  if (static_cast<int>(phi_.size()) != group_->free_rank())
    fail(ErrorKind::Positivity, "positivity functional length " + std::to_string(phi_.size()) +
                                    " does not match free rank " + std::to_string(group_->free_rank()));
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    std::int64_t w = phi_.scaled(degrees_[i]);
    if (w <= 0)
      fail(ErrorKind::Positivity, "phi(deg " + names_[i] + ") = " + phi_(degrees_[i]).to_string() + " is not positive");
    weights_.push_back(w);
  }
  if (order_.kind == OrderKind::Elimination) {
    order_.block.resize(names_.size(), false);
  }
}

RingPtr make_ring(PrimeField field, std::vector<std::string> names, std::vector<Degree> degrees,
                  PositivityFunctional phi, MonomialOrder order) {
  return std::make_shared<const Ring>(field, std::move(names), std::move(degrees), std::move(phi), std::move(order));
}

int Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

std::int64_t Ring::weight(const Monomial& m) const {
  std::int64_t w = 0;
  for (std::size_t i = 0; i < names_.size(); ++i) w += weights_[i] * m.e[i];
  return w;
}

Degree Ring::degree(const Monomial& m) const {
  std::vector<std::int64_t> c(group_->size(), 0);
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (m.e[i] == 0) continue;
    const auto& dc = degrees_[i].coords();
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = checked_add(c[j], checked_mul(dc[j], m.e[i]));
  }
  return Degree(group_, std::move(c));
}

Monomial Ring::variable(std::size_t i, Exponent power) const {
  Monomial m;
  m.e[i] = power;
  return m;
}

int Ring::grevlex(const Monomial& a, const Monomial& b, const std::vector<bool>* mask, bool in_mask) const {
  const std::size_t n = names_.size();
  std::int64_t wa = 0, wb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask && (*mask)[i] != in_mask) continue;
    wa += weights_[i] * a.e[i];
    wb += weights_[i] * b.e[i];
  }
  if (wa != wb) return wa > wb ? 1 : -1;
  for (std::size_t i = n; i-- > 0;) {
    if (mask && (*mask)[i] != in_mask) continue;
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

int Ring::compare(const Monomial& a, const Monomial& b) const {
  switch (order_.kind) {
    case OrderKind::Grevlex:
      return grevlex(a, b, nullptr, false);
    case OrderKind::Lex:
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
      return 0;
    case OrderKind::Elimination: {
      int c = grevlex(a, b, &order_.block, true);
      if (c != 0) return c;
      return grevlex(a, b, &order_.block, false);
    }
  }
  return 0;
}

std::string Ring::format(const Monomial& m) const {
  std::string s;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names_[i];
    if (m.e[i] != 1) s += "^" + std::to_string(m.e[i]);
  }
  return s.empty() ? "1" : s;
}

RingPtr Ring::with_order(MonomialOrder order) const {
  return make_ring(field_, names_, degrees_, phi_, std::move(order));
}

bool Ring::same_as(const Ring& o) const {
  if (this == &o) return true;
  return field_ == o.field_ && names_ == o.names_ && degrees_.size() == o.degrees_.size() &&
         same_group(group_, o.group_) && degrees_ == o.degrees_ && phi_ == o.phi_ && order_ == o.order_;
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!a.same_as(b)) fail(ErrorKind::AmbientMismatch, "elements live in different rings");
}

}  // namespace basym
