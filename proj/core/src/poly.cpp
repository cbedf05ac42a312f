#include "basym/poly.hpp"

#include <algorithm>
#include <unordered_map>

#include "basym/error.hpp"

namespace basym {

// ---------------------------------------------------------------- FreeModule

namespace {

std::vector<std::int64_t> shift_weights(const Ring& ring, const std::vector<Degree>& shifts) {
  std::vector<std::int64_t> w;
  w.reserve(shifts.size());
  for (const auto& d : shifts) {
    require_same_group(ring.group(), d.group());
    w.push_back(ring.phi().scaled(d));
  }
  return w;
}

}  // namespace

FreeModule::FreeModule(RingPtr ring, std::vector<Degree> shifts, PositionRule rule, std::size_t dominant_prefix)
    : ring_(std::move(ring)), shifts_(std::move(shifts)), rule_(rule), dominant_(dominant_prefix) {
  shift_weights_ = shift_weights(*ring_, shifts_);
  if (dominant_ > shifts_.size()) fail(ErrorKind::InvalidArgument, "dominant prefix exceeds module rank");
}

FreeModule::FreeModule(RingPtr ring, std::vector<Degree> shifts, SchreyerData schreyer)
    : ring_(std::move(ring)), shifts_(std::move(shifts)), schreyer_(std::move(schreyer)), is_schreyer_(true) {
  shift_weights_ = shift_weights(*ring_, shifts_);
  if (schreyer_.total.size() != shifts_.size() || schreyer_.tie.size() != shifts_.size())
    fail(ErrorKind::InvalidArgument, "Schreyer data does not match module rank");
}

int FreeModule::compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
  const Ring& r = *ring_;
  if (is_schreyer_) {
    int c = r.compare(schreyer_.total[ca] * a, schreyer_.total[cb] * b);
    if (c != 0) return c;
    if (ca == cb) return 0;
    const auto& ta = schreyer_.tie[ca];
    const auto& tb = schreyer_.tie[cb];
    if (ta != tb) return ta < tb ? 1 : -1;
    return ca < cb ? 1 : -1;
  }
  if (dominant_ != 0) {
    bool da = ca < dominant_, db = cb < dominant_;
    if (da != db) return da ? 1 : -1;
  }
  if (rule_ == PositionRule::PositionOverTerm) {
    if (ca != cb) return ca < cb ? 1 : -1;
    return r.compare(a, b);
  }
  if (r.order().kind == OrderKind::Grevlex) {
    std::int64_t wa = r.weight(a) + shift_weights_[ca];
    std::int64_t wb = r.weight(b) + shift_weights_[cb];
    if (wa != wb) return wa > wb ? 1 : -1;
  }
  int c = r.compare(a, b);
  if (c != 0) return c;
  if (ca == cb) return 0;
  return ca < cb ? 1 : -1;
}

Degree FreeModule::degree(const Monomial& m, std::uint32_t comp) const { return ring_->degree(m) + shifts_[comp]; }

bool FreeModule::same_as(const FreeModule& o) const {
  if (this == &o) return true;
  return ring_->same_as(*o.ring_) && shifts_ == o.shifts_ && rule_ == o.rule_ && dominant_ == o.dominant_ &&
         is_schreyer_ == o.is_schreyer_ && schreyer_ == o.schreyer_;
}

ModulePtr make_free_module(RingPtr ring, std::vector<Degree> shifts, PositionRule rule, std::size_t dominant_prefix) {
  return std::make_shared<const FreeModule>(std::move(ring), std::move(shifts), rule, dominant_prefix);
}

ModulePtr ring_as_module(const RingPtr& ring) {
  return make_free_module(ring, {Degree::zero(ring->group())});
}

void require_same_module(const FreeModule& a, const FreeModule& b) {
  if (!a.same_as(b)) fail(ErrorKind::AmbientMismatch, "elements live in different free modules");
}

// ---------------------------------------------------------------- merging

namespace {

// f + c*m*g for term lists sorted descending under cmp; multiplying by a
// monomial keeps g sorted because every order here is multiplicative.
template <class Cmp>
std::vector<Term> merge_axpy(const std::vector<Term>& f, Coeff c, const Monomial& m, const std::vector<Term>& g,
                             const PrimeField& k, Cmp cmp) {
  std::vector<Term> out;
  if (c == 0 || g.empty()) return f;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  const bool unit = m.is_one();
  auto shifted = [&](const Term& t) { return Term{unit ? t.m : t.m * m, t.comp, k.mul(c, t.c)}; };
  while (i < f.size() && j < g.size()) {
    Term t = shifted(g[j]);
    int r = cmp(f[i], t);
    if (r > 0) {
      out.push_back(f[i++]);
    } else if (r < 0) {
      out.push_back(t);
      ++j;
    } else {
      Coeff s = k.add(f[i].c, t.c);
      if (s != 0) out.push_back(Term{t.m, t.comp, s});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), f.begin() + static_cast<std::ptrdiff_t>(i), f.end());
  for (; j < g.size(); ++j) out.push_back(shifted(g[j]));
  return out;
}

template <class Cmp>
std::vector<Term> canonicalize(std::vector<Term> terms, const PrimeField& k, Cmp cmp) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return cmp(a, b) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    t.c %= k.characteristic();
    if (!out.empty() && cmp(out.back(), t) == 0) {
      out.back().c = k.add(out.back().c, t.c);
      if (out.back().c == 0) out.pop_back();
    } else if (t.c != 0) {
      out.push_back(t);
    }
  }
  return out;
}

std::string coeff_prefix(std::int64_t c, bool is_one, bool first) {
  std::string s;
  if (c < 0) {
    s = first ? "-" : " - ";
    c = -c;
  } else if (!first) {
    s = " + ";
  }
  if (c != 1 || is_one) {
    s += std::to_string(c);
    if (!is_one) s += "*";
  }
  return s;
}

std::string format_term(const Ring& r, const Term& t, bool with_comp) {
  std::string s = coeff_prefix(r.field().to_signed(t.c), t.m.is_one(), true);
  if (!t.m.is_one()) s += r.format(t.m);
  if (with_comp) s += "*e" + std::to_string(t.comp);
  return s;
}

}  // namespace

// ---------------------------------------------------------------- Vector

namespace {

auto module_cmp(const FreeModule& M) {
  return [&M](const Term& a, const Term& b) { return M.compare(a, b); };
}

void same_module(const ModulePtr& a, const ModulePtr& b) {
  if (a == b) return;
  if (!a || !b) fail(ErrorKind::AmbientMismatch, "vector without ambient module");
  require_same_module(*a, *b);
}

}  // namespace

Vector::Vector(ModulePtr module, std::vector<Term> terms) : module_(std::move(module)) {
  for (const auto& t : terms)
    if (t.comp >= module_->rank()) fail(ErrorKind::InvalidArgument, "term component out of range");
  terms_ = canonicalize(std::move(terms), module_->ring()->field(), module_cmp(*module_));
}

Vector Vector::basis(const ModulePtr& module, std::size_t i) {
  if (i >= module->rank()) fail(ErrorKind::InvalidArgument, "basis index out of range");
  return from_sorted(module, {Term{Monomial{}, static_cast<std::uint32_t>(i), 1}});
}

Vector Vector::from_sorted(ModulePtr module, std::vector<Term> terms) {
  Vector v(std::move(module));
  v.terms_ = std::move(terms);
  return v;
}

Vector Vector::operator+(const Vector& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  same_module(module_, o.module_);
  return from_sorted(module_, merge_axpy(terms_, 1, Monomial{}, o.terms_, module_->ring()->field(), module_cmp(*module_)));
}

Vector Vector::operator-(const Vector& o) const {
  if (o.is_zero()) return *this;
  if (!module_) return -o;
  same_module(module_, o.module_);
  const auto& k = module_->ring()->field();
  return from_sorted(module_, merge_axpy(terms_, k.neg(1), Monomial{}, o.terms_, k, module_cmp(*module_)));
}

Vector Vector::operator-() const {
  if (!module_) return *this;
  return scaled(module_->ring()->field().neg(1));
}

Vector Vector::scaled(Coeff c) const {
  if (c == 0) return Vector(module_);
  const auto& k = module_->ring()->field();
  std::vector<Term> out = terms_;
  for (auto& t : out) t.c = k.mul(t.c, c);
  return from_sorted(module_, std::move(out));
}

Vector Vector::mul_term(const Monomial& m, Coeff c) const {
  if (c == 0 || is_zero()) return Vector(module_);
  const auto& k = module_->ring()->field();
  std::vector<Term> out = terms_;
  for (auto& t : out) {
    t.m = t.m * m;
    t.c = k.mul(t.c, c);
  }
  return from_sorted(module_, std::move(out));
}

Vector Vector::axpy(Coeff c, const Monomial& m, const Vector& g) const {
  if (g.is_zero() || c == 0) return *this;
  if (!module_) return g.mul_term(m, c);
  same_module(module_, g.module_);
  return from_sorted(module_, merge_axpy(terms_, c, m, g.terms_, module_->ring()->field(), module_cmp(*module_)));
}

Vector Vector::monic() const {
  if (is_zero()) return *this;
  return scaled(module_->ring()->field().inv(lead().c));
}

Polynomial Vector::component(std::size_t i) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.comp == i) out.push_back(Term{t.m, 0, t.c});
  // Within one component every module order restricts to the ring order.
  return Polynomial::from_sorted(module_->ring(), std::move(out));
}

std::vector<Polynomial> Vector::components() const {
  std::vector<std::vector<Term>> parts(module_->rank());
  for (const auto& t : terms_) parts[t.comp].push_back(Term{t.m, 0, t.c});
  std::vector<Polynomial> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(Polynomial::from_sorted(module_->ring(), std::move(p)));
  return out;
}

Vector Vector::reembed(const ModulePtr& target) const {
  if (module_ && target->rank() != module_->rank())
    fail(ErrorKind::AmbientMismatch, "reembedding into a module of different rank");
  if (module_) require_same_ring(*module_->ring(), *target->ring());
  return Vector(target, terms_);
}

Vector Vector::reembed_if_needed(const ModulePtr& target) const {
  if (module_ == target) return *this;
  return reembed(target);
}

bool Vector::is_homogeneous() const {
  if (is_zero()) return true;
  Degree d = module_->degree(terms_[0].m, terms_[0].comp);
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (module_->degree(terms_[i].m, terms_[i].comp) != d) return false;
  return true;
}

Degree Vector::homogeneous_degree() const {
  if (is_zero()) fail(ErrorKind::UndefinedDegree, "the zero vector has no degree");
  const Ring& r = *module_->ring();
  Degree d = module_->degree(terms_[0].m, terms_[0].comp);
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    Degree e = module_->degree(terms_[i].m, terms_[i].comp);
    if (e != d)
      fail(ErrorKind::Inhomogeneous, "terms " + format_term(r, terms_[0], true) + " (degree " + d.to_string() +
                                         ") and " + format_term(r, terms_[i], true) + " (degree " + e.to_string() +
                                         ") differ");
  }
  return d;
}

bool operator==(const Vector& a, const Vector& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  return a.module_->same_as(*b.module_) && a.terms_ == b.terms_;
}

std::string Vector::to_string() const {
  if (!module_) return "[]";
  std::string s = "[";
  auto parts = components();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ", ";
    s += parts[i].to_string();
  }
  return s + "]";
}

// ---------------------------------------------------------------- Polynomial

namespace {

auto ring_cmp(const Ring& r) {
  return [&r](const Term& a, const Term& b) { return r.compare(a.m, b.m); };
}

void same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b) fail(ErrorKind::AmbientMismatch, "polynomial without ring");
  require_same_ring(*a, *b);
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  for (auto& t : terms) t.comp = 0;
  terms_ = canonicalize(std::move(terms), ring_->field(), ring_cmp(*ring_));
}

Polynomial Polynomial::constant(const RingPtr& ring, std::int64_t c) {
  Coeff v = ring->field().from_int(c);
  if (v == 0) return Polynomial(ring);
  return from_sorted(ring, {Term{Monomial{}, 0, v}});
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t i) {
  if (i >= ring->nvars()) fail(ErrorKind::InvalidArgument, "variable index out of range");
  return from_sorted(ring, {Term{ring->variable(i), 0, 1}});
}

Polynomial Polynomial::monomial(const RingPtr& ring, const Monomial& m, Coeff c) {
  c %= ring->field().characteristic();
  if (c == 0) return Polynomial(ring);
  return from_sorted(ring, {Term{m, 0, c}});
}

Polynomial Polynomial::from_sorted(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

Coeff Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().m.is_one()) return terms_.back().c;
  return 0;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (o.is_zero()) return ring_ ? *this : o;
  if (is_zero()) return o;
  same_ring(ring_, o.ring_);
  return from_sorted(ring_, merge_axpy(terms_, 1, Monomial{}, o.terms_, ring_->field(), ring_cmp(*ring_)));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  if (o.is_zero()) return ring_ ? *this : o;
  if (!ring_) return -o;
  same_ring(ring_, o.ring_);
  const auto& k = ring_->field();
  return from_sorted(ring_, merge_axpy(terms_, k.neg(1), Monomial{}, o.terms_, k, ring_cmp(*ring_)));
}

Polynomial Polynomial::operator-() const {
  if (!ring_) return *this;
  return scaled(ring_->field().neg(1));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (!ring_) return *this;
  if (!o.ring_) return o;
  same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  const auto& k = ring_->field();
  if (terms_.size() == 1) return o.mul_term(terms_[0].m, terms_[0].c);
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].m, o.terms_[0].c);
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Coeff& slot = acc[a.m * b.m];
      slot = k.add(slot, k.mul(a.c, b.c));
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c != 0) out.push_back(Term{m, 0, c});
  auto cmp = ring_cmp(*ring_);
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return cmp(a, b) > 0; });
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::scaled(Coeff c) const {
  c %= ring_->field().characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.c = ring_->field().mul(t.c, c);
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::mul_term(const Monomial& m, Coeff c) const {
  if (c == 0 || is_zero()) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) {
    t.m = t.m * m;
    t.c = ring_->field().mul(t.c, c);
  }
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(lead().c));
}

Vector Polynomial::as_vector(const ModulePtr& module, std::size_t comp) const {
  if (comp >= module->rank()) fail(ErrorKind::InvalidArgument, "component out of range");
  if (ring_) require_same_ring(*ring_, *module->ring());
  std::vector<Term> out = terms_;
  for (auto& t : out) t.comp = static_cast<std::uint32_t>(comp);
  return Vector::from_sorted(module, std::move(out));
}

bool Polynomial::is_homogeneous() const {
  if (is_zero()) return true;
  Degree d = ring_->degree(terms_[0].m);
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (ring_->degree(terms_[i].m) != d) return false;
  return true;
}

Degree Polynomial::homogeneous_degree() const {
  if (is_zero()) fail(ErrorKind::UndefinedDegree, "the zero polynomial has no degree");
  Degree d = ring_->degree(terms_[0].m);
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    Degree e = ring_->degree(terms_[i].m);
    if (e != d)
      fail(ErrorKind::Inhomogeneous, "terms " + format_term(*ring_, terms_[0], false) + " (degree " + d.to_string() +
                                         ") and " + format_term(*ring_, terms_[i], false) + " (degree " +
                                         e.to_string() + ") differ");
  }
  return d;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  return a.ring_->same_as(*b.ring_) && a.terms_ == b.terms_;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    s += coeff_prefix(ring_->field().to_signed(t.c), t.m.is_one(), i == 0);
    if (!t.m.is_one()) s += ring_->format(t.m);
  }
  return s;
}

// ---------------------------------------------------------------- free functions

Vector operator*(const Polynomial& p, const Vector& v) {
  Vector out(v.module());
  if (p.is_zero() || v.is_zero()) return out;
  require_same_ring(*p.ring(), *v.module()->ring());
  for (const auto& t : p.terms()) out = out.axpy(t.c, t.m, v);
  return out;
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
  if (images.size() != p.ring()->nvars()) fail(ErrorKind::InvalidArgument, "one image per variable required");
  RingPtr target = images.empty() ? p.ring() : images.front().ring();
  for (const auto& q : images) same_ring(target, q.ring());
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, Exponent e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= static_cast<std::size_t>(e)) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(e)];
  };
  Polynomial out(target);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target, 1).scaled(t.c);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.m.e[i]) term = term * power(i, t.m.e[i]);
    out = out + term;
  }
  return out;
}

namespace {

void enumerate(const Ring& ring, std::size_t var, std::int64_t remaining, bool exact, Monomial& cur,
               std::vector<Monomial>& out) {
  if (var == ring.nvars()) {
    if (!exact || remaining == 0) out.push_back(cur);
    return;
  }
  const std::int64_t w = ring.var_weight(var);
  for (Exponent e = 0; static_cast<std::int64_t>(e) * w <= remaining; ++e) {
    cur.e[var] = e;
    enumerate(ring, var + 1, remaining - static_cast<std::int64_t>(e) * w, exact, cur, out);
  }
  cur.e[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const Ring& ring, const Degree& gamma) {
  require_same_group(ring.group(), gamma.group());
  std::vector<Monomial> out;
  const std::int64_t w = ring.phi().scaled(gamma);
  if (w < 0) return out;
  Monomial cur;
  std::vector<Monomial> all;
  enumerate(ring, 0, w, true, cur, all);
  for (const auto& m : all)
    if (ring.degree(m) == gamma) out.push_back(m);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ring.compare(a, b) > 0; });
  return out;
}

std::vector<Monomial> monomials_up_to_weight(const Ring& ring, std::int64_t max_weight) {
  std::vector<Monomial> out;
  if (max_weight < 0) return out;
  Monomial cur;
  enumerate(ring, 0, max_weight, false, cur, out);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    std::int64_t wa = ring.weight(a), wb = ring.weight(b);
    if (wa != wb) return wa < wb;
    return ring.compare(a, b) < 0;
  });
  return out;
}

}  // namespace basym
