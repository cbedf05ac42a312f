#include "basym/groebner.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <tuple>

#include "basym/error.hpp"

namespace basym {

namespace {

std::uint32_t divmask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (m.e[i] != 0) mask |= 1u << i;
  return mask;
}

// Lead-term index over a growing list of monic vectors.
class Divisors {
 public:
  void add(const Vector& v) {
    elems_.push_back(&v);
    masks_.push_back(divmask(v.lead().m));
    active_.push_back(true);
  }
  void deactivate(std::size_t i) { active_[i] = false; }
  bool active(std::size_t i) const { return active_[i]; }
  std::size_t size() const { return elems_.size(); }
  const Vector& operator[](std::size_t i) const { return *elems_[i]; }

  const Vector* find(const Term& t, const Vector* skip = nullptr) const {
    const std::uint32_t tm = divmask(t.m);
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (!active_[i] || elems_[i] == skip) continue;
      const Term& l = elems_[i]->lead();
      if (l.comp != t.comp || (masks_[i] & ~tm) != 0) continue;
      if (l.m.divides(t.m)) return elems_[i];
    }
    return nullptr;
  }

 private:
  std::vector<const Vector*> elems_;
  std::vector<std::uint32_t> masks_;
  std::vector<bool> active_;
};

// p[head..] + c*q*g, dropping the cancelled lead.
std::vector<Term> merge_tail(const std::vector<Term>& p, std::size_t head, Coeff c, const Monomial& q,
                             const std::vector<Term>& g, const PrimeField& k, const FreeModule& M) {
  std::vector<Term> out;
  out.reserve(p.size() - head + g.size());
  std::size_t i = head, j = 0;
  auto shifted = [&](const Term& t) { return Term{t.m * q, t.comp, k.mul(c, t.c)}; };
  while (i < p.size() && j < g.size()) {
    Term t = shifted(g[j]);
    int r = M.compare(p[i], t);
    if (r > 0) {
      out.push_back(p[i++]);
    } else if (r < 0) {
      out.push_back(t);
      ++j;
    } else {
      Coeff s = k.add(p[i].c, t.c);
      if (s != 0) out.push_back(Term{t.m, t.comp, s});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), p.begin() + static_cast<std::ptrdiff_t>(i), p.end());
  for (; j < g.size(); ++j) out.push_back(shifted(g[j]));
  return out;
}

Vector reduce(const Vector& v, const Divisors& basis, const Vector* skip = nullptr) {
  if (v.is_zero()) return v;
  const FreeModule& M = *v.module();
  const PrimeField& k = M.ring()->field();
  std::vector<Term> p = v.terms();
  std::vector<Term> rem;
  std::size_t head = 0;
  while (head < p.size()) {
    const Term t = p[head];
    const Vector* g = basis.find(t, skip);
    if (!g) {
      rem.push_back(t);
      ++head;
      continue;
    }
    Coeff c = k.neg(k.mul(t.c, k.inv(g->lead().c)));
    p = merge_tail(p, head, c, t.m / g->lead().m, g->terms(), k, M);
    head = 0;
  }
  return Vector::from_sorted(v.module(), std::move(rem));
}

std::int64_t sugar_of(const Vector& v) {
  std::int64_t s = std::numeric_limits<std::int64_t>::min();
  for (const auto& t : v.terms()) s = std::max(s, v.module()->weight(t.m, t.comp));
  return s;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  std::int64_t sugar;
};

struct Input {
  std::size_t index;
  std::int64_t sugar;
};

class Buchberger {
 public:
  Buchberger(ModulePtr module, const BuchbergerOptions& opt) : M_(std::move(module)), opt_(opt) {
    rank_one_ = M_->rank() == 1;
  }

  GroebnerBasis run(const std::vector<Vector>& gens) {
    std::vector<Input> inputs;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].is_zero()) continue;
      if (opt_.require_homogeneous) gens[i].homogeneous_degree();
      inputs.push_back({i, sugar_of(gens[i])});
    }
    std::stable_sort(inputs.begin(), inputs.end(), [](const Input& a, const Input& b) { return a.sugar < b.sugar; });
    std::vector<std::pair<std::size_t, Vector>> minimal;

    std::size_t next_input = 0;
    while (!pairs_.empty() || next_input < inputs.size()) {
      std::size_t best = pairs_.size();
      for (std::size_t p = 0; p < pairs_.size(); ++p)
        if (best == pairs_.size() || before(pairs_[p], pairs_[best])) best = p;
      const bool take_input =
          next_input < inputs.size() && (best == pairs_.size() || inputs[next_input].sugar < pairs_[best].sugar);
      if (take_input) {
        const Input in = inputs[next_input++];
        Vector h = reduce(gens[in.index].reembed_if_needed(M_), divisors_);
        if (!h.is_zero()) {
          h = h.monic();
          minimal.emplace_back(in.index, h);
          insert(std::move(h), in.sugar);
        }
        continue;
      }
      Pair pr = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      const Vector& gi = *polys_[pr.i];
      const Vector& gj = *polys_[pr.j];
      Vector s = gi.mul_term(pr.lcm / gi.lead().m, 1).axpy(M_->ring()->field().neg(1), pr.lcm / gj.lead().m, gj);
      Vector h = reduce(s, divisors_);
      if (!h.is_zero()) insert(h.monic(), pr.sugar);
    }

    GroebnerBasis gb;
    gb.module = M_;
    gb.reduced = opt_.reduce;
    std::vector<const Vector*> keep;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (divisors_.active(i)) keep.push_back(polys_[i].get());
    for (const Vector* g : keep) gb.generators.push_back(opt_.reduce ? reduce_tail(*g) : *g);
    std::sort(gb.generators.begin(), gb.generators.end(),
              [&](const Vector& a, const Vector& b) { return M_->compare(a.lead(), b.lead()) < 0; });
    std::sort(minimal.begin(), minimal.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [idx, v] : minimal) gb.minimal_generators.push_back(std::move(v));
    return gb;
  }

 private:
  bool before(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = M_->compare(a.lcm, a.comp, b.lcm, b.comp);
    if (c != 0) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  }

  Vector reduce_tail(const Vector& g) const {
    Vector tail = Vector::from_sorted(M_, std::vector<Term>(g.terms().begin() + 1, g.terms().end()));
    Vector r = reduce(tail, divisors_, &g);
    std::vector<Term> out;
    out.reserve(r.size() + 1);
    out.push_back(g.lead());
    out.insert(out.end(), r.terms().begin(), r.terms().end());
    return Vector::from_sorted(M_, std::move(out));
  }

  bool disjoint(const Monomial& a, const Monomial& b) const { return rank_one_ && a.coprime(b); }

  // Gebauer-Möller update for a new basis element.
  void insert(Vector h, std::int64_t sugar) {
    const std::size_t hn = polys_.size();
    polys_.push_back(std::make_unique<Vector>(std::move(h)));
    sugars_.push_back(sugar);
    const Vector& hv = *polys_[hn];
    const Term& lh = hv.lead();
    const Ring& R = *M_->ring();

    std::vector<Pair> C;
    for (std::size_t g = 0; g < hn; ++g) {
      if (!divisors_.active(g)) continue;
      const Term& lg = polys_[g]->lead();
      if (lg.comp != lh.comp) continue;
      Monomial l = lg.m.lcm(lh.m);
      std::int64_t s = std::max(sugars_[g] + R.weight(l / lg.m), sugar + R.weight(l / lh.m));
      C.push_back({g, hn, l, lh.comp, s});
    }
    std::vector<Pair> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Pair& p = C[a];
      bool keep = disjoint(polys_[p.i]->lead().m, lh.m);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (C[b].lcm.divides(p.lcm)) keep = false;
        for (std::size_t b = 0; b < D.size() && keep; ++b)
          if (D[b].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + D.size());
    for (const auto& p : pairs_) {
      if (p.comp == lh.comp && lh.m.divides(p.lcm)) {
        Monomial li = polys_[p.i]->lead().m.lcm(lh.m);
        Monomial lj = polys_[p.j]->lead().m.lcm(lh.m);
        if (!(li == p.lcm) && !(lj == p.lcm)) continue;
      }
      kept.push_back(p);
    }
    for (const auto& p : D)
      if (!disjoint(polys_[p.i]->lead().m, lh.m)) kept.push_back(p);
    pairs_ = std::move(kept);

    for (std::size_t g = 0; g < hn; ++g) {
      if (!divisors_.active(g)) continue;
      const Term& lg = polys_[g]->lead();
      if (lg.comp == lh.comp && lh.m.divides(lg.m)) divisors_.deactivate(g);
    }
    divisors_.add(hv);
  }

  ModulePtr M_;
  BuchbergerOptions opt_;
  bool rank_one_ = false;
  std::vector<std::unique_ptr<Vector>> polys_;
  std::vector<std::int64_t> sugars_;
  Divisors divisors_;
  std::vector<Pair> pairs_;
};

ModulePtr common_module(const std::vector<Vector>& gens) {
  ModulePtr M;
  for (const auto& g : gens) {
    if (!g.module()) continue;
    if (!M) {
      M = g.module();
    } else if (M != g.module()) {
      require_same_module(*M, *g.module());
    }
  }
  return M;
}

bool involves(const Monomial& m, const std::vector<bool>& block) {
  for (std::size_t i = 0; i < block.size(); ++i)
    if (block[i] && m.e[i] != 0) return true;
  return false;
}

}  // namespace

std::vector<Term> GroebnerBasis::leads() const {
  std::vector<Term> out;
  for (const auto& g : generators) out.push_back(g.lead());
  return out;
}

Vector normal_form(const Vector& v, const std::vector<Vector>& basis) {
  Divisors d;
  std::vector<Vector> monic;
  monic.reserve(basis.size());
  for (const auto& b : basis)
    if (!b.is_zero()) {
      if (v.module()) require_same_module(*v.module(), *b.module());
      monic.push_back(b.monic());
    }
  for (const auto& b : monic) d.add(b);
  return reduce(v, d);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  if (!f.ring()) return f;
  ModulePtr M = ring_as_module(f.ring());
  std::vector<Vector> b;
  for (const auto& g : basis) b.push_back(g.as_vector(M));
  return normal_form(f.as_vector(M), b).component(0);
}

GroebnerBasis buchberger(const std::vector<Vector>& gens, const BuchbergerOptions& options) {
  ModulePtr M = common_module(gens);
  if (!M) {
    GroebnerBasis gb;
    return gb;
  }
  return Buchberger(M, options).run(gens);
}

std::vector<Polynomial> groebner_ideal(const std::vector<Polynomial>& gens, bool require_homogeneous) {
  RingPtr R;
  for (const auto& g : gens)
    if (g.ring()) R = g.ring();
  if (!R) return {};
  ModulePtr M = ring_as_module(R);
  std::vector<Vector> v;
  for (const auto& g : gens) v.push_back(g.ring() ? g.as_vector(M) : Vector(M));
  GroebnerBasis gb = buchberger(v, {true, require_homogeneous});
  std::vector<Polynomial> out;
  for (const auto& g : gb.generators) out.push_back(g.component(0));
  return out;
}

std::vector<Vector> initial_submodule(const std::vector<Vector>& gens) {
  GroebnerBasis gb = buchberger(gens);
  std::vector<Vector> out;
  for (const auto& g : gb.generators) out.push_back(Vector::from_sorted(gb.module, {Term{g.lead().m, g.lead().comp, 1}}));
  return out;
}

std::vector<Vector> minimal_generators(const std::vector<Vector>& gens) {
  return buchberger(gens, {false, true}).minimal_generators;
}

ModulePtr syzygy_source(const ModulePtr& ambient, const std::vector<Vector>& gens) {
  std::vector<Degree> shifts;
  for (const auto& g : gens) {
    if (g.is_zero()) fail(ErrorKind::InvalidArgument, "syzygies of a zero generator are not graded");
    shifts.push_back(g.homogeneous_degree());
  }
  return make_free_module(ambient->ring(), std::move(shifts));
}

std::vector<Vector> syzygy_basis(const std::vector<Vector>& gens, const ModulePtr& source) {
  ModulePtr F = common_module(gens);
  if (!F) return {};
  if (source->rank() != gens.size()) fail(ErrorKind::InvalidArgument, "syzygy source rank mismatch");
  const std::size_t r = F->rank();
  std::vector<Degree> shifts = F->shifts();
  shifts.insert(shifts.end(), source->shifts().begin(), source->shifts().end());
  ModulePtr E = make_free_module(F->ring(), std::move(shifts), PositionRule::TermOverPosition, r);
  std::vector<Vector> lifted;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Term> t = gens[i].terms();
    t.push_back(Term{Monomial{}, static_cast<std::uint32_t>(r + i), 1});
    lifted.emplace_back(E, std::move(t));
  }
  GroebnerBasis gb = buchberger(lifted, {false, true});
  std::vector<Vector> syz;
  for (const auto& g : gb.generators) {
    if (g.lead().comp < r) continue;
    std::vector<Term> t = g.terms();
    for (auto& x : t) x.comp -= static_cast<std::uint32_t>(r);
    syz.emplace_back(source, std::move(t));
  }
  return minimal_generators(syz);
}

std::vector<Vector> syzygy_basis(const std::vector<Vector>& gens) {
  ModulePtr F = common_module(gens);
  if (!F) return {};
  return syzygy_basis(gens, syzygy_source(F, gens));
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const std::vector<bool>& block) {
  RingPtr R;
  for (const auto& g : gens)
    if (g.ring()) R = g.ring();
  if (!R) return {};
  std::vector<bool> b = block;
  b.resize(R->nvars(), false);
  RingPtr E = R->with_order(MonomialOrder::elimination(b));
  std::vector<Polynomial> moved;
  for (const auto& g : gens) moved.emplace_back(E, g.terms());
  std::vector<Polynomial> out;
  for (const auto& g : groebner_ideal(moved, false)) {
    bool clean = true;
    for (const auto& t : g.terms()) clean = clean && !involves(t.m, b);
    if (clean) out.emplace_back(R, g.terms());
  }
  return out;
}

std::vector<Vector> eliminate(const std::vector<Vector>& gens, const std::vector<bool>& block) {
  ModulePtr F = common_module(gens);
  if (!F) return {};
  std::vector<bool> b = block;
  b.resize(F->ring()->nvars(), false);
  RingPtr E = F->ring()->with_order(MonomialOrder::elimination(b));
  ModulePtr FE = make_free_module(E, F->shifts());
  std::vector<Vector> moved;
  for (const auto& g : gens) moved.emplace_back(FE, g.terms());
  GroebnerBasis gb = buchberger(moved, {true, false});
  std::vector<Vector> out;
  for (const auto& g : gb.generators) {
    bool clean = true;
    for (const auto& t : g.terms()) clean = clean && !involves(t.m, b);
    if (clean) out.emplace_back(F, g.terms());
  }
  return out;
}

std::size_t krull_dimension(const std::vector<Polynomial>& gens) {
  RingPtr R;
  for (const auto& g : gens)
    if (g.ring()) R = g.ring();
  if (!R) fail(ErrorKind::InvalidArgument, "krull_dimension needs a ring");
  const std::size_t n = R->nvars();
  std::vector<std::uint32_t> leads;
  for (const auto& g : groebner_ideal(gens, false)) leads.push_back(divmask(g.lead().m));
  std::size_t best = 0;
  for (std::uint32_t z = 0; z < (1u << n); ++z) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(z));
    if (size <= best) continue;
    bool free = std::none_of(leads.begin(), leads.end(), [z](std::uint32_t l) { return (l & ~z) == 0; });
    if (free) best = size;
  }
  return best;
}

bool is_complete_intersection(const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> nz;
  for (const auto& g : gens) {
    if (g.is_zero()) return false;
    if (!g.is_homogeneous()) return false;
    nz.push_back(g);
  }
  if (nz.empty()) return true;
  const std::size_t n = nz.front().ring()->nvars();
  return nz.size() <= n && krull_dimension(nz) == n - nz.size();
}

bool reduces_to_zero(const Vector& v, const GroebnerBasis& gb) { return normal_form(v, gb.generators).is_zero(); }

}  // namespace basym
