#include "basym/homalg.hpp"

#include <algorithm>
#include <map>

#include "basym/error.hpp"

namespace basym {

Presentation free_presentation(const ModulePtr& F) { return {F, {}}; }

Presentation cyclic_presentation(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  Presentation p{ring_as_module(ring), {}};
  for (const auto& g : gens)
    if (!g.is_zero()) p.relations.push_back(g.as_vector(p.generators));
  return p;
}

Presentation image_presentation(const Presentation& M, const std::vector<Vector>& gens) {
  std::vector<Vector> g;
  std::vector<Degree> shifts;
  for (const auto& v : gens) {
    if (v.is_zero()) continue;
    g.push_back(v.reembed_if_needed(M.generators));
    shifts.push_back(v.homogeneous_degree());
  }
  Presentation out{make_free_module(M.ring(), shifts), {}};
  if (g.empty()) return out;
  const std::size_t m = g.size();
  std::vector<Vector> all = g;
  for (const auto& r : M.relations)
    if (!r.is_zero()) all.push_back(r.reembed_if_needed(M.generators));
  if (all.size() == 1) return out;
  std::vector<Vector> rel;
  for (const auto& s : syzygy_basis(all)) {
    std::vector<Term> t;
    for (const auto& x : s.terms())
      if (x.comp < m) t.push_back(x);
    if (!t.empty()) rel.emplace_back(out.generators, std::move(t));
  }
  out.relations = minimal_generators(rel);
  return out;
}

// ---------------------------------------------------------------- maps and complexes

Vector GradedMap::apply(const Vector& v) const {
  Vector out(target);
  for (const auto& t : v.terms()) out = out.axpy(t.c, t.m, columns[t.comp]);
  return out;
}

bool GradedMap::is_degree_zero() const {
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].is_zero()) continue;
    if (!columns[j].is_homogeneous() || columns[j].homogeneous_degree() != source->shifts()[j]) return false;
  }
  return true;
}

std::vector<Vector> kernel(const GradedMap& m) {
  std::vector<Vector> out;
  std::vector<Vector> nonzero;
  std::vector<std::uint32_t> index;
  std::vector<Degree> shifts;
  for (std::size_t j = 0; j < m.columns.size(); ++j) {
    if (m.columns[j].is_zero()) {
      out.push_back(Vector::basis(m.source, j));
    } else {
      nonzero.push_back(m.columns[j]);
      index.push_back(static_cast<std::uint32_t>(j));
      shifts.push_back(m.source->shifts()[j]);
    }
  }
  if (nonzero.size() < 2) return out;
  ModulePtr src = make_free_module(m.source->ring(), shifts);
  for (const auto& s : syzygy_basis(nonzero, src)) {
    std::vector<Term> t = s.terms();
    for (auto& x : t) x.comp = index[x.comp];
    out.emplace_back(m.source, std::move(t));
  }
  return out;
}

bool GradedComplex::composes_to_zero() const {
  for (std::size_t i = 1; i < maps.size(); ++i)
    for (const auto& col : maps[i].columns)
      if (!maps[i - 1].apply(col).is_zero()) return false;
  return true;
}

bool GradedComplex::is_minimal() const {
  for (const auto& m : maps)
    for (const auto& col : m.columns)
      for (const auto& t : col.terms())
        if (t.m.is_one()) return false;
  return true;
}

// ---------------------------------------------------------------- Betti tables

void BettiTable::add(std::size_t i, const Degree& eta, std::size_t count) {
  if (count == 0) return;
  rows_[i][eta] += count;
}

std::size_t BettiTable::multiplicity(std::size_t i, const Degree& eta) const {
  auto r = rows_.find(i);
  if (r == rows_.end()) return 0;
  auto e = r->second.find(eta);
  return e == r->second.end() ? 0 : e->second;
}

std::set<Degree> BettiTable::support(std::size_t i) const {
  std::set<Degree> out;
  auto r = rows_.find(i);
  if (r != rows_.end())
    for (const auto& [d, n] : r->second) out.insert(d);
  return out;
}

std::vector<BettiTable::Entry> BettiTable::ordered(const PositivityFunctional& phi) const {
  std::vector<Entry> out;
  for (const auto& [i, row] : rows_)
    for (const auto& [d, n] : row) out.push_back({i, d, n});
  std::stable_sort(out.begin(), out.end(), [&](const Entry& a, const Entry& b) {
    if (a.i != b.i) return a.i < b.i;
    std::int64_t wa = phi.scaled(a.degree), wb = phi.scaled(b.degree);
    if (wa != wb) return wa < wb;
    return a.degree < b.degree;
  });
  return out;
}

BettiTable betti_table(const GradedComplex& c) {
  BettiTable b;
  for (std::size_t i = 0; i < c.modules.size(); ++i)
    for (const auto& s : c.modules[i]->shifts()) b.add(i, s);
  return b;
}

BettiTable tor_table(const Presentation& p, std::size_t max_i) {
  // beta_i = 0 for i > nvars (Hilbert syzygy theorem)
  const std::size_t n = p.generators->ring()->nvars();
  return betti_table(free_resolution(p, std::min(max_i, n + 1)));
}

// ---------------------------------------------------------------- specialization

Vector specialize(const Vector& v, const ModulePtr& target, const std::vector<int>& var_map) {
  std::vector<Term> out;
  for (const auto& t : v.terms()) {
    Monomial m;
    bool keep = true;
    for (std::size_t i = 0; i < var_map.size() && keep; ++i) {
      if (t.m.e[i] == 0) continue;
      if (var_map[i] < 0) {
        keep = false;
      } else {
        m.e[static_cast<std::size_t>(var_map[i])] = t.m.e[i];
      }
    }
    if (keep) out.push_back(Term{m, t.comp, t.c});
  }
  return Vector(target, std::move(out));
}

GradedComplex specialize(const GradedComplex& c, const RingPtr& target, const std::vector<int>& var_map) {
  GradedComplex out;
  for (const auto& F : c.modules) out.modules.push_back(make_free_module(target, F->shifts()));
  for (std::size_t i = 0; i < c.maps.size(); ++i) {
    GradedMap m{out.modules[i + 1], out.modules[i], {}};
    for (const auto& col : c.maps[i].columns) m.columns.push_back(specialize(col, m.target, var_map));
    out.maps.push_back(std::move(m));
  }
  return out;
}

Presentation specialize(const Presentation& p, const RingPtr& target, const std::vector<int>& var_map) {
  Presentation out{make_free_module(target, p.generators->shifts()), {}};
  for (const auto& r : p.relations) {
    Vector v = specialize(r, out.generators, var_map);
    if (!v.is_zero()) out.relations.push_back(std::move(v));
  }
  return out;
}

Presentation subquotient_presentation(const GradedComplex& c, std::size_t i) {
  if (i >= c.modules.size()) return {make_free_module(c.ring(), {}), {}};
  const ModulePtr& Fi = c.modules[i];
  std::vector<Vector> cycles;
  if (i == 0) {
    for (std::size_t j = 0; j < Fi->rank(); ++j) cycles.push_back(Vector::basis(Fi, j));
  } else {
    cycles = kernel(c.d(i));
  }
  Presentation quotient{Fi, {}};
  if (i + 1 <= c.length())
    for (const auto& col : c.d(i + 1).columns)
      if (!col.is_zero()) quotient.relations.push_back(col);
  return image_presentation(quotient, cycles);
}

// ---------------------------------------------------------------- strands

namespace {

using BasisKey = std::pair<std::uint32_t, Monomial>;

struct KeyLess {
  bool operator()(const BasisKey& a, const BasisKey& b) const {
    if (a.first != b.first) return a.first < b.first;
    return a.second.e < b.second.e;
  }
};

void distribute(const std::vector<std::size_t>& vars, std::size_t k, std::int64_t left, Monomial& cur,
                std::vector<Monomial>& out) {
  if (k + 1 >= vars.size()) {
    if (vars.empty()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    cur.e[vars[k]] = static_cast<Exponent>(left);
    out.push_back(cur);
    cur.e[vars[k]] = 0;
    return;
  }
  for (std::int64_t e = left; e >= 0; --e) {
    cur.e[vars[k]] = static_cast<Exponent>(e);
    distribute(vars, k + 1, left - e, cur, out);
  }
  cur.e[vars[k]] = 0;
}

// T-monomials (ambient coordinates) whose block degrees are exactly `need`.
std::vector<Monomial> block_monomials(const StrandLayout& L, std::size_t nvars, const std::vector<std::int64_t>& need) {
  std::vector<Monomial> out{Monomial{}};
  for (std::size_t b = 0; b < L.blocks; ++b) {
    std::vector<std::size_t> vars;
    for (std::size_t v = 0; v < nvars; ++v)
      if (L.block_of[v] == static_cast<int>(b)) vars.push_back(v);
    std::vector<Monomial> next;
    for (Monomial base : out) distribute(vars, 0, need[b], base, next);
    out = std::move(next);
  }
  return out;
}

}  // namespace

GradedComplex strand(const GradedComplex& c, const StrandLayout& L, const std::vector<std::int64_t>& t) {
  const Ring& R = *c.ring();
  const std::size_t n = R.nvars();
  const GroupPtr& G = L.base->group();
  if (t.size() != L.blocks) fail(ErrorKind::InvalidArgument, "strand degree has wrong length");

  struct Basis {
    std::vector<BasisKey> elems;
    std::map<BasisKey, std::uint32_t, KeyLess> index;
  };
  std::vector<Basis> bases(c.modules.size());
  GradedComplex out;
  for (std::size_t i = 0; i < c.modules.size(); ++i) {
    const FreeModule& F = *c.modules[i];
    std::vector<Degree> shifts;
    for (std::size_t j = 0; j < F.rank(); ++j) {
      const Degree& sh = F.shifts()[j];
      std::vector<std::int64_t> need = extra_part(sh, G);
      bool ok = true;
      for (std::size_t b = 0; b < need.size(); ++b) {
        need[b] = t[b] - need[b];
        ok = ok && need[b] >= 0;
      }
      if (!ok) continue;
      for (const auto& a : block_monomials(L, n, need)) {
        auto key = std::make_pair(static_cast<std::uint32_t>(j), a);
        bases[i].index.emplace(key, static_cast<std::uint32_t>(bases[i].elems.size()));
        bases[i].elems.push_back(key);
        shifts.push_back(base_part(sh + R.degree(a), G));
      }
    }
    out.modules.push_back(make_free_module(L.base, std::move(shifts)));
  }
  for (std::size_t i = 1; i < c.modules.size(); ++i) {
    GradedMap m{out.modules[i], out.modules[i - 1], {}};
    for (const auto& [j, a] : bases[i].elems) {
      std::vector<Term> terms;
      for (const auto& term : c.d(i).columns[j].terms()) {
        Monomial sm, tm = a;
        for (std::size_t v = 0; v < n; ++v) {
          if (term.m.e[v] == 0) continue;
          if (L.base_index[v] >= 0) {
            sm.e[static_cast<std::size_t>(L.base_index[v])] = term.m.e[v];
          } else {
            tm.e[v] += term.m.e[v];
          }
        }
        auto it = bases[i - 1].index.find({term.comp, tm});
        if (it == bases[i - 1].index.end()) fail(ErrorKind::Internal, "strand differential leaves the strand");
        terms.push_back(Term{sm, it->second, term.c});
      }
      m.columns.emplace_back(m.target, std::move(terms));
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------- Hilbert functions

HilbertFunction::HilbertFunction(const Presentation& p) : F_(p.generators) {
  std::vector<Vector> rel;
  for (const auto& r : p.relations)
    if (!r.is_zero()) rel.push_back(r.reembed_if_needed(F_));
  leads_.resize(F_->rank());
  if (rel.empty()) return;
  gb_ = buchberger(rel);
  for (const auto& g : gb_.generators) leads_[g.lead().comp].push_back(g.lead().m);
}

std::size_t HilbertFunction::operator()(const Degree& gamma) const {
  const Ring& R = *F_->ring();
  std::size_t total = 0;
  for (std::size_t j = 0; j < F_->rank(); ++j) {
    if (!leads_[j].empty() && leads_[j].front().is_one() && leads_[j].size() == 1) continue;
    for (const auto& m : monomials_of_degree(R, gamma - F_->shifts()[j])) {
      bool standard = true;
      for (const auto& l : leads_[j])
        if (l.divides(m)) {
          standard = false;
          break;
        }
      if (standard) ++total;
    }
  }
  return total;
}

std::map<Degree, std::size_t> hilbert_window(const Presentation& p, const std::vector<Degree>& degrees) {
  HilbertFunction h(p);
  std::map<Degree, std::size_t> out;
  for (const auto& d : degrees) out[d] = h(d);
  return out;
}

}  // namespace basym
