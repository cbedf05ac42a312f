#include <algorithm>

#include "basym/error.hpp"
#include "basym/homalg.hpp"

namespace basym {

namespace {

// Division with recorded quotients; the input must reduce to zero.
std::vector<Term> quotients(Vector p, const std::vector<Vector>& g) {
  const PrimeField& k = p.module()->ring()->field();
  std::vector<Term> q;
  while (!p.is_zero()) {
    const Term t = p.lead();
    std::size_t l = 0;
    for (; l < g.size(); ++l) {
      const Term& lt = g[l].lead();
      if (lt.comp == t.comp && lt.m.divides(t.m)) break;
    }
    if (l == g.size()) fail(ErrorKind::Internal, "Schreyer S-pair does not reduce to zero");
    const Monomial m = t.m / g[l].lead().m;
    q.push_back(Term{m, static_cast<std::uint32_t>(l), t.c});
    p = p.axpy(k.neg(t.c), m, g[l]);
  }
  return q;
}

// One Schreyer step: g is a monic Gröbner basis in `F` (a Schreyer module),
// sorted; returns the syzygy Gröbner basis in `next`.
std::vector<Vector> schreyer_syzygies(const std::vector<Vector>& g, const ModulePtr& next) {
  const PrimeField& k = next->ring()->field();
  std::vector<Vector> out;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const Term& lj = g[j].lead();
    std::vector<std::pair<std::size_t, Monomial>> cand;
    for (std::size_t l = j + 1; l < g.size(); ++l) {
      const Term& ll = g[l].lead();
      if (ll.comp != lj.comp) continue;
      cand.emplace_back(l, lj.m.lcm(ll.m) / lj.m);
    }
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool minimal = true;
      for (std::size_t b = 0; b < cand.size() && minimal; ++b) {
        if (a == b || !cand[b].second.divides(cand[a].second)) continue;
        if (!(cand[b].second == cand[a].second) || b < a) minimal = false;
      }
      if (!minimal) continue;
      const std::size_t l = cand[a].first;
      const Monomial& mj = cand[a].second;
      const Monomial ml = lj.m.lcm(g[l].lead().m) / g[l].lead().m;
      Vector s = g[j].mul_term(mj, 1).axpy(k.neg(1), ml, g[l]);
      std::vector<Term> terms{Term{mj, static_cast<std::uint32_t>(j), 1},
                              Term{ml, static_cast<std::uint32_t>(l), k.neg(1)}};
      for (const auto& q : quotients(std::move(s), g)) terms.push_back(Term{q.m, q.comp, k.neg(q.c)});
      out.emplace_back(next, std::move(terms));
    }
  }
  return out;
}

}  // namespace

GradedComplex free_resolution(const Presentation& p, std::size_t length) {
  const RingPtr& R = p.ring();
  if (length > R->nvars() + 1)
    fail(ErrorKind::ResolutionLength, "requested length " + std::to_string(length) + " exceeds " +
                                          std::to_string(R->nvars() + 1) + " for " + std::to_string(R->nvars()) +
                                          " variables");
  const FreeModule& F0 = *p.generators;
  SchreyerData sd;
  for (std::size_t j = 0; j < F0.rank(); ++j) {
    sd.total.push_back(Monomial{});
    sd.tie.push_back({static_cast<std::uint32_t>(j)});
  }
  GradedComplex c;
  c.modules.push_back(std::make_shared<const FreeModule>(R, F0.shifts(), sd));

  std::vector<Vector> rel;
  for (const auto& r : p.relations)
    if (!r.is_zero()) rel.push_back(r.reembed(c.modules[0]));
  std::vector<Vector> g = buchberger(rel).generators;

  for (std::size_t level = 0; level <= length && !g.empty(); ++level) {
    const ModulePtr F = c.modules.back();
    // Sorting by the exponent of one variable keeps syzygy leads free of it.
    const std::size_t var = level % R->nvars();
    std::stable_sort(g.begin(), g.end(), [&](const Vector& a, const Vector& b) {
      if (a.lead().comp != b.lead().comp) return a.lead().comp < b.lead().comp;
      return a.lead().m.e[var] > b.lead().m.e[var];
    });
    SchreyerData next;
    std::vector<Degree> shifts;
    for (std::size_t j = 0; j < g.size(); ++j) {
      const Term& l = g[j].lead();
      next.total.push_back(F->schreyer().total[l.comp] * l.m);
      auto tie = F->schreyer().tie[l.comp];
      tie.push_back(static_cast<std::uint32_t>(j));
      next.tie.push_back(std::move(tie));
      shifts.push_back(g[j].homogeneous_degree());
    }
    ModulePtr N = std::make_shared<const FreeModule>(R, std::move(shifts), std::move(next));
    c.modules.push_back(N);
    c.maps.push_back(GradedMap{N, F, g});
    if (level == length) break;
    g = schreyer_syzygies(g, N);
  }

  GradedComplex m = minimalize(c);
  while (m.maps.size() > length) {
    m.maps.pop_back();
    m.modules.pop_back();
  }
  return m;
}

GradedComplex minimalize(const GradedComplex& c) {
  const std::size_t n = c.modules.size();
  std::vector<std::vector<bool>> alive(n);
  for (std::size_t i = 0; i < n; ++i) alive[i].assign(c.modules[i]->rank(), true);
  std::vector<std::vector<Vector>> cols(c.maps.size());
  for (std::size_t i = 0; i < c.maps.size(); ++i) cols[i] = c.maps[i].columns;

  for (std::size_t i = 1; i < n; ++i) {
    auto& d = cols[i - 1];
    const PrimeField& k = c.modules[i]->ring()->field();
    for (;;) {
      std::size_t pj = 0, pk = 0;
      Coeff pc = 0;
      for (std::size_t j = 0; j < d.size() && pc == 0; ++j) {
        if (!alive[i][j]) continue;
        for (const auto& t : d[j].terms())
          if (t.m.is_one() && alive[i - 1][t.comp]) {
            pj = j;
            pk = t.comp;
            pc = t.c;
            break;
          }
      }
      if (pc == 0) break;
      const Coeff inv = k.inv(pc);
      const Vector pivot = d[pj];
      for (std::size_t l = 0; l < d.size(); ++l) {
        if (l == pj || !alive[i][l]) continue;
        Polynomial a = d[l].component(pk);
        if (a.is_zero()) continue;
        d[l] = d[l] - a.scaled(inv) * pivot;
      }
      alive[i][pj] = false;
      alive[i - 1][pk] = false;
    }
  }

  GradedComplex out;
  std::vector<std::vector<std::uint32_t>> renum(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Degree> shifts;
    renum[i].assign(alive[i].size(), 0);
    for (std::size_t j = 0; j < alive[i].size(); ++j)
      if (alive[i][j]) {
        renum[i][j] = static_cast<std::uint32_t>(shifts.size());
        shifts.push_back(c.modules[i]->shifts()[j]);
      }
    out.modules.push_back(make_free_module(c.modules[i]->ring(), std::move(shifts)));
  }
  for (std::size_t i = 1; i < n; ++i) {
    GradedMap m{out.modules[i], out.modules[i - 1], {}};
    for (std::size_t j = 0; j < cols[i - 1].size(); ++j) {
      if (!alive[i][j]) continue;
      std::vector<Term> terms;
      for (const auto& t : cols[i - 1][j].terms())
        if (alive[i - 1][t.comp]) terms.push_back(Term{t.m, renum[i - 1][t.comp], t.c});
      m.columns.emplace_back(m.target, std::move(terms));
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

}  // namespace basym
