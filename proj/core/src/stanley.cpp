#include "basym/stanley.hpp"

#include <algorithm>
#include <map>

#include "basym/error.hpp"

namespace basym {

namespace {

using Mask = std::uint32_t;

void minimize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.total() < b.total(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  gens = std::move(out);
}

// std(J) = std(J + (x)) + x std(J : x), x the lowest allowed variable in a generator.
void split(std::vector<Monomial> gens, Monomial u, Mask allowed, std::size_t nvars, std::vector<std::pair<Monomial, Mask>>& out) {
  for (;;) {
    for (const auto& g : gens)
      if (g.is_one()) return;
    std::size_t x = nvars;
    for (std::size_t v = 0; v < nvars && x == nvars; ++v) {
      if (!(allowed >> v & 1U)) continue;
      for (const auto& g : gens)
        if (g.e[v] > 0) {
          x = v;
          break;
        }
    }
    if (x == nvars) {
      out.emplace_back(u, allowed);
      return;
    }
    std::vector<Monomial> without, colon;
    for (const auto& g : gens) {
      if (g.e[x] == 0) without.push_back(g);
      Monomial c = g;
      if (c.e[x] > 0) --c.e[x];
      colon.push_back(c);
    }
    split(std::move(without), u, allowed & ~(Mask{1} << x), nvars, out);
    minimize(colon);
    gens = std::move(colon);
    ++u.e[x];
  }
}

Degree monomial_degree(const Ring& R, const Monomial& m) { return R.degree(m); }

RingPtr permuted(const Ring& R, const std::vector<std::size_t>& order) {
  std::vector<std::string> names;
  std::vector<Degree> degs;
  for (auto v : order) {
    names.push_back(R.names()[v]);
    degs.push_back(R.var_degrees()[v]);
  }
  return make_ring(R.field(), names, degs, R.phi());
}

// new[i] = old[order[i]]
Polynomial permute(const Polynomial& f, const RingPtr& target, const std::vector<std::size_t>& order, bool forward) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (forward)
        m.e[i] = t.m.e[order[i]];
      else
        m.e[order[i]] = t.m.e[i];
    }
    terms.push_back(Term{m, 0, t.c});
  }
  return Polynomial(target, std::move(terms));
}

// J : x_v^infty via a grevlex basis with x_v last.
std::vector<Polynomial> saturate(const std::vector<Polynomial>& J, const RingPtr& R, std::size_t v) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < R->nvars(); ++i)
    if (i != v) order.push_back(i);
  order.push_back(v);
  RingPtr P = permuted(*R, order);
  std::vector<Polynomial> moved;
  for (const auto& f : J) moved.push_back(permute(f, P, order, true));
  const std::size_t last = R->nvars() - 1;
  std::vector<Polynomial> out;
  for (const auto& g : groebner_ideal(moved)) {
    Exponent k = g.terms().front().m.e[last];
    for (const auto& t : g.terms()) k = std::min(k, t.m.e[last]);
    std::vector<Term> terms = g.terms();
    for (auto& t : terms) t.m.e[last] -= k;
    out.push_back(permute(Polynomial(P, std::move(terms)), R, order, false));
  }
  return out;
}

void enumerate_component(const SupportComponent& c, const PositivityFunctional& phi, std::int64_t max_weight,
                         std::size_t from, const Degree& at, std::vector<Degree>& out) {
  if (phi.scaled(at) > max_weight) return;
  if (from == c.generators.size()) {
    out.push_back(at);
    return;
  }
  Degree d = at;
  while (phi.scaled(d) <= max_weight) {
    enumerate_component(c, phi, max_weight, from + 1, d, out);
    d += c.generators[from];
  }
}

}  // namespace

std::size_t StanleyDecomposition::count(const Degree& gamma) const {
  std::size_t n = 0;
  const Ring& R = *module->ring();
  for (const auto& s : summands) {
    for (const auto& m : monomials_of_degree(R, gamma - s.degree)) {
      bool inside = true;
      for (std::size_t v = 0; v < R.nvars() && inside; ++v)
        if (m.e[v] > 0 && std::find(s.vars.begin(), s.vars.end(), v) == s.vars.end()) inside = false;
      n += inside;
    }
  }
  return n;
}

StanleyDecomposition stanley_decomposition(const ModulePtr& F, const std::vector<Term>& monomial_gens) {
  const Ring& R = *F->ring();
  const std::size_t n = R.nvars();
  StanleyDecomposition out{F, {}};
  for (std::size_t j = 0; j < F->rank(); ++j) {
    std::vector<Monomial> gens;
    for (const auto& t : monomial_gens) {
      if (t.comp >= F->rank()) fail(ErrorKind::InvalidArgument, "monomial generator outside the free module");
      if (t.comp == j) gens.push_back(t.m);
    }
    minimize(gens);
    std::vector<std::pair<Monomial, Mask>> pieces;
    split(std::move(gens), Monomial{}, n == 32 ? ~Mask{0} : (Mask{1} << n) - 1, n, pieces);
    for (const auto& [u, mask] : pieces) {
      StanleySummand s{Term{u, static_cast<std::uint32_t>(j), 1}, F->shifts()[j] + monomial_degree(R, u), {}};
      for (std::size_t v = 0; v < n; ++v)
        if (mask >> v & 1U) s.vars.push_back(v);
      out.summands.push_back(std::move(s));
    }
  }
  return out;
}

StanleyDecomposition stanley_decomposition(const RingPtr& ring, const std::vector<Monomial>& monomial_gens) {
  std::vector<Term> t;
  for (const auto& m : monomial_gens) t.push_back(Term{m, 0, 1});
  return stanley_decomposition(ring_as_module(ring), t);
}

std::vector<Polynomial> toric_degree_ideal(const RingPtr& ring) {
  const auto lattice = relation_lattice(ring->var_degrees());
  if (lattice.empty()) return {};
  std::vector<Polynomial> J;
  for (const auto& a : lattice) {
    Monomial plus, minus;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] > 0) plus.e[i] = static_cast<Exponent>(a[i]);
      if (a[i] < 0) minus.e[i] = static_cast<Exponent>(-a[i]);
    }
    J.emplace_back(ring, std::vector<Term>{Term{plus, 0, 1}, Term{minus, 0, ring->field().neg(1)}});
  }
  // The lattice-basis ideal can be smaller than the toric ideal; saturating
  // by each variable closes the gap.
  for (std::size_t v = 0; v < ring->nvars(); ++v) J = saturate(J, ring, v);
  return groebner_ideal(J);
}

SupportDecomposition module_support_decomposition(const Presentation& p) {
  const RingPtr& R = p.ring();
  const std::size_t n = R->nvars();
  if (n > 31) fail(ErrorKind::InvalidArgument, "support decomposition supports at most 31 variables");
  std::vector<Vector> rel;
  for (const auto& r : p.relations)
    if (!r.is_zero()) rel.push_back(r);
  std::vector<Term> leads;
  if (!rel.empty()) leads = buchberger(rel).leads();
  StanleyDecomposition sd = stanley_decomposition(p.generators, leads);

  // Toric split of k[Z], cached by the variable set.
  std::map<std::vector<std::size_t>, std::vector<std::pair<Monomial, std::vector<std::size_t>>>> cache;
  auto toric_split = [&](const std::vector<std::size_t>& Z) -> const auto& {
    auto it = cache.find(Z);
    if (it != cache.end()) return it->second;
    std::vector<std::pair<Monomial, std::vector<std::size_t>>> out;
    if (Z.empty()) {
      out.emplace_back(Monomial{}, std::vector<std::size_t>{});
    } else {
      std::vector<std::string> names;
      std::vector<Degree> degs;
      for (auto v : Z) {
        names.push_back(R->names()[v]);
        degs.push_back(R->var_degrees()[v]);
      }
      RingPtr BZ = make_ring(R->field(), names, degs, R->phi());
      std::vector<Monomial> in_h;
      for (const auto& h : toric_degree_ideal(BZ)) in_h.push_back(h.lead().m);
      for (const auto& s : stanley_decomposition(BZ, in_h).summands) {
        Monomial sigma;
        for (std::size_t i = 0; i < Z.size(); ++i) sigma.e[Z[i]] = s.u.m.e[i];
        std::vector<std::size_t> vars;
        for (auto i : s.vars) vars.push_back(Z[i]);
        out.emplace_back(sigma, std::move(vars));
      }
    }
    return cache.emplace(Z, std::move(out)).first->second;
  };

  SupportDecomposition out{R->group(), R->phi(), {}};
  for (const auto& s : sd.summands)
    for (const auto& [sigma, vars] : toric_split(s.vars)) {
      SupportComponent c{s.degree + R->degree(sigma), {}};
      for (auto v : vars) c.generators.push_back(R->var_degrees()[v]);
      out.components.push_back(std::move(c));
    }
  const PositivityFunctional& phi = R->phi();
  std::sort(out.components.begin(), out.components.end(), [&](const SupportComponent& a, const SupportComponent& b) {
    const auto wa = phi.scaled(a.shift), wb = phi.scaled(b.shift);
    if (wa != wb) return wa < wb;
    if (a.shift != b.shift) return a.shift < b.shift;
    return a.generators < b.generators;
  });
  out.components.erase(std::unique(out.components.begin(), out.components.end()), out.components.end());
  return out;
}

bool in_monoid(const Degree& target, const std::vector<Degree>& gens) {
  if (gens.empty()) return target.is_zero();
  const auto free = target.free_part();
  const std::size_t d = free.size();
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(gens.size()));
  std::vector<Rational> b(d);
  for (std::size_t r = 0; r < d; ++r) {
    b[r] = Rational(free[r]);
    for (std::size_t j = 0; j < gens.size(); ++j) a[r][j] = Rational(gens[j].free_part()[r]);
  }
  auto x = solve_unique(std::move(a), std::move(b));
  if (!x) return false;
  Degree sum = Degree::zero(target.group());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const Rational& c = (*x)[j];
    if (!c.is_integer() || c.sign() < 0) return false;
    sum += gens[j] * c.num();
  }
  return sum == target;
}

bool support_membership(const SupportDecomposition& d, const Degree& gamma) {
  for (const auto& c : d.components)
    if (in_monoid(gamma - c.shift, c.generators)) return true;
  return false;
}

std::vector<Degree> SupportDecomposition::enumerate(std::int64_t max_weight) const {
  std::vector<Degree> out;
  for (const auto& c : components) enumerate_component(c, phi, max_weight, 0, c.shift, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace basym
