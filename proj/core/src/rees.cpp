#include "basym/rees.hpp"

#include <algorithm>

#include "basym/error.hpp"

namespace basym {

namespace {

// ring with S variables, T variables and one u per block (u_i of degree (0, e_i))
struct GraphRing {
  RingPtr ring;
  std::vector<std::size_t> u_vars;
  std::vector<bool> block;
};

std::vector<std::string> t_names(std::size_t s, const std::vector<std::vector<Polynomial>>& ideals) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < ideals[i].size(); ++j)
      names.push_back(s == 1 ? "T" + std::to_string(j + 1) : "T" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  return names;
}

Degree unit(const ReesSetup& st, const Degree& g, std::size_t i) {
  std::vector<std::int64_t> t(st.blocks(), 0);
  t[i] = 1;
  return st.lift(g, t);
}

GraphRing graph_ring(const ReesSetup& st) {
  const Ring& S = *st.base;
  std::vector<std::string> names = S.names();
  std::vector<Degree> degs;
  std::vector<std::int64_t> zero(st.blocks(), 0);
  for (const auto& d : S.var_degrees()) degs.push_back(st.lift(d, zero));
  for (std::size_t i = 0; i < st.blocks(); ++i)
    for (const auto& f : st.ideals[i]) degs.push_back(unit(st, f.homogeneous_degree(), i));
  for (const auto& n : t_names(st.blocks(), st.ideals)) names.push_back(n);
  GraphRing g;
  for (std::size_t i = 0; i < st.blocks(); ++i) {
    g.u_vars.push_back(names.size());
    names.push_back("u" + std::to_string(i + 1));
    degs.push_back(unit(st, Degree::zero(S.group()), i));
  }
  if (names.size() > kMaxVars)
    fail(ErrorKind::InvalidArgument, "Rees elimination needs " + std::to_string(names.size()) + " variables, limit is " +
                                         std::to_string(kMaxVars));
  g.block.assign(names.size(), false);
  for (auto u : g.u_vars) g.block[u] = true;
  g.ring = make_ring(S.field(), names, degs, S.phi().extended(static_cast<int>(st.blocks()), Rational(1)));
  return g;
}

Polynomial lift_poly(const Polynomial& f, const RingPtr& target) { return Polynomial(target, f.terms()); }

// T_{i,j} - f_{i,j} u_i in the graph ring.
std::vector<Polynomial> graph_relations(const ReesSetup& st, const GraphRing& g) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < st.blocks(); ++i)
    for (std::size_t j = 0; j < st.ideals[i].size(); ++j) {
      Polynomial T = Polynomial::variable(g.ring, st.t_vars[i][j]);
      Polynomial u = Polynomial::variable(g.ring, g.u_vars[i]);
      out.push_back(T - lift_poly(st.ideals[i][j], g.ring) * u);
    }
  return out;
}

void enumerate_products(const std::vector<Polynomial>& gens, std::size_t from, std::int64_t left, const Polynomial& acc,
                        std::vector<Polynomial>& out) {
  if (left == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t j = from; j < gens.size(); ++j) enumerate_products(gens, j, left - 1, acc * gens[j], out);
}

}  // namespace

bool is_equigenerated(const std::vector<Polynomial>& gens) {
  for (std::size_t i = 1; i < gens.size(); ++i)
    if (gens[i].homogeneous_degree() != gens[0].homogeneous_degree()) return false;
  return true;
}

std::size_t ReesSetup::num_t() const {
  std::size_t n = 0;
  for (const auto& I : ideals) n += I.size();
  return n;
}

Degree ReesSetup::lift(const Degree& g, const std::vector<std::int64_t>& t) const { return join_degree(g, t, group); }

Degree ReesSetup::generator_degree(std::size_t i) const {
  if (!is_equigenerated(ideals.at(i)))
    fail(ErrorKind::NotEquigenerated, "ideal " + std::to_string(i + 1) + " has generators of different degrees");
  return ideals[i].front().homogeneous_degree();
}

ReesSetup make_rees_setup(const RingPtr& base, std::vector<std::vector<Polynomial>> ideals, bool shifted) {
  ReesSetup st;
  st.base = base;
  st.shifted = shifted;
  for (auto& I : ideals) {
    std::vector<Polynomial> nz;
    for (auto& f : I) {
      if (f.is_zero()) continue;
      require_same_ring(*f.ring(), *base);
      f.homogeneous_degree();
      nz.push_back(std::move(f));
    }
    if (nz.empty()) fail(ErrorKind::InvalidArgument, "Rees setup needs nonzero generators in every ideal");
    st.ideals.push_back(std::move(nz));
  }
  if (st.ideals.empty()) fail(ErrorKind::InvalidArgument, "Rees setup needs at least one ideal");
  const std::size_t s = st.ideals.size();
  st.group = product_with_free(base->group(), static_cast<int>(s));
  for (std::size_t i = 0; i < s; ++i)
    if (shifted && !is_equigenerated(st.ideals[i]))
      fail(ErrorKind::NotEquigenerated, "shifted grading needs equigenerated ideals; ideal " + std::to_string(i + 1) +
                                            " has mixed degrees (use the general asymptotic shape instead)");

  const Ring& S = *base;
  std::vector<std::string> names = S.names();
  std::vector<Degree> degs;
  std::vector<std::int64_t> zero(s, 0);
  for (const auto& d : S.var_degrees()) degs.push_back(st.lift(d, zero));
  std::vector<std::string> fnames;
  std::vector<Degree> fdegs;
  st.layout.blocks = s;
  st.layout.base = base;
  for (std::size_t v = 0; v < S.nvars(); ++v) {
    st.layout.base_index.push_back(static_cast<int>(v));
    st.layout.block_of.push_back(-1);
    st.to_fiber.push_back(-1);
  }
  auto tn = t_names(s, st.ideals);
  std::size_t k = 0;
  st.t_vars.resize(s);
  for (std::size_t i = 0; i < s; ++i)
    for (const auto& f : st.ideals[i]) {
      Degree g = shifted ? Degree::zero(S.group()) : f.homogeneous_degree();
      Degree d = unit(st, g, i);
      st.t_vars[i].push_back(names.size());
      st.layout.base_index.push_back(-1);
      st.layout.block_of.push_back(static_cast<int>(i));
      st.to_fiber.push_back(static_cast<int>(fnames.size()));
      names.push_back(tn[k]);
      degs.push_back(d);
      fnames.push_back(tn[k]);
      fdegs.push_back(d);
      ++k;
    }
  if (names.size() > kMaxVars) fail(ErrorKind::InvalidArgument, "too many variables for S[T]");
  PositivityFunctional phi = S.phi().extended(static_cast<int>(s), Rational(1));
  st.ring = make_ring(S.field(), names, degs, phi);
  st.fiber = make_ring(S.field(), fnames, fdegs, phi);
  return st;
}

std::vector<Polynomial> rees_ideal(const ReesSetup& st) {
  GraphRing g = graph_ring(st);
  std::vector<Polynomial> out;
  for (const auto& p : eliminate(graph_relations(st, g), g.block)) {
    std::vector<Term> t = p.terms();
    out.emplace_back(st.ring, std::move(t));
  }
  // Reduced basis in the elimination order; keep only minimal generators.
  std::vector<Polynomial> minimal;
  ModulePtr M = ring_as_module(st.ring);
  std::vector<Vector> v;
  for (const auto& p : out) v.push_back(p.as_vector(M));
  for (const auto& m : minimal_generators(v)) minimal.push_back(m.component(0));
  return minimal;
}

Presentation rees_module_presentation(const Presentation& M, const ReesSetup& st) {
  require_same_ring(*M.ring(), *st.base);
  GraphRing g = graph_ring(st);
  std::vector<std::int64_t> zero(st.blocks(), 0);
  std::vector<Degree> shifts;
  for (const auto& d : M.generators->shifts()) shifts.push_back(st.lift(d, zero));
  ModulePtr Fg = make_free_module(g.ring, shifts);
  ModulePtr FR = make_free_module(st.ring, shifts);
  std::vector<Vector> gens;
  for (const auto& p : graph_relations(st, g))
    for (std::size_t k = 0; k < Fg->rank(); ++k) gens.push_back(p.as_vector(Fg, k));
  for (const auto& r : M.relations)
    if (!r.is_zero()) gens.emplace_back(Fg, r.terms());
  std::vector<Vector> kernel;
  for (const auto& v : eliminate(gens, g.block)) kernel.emplace_back(FR, v.terms());
  return {FR, minimal_generators(kernel)};
}

std::vector<Polynomial> power_ideal(const ReesSetup& st, const std::vector<std::int64_t>& t) {
  if (t.size() != st.blocks()) fail(ErrorKind::InvalidArgument, "power exponent has wrong length");
  for (auto x : t)
    if (x < 0) fail(ErrorKind::InvalidArgument, "negative power");
  std::vector<Polynomial> acc{Polynomial::constant(st.base, 1)};
  for (std::size_t i = 0; i < st.blocks(); ++i) {
    std::vector<Polynomial> next;
    for (const auto& a : acc) enumerate_products(st.ideals[i], 0, t[i], a, next);
    acc = std::move(next);
  }
  return acc;
}

Presentation power_module(const Presentation& M, const ReesSetup& st, const std::vector<std::int64_t>& t) {
  std::vector<Vector> gens;
  for (const auto& p : power_ideal(st, t))
    for (std::size_t k = 0; k < M.generators->rank(); ++k) gens.push_back(p.as_vector(M.generators, k));
  return image_presentation(M, gens);
}

BettiTable power_tor(const Presentation& M, const ReesSetup& st, const std::vector<std::int64_t>& t,
                     std::size_t max_i) {
  const bool trivial_power = std::all_of(t.begin(), t.end(), [](std::int64_t x) { return x == 0; });
  if (trivial_power) return tor_table(M, max_i);
  if (!M.relations.empty()) return tor_table(power_module(M, st, t), max_i);
  // M free: M I^t = (+)_k I^t e_k, and Tor_i(I^t) = Tor_{i+1}(S/I^t).
  BettiTable quotient = tor_table(cyclic_presentation(st.base, power_ideal(st, t)), max_i + 1);
  BettiTable out;
  for (const auto& [i, row] : quotient.rows()) {
    if (i == 0 || i > max_i + 1) continue;
    for (const auto& [d, n] : row)
      for (const auto& shift : M.generators->shifts()) out.add(i - 1, d + shift, n);
  }
  return out;
}

}  // namespace basym
