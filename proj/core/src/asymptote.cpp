#include "basym/asymptote.hpp"

#include <algorithm>
#include <sstream>

#include "basym/error.hpp"

namespace basym {

namespace {

// Block of a variable degree in base x Z^s: the coordinate where its extra part is 1.
std::size_t block_of(const Degree& d, const GroupPtr& base) {
  const auto e = extra_part(d, base);
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) return i;
  fail(ErrorKind::Internal, "variable degree " + d.to_string() + " has no block");
}

void simplex(std::size_t vars, std::size_t degree, std::vector<int>& cur, std::size_t k,
             std::vector<std::vector<int>>& out) {
  if (k == vars) {
    out.push_back(cur);
    return;
  }
  int used = 0;
  for (std::size_t i = 0; i < k; ++i) used += cur[i];
  for (int a = 0; used + a <= static_cast<int>(degree); ++a) {
    cur[k] = a;
    simplex(vars, degree, cur, k + 1, out);
  }
  cur[k] = 0;
}

Rational power(std::int64_t base, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= Rational(base);
  return r;
}

// All sums of exactly n elements (with repetition) of gens, added to at.
void multisets(const std::vector<Degree>& gens, std::size_t from, std::int64_t n, const Degree& at,
               std::vector<Degree>& out) {
  if (n == 0) {
    out.push_back(at);
    return;
  }
  for (std::size_t j = from; j < gens.size(); ++j) multisets(gens, j, n - 1, at + gens[j], out);
}

}  // namespace

// ------------------------------------------------------------------ tameness

Positivity eventual_positivity(const SupportDecomposition& d, const GroupPtr& base, std::size_t blocks) {
  Positivity best;
  best.t0.assign(blocks, 0);
  bool found = false;
  std::int64_t best_sum = 0;
  std::vector<std::int64_t> zero_t0(blocks, 0);
  for (const auto& c : d.components) {
    const auto tp = extra_part(c.shift, base);
    std::vector<bool> covered(blocks, false);
    for (const auto& g : c.generators) covered[block_of(g, base)] = true;
    bool all = true;
    for (std::size_t i = 0; i < blocks; ++i)
      if (!covered[i]) {
        all = false;
        zero_t0[i] = std::max(zero_t0[i], tp[i] + 1);
      }
    if (!all) continue;
    std::int64_t sum = 0;
    for (auto x : tp) sum += x;
    if (!found || sum < best_sum || (sum == best_sum && tp < best.t0)) {
      found = true;
      best_sum = sum;
      best.t0 = tp;
    }
  }
  if (found) {
    best.kind = Eventually::Nonzero;
    return best;
  }
  return Positivity{Eventually::Zero, zero_t0};
}

Positivity eventual_positivity(const Presentation& p, const GroupPtr& base, std::size_t blocks) {
  return eventual_positivity(module_support_decomposition(p), base, blocks);
}

Presentation base_strand(const Presentation& p, const GroupPtr& base, const Degree& eta) {
  const auto& shifts = p.generators->shifts();
  std::vector<Degree> kept;
  std::vector<std::uint32_t> renum(shifts.size(), UINT32_MAX);
  for (std::size_t j = 0; j < shifts.size(); ++j)
    if (base_part(shifts[j], base) == eta) {
      renum[j] = static_cast<std::uint32_t>(kept.size());
      kept.push_back(shifts[j]);
    }
  for (const auto& d : p.ring()->var_degrees())
    if (!base_part(d, base).is_zero())
      fail(ErrorKind::InvalidArgument, "base strands need variables of base degree zero");
  ModulePtr F = make_free_module(p.ring(), kept);
  Presentation out{F, {}};
  for (const auto& r : p.relations) {
    if (r.is_zero()) continue;
    if (renum[r.lead().comp] == UINT32_MAX) continue;
    std::vector<Term> terms = r.terms();
    for (auto& t : terms) t.comp = renum[t.comp];
    out.relations.emplace_back(F, std::move(terms));
  }
  return out;
}

// --------------------------------------------------------------- polynomials

Rational FittedPolynomial::operator()(const std::vector<std::int64_t>& t) const {
  Rational v(0);
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    Rational m = coefficients[k];
    for (std::size_t i = 0; i < vars; ++i) m *= power(t[i], exponents[k][i]);
    v += m;
  }
  return v;
}

std::string FittedPolynomial::to_string() const {
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < exponents.size(); ++k)
    if (!coefficients[k].is_zero()) order.push_back(k);
  auto total = [&](std::size_t k) {
    int s = 0;
    for (int e : exponents[k]) s += e;
    return s;
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (total(a) != total(b)) return total(a) > total(b);
    return exponents[a] > exponents[b];
  });
  if (order.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto k : order) {
    Rational c = coefficients[k];
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (c.sign() < 0) c = -c;
    std::string mono;
    for (std::size_t i = 0; i < vars; ++i) {
      if (exponents[k][i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars == 1 ? "t" : "t" + std::to_string(i + 1);
      if (exponents[k][i] > 1) mono += "^" + std::to_string(exponents[k][i]);
    }
    if (mono.empty())
      os << c.to_string();
    else if (c == Rational(1))
      os << mono;
    else
      os << c.to_string() << "*" << mono;
    first = false;
  }
  return os.str();
}

FittedPolynomial fit_polynomial(const LatticeFunction& f, std::size_t vars, std::size_t degree,
                                std::vector<std::int64_t> t0, int retries) {
  if (t0.size() != vars) fail(ErrorKind::InvalidArgument, "fit origin has wrong length");
  std::vector<std::vector<int>> mono;
  std::vector<int> cur(vars, 0);
  simplex(vars, degree, cur, 0, mono);
  for (int attempt = 0; attempt <= retries; ++attempt) {
    auto at = [&](const std::vector<int>& beta) {
      std::vector<std::int64_t> t = t0;
      for (std::size_t i = 0; i < vars; ++i) t[i] += beta[i];
      return t;
    };
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (const auto& beta : mono) {
      const auto t = at(beta);
      std::vector<Rational> row;
      for (const auto& e : mono) {
        Rational m(1);
        for (std::size_t i = 0; i < vars; ++i) m *= power(t[i], e[i]);
        row.push_back(m);
      }
      a.push_back(std::move(row));
      b.emplace_back(f(t));
    }
    auto x = solve_unique(std::move(a), std::move(b));
    if (!x) fail(ErrorKind::Internal, "interpolation grid is singular");
    FittedPolynomial p{vars, mono, *x, t0};
    std::vector<std::vector<std::int64_t>> held;
    for (int k = 1; k <= 3; ++k) {
      for (std::size_t i = 0; i < vars; ++i) {
        auto t = t0;
        t[i] += static_cast<std::int64_t>(degree) + k;
        held.push_back(t);
      }
      if (vars > 1) {
        auto t = t0;
        for (auto& x : t) x += static_cast<std::int64_t>(degree) + k;
        held.push_back(t);
      }
    }
    bool ok = true;
    for (const auto& t : held)
      if (p(t) != Rational(f(t))) {
        ok = false;
        break;
      }
    if (ok) return p;
    for (auto& x : t0) ++x;
  }
  fail(ErrorKind::FitFailure, "no polynomial of degree " + std::to_string(degree) + " matched after " +
                                  std::to_string(retries) + " threshold increases");
}

// ------------------------------------------------------------------ pipeline

bool AsymptoticShape::contains(const Degree& gamma, const std::vector<std::int64_t>& t) const {
  const GroupPtr product = product_with_free(base, static_cast<int>(t.size()));
  const Degree target = join_degree(gamma, t, product);
  for (const auto& c : components) {
    bool above = true;
    for (std::size_t i = 0; i < t.size(); ++i) above = above && t[i] >= c.t0[i];
    if (!above) continue;
    std::vector<Degree> gens;
    for (std::size_t i = 0; i < c.blocks.size(); ++i) {
      std::vector<std::int64_t> e(t.size(), 0);
      e[i] = 1;
      for (const auto& g : c.blocks[i]) gens.push_back(join_degree(g, e, product));
    }
    if (in_monoid(target - join_degree(c.delta, c.t0, product), gens)) return true;
  }
  return false;
}

std::set<Degree> AsymptoticShape::support(const std::vector<std::int64_t>& t, const Rational& wcap) const {
  std::set<Degree> out;
  for (const auto& c : components) {
    bool above = true;
    for (std::size_t i = 0; i < t.size(); ++i) above = above && t[i] >= c.t0[i];
    if (!above) continue;
    std::vector<Degree> acc{c.delta};
    for (std::size_t i = 0; i < c.blocks.size(); ++i) {
      std::vector<Degree> next;
      for (const auto& a : acc) multisets(c.blocks[i], 0, t[i] - c.t0[i], a, next);
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      acc = std::move(next);
    }
    for (const auto& d : acc)
      if (phi(d) <= wcap) out.insert(d);
  }
  return out;
}

TorPipeline::TorPipeline(const Presentation& M, ReesSetup setup, std::size_t max_ell)
    : setup_(std::move(setup)), max_ell_(max_ell) {
  rees_ = rees_module_presentation(M, setup_);
  const std::size_t len = std::min(max_ell + 1, setup_.ring->nvars() + 1);
  resolution_ = free_resolution(rees_, len);
  fiber_ = specialize(resolution_, setup_.fiber, setup_.to_fiber);
  for (std::size_t ell = 0; ell <= max_ell; ++ell) {
    homology_.push_back(subquotient_presentation(fiber_, ell));
    support_.push_back(module_support_decomposition(homology_.back()));
  }
}

void TorPipeline::check(std::size_t ell) const {
  if (ell > max_ell_)
    fail(ErrorKind::InvalidArgument,
         "homological index " + std::to_string(ell) + " beyond the computed range " + std::to_string(max_ell_));
}

const Presentation& TorPipeline::homology(std::size_t ell) const {
  check(ell);
  return homology_[ell];
}

const SupportDecomposition& TorPipeline::homology_support(std::size_t ell) const {
  check(ell);
  return support_[ell];
}

AsymptoticShape TorPipeline::raw_shape(std::size_t ell) const {
  if (setup_.shifted) fail(ErrorKind::InvalidArgument, "asymptotic shape needs the standard Rees grading");
  const GroupPtr& G = setup_.base->group();
  const std::size_t s = setup_.blocks();
  AsymptoticShape out{ell, G, setup_.base->phi(), std::vector<std::int64_t>(s, 0), {}};
  for (const auto& c : homology_support(ell).components) {
    ShapeComponent sc{base_part(c.shift, G), extra_part(c.shift, G), std::vector<std::vector<Degree>>(s)};
    for (const auto& g : c.generators) sc.blocks[block_of(g, G)].push_back(base_part(g, G));
    out.components.push_back(std::move(sc));
  }
  return out;
}

AsymptoticShape TorPipeline::shape(std::size_t ell) const {
  AsymptoticShape raw = raw_shape(ell);
  const std::size_t s = setup_.blocks();
  AsymptoticShape out{ell, raw.base, raw.phi, std::vector<std::int64_t>(s, 0), {}};
  for (auto& sc : raw.components) {
    bool full = true;
    for (std::size_t i = 0; i < s; ++i)
      if (sc.blocks[i].empty()) {
        full = false;
        out.threshold[i] = std::max(out.threshold[i], sc.t0[i] + 1);
      }
    if (!full) continue;
    for (std::size_t i = 0; i < s; ++i) out.threshold[i] = std::max(out.threshold[i], sc.t0[i]);
    out.components.push_back(std::move(sc));
  }
  return out;
}

// --------------------------------------------------------- equigenerated case

Degree EquigeneratedReport::place(const Degree& eta, const std::vector<std::int64_t>& t) const {
  Degree d = eta;
  for (std::size_t j = 0; j < gamma.size(); ++j) d += gamma[j] * t[j];
  return d;
}

EquigeneratedReport equigenerated_bounds(const TorPipeline& pipeline, std::size_t max_i) {
  const ReesSetup& st = pipeline.setup();
  if (!st.shifted) fail(ErrorKind::NotEquigenerated, "equigenerated bounds need the shifted Rees grading");
  if (max_i > pipeline.max_ell()) fail(ErrorKind::InvalidArgument, "max_i beyond the pipeline range");
  const GroupPtr& G = st.base->group();
  const std::size_t s = st.blocks();
  EquigeneratedReport r;
  for (std::size_t j = 0; j < s; ++j) r.gamma.push_back(st.generator_degree(j));
  const auto& res = pipeline.resolution();
  for (std::size_t i = 0; i <= max_i; ++i) {
    std::set<Degree> delta;
    if (i < res.modules.size())
      for (const auto& d : res.modules[i]->shifts()) delta.insert(base_part(d, G));
    std::set<Degree> prime;
    std::map<Degree, StrandReport> strands;
    for (const auto& eta : delta) {
      Presentation P = base_strand(pipeline.homology(i), G, eta);
      Positivity pos = eventual_positivity(P, G, s);
      if (pos.kind == Eventually::Nonzero) prime.insert(eta);
      HilbertFunction hf(P);
      auto dim = [&](const std::vector<std::int64_t>& t) {
        return static_cast<std::int64_t>(hf(st.lift(eta, t)));
      };
      const std::size_t degree = st.num_t() > 0 ? st.num_t() - 1 : 0;
      strands.emplace(eta, StrandReport{pos, fit_polynomial(dim, s, degree, pos.t0)});
    }
    r.delta.push_back(std::move(delta));
    r.delta_prime.push_back(std::move(prime));
    r.strands.push_back(std::move(strands));
  }
  return r;
}

}  // namespace basym
