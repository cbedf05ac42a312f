#pragma once

// Brute-force references for the test suites. Everything here is dense linear
// algebra over F_p on monomial bases: graded pieces of F/N by row reduction,
// Tor by the Koszul complex. Polynomials are read term by term; no Groebner
// bases, no resolutions.

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "basym/homalg.hpp"

namespace oracle {

using basym::Degree;
using basym::RingPtr;
using Exps = std::vector<int>;
using Poly = std::map<Exps, std::uint32_t>;
using Row = std::vector<std::uint32_t>;

struct ModP {
  std::uint64_t p;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((a + b) % p); }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((a + p - b) % p); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(std::uint64_t(a) * b % p);
  }
  std::uint32_t inv(std::uint32_t a) const {
    std::uint64_t r = 1, b = a, e = p - 2;
    for (; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return static_cast<std::uint32_t>(r);
  }
};

// Row space kept in reduced echelon form.
class Echelon {
 public:
  Echelon(ModP f, std::size_t cols) : f_(f), cols_(cols) {}

  void reduce(Row& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::uint32_t c = v[pivots_[k]];
      if (!c) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        if (rows_[k][j]) v[j] = f_.sub(v[j], f_.mul(c, rows_[k][j]));
    }
  }

  bool add(Row v) {
    reduce(v);
    std::size_t piv = 0;
    while (piv < cols_ && !v[piv]) ++piv;
    if (piv == cols_) return false;
    const std::uint32_t s = f_.inv(v[piv]);
    for (auto& x : v) x = f_.mul(x, s);
    for (auto& r : rows_) {
      const std::uint32_t c = r[piv];
      if (!c) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        if (v[j]) r[j] = f_.sub(r[j], f_.mul(c, v[j]));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  ModP f_;
  std::size_t cols_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

inline Exps exps_of(const basym::Monomial& m, std::size_t n) { return Exps(m.e.begin(), m.e.begin() + n); }

inline Poly poly_of(const basym::Polynomial& f) {
  Poly out;
  for (const auto& t : f.terms()) out[exps_of(t.m, f.ring()->nvars())] = t.c;
  return out;
}

inline Poly multiply(const Poly& a, const Poly& b, const ModP& f) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exps e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto& slot = out[e];
      slot = f.add(slot, f.mul(ca, cb));
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// All products of t generators (with repetition), as plain term maps.
inline std::vector<Poly> power_products(const std::vector<basym::Polynomial>& gens, int t, const ModP& f) {
  std::vector<Poly> g;
  for (const auto& x : gens) g.push_back(poly_of(x));
  std::vector<Poly> out;
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t from, Poly acc) -> void {
    if (static_cast<int>(idx.size()) == t) {
      out.push_back(std::move(acc));
      return;
    }
    for (std::size_t k = from; k < g.size(); ++k) {
      idx.push_back(k);
      self(self, k, multiply(acc, g[k], f));
      idx.pop_back();
    }
  };
  Poly one;
  one[Exps(gens.front().ring()->nvars(), 0)] = 1;
  rec(rec, 0, one);
  return out;
}

/// coker of relation vectors in a graded free module, given term by term.
struct Module {
  RingPtr ring;
  std::vector<Degree> shifts;
  /// relations[r][j] is the j-th entry of relation r.
  std::vector<std::vector<Poly>> relations;
};

inline Module quotient_ring(const RingPtr& ring, const std::vector<Poly>& gens) {
  Module m{ring, {Degree::zero(ring->group())}, {}};
  for (const auto& g : gens) m.relations.push_back({g});
  return m;
}

inline Module quotient_ring(const RingPtr& ring, const std::vector<basym::Polynomial>& gens) {
  std::vector<Poly> p;
  for (const auto& g : gens) p.push_back(poly_of(g));
  return quotient_ring(ring, p);
}

inline Module from_presentation(const basym::Presentation& pr) {
  Module m{pr.ring(), pr.generators->shifts(), {}};
  for (const auto& r : pr.relations) {
    std::vector<Poly> entries(m.shifts.size());
    for (const auto& t : r.terms()) entries[t.comp][exps_of(t.m, pr.ring()->nvars())] = t.c;
    m.relations.push_back(std::move(entries));
  }
  return m;
}

class Oracle {
 public:
  explicit Oracle(Module m) : m_(std::move(m)), f_{m_.ring->field().characteristic()}, n_(m_.ring->nvars()) {
    for (const auto& r : m_.relations) {
      bool found = false;
      for (std::size_t j = 0; j < r.size() && !found; ++j)
        if (!r[j].empty()) {
          rel_deg_.push_back(degree_of(r[j].begin()->first) + m_.shifts[j]);
          found = true;
        }
      if (!found) rel_deg_.push_back(Degree());
    }
  }

  Degree degree_of(const Exps& e) const {
    Degree d = Degree::zero(m_.ring->group());
    for (std::size_t i = 0; i < n_; ++i)
      if (e[i]) d = d + m_.ring->var_degrees()[i] * e[i];
    return d;
  }

  /// Monomials of degree gamma, by exhaustive search under the phi bound.
  const std::vector<Exps>& monomials(const Degree& gamma) {
    auto it = mons_.find(gamma);
    if (it != mons_.end()) return it->second;
    std::vector<Exps> out;
    const std::int64_t w = m_.ring->phi().scaled(gamma);
    if (w >= 0) {
      Exps e(n_, 0);
      auto rec = [&](auto&& self, std::size_t k, std::int64_t budget) -> void {
        if (k == n_) {
          if (budget == 0 && degree_of(e) == gamma) out.push_back(e);
          return;
        }
        for (int a = 0; a * m_.ring->var_weight(k) <= budget; ++a) {
          e[k] = a;
          self(self, k + 1, budget - a * m_.ring->var_weight(k));
        }
        e[k] = 0;
      };
      rec(rec, 0, w);
    }
    return mons_.emplace(gamma, std::move(out)).first->second;
  }

  /// dim (F/N)_gamma.
  std::size_t dim(const Degree& gamma) { return piece(gamma).basis.size(); }

  /// dim Tor_i(M, k)_gamma from the Koszul complex on the variables.
  std::size_t tor(std::size_t i, const Degree& gamma) {
    if (i > n_) return 0;
    const std::size_t k = koszul_dim(i, gamma);
    if (!k) return 0;
    return k - koszul_rank(i, gamma) - koszul_rank(i + 1, gamma);
  }

  /// Every degree of phi-weight at most cap where some shift times a monomial lives.
  std::vector<Degree> candidate_degrees(std::int64_t cap) {
    std::set<Degree> out;
    for (const auto& s : m_.shifts) {
      const std::int64_t budget = cap - m_.ring->phi().scaled(s);
      if (budget < 0) continue;
      Exps e(n_, 0);
      auto rec = [&](auto&& self, std::size_t k, std::int64_t left) -> void {
        if (k == n_) {
          out.insert(s + degree_of(e));
          return;
        }
        for (int a = 0; a * m_.ring->var_weight(k) <= left; ++a) {
          e[k] = a;
          self(self, k + 1, left - a * m_.ring->var_weight(k));
        }
        e[k] = 0;
      };
      rec(rec, 0, budget);
    }
    return {out.begin(), out.end()};
  }

  /// Nonzero Tor_i in the candidate degrees up to cap, as (i -> degree -> dim).
  std::map<std::size_t, std::map<Degree, std::size_t>> betti(std::size_t max_i, std::int64_t cap) {
    std::map<std::size_t, std::map<Degree, std::size_t>> out;
    for (const auto& g : candidate_degrees(cap))
      for (std::size_t i = 0; i <= max_i; ++i)
        if (const std::size_t b = tor(i, g)) out[i][g] = b;
    return out;
  }

  const Module& module() const { return m_; }

 private:
  struct Piece {
    std::vector<std::pair<std::size_t, Exps>> all;  // (component, exponent) columns
    std::map<std::pair<std::size_t, Exps>, std::size_t> col;
    Echelon ech;
    std::vector<std::size_t> basis;  // non-pivot columns
    std::map<std::size_t, std::size_t> coord;
  };

  Piece& piece(const Degree& gamma) {
    auto it = pieces_.find(gamma);
    if (it != pieces_.end()) return it->second;
    std::vector<std::pair<std::size_t, Exps>> all;
    for (std::size_t j = 0; j < m_.shifts.size(); ++j)
      for (const auto& e : monomials(gamma - m_.shifts[j])) all.emplace_back(j, e);
    Piece p{all, {}, Echelon(f_, all.size()), {}, {}};
    for (std::size_t c = 0; c < all.size(); ++c) p.col[all[c]] = c;
    for (std::size_t r = 0; r < m_.relations.size(); ++r) {
      if (rel_deg_[r].group() == nullptr) continue;
      for (const auto& mult : monomials(gamma - rel_deg_[r])) {
        Row row(all.size(), 0);
        for (std::size_t j = 0; j < m_.relations[r].size(); ++j)
          for (const auto& [e, c] : m_.relations[r][j]) {
            Exps prod(n_);
            for (std::size_t v = 0; v < n_; ++v) prod[v] = e[v] + mult[v];
            row[p.col.at({j, prod})] = c;
          }
        p.ech.add(std::move(row));
      }
    }
    std::vector<bool> is_pivot(all.size(), false);
    for (auto c : p.ech.pivots()) is_pivot[c] = true;
    for (std::size_t c = 0; c < all.size(); ++c)
      if (!is_pivot[c]) {
        p.coord[c] = p.basis.size();
        p.basis.push_back(c);
      }
    return pieces_.emplace(gamma, std::move(p)).first->second;
  }

  std::vector<std::vector<std::size_t>> subsets(std::size_t i) const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (cur.size() == i) {
        out.push_back(cur);
        return;
      }
      for (std::size_t v = from; v < n_; ++v) {
        cur.push_back(v);
        self(self, v + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  }

  Degree subset_degree(const std::vector<std::size_t>& a) const {
    Degree d = Degree::zero(m_.ring->group());
    for (auto v : a) d = d + m_.ring->var_degrees()[v];
    return d;
  }

  std::size_t koszul_dim(std::size_t i, const Degree& gamma) {
    std::size_t total = 0;
    for (const auto& a : subsets(i)) total += dim(gamma - subset_degree(a));
    return total;
  }

  // rank of d_i : K_i -> K_{i-1} in degree gamma.
  std::size_t koszul_rank(std::size_t i, const Degree& gamma) {
    if (i == 0 || i > n_) return 0;
    const auto targets = subsets(i - 1);
    std::map<std::vector<std::size_t>, std::size_t> offset;
    std::size_t cols = 0;
    for (const auto& b : targets) {
      offset[b] = cols;
      cols += dim(gamma - subset_degree(b));
    }
    if (!cols) return 0;
    Echelon ech(f_, cols);
    for (const auto& a : subsets(i)) {
      const Degree src = gamma - subset_degree(a);
      const std::vector<std::size_t> src_basis = piece(src).basis;
      const auto src_all = piece(src).all;
      for (std::size_t c : src_basis) {
        Row row(cols, 0);
        for (std::size_t k = 0; k < a.size(); ++k) {
          std::vector<std::size_t> b = a;
          b.erase(b.begin() + static_cast<std::ptrdiff_t>(k));
          Piece& tgt = piece(gamma - subset_degree(b));
          auto [comp, e] = src_all[c];
          e[a[k]] += 1;
          Row v(tgt.all.size(), 0);
          v[tgt.col.at({comp, e})] = 1;
          tgt.ech.reduce(v);
          const std::uint32_t sign = (k % 2) ? static_cast<std::uint32_t>(f_.p - 1) : 1u;
          for (std::size_t q = 0; q < tgt.basis.size(); ++q) {
            const std::uint32_t x = v[tgt.basis[q]];
            if (x) row[offset[b] + q] = f_.add(row[offset[b] + q], f_.mul(sign, x));
          }
        }
        ech.add(std::move(row));
      }
    }
    return ech.rank();
  }

  Module m_;
  ModP f_;
  std::size_t n_;
  std::vector<Degree> rel_deg_;
  std::map<Degree, std::vector<Exps>> mons_;
  std::map<Degree, Piece> pieces_;
};

/// Tor_i(I^t, k) = Tor_{i+1}(S/I^t, k) for a nonzero ideal power.
inline std::map<std::size_t, std::map<Degree, std::size_t>> power_betti(const std::vector<basym::Polynomial>& gens,
                                                                       int t, std::size_t max_i, std::int64_t cap) {
  const RingPtr& ring = gens.front().ring();
  Oracle o(quotient_ring(ring, power_products(gens, t, ModP{ring->field().characteristic()})));
  std::map<std::size_t, std::map<Degree, std::size_t>> out;
  for (const auto& g : o.candidate_degrees(cap))
    for (std::size_t i = 0; i <= max_i; ++i)
      if (const std::size_t b = o.tor(i + 1, g)) out[i][g] = b;
  return out;
}

}  // namespace oracle
