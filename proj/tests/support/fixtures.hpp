#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "basym/asymptote.hpp"
#include "basym/report.hpp"
#include "basym/session.hpp"

namespace fx {

using namespace basym;

/// k[names], every variable of degree 1 in Z.
inline RingPtr standard_ring(std::vector<std::string> names, std::uint32_t p = PrimeField::kDefaultCharacteristic) {
  auto g = make_group(1);
  std::vector<Degree> d(names.size(), Degree(g, {1}));
  return make_ring(PrimeField(p), std::move(names), std::move(d), PositivityFunctional::all_ones(1));
}

inline std::vector<Polynomial> polys(const RingPtr& r, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_polynomial(r, t));
  return out;
}

inline Degree z(std::int64_t v) { return Degree(make_group(1), {v}); }

inline std::set<Degree> zs(std::initializer_list<std::int64_t> vs) {
  std::set<Degree> out;
  for (auto v : vs) out.insert(z(v));
  return out;
}

inline RingPtr xyz() { return standard_ring({"x", "y", "z"}); }

/// A complete intersection of degrees 2, 5, 8 in k[x,y,z].
inline std::vector<Polynomial> ci258(const RingPtr& r) {
  return polys(r, {"x^2+y^2+z^2", "x^5+2*y^5+3*z^5", "x^8+4*y^8+9*z^8"});
}

inline std::vector<Polynomial> fermat258(const RingPtr& r) {
  return polys(r, {"x^2+y^2+z^2", "x^5+y^5+z^5", "x^8+y^8+z^8"});
}

/// E_t = 2t + 6{0..t}; empty for t < 0.
inline std::set<std::int64_t> E(std::int64_t t) {
  std::set<std::int64_t> out;
  for (std::int64_t k = 0; k <= t; ++k) out.insert(2 * t + 6 * k);
  return out;
}

inline std::set<Degree> shifted(std::int64_t a, const std::set<std::int64_t>& e) {
  std::set<Degree> out;
  for (auto v : e) out.insert(z(a + v));
  return out;
}

inline std::set<Degree> unite(std::set<Degree> a, const std::set<Degree>& b) {
  a.insert(b.begin(), b.end());
  return a;
}

/// Tor supports of I^t for the (2,5,8) complete intersection, l = 0, 1, 2.
inline std::set<Degree> ci_formula(std::size_t ell, std::int64_t t) {
  switch (ell) {
    case 0: return unite(shifted(0, E(t)), shifted(5, E(t - 1)));
    case 1: return unite(shifted(5, E(t)), shifted(10, E(t - 1)));
    case 2: return unite(shifted(15, E(t - 1)), shifted(20, E(t - 2)));
    default: return {};
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Session load(const std::string& name) {
  return parse_session(read_file(std::string(BASYM_TEST_DATA) + "/" + name + ".bsm"));
}

/// Random homogeneous polynomial of degree d in the standard grading.
inline Polynomial random_form(const RingPtr& r, std::int64_t d, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coeff(-9, 9);
  const auto mons = monomials_of_degree(*r, Degree(r->group(), {d}));
  for (;;) {
    Polynomial f(r);
    for (const auto& m : mons)
      if (rng() % 2 == 0) f = f + Polynomial::monomial(r, m, r->field().from_int(coeff(rng)));
    if (!f.is_zero()) return f;
  }
}

}  // namespace fx
