#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace basym;

namespace {

RingPtr ring258() {
  auto z2 = make_group(2);
  return make_ring(PrimeField(), {"T1", "T2", "T3"}, {Degree(z2, {2, 1}), Degree(z2, {5, 1}), Degree(z2, {8, 1})},
                   PositivityFunctional::all_ones(2));
}

RingPtr ring_with_degrees(std::vector<std::int64_t> d) {
  auto g = make_group(1);
  std::vector<std::string> names;
  std::vector<Degree> degs;
  for (std::size_t i = 0; i < d.size(); ++i) {
    names.push_back("T" + std::to_string(i + 1));
    degs.emplace_back(g, std::vector<std::int64_t>{d[i]});
  }
  return make_ring(PrimeField(), names, degs, PositivityFunctional::all_ones(1));
}

Monomial mono(std::initializer_list<int> e) {
  Monomial m;
  std::size_t i = 0;
  for (int x : e) m.e[i++] = x;
  return m;
}

std::vector<Degree> window(const Ring& r, std::int64_t w) {
  std::set<Degree> out;
  for (const auto& m : monomials_up_to_weight(r, w)) out.insert(r.degree(m));
  return {out.begin(), out.end()};
}

std::size_t covering(const SupportDecomposition& d, const Degree& g) {
  std::size_t n = 0;
  for (const auto& c : d.components)
    if (in_monoid(g - c.shift, c.generators)) ++n;
  return n;
}

void check_decomposition(const Presentation& p, std::int64_t w) {
  const SupportDecomposition d = module_support_decomposition(p);
  for (const auto& c : d.components) CHECK(is_free_independent(c.generators));
  oracle::Oracle o(oracle::from_presentation(p));
  for (const auto& g : window(*p.ring(), w)) CHECK(support_membership(d, g) == (o.dim(g) != 0));
}

}  // namespace

TEST_CASE("stanley_decomposition examples") {
  auto B = ring258();
  const StanleyDecomposition s = stanley_decomposition(B, {mono({0, 2, 0})});
  REQUIRE(s.summands.size() == 2);
  std::set<std::pair<std::string, std::vector<std::size_t>>> got;
  for (const auto& x : s.summands) got.insert({B->format(x.u.m), x.vars});
  CHECK(got == std::set<std::pair<std::string, std::vector<std::size_t>>>{{"1", {0, 2}}, {"T2", {0, 2}}});

  const StanleyDecomposition all = stanley_decomposition(B, std::vector<Monomial>{});
  REQUIRE(all.summands.size() == 1);
  CHECK(all.summands[0].u.m.is_one());
  CHECK(all.summands[0].vars == std::vector<std::size_t>{0, 1, 2});

  auto one = ring_with_degrees({1});
  const StanleyDecomposition c = stanley_decomposition(one, {mono({1})});
  REQUIRE(c.summands.size() == 1);
  CHECK(c.summands[0].u.m.is_one());
  CHECK(c.summands[0].vars.empty());
}

TEST_CASE("Stanley summands partition the standard monomials") {
  std::mt19937_64 rng(4);
  auto R = fx::xyz();
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Monomial> gens;
    std::vector<Polynomial> polys;
    const int k = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) {
      Monomial m;
      for (int v = 0; v < 3; ++v) m.e[v] = static_cast<int>(rng() % 4);
      if (m.is_one()) m.e[0] = 2;
      gens.push_back(m);
      polys.push_back(Polynomial::monomial(R, m));
    }
    const StanleyDecomposition s = stanley_decomposition(R, gens);
    oracle::Oracle o(oracle::quotient_ring(R, polys));
    for (std::int64_t d = 0; d <= 10; ++d) CHECK(s.count(fx::z(d)) == o.dim(fx::z(d)));
  }

  // module version: F = S + S(-1) modulo monomials in each position
  auto S = fx::standard_ring({"x", "y"});
  auto F = make_free_module(S, {fx::z(0), fx::z(1)});
  const std::vector<Term> gens{Term{mono({2, 0}), 0, 1}, Term{mono({0, 1}), 0, 1}, Term{mono({1, 1}), 1, 1}};
  const StanleyDecomposition s = stanley_decomposition(F, gens);
  oracle::Module m{S, F->shifts(), {}};
  for (const auto& t : gens) {
    std::vector<oracle::Poly> r(2);
    r[t.comp][oracle::exps_of(t.m, 2)] = 1;
    m.relations.push_back(r);
  }
  oracle::Oracle o(m);
  for (std::int64_t d = 0; d <= 8; ++d) CHECK(s.count(fx::z(d)) == o.dim(fx::z(d)));
}

TEST_CASE("toric_degree_ideal examples") {
  auto B = ring258();
  const auto h = toric_degree_ideal(B);
  REQUIRE(h.size() == 1);
  CHECK(h[0].monic() == parse_polynomial(B, "T2^2 - T1*T3").monic());
  CHECK(h[0].lead().m == mono({0, 2, 0}));

  auto z2 = make_group(2);
  auto I = make_ring(PrimeField(), {"a", "b"}, {Degree(z2, {1, 0}), Degree(z2, {0, 1})}, PositivityFunctional::all_ones(2));
  CHECK(toric_degree_ideal(I).empty());

  auto L = ring_with_degrees({1, 1});
  const auto l = toric_degree_ideal(L);
  REQUIRE(l.size() == 1);
  CHECK(l[0].monic() == parse_polynomial(L, "T1 - T2").monic());
}

TEST_CASE("toric ideals identify exactly the monomials of equal degree") {
  // twisted quartic and a few random degree tuples
  std::vector<std::vector<std::int64_t>> cases{{4, 3, 1, 0}, {1, 3, 4}, {2, 3}, {3, 5, 7}, {2, 4, 6}};
  std::mt19937_64 rng(12);
  for (int i = 0; i < 4; ++i) cases.push_back({1 + std::int64_t(rng() % 5), 1 + std::int64_t(rng() % 5), 1 + std::int64_t(rng() % 5)});
  for (const auto& c : cases) {
    // second coordinate 1 so the grading is positive; first coordinate is the "degree"
    auto z2 = make_group(2);
    std::vector<std::string> names;
    std::vector<Degree> degs;
    for (std::size_t i = 0; i < c.size(); ++i) {
      names.push_back("T" + std::to_string(i + 1));
      degs.emplace_back(z2, std::vector<std::int64_t>{c[i], 1});
    }
    auto B = make_ring(PrimeField(), names, degs, PositivityFunctional::all_ones(2));
    const auto H = toric_degree_ideal(B);
    for (const auto& h : H) CHECK(h.is_homogeneous());
    // B/H has dimension one in every degree of the monoid, zero elsewhere
    oracle::Oracle o(oracle::quotient_ring(B, H));
    for (std::int64_t t = 0; t <= 4; ++t) {
      std::set<std::int64_t> reach;
      for (const auto& m : monomials_up_to_weight(*B, 30))
        if (B->degree(m).coords()[1] == t) reach.insert(B->degree(m).coords()[0]);
      for (std::int64_t a = 0; a <= 25; ++a) {
        const Degree g(z2, {a, t});
        CHECK(o.dim(g) == (reach.count(a) ? 1u : 0u));
      }
    }
  }
}

TEST_CASE("module_support_decomposition examples") {
  auto B = ring_with_degrees({4, 7});
  auto F = make_free_module(B, {fx::z(0), fx::z(0)});
  const Presentation p{F, {Polynomial::variable(B, 0).as_vector(F, 0), Polynomial::variable(B, 1).as_vector(F, 1)}};
  const SupportDecomposition d = module_support_decomposition(p);
  REQUIRE(d.components.size() == 2);
  std::set<std::pair<Degree, std::vector<Degree>>> got;
  for (const auto& c : d.components) got.insert({c.shift, c.generators});
  CHECK(got == std::set<std::pair<Degree, std::vector<Degree>>>{{fx::z(0), {fx::z(4)}}, {fx::z(0), {fx::z(7)}}});
  check_decomposition(p, 40);

  auto z2 = make_group(2);
  auto I = make_ring(PrimeField(), {"a", "b"}, {Degree(z2, {1, 0}), Degree(z2, {1, 1})}, PositivityFunctional::all_ones(2));
  const SupportDecomposition free = module_support_decomposition(free_presentation(ring_as_module(I)));
  REQUIRE(free.components.size() == 1);
  CHECK(free.components[0].shift == Degree::zero(z2));
  CHECK(free.components[0].generators.size() == 2);

  auto T = ring258();
  const SupportDecomposition e = module_support_decomposition(free_presentation(ring_as_module(T)));
  REQUIRE(e.components.size() == 2);
  std::set<std::pair<Degree, std::vector<Degree>>> ge;
  for (const auto& c : e.components) ge.insert({c.shift, c.generators});
  const std::vector<Degree> e28{Degree(z2, {2, 1}), Degree(z2, {8, 1})};
  CHECK(ge == std::set<std::pair<Degree, std::vector<Degree>>>{{Degree::zero(z2), e28}, {Degree(z2, {5, 1}), e28}});
  for (std::int64_t t = 0; t <= 5; ++t)
    for (std::int64_t a = 0; a <= 45; ++a) CHECK(covering(e, Degree(z2, {a, t})) <= 1);
}

TEST_CASE("support_membership examples") {
  auto z1 = make_group(1);
  SupportDecomposition d{z1, PositivityFunctional::all_ones(1), {SupportComponent{fx::z(0), {fx::z(4)}}}};
  CHECK(support_membership(d, fx::z(8)));
  CHECK_FALSE(support_membership(d, fx::z(6)));

  const SupportDecomposition e = module_support_decomposition(free_presentation(ring_as_module(ring258())));
  CHECK(support_membership(e, Degree(make_group(2), {10, 2})));
  CHECK_FALSE(support_membership(e, Degree(make_group(2), {9, 2})));

  const SupportDecomposition empty{z1, PositivityFunctional::all_ones(1), {}};
  for (std::int64_t g = -2; g <= 10; ++g) CHECK_FALSE(support_membership(empty, fx::z(g)));
}

TEST_CASE("in_monoid with torsion") {
  auto g = make_group(1, {3});
  const std::vector<Degree> gens{Degree(g, {1, 1})};
  CHECK(in_monoid(Degree(g, {3, 0}), gens));
  CHECK(in_monoid(Degree(g, {2, 2}), gens));
  CHECK_FALSE(in_monoid(Degree(g, {2, 1}), gens));
  CHECK_FALSE(in_monoid(Degree(g, {-1, 2}), gens));
}

TEST_CASE("decompositions are extensionally correct") {
  std::mt19937_64 rng(19);
  auto R = fx::xyz();
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Polynomial> g;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) g.push_back(fx::random_form(R, 1 + std::int64_t(rng() % 3), rng));
    check_decomposition(cyclic_presentation(R, g), 10);
  }
  // Z^2 grading with a dependent degree
  auto z2 = make_group(2);
  auto B = make_ring(PrimeField(), {"a", "b", "c"}, {Degree(z2, {1, 0}), Degree(z2, {0, 1}), Degree(z2, {1, 1})},
                     PositivityFunctional::all_ones(2));
  check_decomposition(cyclic_presentation(B, fx::polys(B, {"a*b - c", "c^2"})), 10);
  check_decomposition(cyclic_presentation(B, fx::polys(B, {"a^2*b"})), 10);
  // torsion
  auto t = make_group(1, {2});
  auto C = make_ring(PrimeField(), {"x", "y"}, {Degree(t, {1, 0}), Degree(t, {1, 1})}, PositivityFunctional::all_ones(1));
  check_decomposition(cyclic_presentation(C, fx::polys(C, {"x*y"})), 12);
  check_decomposition(free_presentation(ring_as_module(C)), 12);
}

TEST_CASE("toric splits of free modules are disjoint") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::int64_t> d;
    const int n = 2 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n; ++i) d.push_back(1 + std::int64_t(rng() % 6));
    auto B = ring_with_degrees(d);
    const SupportDecomposition s = module_support_decomposition(free_presentation(ring_as_module(B)));
    for (const auto& c : s.components) CHECK(is_free_independent(c.generators));
    std::set<std::int64_t> reach;
    for (const auto& m : monomials_up_to_weight(*B, 40)) reach.insert(B->degree(m).coords()[0]);
    for (std::int64_t g = 0; g <= 40; ++g) CHECK(covering(s, fx::z(g)) == (reach.count(g) ? 1u : 0u));
  }
}
