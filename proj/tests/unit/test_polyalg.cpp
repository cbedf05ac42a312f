#include <doctest.h>

#include <random>
#include <set>

#include "basym/error.hpp"
#include "fixtures.hpp"

using namespace basym;

namespace {

Monomial mono(std::initializer_list<int> e) {
  Monomial m;
  std::size_t i = 0;
  for (int x : e) m.e[i++] = x;
  return m;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("field axioms on random elements") {
  const PrimeField k;
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint32_t> el(0, k.characteristic() - 1);
  for (int i = 0; i < 1000; ++i) {
    const Coeff a = el(rng), b = el(rng), c = el(rng);
    CHECK(k.add(k.add(a, b), c) == k.add(a, k.add(b, c)));
    CHECK(k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c)));
    CHECK(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
    if (a) CHECK(k.mul(a, k.inv(a)) == 1);
  }
  CHECK(k.from_int(-1) == k.characteristic() - 1);
  CHECK_THROWS_AS(PrimeField(32004), Error);

  const FieldScalar x(k, 5), y(k, 7);
  CHECK((x * y).value() == 35);
  CHECK((x * x.inverse()).value() == 1);
  CHECK_THROWS_AS((void)(x + FieldScalar(PrimeField(5), 1)), Error);
}

TEST_CASE("compare examples") {
  auto S = fx::standard_ring({"x", "y"});
  CHECK(S->compare(mono({2, 1}), mono({1, 2})) == 1);
  CHECK(S->compare(mono({1, 1}), mono({1, 1})) == 0);

  auto T = make_ring(PrimeField(), {"T1", "T2", "T3"}, std::vector<Degree>(3, fx::z(1)),
                     PositivityFunctional::all_ones(1), MonomialOrder::lex());
  CHECK(T->compare(mono({0, 2, 0}), mono({1, 0, 1})) == -1);

  // grevlex against a graded-lex distinction: x*z^2 vs y^3 in k[x,y,z]
  auto R = fx::xyz();
  CHECK(R->compare(mono({1, 0, 2}), mono({0, 3, 0})) == -1);
  CHECK(R->compare(mono({1, 1, 1}), mono({0, 3, 0})) == -1);
  CHECK(R->compare(mono({2, 1, 0}), mono({1, 1, 1})) == 1);
}

TEST_CASE("module orders are term over position with e1 first") {
  auto S = fx::standard_ring({"x", "y"});
  auto F = make_free_module(S, {fx::z(0), fx::z(0)});
  CHECK(F->compare(Term{mono({1, 0}), 0, 1}, Term{mono({1, 0}), 1, 1}) == 1);
  CHECK(F->compare(Term{mono({0, 1}), 1, 1}, Term{mono({0, 0}), 0, 1}) == 1);
  auto P = make_free_module(S, {fx::z(0), fx::z(0)}, PositionRule::PositionOverTerm);
  CHECK(P->compare(Term{mono({0, 0}), 0, 1}, Term{mono({3, 0}), 1, 1}) == 1);
}

TEST_CASE("orders are multiplicative and well founded on random triples") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> ex(0, 4);
  auto R = fx::xyz();
  std::vector<RingPtr> rings{R, R->with_order(MonomialOrder::lex()),
                             R->with_order(MonomialOrder::elimination({true, false, false}))};
  for (const auto& ring : rings) {
    for (int i = 0; i < 300; ++i) {
      Monomial u, v, w;
      for (int j = 0; j < 3; ++j) {
        u.e[j] = ex(rng);
        v.e[j] = ex(rng);
        w.e[j] = ex(rng);
      }
      if (w.is_one()) w.e[0] = 1;
      const int c = ring->compare(u, v);
      CHECK(ring->compare(v, u) == -c);
      CHECK(ring->compare(u * w, v * w) == c);
      CHECK(ring->compare(u, u * w) == -1);
    }
    // a minimum exists in a bounded exponent box: the unit monomial
    Monomial best = mono({4, 4, 4});
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b)
        for (int c = 0; c <= 4; ++c)
          if (ring->compare(mono({a, b, c}), best) < 0) best = mono({a, b, c});
    CHECK(best.is_one());
  }
}

TEST_CASE("arith examples") {
  auto S5 = fx::standard_ring({"x", "y"}, 5);
  auto p = [&](const char* t) { return parse_polynomial(S5, t); };
  CHECK(p("x+y") + p("x-y") == p("2*x"));
  CHECK(p("x+y") * p("x-y") == p("x^2-y^2"));
  CHECK(p("x").scaled(5 % 5).is_zero());
  CHECK(p("5*x").is_zero());
  CHECK(p("(x+y)^5") == p("x^5+y^5"));

  auto other = fx::standard_ring({"x", "y"}, 7);
  CHECK(kind_of([&] { (void)(p("x") + parse_polynomial(other, "x")); }) == ErrorKind::AmbientMismatch);
}

TEST_CASE("homogeneous_degree examples") {
  auto S = fx::standard_ring({"x", "y"});
  CHECK(parse_polynomial(S, "x^2*y").homogeneous_degree() == fx::z(3));
  auto g = make_group(1);
  auto W = make_ring(PrimeField(), {"x", "y"}, {Degree(g, {2}), Degree(g, {1})}, PositivityFunctional::all_ones(1));
  CHECK(parse_polynomial(W, "x + y^2").homogeneous_degree() == fx::z(2));
  CHECK(kind_of([&] { (void)parse_polynomial(S, "x + y^2").homogeneous_degree(); }) == ErrorKind::Inhomogeneous);
  CHECK(kind_of([&] { (void)Polynomial(S).homogeneous_degree(); }) == ErrorKind::UndefinedDegree);

  auto F = make_free_module(S, {fx::z(0), fx::z(1)});
  const Vector v = parse_polynomial(S, "x^2").as_vector(F, 0) + parse_polynomial(S, "y").as_vector(F, 1);
  CHECK(v.homogeneous_degree() == fx::z(2));
}

TEST_CASE("monomials_of_degree examples") {
  auto S = fx::standard_ring({"x", "y"});
  const auto m2 = monomials_of_degree(*S, fx::z(2));
  CHECK(std::set<std::string>{S->format(m2[0]), S->format(m2[1]), S->format(m2[2])} ==
        std::set<std::string>{"x^2", "x*y", "y^2"});
  CHECK(m2.size() == 3);

  auto z2 = make_group(2);
  auto T = make_ring(PrimeField(), {"T1", "T2", "T3"}, {Degree(z2, {2, 1}), Degree(z2, {5, 1}), Degree(z2, {8, 1})},
                     PositivityFunctional::all_ones(2));
  const auto t = monomials_of_degree(*T, Degree(z2, {10, 2}));
  CHECK(t.size() == 2);
  std::set<Monomial, bool (*)(const Monomial&, const Monomial&)> got(
      [](const Monomial& a, const Monomial& b) { return a.e < b.e; });
  got.insert(t.begin(), t.end());
  CHECK(got.count(mono({0, 2, 0})) == 1);
  CHECK(got.count(mono({1, 0, 1})) == 1);

  auto g = make_group(1);
  auto X = make_ring(PrimeField(), {"x"}, {Degree(g, {4})}, PositivityFunctional::all_ones(1));
  CHECK(monomials_of_degree(*X, fx::z(7)).empty());
}

TEST_CASE("monomials_of_degree matches brute force enumeration") {
  auto z2 = make_group(2, {3});
  auto R = make_ring(PrimeField(), {"a", "b", "c"},
                     {Degree(z2, {1, 0, 1}), Degree(z2, {0, 1, 2}), Degree(z2, {1, 2, 0})},
                     PositivityFunctional({Rational(1), Rational(1, 2)}));
  for (std::int64_t i = 0; i <= 4; ++i)
    for (std::int64_t j = 0; j <= 5; ++j)
      for (std::int64_t tor = 0; tor < 3; ++tor) {
        const Degree gamma(z2, {i, j, tor});
        std::size_t brute = 0;
        for (int a = 0; a <= 6; ++a)
          for (int b = 0; b <= 6; ++b)
            for (int c = 0; c <= 6; ++c)
              if (R->degree(mono({a, b, c})) == gamma) ++brute;
        const auto got = monomials_of_degree(*R, gamma);
        CHECK(got.size() == brute);
        for (const auto& m : got) CHECK(R->degree(m) == gamma);
      }
}

TEST_CASE("ring construction rejects non-positive functionals") {
  auto z2 = make_group(2);
  CHECK(kind_of([&] {
          (void)make_ring(PrimeField(), {"x"}, {Degree(z2, {0, 3})}, PositivityFunctional({Rational(1), Rational(0)}));
        }) == ErrorKind::Positivity);
}

TEST_CASE("parse and print round trip") {
  auto R = fx::xyz();
  for (const char* t : {"3*x^2*y - z^3", "x^5 + 2*y^5 + 3*z^5", "-x", "0", "7"}) {
    const Polynomial f = parse_polynomial(R, t);
    CHECK(parse_polynomial(R, f.to_string()) == f);
  }
  CHECK(parse_polynomial(R, "3*x^2*y - z^3").to_string() == "3*x^2*y - z^3");
  CHECK(kind_of([&] { (void)parse_polynomial(R, "x + w"); }) == ErrorKind::Syntax);
  CHECK(kind_of([&] { (void)parse_polynomial(R, "x^"); }) == ErrorKind::Syntax);
}

TEST_CASE("substitute is a ring map") {
  auto R = fx::xyz();
  auto p = [&](const char* t) { return parse_polynomial(R, t); };
  const std::vector<Polynomial> img{p("y+z"), p("x"), p("x*z")};
  const Polynomial f = p("x^2 - y*z"), g = p("x*y + z^2");
  CHECK(substitute(f * g, img) == substitute(f, img) * substitute(g, img));
  CHECK(substitute(f + g, img) == substitute(f, img) + substitute(g, img));
}
