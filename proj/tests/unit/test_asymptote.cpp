#include <doctest.h>

#include "basym/error.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace basym;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

Presentation S_of(const RingPtr& r) { return free_presentation(ring_as_module(r)); }

// k[T_1..T_s] with deg T_i = (0, e_i) over base Z.
RingPtr fiber_ring(std::size_t s) {
  auto base = make_group(1);
  auto g = product_with_free(base, static_cast<int>(s));
  std::vector<std::string> names;
  std::vector<Degree> degs;
  for (std::size_t i = 0; i < s; ++i) {
    names.push_back("T" + std::to_string(i + 1));
    std::vector<std::int64_t> c(1 + s, 0);
    c[1 + i] = 1;
    degs.emplace_back(g, c);
  }
  return make_ring(PrimeField(), names, degs, PositivityFunctional::all_ones(1).extended(static_cast<int>(s), Rational(1)));
}

}  // namespace

TEST_CASE("complete intersection (2,5,8): shapes match the closed formulas") {
  auto R = fx::xyz();
  TorPipeline pipe(S_of(R), make_rees_setup(R, {fx::ci258(R)}), 2);
  for (std::size_t ell = 0; ell <= 2; ++ell) {
    const AsymptoticShape a = pipe.shape(ell);
    REQUIRE(a.threshold.size() == 1);
    for (std::int64_t t = std::max<std::int64_t>(a.threshold[0], 1); t <= 7; ++t)
      CHECK(a.support({t}, Rational(80)) == fx::ci_formula(ell, t));
    // every shape component has non-empty blocks with independent differences
    for (const auto& c : a.components) {
      REQUIRE(c.blocks.size() == 1);
      CHECK_FALSE(c.blocks[0].empty());
      CHECK(is_free_independent(delta_tuple(c.blocks[0])));
    }
  }
  CHECK(pipe.shape(0).threshold == std::vector<std::int64_t>{1});
  CHECK(pipe.shape(2).threshold == std::vector<std::int64_t>{2});
}

TEST_CASE("raw shape is exact for every t") {
  auto R = fx::xyz();
  const ReesSetup st = make_rees_setup(R, {fx::ci258(R)});
  TorPipeline pipe(S_of(R), st, 2);
  for (std::int64_t t = 0; t <= 2; ++t) {
    const BettiTable b = power_tor(S_of(R), st, {t}, 2);
    for (std::size_t ell = 0; ell <= 2; ++ell)
      CHECK(pipe.raw_shape(ell).support({t}, Rational(40)) == capped(b.support(ell), R->phi(), Rational(40)));
  }
}

TEST_CASE("principal ideal: Tor_0 of I^t sits in degree t deg x") {
  auto S = fx::standard_ring({"x", "y"});
  TorPipeline pipe(S_of(S), make_rees_setup(S, {fx::polys(S, {"x"})}), 1);
  const AsymptoticShape a = pipe.shape(0);
  REQUIRE(a.components.size() == 1);
  CHECK(a.components[0].delta == fx::z(0));
  CHECK(a.components[0].t0 == std::vector<std::int64_t>{0});
  CHECK(a.components[0].blocks[0] == std::vector<Degree>{fx::z(1)});
  for (std::int64_t t = 0; t <= 5; ++t) CHECK(a.support({t}, Rational(20)) == fx::zs({t}));
  CHECK(pipe.shape(1).components.empty());
}

TEST_CASE("two ideals (x, y) and (x^2, y^2)") {
  auto S = fx::standard_ring({"x", "y"});
  const ReesSetup st = make_rees_setup(S, {fx::polys(S, {"x", "y"}), fx::polys(S, {"x^2", "y^2"})});
  TorPipeline pipe(S_of(S), st, 2);
  for (std::size_t ell = 0; ell <= 2; ++ell) {
    const AsymptoticShape a = pipe.shape(ell);
    const std::int64_t lo0 = std::max<std::int64_t>(a.threshold[0], 1), lo1 = std::max<std::int64_t>(a.threshold[1], 1);
    for (std::int64_t t1 = lo0; t1 <= lo0 + 1; ++t1)
      for (std::int64_t t2 = lo1; t2 <= lo1 + 1; ++t2) {
        oracle::Oracle o(oracle::quotient_ring(S, power_ideal(st, {t1, t2})));
        std::set<Degree> expect;
        for (std::int64_t d = 0; d <= 20; ++d)
          if (o.tor(ell + 1, fx::z(d))) expect.insert(fx::z(d));
        CHECK(a.support({t1, t2}, Rational(20)) == expect);
      }
  }
}

TEST_CASE("shapes need the standard grading") {
  auto S = fx::standard_ring({"x", "y"});
  TorPipeline pipe(S_of(S), make_rees_setup(S, {fx::polys(S, {"x^2", "x*y", "y^2"})}, true), 1);
  CHECK(kind_of([&] { (void)pipe.shape(0); }) == ErrorKind::InvalidArgument);
  TorPipeline plain(S_of(S), make_rees_setup(S, {fx::polys(S, {"x^2", "x*y", "y^2"})}), 1);
  CHECK(kind_of([&] { (void)equigenerated_bounds(plain, 1); }) == ErrorKind::NotEquigenerated);
  CHECK(kind_of([&] { (void)plain.shape(2); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("eventual_positivity examples") {
  auto base = make_group(1);
  auto B1 = fiber_ring(1);
  Positivity p = eventual_positivity(cyclic_presentation(B1, fx::polys(B1, {"T1"})), base, 1);
  CHECK(p.kind == Eventually::Zero);
  CHECK(p.t0 == std::vector<std::int64_t>{1});
  p = eventual_positivity(S_of(B1), base, 1);
  CHECK(p.kind == Eventually::Nonzero);
  CHECK(p.t0 == std::vector<std::int64_t>{0});

  auto B2 = fiber_ring(2);
  p = eventual_positivity(cyclic_presentation(B2, fx::polys(B2, {"T1*T2"})), base, 2);
  CHECK(p.kind == Eventually::Zero);
  CHECK(p.t0 == std::vector<std::int64_t>{1, 1});
  // {1, T1} * k[T2] never covers block 1
  p = eventual_positivity(cyclic_presentation(B2, fx::polys(B2, {"T1^2"})), base, 2);
  CHECK(p.kind == Eventually::Zero);
  // the pattern is constant beyond t0
  oracle::Oracle o(oracle::quotient_ring(B2, fx::polys(B2, {"T1^2"})));
  for (std::int64_t a = p.t0[0]; a <= p.t0[0] + 3; ++a)
    for (std::int64_t b = p.t0[1]; b <= p.t0[1] + 3; ++b) CHECK(o.dim(Degree(B2->group(), {0, a, b})) == 0u);
}

TEST_CASE("eventual positivity: the vanishing pattern is constant beyond t0") {
  auto base = make_group(1);
  auto B2 = fiber_ring(2);
  for (const auto& rel : std::vector<std::vector<const char*>>{{"T1*T2"}, {"T1^2", "T2^3"}, {"T1^2*T2"}, {}}) {
    std::vector<Polynomial> g;
    for (const char* r : rel) g.push_back(parse_polynomial(B2, r));
    const Presentation pr = g.empty() ? S_of(B2) : cyclic_presentation(B2, g);
    const Positivity p = eventual_positivity(pr, base, 2);
    oracle::Oracle o(oracle::from_presentation(pr));
    for (std::int64_t a = p.t0[0]; a <= p.t0[0] + 4; ++a)
      for (std::int64_t b = p.t0[1]; b <= p.t0[1] + 4; ++b)
        CHECK((o.dim(Degree(B2->group(), {0, a, b})) != 0) == (p.kind == Eventually::Nonzero));
  }
}

TEST_CASE("fit_polynomial") {
  FittedPolynomial f = fit_polynomial([](const std::vector<std::int64_t>& t) { return 2 * t[0] + 1; }, 1, 2, {0});
  CHECK(f.to_string() == "2*t + 1");
  CHECK(f({10}) == Rational(21));

  f = fit_polynomial([](const std::vector<std::int64_t>& t) { return t[0] * (t[0] + 1) / 2; }, 1, 2, {0});
  CHECK(f({7}) == Rational(28));
  CHECK(f.to_string() == "1/2*t^2 + 1/2*t");

  f = fit_polynomial([](const std::vector<std::int64_t>& t) { return t[0] * t[1] + 3; }, 2, 2, {0, 0});
  CHECK(f.to_string() == "t1*t2 + 3");
  CHECK(f({4, 5}) == Rational(23));

  // eventually polynomial: the fit moves t0 past the irregular start
  f = fit_polynomial([](const std::vector<std::int64_t>& t) { return t[0] < 2 ? 7 : 3 * t[0]; }, 1, 1, {0});
  CHECK(f({9}) == Rational(27));
  CHECK(f.valid_from[0] >= 2);

  CHECK(kind_of([] {
          (void)fit_polynomial([](const std::vector<std::int64_t>& t) { return std::int64_t(1) << t[0]; }, 1, 2, {0});
        }) == ErrorKind::FitFailure);
  f = fit_polynomial([](const std::vector<std::int64_t>&) { return 0; }, 1, 1, {0});
  CHECK(f.to_string() == "0");
}

TEST_CASE("equigenerated bounds for (x, y)^2") {
  auto S = fx::standard_ring({"x", "y"});
  const ReesSetup st = make_rees_setup(S, {fx::polys(S, {"x^2", "x*y", "y^2"})}, true);
  TorPipeline pipe(S_of(S), st, 1);
  const EquigeneratedReport r = equigenerated_bounds(pipe, 1);
  CHECK(r.gamma == std::vector<Degree>{fx::z(2)});
  CHECK(r.delta[0] == fx::zs({0}));
  // T1*T3 - T2^2 is a relation of base degree 0 in the shifted grading
  CHECK(r.delta[1] == fx::zs({0, 1}));
  CHECK(r.delta_prime[0] == fx::zs({0}));
  CHECK(r.delta_prime[1] == fx::zs({1}));
  const FittedPolynomial& p0 = r.strands[0].at(fx::z(0)).polynomial;
  const FittedPolynomial& p1 = r.strands[1].at(fx::z(1)).polynomial;
  CHECK(p0.to_string() == "2*t + 1");
  CHECK(p1.to_string() == "2*t");
  CHECK(r.strands[1].at(fx::z(0)).positivity.kind == Eventually::Zero);
  CHECK(r.place(fx::z(1), {3}) == fx::z(7));
  const ReesSetup plain = make_rees_setup(S, {fx::polys(S, {"x^2", "x*y", "y^2"})});
  for (std::int64_t t = 5; t <= 6; ++t) {
    const BettiTable b = power_tor(S_of(S), plain, {t}, 1);
    CHECK(Rational(static_cast<std::int64_t>(b.multiplicity(0, fx::z(2 * t)))) == p0({t}));
    CHECK(Rational(static_cast<std::int64_t>(b.multiplicity(1, fx::z(2 * t + 1)))) == p1({t}));
  }
}

TEST_CASE("equigenerated bounds: Delta sets and containment for all t") {
  auto S = fx::standard_ring({"x", "y"});
  struct Case {
    std::vector<const char*> gens;
    std::vector<std::set<Degree>> delta_prime;
  };
  const std::vector<Case> cases{{{"x^2", "y^2"}, {fx::zs({0}), fx::zs({2})}},
                                {{"x", "y"}, {fx::zs({0}), fx::zs({1})}},
                                {{"x^2", "x*y", "y^2"}, {fx::zs({0}), fx::zs({1})}}};
  for (const auto& c : cases) {
    std::vector<Polynomial> g;
    for (const char* x : c.gens) g.push_back(parse_polynomial(S, x));
    TorPipeline pipe(S_of(S), make_rees_setup(S, {g}, true), 2);
    const EquigeneratedReport r = equigenerated_bounds(pipe, 2);
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(r.delta_prime[i] == c.delta_prime[i]);
      for (const auto& d : r.delta_prime[i]) CHECK(r.delta[i].count(d) == 1);
    }
    const ReesSetup plain = make_rees_setup(S, {g});
    for (std::int64_t t = 0; t <= 4; ++t) {
      const BettiTable b = power_tor(S_of(S), plain, {t}, 2);
      for (std::size_t i = 0; i <= 2; ++i)
        for (const auto& d : b.support(i)) {
          bool found = false;
          for (const auto& eta : r.delta[i]) found = found || r.place(eta, {t}) == d;
          CHECK(found);
        }
    }
  }
  CHECK(kind_of([&] { (void)make_rees_setup(S, {fx::polys(S, {"x", "y^2"})}, true); }) == ErrorKind::NotEquigenerated);
}

TEST_CASE("complete intersection: Tor_2(I^t) in degree mu is B in degree (mu - 15, t - 1)") {
  auto R = fx::xyz();
  const ReesSetup st = make_rees_setup(R, {fx::ci258(R)});
  // monomials of k[T1,T2,T3], deg T = (2,1), (5,1), (8,1)
  auto count_b = [](std::int64_t mu, std::int64_t t) {
    std::size_t n = 0;
    for (std::int64_t a = 0; a <= t; ++a)
      for (std::int64_t b = 0; a + b <= t; ++b) n += 2 * a + 5 * b + 8 * (t - a - b) == mu;
    return n;
  };
  for (std::int64_t t = 1; t <= 4; ++t) {
    CAPTURE(t);
    const BettiTable b = power_tor(S_of(R), st, {t}, 2);
    CHECK(b.support(2) == fx::ci_formula(2, t));
    for (const auto& d : b.support(2)) CHECK(b.multiplicity(2, d) == count_b(d.coords()[0] - 15, t - 1));
  }
  // one-dimensional only while t - 1 < 2; T2^2 and T1*T3 share degree (10, 2)
  CHECK(power_tor(S_of(R), st, {2}, 2).multiplicity(2, fx::z(20)) == 1);
  CHECK(power_tor(S_of(R), st, {3}, 2).multiplicity(2, fx::z(25)) == 2);

  // the Tor_2 strand at 15 + 2(t - 1) fits the constant 1
  const FittedPolynomial f = fit_polynomial(
      [&](const std::vector<std::int64_t>& t) {
        return static_cast<std::int64_t>(power_tor(S_of(R), st, t, 2).multiplicity(2, fx::z(15 + 2 * (t[0] - 1))));
      },
      1, 0, {1}, 0);
  CHECK(f.to_string() == "1");
}
