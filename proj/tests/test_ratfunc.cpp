#include "g2rs/exppoly.hpp"
#include "g2rs/oracle.hpp"
#include "g2rs/ratfunc.hpp"

#include <doctest.h>

#include <random>

using namespace g2rs;

namespace {

LaurentPoly random_poly(std::mt19937_64 &eng, RationalSampler &rng, int terms = 3) {
  std::uniform_int_distribution<int> ex(-2, 2), var(0, 5);
  LaurentPoly p;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (int v = 0; v < 5; ++v) m = m * Monomial::var(static_cast<Var>(v), ex(eng));
    if (var(eng) == 5) m = m * Monomial::var(Var::eps);
    p += LaurentPoly(m, rng.nonzero());
  }
  return p;
}

RatFunc random_ratfunc(std::mt19937_64 &eng, RationalSampler &rng) {
  LaurentPoly d = random_poly(eng, rng, 2) + LaurentPoly(1);
  while (!d.is_regular()) d = d + LaurentPoly(1);
  return RatFunc::quotient(random_poly(eng, rng), d);
}

const NumericPoint &point() {
  static const NumericPoint p = sample_point(99, 1);
  return p;
}

cplx at(const RatFunc &f) { return eval_ratfunc(f, point()); }

} // namespace

TEST_CASE("laurent ring axioms") {
  std::mt19937_64 eng(1);
  RationalSampler rng(1);
  for (int i = 0; i < 20; ++i) {
    auto f = random_poly(eng, rng), g = random_poly(eng, rng), h = random_poly(eng, rng);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f - f).is_zero());
    for (const auto &t : f.terms()) CHECK(t.second != 0);
  }
}

TEST_CASE("eps reduction") {
  std::mt19937_64 eng(2);
  RationalSampler rng(2);
  LaurentPoly e = LaurentPoly::var(Var::eps);
  CHECK(e * e == LaurentPoly(1));
  for (int i = 0; i < 20; ++i) {
    auto f = random_poly(eng, rng), g = random_poly(eng, rng);
    CHECK((e * f) * (e * g) == f * g);
  }
  CHECK(LaurentPoly::var(Var::eps, 3) == e);
  CHECK_FALSE((LaurentPoly(1) - e).is_regular());
  CHECK((LaurentPoly(2) - e).is_regular());
}

TEST_CASE("exponent bound") {
  CHECK_NOTHROW(LaurentPoly::var(Var::Z, 64));
  CHECK_THROWS_AS(LaurentPoly::var(Var::Z, 65), ExponentOverflow);
  CHECK_THROWS_AS(LaurentPoly::var(Var::H, 40) * LaurentPoly::var(Var::H, 40), ExponentOverflow);
}

TEST_CASE("canonical text form") {
  LaurentPoly p = LaurentPoly::var(Var::H, 2) * LaurentPoly::var(Var::Z, -1) * LaurentPoly(3) + LaurentPoly(1);
  CHECK(p.to_string() == "3*H^2*Z^-1 + 1");
  CHECK(LaurentPoly().to_string() == "0");
  RatFunc f = sym::b1() + sym::b2();
  CHECK(f.to_string() == (sym::b2() + sym::b1()).to_string());
}

TEST_CASE("field operations") {
  RatFunc b1 = sym::b1(), b2 = sym::b2();
  CHECK((b1.pow(2) - b2.pow(2)) / (b1 - b2) == b1 + b2);
  std::mt19937_64 eng(3);
  RationalSampler rng(3);
  RatFunc f = random_ratfunc(eng, rng);
  CHECK(f + RatFunc(0) == f);
  CHECK((RatFunc(1) - sym::Y()) * (RatFunc(1) - sym::Y()).inverse() == RatFunc(1));
  CHECK_THROWS(RatFunc(0).inverse());
  CHECK_THROWS(RatFunc(1) / (RatFunc(1) - sym::eps()));
}

TEST_CASE("cross-multiplication equality is an equivalence") {
  std::mt19937_64 eng(4);
  RationalSampler rng(4);
  for (int i = 0; i < 10; ++i) {
    RatFunc f = random_ratfunc(eng, rng);
    RatFunc u = random_ratfunc(eng, rng) + RatFunc(7);
    if (u.is_zero() || !u.num().is_regular()) continue;
    RatFunc g = (f * u) / u;
    RatFunc h = (g * u * u) / (u * u);
    CHECK(f == f);
    CHECK(f == g);
    CHECK(g == f);
    CHECK(g == h);
    CHECK(f == h);
    CHECK(cross_residue(f, h).is_zero());
    CHECK(std::abs(at(f) - at(h)) <= 1e-10 * (1 + std::abs(at(f))));
  }
}

TEST_CASE("eps specializations") {
  std::mt19937_64 eng(5);
  RationalSampler rng(5);
  RatFunc eps = sym::eps();
  for (int i = 0; i < 10; ++i) {
    RatFunc f = random_ratfunc(eng, rng), g = random_ratfunc(eng, rng);
    RatFunc s = eps * f + g;
    CHECK(s.specialize_eps(1) == f.specialize_eps(1) + g.specialize_eps(1));
    CHECK(s.specialize_eps(-1) == -f.specialize_eps(-1) + g.specialize_eps(-1));
    CHECK((eps * f) * (eps * g) == f * g);
  }
}

TEST_CASE("geom_sum") {
  RatFunc Z = sym::Z();
  CHECK(geom_sum(1, Z, 1) == Z / (RatFunc(1) - Z));
  RatFunc c = RatFunc(1) - sym::q_inv();
  CHECK(geom_sum(c, sym::Y(), 1) == c * sym::Y() / (RatFunc(1) - sym::Y()));
  CHECK_THROWS_AS(geom_sum(1, RatFunc(1), 0), PoleError);

  std::mt19937_64 eng(6);
  RationalSampler rng(6);
  for (int i = 0; i < 10; ++i) {
    RatFunc cc = random_ratfunc(eng, rng);
    RatFunc r = sym::Z() * RatFunc(random_poly(eng, rng, 1));
    for (int n0 : {0, 1, 3}) CHECK(geom_sum(cc, r, n0) - cc * r.pow(n0) == geom_sum(cc * r, r, n0));
  }

  NumericPoint pt = sample_point(5, 1);
  RatFunc r = sym::Y() * sym::a();
  cplx closed = eval_ratfunc(geom_sum(c, r, 1), pt);
  CompensatedSum acc;
  cplx rv = eval_ratfunc(r, pt), cv = eval_ratfunc(c, pt), p = rv;
  for (int m = 1; m <= 200; ++m, p *= rv) acc.add(cv * p);
  CHECK(std::abs(closed - acc.value()) <= 1e-10 * std::abs(closed));
}

TEST_CASE("exponential polynomials") {
  CHECK(exppoly_eval(ExpPoly::constant(1), 5) == RatFunc(1));
  CHECK_THROWS_AS(exppoly_eval(ExpPoly::constant(1), -1), std::domain_error);
  RatFunc Z = sym::Z();
  CHECK(exppoly_weighted_sum(ExpPoly::constant(1), Z) == RatFunc(1) / (RatFunc(1) - Z));

  RatFunc r = sym::b1() * sym::H(-1);
  ExpPoly shifted = ExpPoly::geometric(1, r).with_overrides({RatFunc(0)});
  CHECK(shifted.threshold() == 1);
  CHECK(exppoly_eval(shifted, 0) == RatFunc(0));
  CHECK(exppoly_eval(shifted, 3) == r.pow(3));
  CHECK(exppoly_weighted_sum(shifted, Z) == r * Z / (RatFunc(1) - r * Z));
  CHECK_THROWS_AS(exppoly_weighted_sum(ExpPoly::geometric(1, Z.inverse()), Z), PoleError);

  ExpPoly a = ExpPoly::geometric(sym::a(), r) + ExpPoly::geometric(sym::b2(), Z);
  ExpPoly b = ExpPoly::geometric(2, r) + ExpPoly::constant(sym::H());
  ExpPoly m = ExpPoly::geometric(1, r) + ExpPoly::geometric(1, r);
  CHECK(m.merged().terms().size() == 1);
  for (int n = 0; n <= 5; ++n) {
    CHECK(exppoly_eval(a * b, n) == exppoly_eval(a, n) * exppoly_eval(b, n));
    CHECK(exppoly_eval(a + b, n) == exppoly_eval(a, n) + exppoly_eval(b, n));
    CHECK(exppoly_eval(a.shifted(-1), n + 1) == exppoly_eval(a, n));
  }

  NumericPoint pt = sample_point(17, -1);
  ExpPoly f = (a * b).with_overrides({sym::H(), RatFunc(3)});
  RatFunc t = sym::Z();
  cplx closed = eval_ratfunc(exppoly_weighted_sum(f, t), pt);
  CompensatedSum acc;
  cplx tv = eval_ratfunc(t, pt), p = 1;
  std::vector<std::pair<cplx, cplx>> terms;
  for (const auto &e : f.terms()) terms.emplace_back(eval_ratfunc(e.coef, pt), eval_ratfunc(e.ratio, pt));
  for (int n = 0; n <= 300; ++n, p *= tv) {
    cplx v = 0;
    if (n < f.threshold()) v = eval_ratfunc(f.overrides()[n], pt);
    else
      for (const auto &[c, r] : terms) v += c * std::pow(r, n);
    acc.add(v * p);
  }
  CHECK(std::abs(closed - acc.value()) <= 1e-9 * std::abs(closed));
}
