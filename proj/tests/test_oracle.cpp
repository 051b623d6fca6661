#include "g2rs/oracle.hpp"

#include <doctest.h>

#include <algorithm>

using namespace g2rs;

TEST_CASE("numeric evaluation") {
  NumericPoint pt = sample_point(1, 1);
  CHECK(eval_ratfunc(RatFunc(1), pt) == cplx(1.0, 0.0));

  NumericPoint unit = pt;
  unit.b1 = std::polar(1.0, 0.7);
  unit.b2 = 1.0 / unit.b1;
  CHECK(std::abs(eval_ratfunc(sym::Y(), unit) - std::pow(9.0, -10.0)) <= 1e-12 * std::pow(9.0, -10.0));

  NumericPoint sh = pt;
  sh.b1 = std::polar(1.0, 0.3);
  sh.b2 = std::polar(1.0, -0.3);
  cplx expect = std::pow(9.0, -6.5) * 2.0 * std::cos(0.3);
  CHECK(std::abs(eval_ratfunc(shintani(0, 1), sh) - expect) <= 1e-12 * std::abs(expect));

  NumericPoint bad = pt;
  bad.b1 = bad.b2;
  try {
    eval_ratfunc(RatFunc(1) / (sym::b1() - sym::b2()), bad);
    FAIL("expected an evaluation error");
  } catch (const EvaluationError &e) {
    CHECK(std::string(e.what()).find("b1") != std::string::npos);
  }
}

TEST_CASE("sampled points") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    NumericPoint p = sample_point(seed, -1);
    CHECK(std::abs(std::abs(p.a) - 1) < 1e-15);
    CHECK(std::abs(std::abs(p.b1) - 1) < 1e-15);
    CHECK(std::abs(std::abs(p.b2) - 1) < 1e-15);
    CHECK(p.eps == -1);
  }
  CHECK(sample_point(4, 1).a == sample_point(4, 1).a);
}

TEST_CASE("truncated series") {
  double Z = std::pow(9.0, -6.0);
  SeriesResult r = truncated_series([Z](int n) { return cplx(std::pow(Z, n)); }, 50, Z);
  CHECK(std::abs(r.sum - 1.0 / (1.0 - Z)) <= 1e-14);
  CHECK(r.tail_bound < 1e-14);
  CHECK_THROWS_AS(truncated_series([](int) { return cplx(1); }, 10, 1.0), DivergenceError);

  double rho = 0.5;
  SeriesResult h = truncated_series([rho](int n) { return cplx(std::pow(rho, n)); }, 20, rho);
  double err = std::abs(h.sum - 1.0 / (1.0 - rho));
  CHECK(err <= h.tail_bound);
}

TEST_CASE("compensated summation is order independent") {
  std::vector<cplx> v;
  std::mt19937_64 eng(2);
  std::uniform_real_distribution<double> d(-1, 1);
  for (int i = 0; i < 1000; ++i) v.emplace_back(d(eng) * std::pow(10.0, i % 17 - 8), d(eng));
  CompensatedSum a, b;
  for (auto x : v) a.add(x);
  std::reverse(v.begin(), v.end());
  for (auto x : v) b.add(x);
  CHECK(std::abs(a.value() - b.value()) <= 1e-12 * std::abs(a.value()));
}

TEST_CASE("suite at seeded points") {
  std::vector<NumericPoint> pts;
  for (std::uint64_t seed = 1; seed <= 3; ++seed)
    for (int eps : {1, -1}) pts.push_back(sample_point(seed, eps));
  auto reports = run_suite(pts);
  CHECK(reports.size() == pts.size() * 7);
  for (const auto &r : reports) {
    CAPTURE(r.label);
    CAPTURE(r.seed);
    CHECK(r.pass());
    CHECK(r.relative_error <= 1e-10);
    if (r.terms_used > 0) CHECK(std::abs(r.truncated_value - r.symbolic_value) <= r.tail_bound + 1e-10 * std::abs(r.symbolic_value));
  }
  CHECK(std::is_sorted(reports.begin(), reports.end(), [](const ComparisonReport &x, const ComparisonReport &y) {
    return std::tie(x.label, x.seed, x.eps) < std::tie(y.label, y.seed, y.eps);
  }));
}

TEST_CASE("slow convergence is inconclusive") {
  NumericPoint pt = sample_point(1, 1, 9.0, 0.6);
  ComparisonReport r = compare_final_sum(pt);
  CHECK(r.status == Status::inconclusive);
}

TEST_CASE("a mutated J branch fails the final sum") {
  SuiteOptions opts;
  opts.mutation = JMutation::i_in_j1;
  ComparisonReport r = compare_final_sum(sample_point(1, -1), opts);
  CHECK(r.status == Status::fail);
}

TEST_CASE("tail bound covers the truncation error") {
  for (int nmax : {2, 4, 8}) {
    SuiteOptions opts;
    opts.nmax = nmax;
    opts.tolerance = 1.0;
    ComparisonReport r = compare_final_sum(sample_point(2, 1, 9.0, 1.6), opts);
    CAPTURE(nmax);
    CHECK(r.tail_bound > 0);
    CHECK(std::abs(r.truncated_value - r.symbolic_value) <= r.tail_bound + 1e-14 * std::abs(r.symbolic_value));
  }
}
