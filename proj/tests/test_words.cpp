#include "g2rs/adjoint.hpp"
#include "g2rs/ratfunc.hpp"
#include "g2rs/words.hpp"

#include <doctest.h>

using namespace g2rs;
using namespace g2rs::roots;

namespace {

using W = GroupWord<Rational>;
const AdjointModel &M() { return AdjointModel::calibrated(); }

W random_positive_word(RationalSampler &rng, std::mt19937 &eng, int len) {
  std::uniform_int_distribution<int> pick(0, 5);
  W w;
  for (int i = 0; i < len; ++i) w *= W::x(positive_roots[pick(eng)], rng.nonzero());
  return w;
}

W random_v_word(RationalSampler &rng, std::mt19937 &eng, int len) {
  std::uniform_int_distribution<int> pick(0, 4);
  W w;
  for (int i = 0; i < len; ++i) w *= W::x(v_roots[pick(eng)], rng.nonzero());
  return w;
}

} // namespace

TEST_CASE("normal order examples") {
  W w = normal_order(W::x(beta, 1) * W::x(alpha, 1));
  W expect = W::x(alpha, 1) * W::x(beta, 1) * W::x(alpha_beta, 1) * W::x(two_alpha_beta, 1) *
             W::x(three_alpha_beta, -1) * W::x(three_alpha_two_beta, -1);
  CHECK(to_string(w) == to_string(expect));
  CHECK(M().evaluate(w) == M().evaluate(W::x(beta, 1) * W::x(alpha, 1)));

  CHECK(to_string(normal_order(W::x(alpha, 2) * W::x(alpha, 3))) == to_string(W::x(alpha, 5)));
  W fixed = W::x(three_alpha_beta, 1) * W::x(three_alpha_two_beta, 1);
  CHECK(to_string(normal_order(fixed)) == to_string(fixed));
  CHECK(normal_order(W::x(alpha, 1) * W::x(alpha, -1)).empty());
}

TEST_CASE("normal order errors") {
  CHECK_THROWS_AS(normal_order(W::x(-alpha, 1)), UnsupportedWord);
  CHECK_THROWS_AS(normal_order(W::h(1, 2)), UnsupportedWord);
  CHECK_THROWS_AS(normal_order(W::x(beta, 1) * W::x(alpha, 1), 1), RewriteLimitExceeded);
}

TEST_CASE("normal order matches the adjoint model and is idempotent") {
  RationalSampler rng(21);
  std::mt19937 eng(21);
  for (int i = 0; i < 20; ++i) {
    W w = random_positive_word(rng, eng, 6);
    W n = normal_order(w);
    CHECK(M().evaluate(n) == M().evaluate(w));
    CHECK(to_string(normal_order(n)) == to_string(n));
    int last = -1;
    for (const auto &g : n.generators()) {
      int pos = normal_order_position(std::get<XGen<Rational>>(g).root);
      CHECK(pos > last);
      last = pos;
    }
  }
}

TEST_CASE("normal order over rational functions") {
  using F = GroupWord<RatFunc>;
  RatFunc x = sym::a(), y = sym::b1();
  F n = normal_order(F::x(beta, y) * F::x(alpha, x));
  REQUIRE(n.size() == 6);
  const auto &last = std::get<XGen<RatFunc>>(n.generators()[5]);
  CHECK(last.root == three_alpha_two_beta);
  CHECK(last.t == -(x.pow(3) * y.pow(2)));
  const auto &mid = std::get<XGen<RatFunc>>(n.generators()[4]);
  CHECK(mid.t == -(x.pow(3) * y));
}

TEST_CASE("v elements") {
  Rational z = 0;
  CHECK(M().evaluate(v_element(z, z, z, z, z)).is_identity());
  CHECK(M().evaluate(v_element<Rational>(1, 0, 0, 0, 0)) == M().x(alpha, 1));
  auto prod = v_element<Rational>(1, 1, 0, 0, 0) * v_element<Rational>(0, 0, 1, 0, 0);
  auto r = v_coordinates(prod);
  CHECK(r == std::array<Rational, 5>{1, 1, 1, 0, 0});
  CHECK_THROWS_AS(v_coordinates(W::x(beta, 1)), std::domain_error);
}

TEST_CASE("heisenberg projection") {
  auto p = pr(v_element<Rational>(1, 1, 1, 0, 0));
  CHECK(p == HeisenbergElement<Rational>{1, 1, 0});
  CHECK(pr(v_element<Rational>(2, 3, 5, 7, 11)) == pr(v_element<Rational>(2, 3, 5, 0, 0)));
  CHECK(pr(W::x(three_alpha_beta, 4) * W::x(three_alpha_two_beta, -2)) == HeisenbergElement<Rational>{0, 0, 0});
  CHECK_THROWS_AS(pr(W::x(beta, 1)), std::domain_error);

  RationalSampler rng(8);
  std::mt19937 eng(8);
  for (int i = 0; i < 20; ++i) {
    W v = random_v_word(rng, eng, 4), u = random_v_word(rng, eng, 4);
    CHECK(pr(v * u) == pr(v) * pr(u));
    auto c = v_coordinates(v);
    bool in_kernel = pr(v) == HeisenbergElement<Rational>{0, 0, 0};
    bool supported = c[0] == 0 && c[1] == 0 && c[2] == 0;
    CHECK(in_kernel == supported);
  }
}

TEST_CASE("conjugation by torus and Weyl words") {
  Rational t1 = make_rational(2, 3), t2 = make_rational(-5, 2), r = make_rational(7, 4);
  W c = conj(W::x(beta, r), W::h(1 / t1, 1 / t2));
  CHECK(to_string(c) == to_string(W::x(beta, t2 / t1 * r)));
  W gamma = W::w(beta) * W::w(alpha) * W::w(beta) * W::w(alpha);
  CHECK(to_string(conj(W::x(alpha_beta, r), gamma)) == to_string(W::x(alpha, r)));
  CHECK(to_string(conj(W::x(alpha, r), W())) == to_string(W::x(alpha, r)));
  CHECK_THROWS_AS(conj(W::x(alpha, r), W::x(beta, 1)), UnsupportedWord);

  RationalSampler rng(4);
  std::mt19937 eng(4);
  std::vector<W> conjugators{W::h(rng.nonzero(), rng.nonzero()), W::w(alpha), W::w_inv(beta), gamma,
                             W::w(beta) * W::h(rng.nonzero(), rng.nonzero()) * W::w_inv(alpha)};
  for (const auto &by : conjugators) {
    W w = random_positive_word(rng, eng, 3) * W::h(rng.nonzero(), rng.nonzero());
    CHECK(M().evaluate(conj(w, by)) == M().evaluate(by) * M().evaluate(w) * M().evaluate(by).inverse());
  }
}

TEST_CASE("torus characters") {
  Rational t1 = 3, t2 = 5;
  for (Root g : positive_roots) {
    AdjointMatrix h = M().h(t1, t2);
    CHECK(h * M().x(g, 1) * h.inverse() == M().x(g, torus_character(g, t1, t2)));
  }
}
