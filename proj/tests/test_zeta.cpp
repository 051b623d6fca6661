#include "g2rs/oracle.hpp"
#include "g2rs/zeta.hpp"

#include <doctest.h>

using namespace g2rs;

namespace {

RatFunc one() { return RatFunc(1); }
RatFunc w() { return sym::b1() * sym::b2(); }

} // namespace

TEST_CASE("I(n)") {
  CHECK(I_defining(0) == one());
  CHECK(I_closed(0) == one());
  CHECK(exppoly_eval(I_closed(), 0) == one());
  CHECK(I_defining(1) == shintani(0, 1) + (one() - sym::H(-2)) * sym::Z(2) * sym::H(2) * w());
  for (int n = 0; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(I_closed(n) == I_defining(n));
    CHECK(I_closed_display(n) == I_closed(n));
  }
  CHECK(I_closed().terms().size() == 3);
  CHECK_THROWS_AS(I_defining(-1), std::domain_error);
}

TEST_CASE("J1") {
  CHECK(J1(0) == (one() - sym::Z(2) * sym::H(2) * w()) / (one() - sym::Z(2) * sym::H(4) * w()));
  for (int n = 0; n <= 6; ++n) CHECK(J1(n) == J1_decomposition(n));
}

TEST_CASE("R1 and R2") {
  CHECK(R1(1).is_zero());
  CHECK(R1(2) == sym::Z(4) * sym::H(6) * w().pow(2) * I_closed(1) - sym::Z(6) * sym::H(8) * w().pow(3));
  RatFunc Y = sym::Y(), qi = sym::H(-2);
  CHECK(R2(0) == I_closed(0) * Y * (-qi + (one() - qi) * Y / (one() - Y)));
  CHECK(R2(2) == I_closed(2) * (one() - qi) * Y / (one() - Y));
  for (int n = 0; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(R1(n) == R1_defining(n));
    CHECK(R2(n) == R2_defining(n));
    CHECK(R(n) == R1(n) + R2(n));
    CHECK(R(n) == R_defining(n));
  }
}

TEST_CASE("J(n) and J2") {
  RatFunc Y = sym::Y();
  CHECK(J(0) == one() + Y);
  CHECK(J(1) == I_closed(1));
  CHECK(J(4) == J1(4) - R(4));
  CHECK(exppoly_eval(J_exppoly(), 0) == one() + Y);
  CHECK(J_exppoly().threshold() == 2);
  for (int n = 0; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(J(n) == J_assembled(n));
    CHECK(J(n) == J1(n) - R(n));
    CHECK(J2(n) == -R(n));
    CHECK(exppoly_eval(J_exppoly(), n) == J(n));
  }
}

TEST_CASE("target L-ratio") {
  for (EpsChoice e : {EpsChoice::minus, EpsChoice::plus, EpsChoice::symbolic})
    CHECK(l_ratio_display(e) == l_ratio_target(e));
  RatFunc t = l_ratio_target(EpsChoice::symbolic);
  CHECK(t.specialize_eps(1) == l_ratio_target(EpsChoice::plus));
  CHECK(t.specialize_eps(-1) == l_ratio_target(EpsChoice::minus));

  NumericPoint p = sample_point(3, 1), m = p;
  m.eps = -1;
  cplx vp = eval_ratfunc(l_ratio_target(EpsChoice::plus), p);
  cplx vm = eval_ratfunc(l_ratio_target(EpsChoice::minus), m);
  NumericPoint twisted = p;
  twisted.a = -p.a;
  CHECK(std::abs(vm - eval_ratfunc(l_ratio_target(EpsChoice::plus), twisted)) <= 1e-12 * std::abs(vm));
  CHECK(std::abs(vp - vm) > 1e-15);
}

TEST_CASE("local factor") {
  ExpPoly weight = bfh_weight(EpsChoice::symbolic);
  for (int n = 0; n <= 6; ++n)
    CHECK(exppoly_eval(weight, n) ==
          bfh_whittaker(n).value * sym::H(5 * n) * sym::eps().pow(n));
  CHECK(exppoly_eval(bfh_weight(EpsChoice::plus) * J_exppoly(), 0) == one() + sym::Y());

  for (EpsChoice e : {EpsChoice::minus, EpsChoice::plus, EpsChoice::symbolic}) {
    CAPTURE(to_string(e));
    LocalFactorReport r = verify_main_identity(e);
    CHECK(r.equal);
    CHECK(r.residue_terms == 0);
    CHECK(r.witness.empty());
  }
}

TEST_CASE("mutated J branches break the identity") {
  for (JMutation m : {JMutation::y_in_j0, JMutation::i_in_j1, JMutation::middle_term, JMutation::last_term}) {
    CAPTURE(to_string(m));
    LocalFactorReport r = verify_main_identity(EpsChoice::minus, m);
    CHECK_FALSE(r.equal);
    CHECK_FALSE(r.witness.empty());
  }
}
