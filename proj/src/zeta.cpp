#include "g2rs/zeta.hpp"

namespace g2rs {

namespace {

RatFunc w() { return sym::b1() * sym::b2(); }
RatFunc one() { return RatFunc(1); }
/// q^(-(3s+1/2)) = Z H^-1
RatFunc u() { return sym::Z() * sym::H(-1); }

} // namespace

RatFunc eps_value(EpsChoice e) {
  switch (e) {
  case EpsChoice::plus: return RatFunc(1);
  case EpsChoice::minus: return RatFunc(-1);
  default: return sym::eps();
  }
}

std::string to_string(EpsChoice e) {
  switch (e) {
  case EpsChoice::plus: return "+1";
  case EpsChoice::minus: return "-1";
  default: return "sym";
  }
}

RatFunc I_defining(int n) {
  if (n < 0) throw std::domain_error("I_defining: negative index");
  RatFunc sum = shintani(0, n);
  for (int m = 1; m <= n; ++m)
    sum += (one() - sym::q_inv()) * (sym::Z(2) * sym::H(2)).pow(m) * w().pow(m) * shintani(0, n - m);
  return sum;
}

const ExpPoly &I_closed() {
  static const ExpPoly f = [] {
    RatFunc X = sym::X();
    RatFunc D = sym::b1() - sym::b2();
    RatFunc K = (one() - sym::q_inv()) * w() * X / ((one() - sym::b1() * X) * (one() - sym::b2() * X));
    ExpPoly r = ExpPoly::geometric((sym::b1() + K * (one() - sym::b1() * X)) / D, u() * sym::b1()) +
                ExpPoly::geometric(-(sym::b2() + K * (one() - sym::b2() * X)) / D, u() * sym::b2()) +
                ExpPoly::geometric(K * X, u() * w() * X);
    return r;
  }();
  return f;
}

RatFunc I_closed_display(int n) {
  if (n < 0) throw std::domain_error("I_closed: negative index");
  RatFunc X = sym::X(), b1 = sym::b1(), b2 = sym::b2();
  RatFunc wx = w() * X;
  RatFunc inner = b1.pow(n) - b2.pow(n) - b1.pow(n + 1) * X + b2.pow(n + 1) * X +
                  b1 * X * wx.pow(n) - b2 * X * wx.pow(n);
  RatFunc K = (one() - sym::q_inv()) * w() * X / ((one() - b1 * X) * (one() - b2 * X));
  return u().pow(n) / (b1 - b2) * ((b1.pow(n + 1) - b2.pow(n + 1)) + K * inner);
}

RatFunc I_closed(int n) { return exppoly_eval(I_closed(), n); }

RatFunc J1(int n) {
  return (one() - sym::Z(2) * sym::H(2) * w()) / (one() - sym::Y()) * I_closed(n);
}

RatFunc J1_decomposition(int n) {
  RatFunc I = I_defining(n);
  return I + geom_sum((one() - sym::q_inv()) * I, sym::Y(), 1);
}

RatFunc R1(int n) {
  if (n <= 1) return RatFunc(0);
  return sym::Z(4) * sym::H(6) * w().pow(2) * I_closed(n - 1) -
         sym::Z(2) * sym::H(4) * (sym::Z(2) * sym::H(2)).pow(n) * w().pow(n + 1);
}

RatFunc R1_defining(int n) {
  RatFunc sum = shintani(0, n - 1) * additive_integral(n - 2);
  for (int m = 1; m <= n - 1; ++m) sum += shintani(m, n - m - 1) * sym::H(2 * m) * gauss_unit(n - m - 2);
  return sym::Z(4) * sym::H(6) * w().pow(2) * sum;
}

RatFunc R2(int n) {
  RatFunc Y = sym::Y();
  if (n == 0) return I_closed(0) * Y * (-sym::q_inv() + (one() - sym::q_inv()) * Y / (one() - Y));
  return I_closed(n) * (one() - sym::q_inv()) * Y / (one() - Y);
}

RatFunc R2_defining(int n) {
  RatFunc Y = sym::Y();
  int m0 = std::max(1, 2 - n);
  RatFunc sum;
  for (int m = 1; m < m0; ++m) sum += Y.pow(m) * gauss_unit(m + n - 2);
  sum += geom_sum(gauss_unit(0), Y, m0);
  return I_defining(n) * sum;
}

RatFunc R(int n) {
  if (n < 0) throw std::domain_error("R: negative index");
  RatFunc Y = sym::Y();
  RatFunc y_frac = (one() - sym::q_inv()) * Y / (one() - Y);
  if (n == 0)
    return -I_closed(0) * sym::Z(2) * sym::H(2) * w() * (one() - sym::Z(2) * sym::H(6) * w()) / (one() - Y);
  if (n == 1) return I_closed(1) * y_frac;
  return sym::Z(4) * sym::H(6) * w().pow(2) * I_closed(n - 1) -
         sym::Z(2) * sym::H(4) * (sym::Z(2) * sym::H(2)).pow(n) * w().pow(n + 1) + I_closed(n) * y_frac;
}

RatFunc R_defining(int n) { return R1_defining(n) + R2_defining(n); }

std::string to_string(JMutation m) {
  switch (m) {
  case JMutation::none: return "none";
  case JMutation::y_in_j0: return "J(0) = 1 - Y";
  case JMutation::i_in_j1: return "J(1) = -I(1)";
  case JMutation::middle_term: return "J(n) middle term +q^-1 Y^2 I(n-1)";
  default: return "J(n) last term -q^-n Y^(n+1)";
  }
}

namespace {

int sign_unless(JMutation actual, JMutation flipped) { return actual == flipped ? -1 : 1; }

} // namespace

RatFunc J(int n, JMutation mutation) {
  if (n < 0) throw std::domain_error("J: negative index");
  RatFunc Y = sym::Y();
  if (n == 0) return one() + RatFunc(sign_unless(mutation, JMutation::y_in_j0)) * Y;
  if (n == 1) return RatFunc(sign_unless(mutation, JMutation::i_in_j1)) * I_closed(1);
  return I_closed(n) -
         RatFunc(sign_unless(mutation, JMutation::middle_term)) * sym::q_inv() * Y.pow(2) * I_closed(n - 1) +
         RatFunc(sign_unless(mutation, JMutation::last_term)) * sym::H(-2 * n) * Y.pow(n + 1);
}

ExpPoly J_exppoly(JMutation mutation) {
  RatFunc Y = sym::Y();
  ExpPoly generic =
      I_closed() -
      RatFunc(sign_unless(mutation, JMutation::middle_term)) * sym::q_inv() * Y.pow(2) * I_closed().shifted(-1) +
      ExpPoly::geometric(RatFunc(sign_unless(mutation, JMutation::last_term)) * Y, sym::q_inv() * Y);
  return generic.with_overrides({J(0, mutation), J(1, mutation)});
}

RatFunc J_assembled(int n) { return J1_decomposition(n) - R_defining(n); }

RatFunc J2(int n) {
  RatFunc sum;
  for (int m = 1;; ++m) {
    RatFunc g = gauss_unit(-m);
    if (g.is_zero()) break;
    if (m != 1) throw std::logic_error("J2: unmodeled inner integral");
    sum += sym::H(2 * m) * g * R_defining(n);
  }
  return sum;
}

ExpPoly bfh_weight(EpsChoice e) {
  RatFunc eps = eps_value(e);
  RatFunc a = sym::a(), ainv = sym::a(-1);
  RatFunc D = a - ainv;
  return ExpPoly::geometric(a * (one() - eps * sym::H(-1) * ainv) / D, eps * a * sym::H(3)) +
         ExpPoly::geometric(-ainv * (one() - eps * sym::H(-1) * a) / D, eps * ainv * sym::H(3));
}

RatFunc local_factor(EpsChoice e, JMutation mutation) {
  return exppoly_weighted_sum(bfh_weight(e) * J_exppoly(mutation), RatFunc(1));
}

RatFunc l_ratio_target(EpsChoice e) {
  RatFunc eps = eps_value(e);
  RatFunc a = sym::a(), ainv = sym::a(-1), b1 = sym::b1(), b2 = sym::b2(), Z = sym::Z(), H = sym::H();
  // L(3s-1, pi x (chi tau)) L(6s-5/2, pi x (chi omega))
  RatFunc num_euler = one();
  for (const RatFunc &b : {b1, b2})
    num_euler *= (one() - eps * ainv * b * Z * H.pow(2)) * (one() - eps * a * b * Z * H.pow(2));
  num_euler *= (one() - eps * a * w() * Z.pow(2) * H.pow(5)) * (one() - eps * ainv * w() * Z.pow(2) * H.pow(5));
  // L(3s-1/2, tau) L(6s-2, omega) L(9s-7/2, tau x omega)
  RatFunc den_euler = (one() - b1 * Z * H) * (one() - b2 * Z * H) * (one() - w() * Z.pow(2) * H.pow(4)) *
                      (one() - b1 * w() * Z.pow(3) * H.pow(7)) * (one() - b2 * w() * Z.pow(3) * H.pow(7));
  return den_euler / num_euler;
}

RatFunc l_ratio_display(EpsChoice e) {
  RatFunc eps = eps_value(e);
  RatFunc a = sym::a(), ainv = sym::a(-1), b1 = sym::b1(), b2 = sym::b2(), X = sym::X(), qi = sym::q_inv();
  RatFunc hi = sym::H(-1);
  RatFunc num = (one() - b1 * qi * X) * (one() - b2 * qi * X) * (one() - w() * qi * X.pow(2)) *
                (one() - b1.pow(2) * b2 * qi * X.pow(3)) * (one() - b1 * b2.pow(2) * qi * X.pow(3));
  RatFunc den = (one() - eps * ainv * w() * hi * X.pow(2)) * (one() - eps * a * w() * hi * X.pow(2));
  for (const RatFunc &b : {b1, b2}) den *= (one() - eps * a * b * hi * X) * (one() - eps * ainv * b * hi * X);
  return num / den;
}

LocalFactorReport verify_main_identity(EpsChoice e, JMutation mutation) {
  LocalFactorReport rep;
  rep.eps = to_string(e);
  rep.computed = local_factor(e, mutation);
  rep.target = l_ratio_target(e);
  LaurentPoly residue = cross_residue(rep.computed, rep.target);
  rep.equal = residue.is_zero();
  rep.residue_terms = residue.size();
  if (!rep.equal) {
    std::string s = residue.to_string();
    rep.witness = s.size() > 4000 ? s.substr(0, 4000) + " ..." : s;
  }
  return rep;
}

} // namespace g2rs
