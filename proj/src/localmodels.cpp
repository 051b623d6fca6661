#include "g2rs/localmodels.hpp"

#include <algorithm>

namespace g2rs {

RatFunc shintani(int k, int l) {
  if (l < 0) return RatFunc(0);
  RatFunc sum;
  for (int i = 0; i <= l; ++i) sum += sym::b1(l - i) * sym::b2(i);
  return sym::Z(2 * k + l) * (sym::b1() * sym::b2()).pow(k) * sym::H(-l) * sum;
}

RatFunc central_twist(int m) { return sym::Z(2 * m) * (sym::b1() * sym::b2()).pow(m); }

BfhValue bfh_whittaker(int n, const RatFunc &eps) {
  if (n < 0) throw std::domain_error("bfh_whittaker: negative index");
  const RatFunc a = sym::a();
  const RatFunc ainv = sym::a(-1);
  RatFunc bracket = (RatFunc(1) - eps * sym::H(-1) * ainv) * a.pow(n + 1) -
                    (RatFunc(1) - eps * sym::H(-1) * a) * ainv.pow(n + 1);
  return {sym::H(-2 * n) * bracket / (a - ainv), n};
}

RatFunc gauss_unit(int k) {
  if (k >= 0) return RatFunc(1) - sym::q_inv();
  if (k == -1) return -sym::q_inv();
  return RatFunc(0);
}

RatFunc additive_integral(int k) { return RatFunc(k >= 0 ? 1 : 0); }

std::string WeilState::support() const { return "(" + point_coeff.to_string() + ")*x + (" + point_shift.to_string() + ") in o"; }

namespace {

bool same_multiset(const std::vector<RatFunc> &x, const std::vector<RatFunc> &y) {
  if (x.size() != y.size()) return false;
  std::vector<bool> used(y.size(), false);
  for (const auto &f : x) {
    bool found = false;
    for (std::size_t j = 0; j < y.size() && !found; ++j)
      if (!used[j] && f == y[j]) used[j] = found = true;
    if (!found) return false;
  }
  return true;
}

/// Substitute x -> c x + d in the state's x-dependence.
WeilState substitute(const WeilState &s, const RatFunc &c, const RatFunc &d) {
  WeilState r = s;
  r.point_coeff = s.point_coeff * c;
  r.point_shift = s.point_coeff * d + s.point_shift;
  r.phase[0] = s.phase[0] + s.phase[1] * d + s.phase[2] * d * d;
  r.phase[1] = s.phase[1] * c + RatFunc(2) * s.phase[2] * c * d;
  r.phase[2] = s.phase[2] * c * c;
  return r;
}

} // namespace

bool operator==(const WeilState &s, const WeilState &t) {
  for (int i = 0; i < 3; ++i)
    if (!(s.phase[i] == t.phase[i])) return false;
  return s.point_coeff == t.point_coeff && s.point_shift == t.point_shift && s.scale == t.scale &&
         s.fourier == t.fourier && same_multiset(s.mu_args, t.mu_args) &&
         same_multiset(s.abs_args, t.abs_args);
}

WeilState weil_apply(const WeilGenerator &gen, const WeilState &state) {
  if (const auto *n = std::get_if<weil::N>(&gen)) {
    WeilState r = state;
    r.phase[2] += n->b;
    return r;
  }
  if (const auto *t = std::get_if<weil::T>(&gen)) {
    if (t->a.is_zero()) throw std::domain_error("weil_apply: t(0)");
    WeilState r = substitute(state, t->a, RatFunc(0));
    r.mu_args.push_back(t->a);
    r.abs_args.push_back(t->a);
    return r;
  }
  if (const auto *h = std::get_if<weil::Heis>(&gen)) {
    WeilState r = substitute(state, RatFunc(1), h->r1);
    r.phase[0] += h->r3 - h->r1 * h->r2;
    r.phase[1] += RatFunc(-2) * h->r2;
    return r;
  }
  WeilState r = state;
  ++r.fourier;
  return r;
}

} // namespace g2rs
