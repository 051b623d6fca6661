#include "g2rs/exppoly.hpp"

#include <algorithm>

namespace g2rs {

ExpPoly ExpPoly::geometric(const RatFunc &coef, const RatFunc &ratio) {
  ExpPoly f;
  if (!coef.is_zero()) f.terms_.push_back({coef, ratio});
  return f;
}

RatFunc ExpPoly::generic_at(int n) const {
  RatFunc sum;
  for (const auto &t : terms_) sum += t.coef * t.ratio.pow(n);
  return sum;
}

RatFunc ExpPoly::eval(int n) const {
  if (n < 0) throw std::domain_error("exppoly_eval: negative index");
  if (n < threshold()) return overrides_[static_cast<std::size_t>(n)];
  return generic_at(n);
}

ExpPoly ExpPoly::with_overrides(std::vector<RatFunc> values) const {
  ExpPoly f = *this;
  f.overrides_ = std::move(values);
  return f;
}

ExpPoly ExpPoly::shifted(int k) const {
  ExpPoly f;
  for (const auto &t : terms_) f.terms_.push_back({t.coef * t.ratio.pow(k), t.ratio});
  int th = std::max(0, threshold() - k);
  for (int n = 0; n < th; ++n) f.overrides_.push_back(n + k >= 0 ? eval(n + k) : generic_at(n + k));
  return f;
}

ExpPoly ExpPoly::merged() const {
  ExpPoly f;
  f.overrides_ = overrides_;
  for (const auto &t : terms_) {
    auto it = std::find_if(f.terms_.begin(), f.terms_.end(),
                           [&](const ExpTerm &e) { return e.ratio == t.ratio; });
    if (it != f.terms_.end()) it->coef += t.coef;
    else f.terms_.push_back(t);
  }
  std::erase_if(f.terms_, [](const ExpTerm &e) { return e.coef.is_zero(); });
  return f;
}

namespace {

std::vector<RatFunc> values_below(const ExpPoly &f, const ExpPoly &g, int th,
                                  RatFunc (*op)(const RatFunc &, const RatFunc &)) {
  std::vector<RatFunc> out;
  for (int n = 0; n < th; ++n) out.push_back(op(f.eval(n), g.eval(n)));
  return out;
}

RatFunc add(const RatFunc &x, const RatFunc &y) { return x + y; }
RatFunc mul(const RatFunc &x, const RatFunc &y) { return x * y; }

} // namespace

ExpPoly operator+(const ExpPoly &f, const ExpPoly &g) {
  ExpPoly r;
  r.terms_ = f.terms_;
  r.terms_.insert(r.terms_.end(), g.terms_.begin(), g.terms_.end());
  r.overrides_ = values_below(f, g, std::max(f.threshold(), g.threshold()), add);
  return r.merged();
}

ExpPoly operator-(const ExpPoly &f, const ExpPoly &g) { return f + RatFunc(-1) * g; }

ExpPoly operator*(const ExpPoly &f, const ExpPoly &g) {
  ExpPoly r;
  for (const auto &s : f.terms_)
    for (const auto &t : g.terms_) r.terms_.push_back({s.coef * t.coef, s.ratio * t.ratio});
  r.overrides_ = values_below(f, g, std::max(f.threshold(), g.threshold()), mul);
  return r.merged();
}

ExpPoly operator*(const RatFunc &c, const ExpPoly &f) {
  ExpPoly r;
  for (const auto &t : f.terms_) r.terms_.push_back({c * t.coef, t.ratio});
  for (const auto &v : f.overrides_) r.overrides_.push_back(c * v);
  return r.merged();
}

RatFunc exppoly_eval(const ExpPoly &f, int n) { return f.eval(n); }

RatFunc exppoly_weighted_sum(const ExpPoly &f, const RatFunc &t) {
  RatFunc sum;
  for (int n = 0; n < f.threshold(); ++n) sum += f.eval(n) * t.pow(n);
  for (const auto &term : f.terms()) sum += geom_sum(term.coef, term.ratio * t, f.threshold());
  return sum;
}

} // namespace g2rs
