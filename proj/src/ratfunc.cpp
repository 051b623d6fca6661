#include "g2rs/ratfunc.hpp"

#include <algorithm>
#include <ostream>

namespace g2rs {

namespace {

LaurentPoly product(const std::vector<RatFunc::Factor> &factors) {
  LaurentPoly p(1);
  for (const auto &[f, k] : factors) p *= f.pow(k);
  return p;
}

int multiplicity(const std::vector<RatFunc::Factor> &factors, const LaurentPoly &f) {
  for (const auto &[g, k] : factors)
    if (g == f) return k;
  return 0;
}

} // namespace

void RatFunc::add_factor(const LaurentPoly &p, int mult) {
  if (!p.is_regular()) throw std::domain_error("division by zero or by a zero divisor");
  auto n = p.normalize();
  num_ = num_ * LaurentPoly(n.mono, n.coeff).pow(-mult);
  if (n.poly.is_constant()) return;
  for (auto &[f, k] : den_) {
    if (f == n.poly) {
      k += mult;
      return;
    }
  }
  den_.emplace_back(std::move(n.poly), mult);
}

RatFunc RatFunc::quotient(const LaurentPoly &p, const LaurentPoly &d) {
  RatFunc r(p);
  r.add_factor(d, 1);
  return r;
}

LaurentPoly RatFunc::den() const { return product(den_); }

RatFunc operator+(const RatFunc &x, const RatFunc &y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  RatFunc r;
  std::vector<RatFunc::Factor> xmul, ymul;
  r.den_ = x.den_;
  for (auto &[f, k] : r.den_) {
    int ky = multiplicity(y.den_, f);
    if (ky > k) {
      xmul.emplace_back(f, ky - k);
      k = ky;
    }
  }
  for (const auto &[f, k] : y.den_) {
    int kx = multiplicity(x.den_, f);
    if (kx == 0) {
      r.den_.emplace_back(f, k);
      xmul.emplace_back(f, k);
    } else if (kx > k) {
      ymul.emplace_back(f, kx - k);
    }
  }
  for (const auto &[f, k] : x.den_)
    if (multiplicity(y.den_, f) == 0) ymul.emplace_back(f, k);
  r.num_ = x.num_ * product(xmul) + y.num_ * product(ymul);
  if (r.num_.is_zero()) r.den_.clear();
  return r;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator-(const RatFunc &x, const RatFunc &y) { return x + (-y); }

RatFunc operator*(const RatFunc &x, const RatFunc &y) {
  RatFunc r;
  r.num_ = x.num_ * y.num_;
  if (r.num_.is_zero()) return r;
  r.den_ = x.den_;
  for (const auto &[f, k] : y.den_) {
    auto it = std::find_if(r.den_.begin(), r.den_.end(), [&](const auto &e) { return e.first == f; });
    if (it != r.den_.end()) it->second += k;
    else r.den_.emplace_back(f, k);
  }
  return r;
}

RatFunc RatFunc::inverse() const {
  RatFunc r(product(den_));
  r.add_factor(num_, 1);
  return r;
}

RatFunc operator/(const RatFunc &x, const RatFunc &y) { return x * y.inverse(); }

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RatFunc r;
  r.num_ = num_.pow(k);
  if (r.num_.is_zero()) return r;
  for (const auto &[f, m] : den_)
    if (k > 0) r.den_.emplace_back(f, m * k);
  return r;
}

LaurentPoly cross_residue(const RatFunc &x, const RatFunc &y) {
  std::vector<RatFunc::Factor> xr, yr;
  for (const auto &[f, k] : x.den_) {
    int d = k - multiplicity(y.den_, f);
    if (d > 0) xr.emplace_back(f, d);
  }
  for (const auto &[f, k] : y.den_) {
    int d = k - multiplicity(x.den_, f);
    if (d > 0) yr.emplace_back(f, d);
  }
  return x.num_ * product(yr) - y.num_ * product(xr);
}

bool operator==(const RatFunc &x, const RatFunc &y) { return cross_residue(x, y).is_zero(); }

RatFunc RatFunc::specialize_eps(int sign) const {
  RatFunc r(num_.specialize_eps(sign));
  for (const auto &[f, k] : den_) r.add_factor(f.specialize_eps(sign), k);
  return r;
}

RatFunc RatFunc::reduced() const {
  RatFunc r;
  r.num_ = num_;
  if (r.num_.is_zero()) return r;
  for (const auto &[f, k] : den_) {
    int left = k;
    while (left > 0) {
      auto q = divide(r.num_, f);
      if (!q) break;
      r.num_ = std::move(*q);
      --left;
    }
    if (left > 0) r.den_.emplace_back(f, left);
  }
  return r;
}

std::string RatFunc::to_string() const {
  std::string out = "(" + num_.to_string() + ")";
  if (den_.empty()) return out;
  std::vector<std::string> parts;
  for (const auto &[f, k] : den_) parts.push_back("(" + f.to_string() + ")" + (k > 1 ? "^" + std::to_string(k) : ""));
  std::sort(parts.begin(), parts.end());
  out += "/(";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
  return out + ")";
}

std::ostream &operator<<(std::ostream &os, const RatFunc &f) { return os << f.to_string(); }

RatFunc geom_sum(const RatFunc &c, const RatFunc &r, int n0) {
  RatFunc one_minus = RatFunc(1) - r;
  if (!one_minus.num().is_regular()) throw PoleError("geom_sum: ratio equals 1");
  return c * r.pow(n0) / one_minus;
}

} // namespace g2rs
