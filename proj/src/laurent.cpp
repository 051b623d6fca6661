#include "g2rs/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace g2rs {

namespace {

constexpr std::array<const char *, num_vars> var_names{"H", "Z", "a", "b1", "b2", "eps"};
constexpr int eps_index = static_cast<int>(Var::eps);

std::int8_t checked(int v) {
  if (v > max_exponent || v < -max_exponent)
    throw ExponentOverflow("exponent " + std::to_string(v) + " exceeds bound");
  return static_cast<std::int8_t>(v);
}

Monomial unpack(std::uint64_t k) {
  Monomial m;
  for (int i = 0; i < num_vars; ++i)
    m.e[i] = static_cast<std::int8_t>(static_cast<int>((k >> (8 * i)) & 0xff) - 128);
  return m;
}

} // namespace

Monomial Monomial::var(Var v, int k) {
  Monomial m;
  if (v == Var::eps) k = ((k % 2) + 2) % 2;
  m.e[static_cast<int>(v)] = checked(k);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (int i = 0; i < eps_index; ++i) d += e[i];
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](std::int8_t v) { return v == 0; });
}

std::uint64_t Monomial::key() const {
  std::uint64_t k = 0;
  for (int i = 0; i < num_vars; ++i) k |= static_cast<std::uint64_t>(e[i] + 128) << (8 * i);
  return k;
}

Monomial operator*(const Monomial &x, const Monomial &y) {
  Monomial m;
  for (int i = 0; i < eps_index; ++i) m.e[i] = checked(x.e[i] + y.e[i]);
  m.e[eps_index] = static_cast<std::int8_t>((x.e[eps_index] + y.e[eps_index]) % 2);
  return m;
}

Monomial Monomial::inverse() const {
  Monomial m;
  for (int i = 0; i < eps_index; ++i) m.e[i] = checked(-e[i]);
  m.e[eps_index] = e[eps_index];
  return m;
}

bool operator<(const Monomial &x, const Monomial &y) {
  int dx = x.degree(), dy = y.degree();
  if (dx != dy) return dx < dy;
  return x.e < y.e;
}

std::string to_string(const Monomial &m) {
  std::string out;
  for (int i = 0; i < num_vars; ++i) {
    if (m.e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += std::string(var_names[i]) + "^" + std::to_string(m.e[i]);
  }
  return out.empty() ? "1" : out;
}

LaurentPoly::LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

LaurentPoly::LaurentPoly(const Rational &c) {
  if (sgn(c) != 0) terms_.emplace_back(Monomial{}, c);
}

LaurentPoly::LaurentPoly(const Monomial &m, const Rational &c) {
  if (sgn(c) != 0) terms_.emplace_back(m, c);
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term &x, const Term &y) { return x.first < y.first; });
  LaurentPoly p;
  for (auto &t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) p.terms_.back().second += t.second;
    else p.terms_.push_back(std::move(t));
    if (sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
  }
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

bool LaurentPoly::has_eps() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const Term &t) { return t.first.e[eps_index] != 0; });
}

namespace {

LaurentPoly merge(const LaurentPoly &x, const LaurentPoly &y, bool subtract) {
  std::vector<LaurentPoly::Term> out;
  const auto &a = x.terms();
  const auto &b = y.terms();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, subtract ? Rational(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].second - b[j].second) : Rational(a[i].second + b[j].second);
      if (sgn(c) != 0) out.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  return LaurentPoly::from_terms(std::move(out));
}

} // namespace

LaurentPoly operator+(const LaurentPoly &x, const LaurentPoly &y) { return merge(x, y, false); }
LaurentPoly operator-(const LaurentPoly &x, const LaurentPoly &y) { return merge(x, y, true); }

LaurentPoly operator*(const LaurentPoly &x, const LaurentPoly &y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::unordered_map<std::uint64_t, Rational> acc;
  acc.reserve(x.size() * y.size());
  for (const auto &[mx, cx] : x.terms())
    for (const auto &[my, cy] : y.terms()) acc[(mx * my).key()] += cx * cy;
  std::vector<LaurentPoly::Term> out;
  out.reserve(acc.size());
  for (auto &[k, c] : acc)
    if (sgn(c) != 0) out.emplace_back(unpack(k), std::move(c));
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto &t : p.terms_) t.second = -t.second;
  return p;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) {
    if (!is_monomial()) throw std::domain_error("negative power of a non-monomial");
    Monomial m = terms_[0].first.inverse();
    Rational c = 1 / terms_[0].second;
    return LaurentPoly(m, c).pow(-k);
  }
  LaurentPoly r(1), base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

LaurentPoly LaurentPoly::specialize_eps(int sign) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto &[m, c] : terms_) {
    Monomial mm = m;
    bool flip = mm.e[eps_index] != 0 && sign < 0;
    mm.e[eps_index] = 0;
    out.emplace_back(mm, flip ? Rational(-c) : c);
  }
  return from_terms(std::move(out));
}

bool LaurentPoly::is_regular() const {
  if (!has_eps()) return !is_zero();
  return !specialize_eps(1).is_zero() && !specialize_eps(-1).is_zero();
}

namespace {

std::optional<LaurentPoly> divide_eps_free(LaurentPoly x, const LaurentPoly &d) {
  if (d.is_zero()) return std::nullopt;
  if (x.is_zero()) return LaurentPoly{};
  std::array<int, num_vars> lo{}, hi{};
  for (int i = 0; i < eps_index; ++i) {
    auto ext = [i](const LaurentPoly &p, bool want_max) {
      int v = p.terms()[0].first.e[i];
      for (const auto &t : p.terms()) v = want_max ? std::max<int>(v, t.first.e[i]) : std::min<int>(v, t.first.e[i]);
      return v;
    };
    lo[i] = ext(x, false) - ext(d, false);
    hi[i] = ext(x, true) - ext(d, true);
    if (lo[i] > hi[i]) return std::nullopt;
  }
  const auto &[dm, dc] = d.terms().back();
  Monomial dinv = dm.inverse();
  std::vector<LaurentPoly::Term> q;
  while (!x.is_zero()) {
    const auto &[xm, xc] = x.terms().back();
    Monomial t = xm * dinv;
    for (int i = 0; i < eps_index; ++i)
      if (t.e[i] < lo[i] || t.e[i] > hi[i]) return std::nullopt;
    Rational c = xc / dc;
    q.emplace_back(t, c);
    x = x - LaurentPoly(t, c) * d;
  }
  return LaurentPoly::from_terms(std::move(q));
}

} // namespace

std::optional<LaurentPoly> divide(const LaurentPoly &x, const LaurentPoly &d) {
  if (!x.has_eps() && !d.has_eps()) return divide_eps_free(x, d);
  auto qp = divide_eps_free(x.specialize_eps(1), d.specialize_eps(1));
  if (!qp) return std::nullopt;
  auto qm = divide_eps_free(x.specialize_eps(-1), d.specialize_eps(-1));
  if (!qm) return std::nullopt;
  LaurentPoly half(Rational(1, 2));
  LaurentPoly eps = LaurentPoly::var(Var::eps);
  return half * (*qp + *qm) + half * eps * (*qp - *qm);
}

Normalized LaurentPoly::normalize() const {
  if (is_zero()) throw std::domain_error("normalize of zero polynomial");
  const auto &[m, c] = terms_.front();
  Monomial inv = m.inverse();
  Rational cinv = 1 / c;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto &[tm, tc] : terms_) out.emplace_back(tm * inv, tc * cinv);
  return {c, m, from_terms(std::move(out))};
}

std::complex<double> LaurentPoly::eval(const VarValues &p) const {
  std::complex<double> sum = 0.0, comp = 0.0;
  for (const auto &[m, c] : terms_) {
    std::complex<double> v = c.get_d();
    for (int i = 0; i < num_vars; ++i)
      if (m.e[i] != 0) v *= std::pow(p[i], static_cast<int>(m.e[i]));
    // Kahan summation
    std::complex<double> y = v - comp;
    std::complex<double> s = sum + y;
    comp = (s - sum) - y;
    sum = s;
  }
  return sum;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += it->second.get_str();
    if (!it->first.is_one()) out += "*" + g2rs::to_string(it->first);
  }
  return out;
}

std::ostream &operator<<(std::ostream &os, const LaurentPoly &p) { return os << p.to_string(); }

} // namespace g2rs
