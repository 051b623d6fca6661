#pragma once

#include "g2rs/laurent.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace g2rs {

class PoleError : public std::domain_error {
  using std::domain_error::domain_error;
};

/// Quotient num / den of Laurent polynomials. The denominator is kept as a product of
/// normalized factors with multiplicities; sums use the least common multiple of the two
/// factor lists. No gcd normalization: equality is decided by cross-multiplication.
class RatFunc {
public:
  using Factor = std::pair<LaurentPoly, int>;

  RatFunc() = default;
  RatFunc(long c) : num_(c) {}
  RatFunc(const Rational &c) : num_(c) {}
  RatFunc(LaurentPoly p) : num_(std::move(p)) {}
  static RatFunc var(Var v, int k = 1) { return RatFunc(LaurentPoly::var(v, k)); }
  /// p / d. Throws std::domain_error when d is zero or a zero divisor.
  static RatFunc quotient(const LaurentPoly &p, const LaurentPoly &d);

  const LaurentPoly &num() const { return num_; }
  const std::vector<Factor> &den_factors() const { return den_; }
  LaurentPoly den() const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }

  friend RatFunc operator+(const RatFunc &x, const RatFunc &y);
  friend RatFunc operator-(const RatFunc &x, const RatFunc &y);
  friend RatFunc operator*(const RatFunc &x, const RatFunc &y);
  /// Throws std::domain_error when y is zero or a zero divisor.
  friend RatFunc operator/(const RatFunc &x, const RatFunc &y);
  RatFunc operator-() const;
  RatFunc &operator+=(const RatFunc &o) { return *this = *this + o; }
  RatFunc &operator-=(const RatFunc &o) { return *this = *this - o; }
  RatFunc &operator*=(const RatFunc &o) { return *this = *this * o; }
  RatFunc inverse() const;
  RatFunc pow(int k) const;

  /// Cross-multiplication equality after cancelling shared denominator factors.
  friend bool operator==(const RatFunc &x, const RatFunc &y);
  /// x.num * y.den - y.num * x.den over the shared-factor-free denominators.
  friend LaurentPoly cross_residue(const RatFunc &x, const RatFunc &y);

  RatFunc specialize_eps(int sign) const;
  /// Divides out denominator factors that exactly divide the numerator.
  RatFunc reduced() const;

  std::string to_string() const;

private:
  void add_factor(const LaurentPoly &p, int mult);

  LaurentPoly num_;
  std::vector<Factor> den_;
};

inline bool is_zero(const RatFunc &f) { return f.is_zero(); }
inline std::string to_string(const RatFunc &f) { return f.to_string(); }
std::ostream &operator<<(std::ostream &os, const RatFunc &f);

/// Named generators.
namespace sym {
inline RatFunc H(int k = 1) { return RatFunc::var(Var::H, k); }
inline RatFunc Z(int k = 1) { return RatFunc::var(Var::Z, k); }
inline RatFunc a(int k = 1) { return RatFunc::var(Var::a, k); }
inline RatFunc b1(int k = 1) { return RatFunc::var(Var::b1, k); }
inline RatFunc b2(int k = 1) { return RatFunc::var(Var::b2, k); }
inline RatFunc eps(int k = 1) { return RatFunc::var(Var::eps, k); }
/// X = q^(-(3s-3/2)) = Z H^3
inline RatFunc X() { return Z() * H(3); }
/// Y = q^(-6s+2) b1 b2 = Z^2 H^4 b1 b2
inline RatFunc Y() { return Z(2) * H(4) * b1() * b2(); }
/// q^-1
inline RatFunc q_inv() { return H(-2); }
} // namespace sym

/// Formal sum over m >= n0 of c r^m, that is c r^n0 / (1 - r). Throws PoleError when r = 1.
RatFunc geom_sum(const RatFunc &c, const RatFunc &r, int n0);

} // namespace g2rs
