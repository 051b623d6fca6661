#pragma once

#include "g2rs/rational.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace g2rs {

/// Variables: H = q^(1/2), Z = q^(-3s), Satake parameters a, b1, b2, and eps with eps^2 = 1.
enum class Var : int { H = 0, Z, a, b1, b2, eps };
inline constexpr int num_vars = 6;
inline constexpr int max_exponent = 64;

class ExponentOverflow : public std::overflow_error {
  using std::overflow_error::overflow_error;
};

struct Monomial {
  std::array<std::int8_t, num_vars> e{};

  static Monomial var(Var v, int k = 1);
  int operator[](Var v) const { return e[static_cast<int>(v)]; }
  int degree() const;
  bool is_one() const;
  std::uint64_t key() const;

  /// Product with eps^2 -> 1. Throws ExponentOverflow past max_exponent.
  friend Monomial operator*(const Monomial &x, const Monomial &y);
  Monomial inverse() const;

  friend bool operator==(const Monomial &x, const Monomial &y) { return x.e == y.e; }
  /// Graded-lex on (H, Z, a, b1, b2), then eps.
  friend bool operator<(const Monomial &x, const Monomial &y);
};

std::string to_string(const Monomial &m);

/// Point for numeric evaluation, in Var order.
using VarValues = std::array<std::complex<double>, num_vars>;

/// Finite sum of rational multiples of monomials, kept sorted ascending with no zero terms.
class LaurentPoly {
public:
  using Term = std::pair<Monomial, Rational>;

  LaurentPoly() = default;
  LaurentPoly(long c);
  LaurentPoly(const Rational &c);
  LaurentPoly(const Monomial &m, const Rational &c = Rational(1));
  static LaurentPoly var(Var v, int k = 1) { return LaurentPoly(Monomial::var(v, k)); }
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  bool has_eps() const;

  friend LaurentPoly operator+(const LaurentPoly &x, const LaurentPoly &y);
  friend LaurentPoly operator-(const LaurentPoly &x, const LaurentPoly &y);
  friend LaurentPoly operator*(const LaurentPoly &x, const LaurentPoly &y);
  LaurentPoly operator-() const;
  LaurentPoly &operator+=(const LaurentPoly &o) { return *this = *this + o; }
  LaurentPoly &operator*=(const LaurentPoly &o) { return *this = *this * o; }
  friend bool operator==(const LaurentPoly &x, const LaurentPoly &y) { return x.terms_ == y.terms_; }

  /// Integer power; negative exponents only for monomials.
  LaurentPoly pow(int k) const;
  /// Substitute eps = sign (+1 or -1).
  LaurentPoly specialize_eps(int sign) const;
  /// Nonzero under both eps specializations, hence not a zero divisor.
  bool is_regular() const;
  /// Exact quotient x / d if it exists in the Laurent ring.
  friend std::optional<LaurentPoly> divide(const LaurentPoly &x, const LaurentPoly &d);
  /// Divide by the smallest monomial and scale so that its term is 1.
  struct Normalized normalize() const;

  std::complex<double> eval(const VarValues &p) const;
  std::string to_string() const;

private:
  std::vector<Term> terms_;
};

/// x = coeff * mono * poly, with the smallest term of poly equal to 1.
struct Normalized {
  Rational coeff;
  Monomial mono;
  LaurentPoly poly;
};

inline std::string to_string(const LaurentPoly &p) { return p.to_string(); }
std::ostream &operator<<(std::ostream &os, const LaurentPoly &p);

} // namespace g2rs
