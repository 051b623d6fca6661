#pragma once

#include "g2rs/ratfunc.hpp"

#include <array>
#include <string>
#include <variant>
#include <vector>

namespace g2rs {

/// Unramified GL2 Whittaker value at diag(p^(k+l), p^k):
/// Z^(2k+l) (b1 b2)^k H^-l (b1^l + b1^(l-1) b2 + ... + b2^l) for l >= 0, else 0.
RatFunc shintani(int k, int l);

/// Central factor q^(-6sm) (b1 b2)^m = Z^(2m) (b1 b2)^m.
RatFunc central_twist(int m);

struct BfhValue {
  RatFunc value;
  /// Power of the detached Weil index factor mu_psi(p^n).
  int mu_power = 0;
};

/// Metaplectic Whittaker value on t(p^n):
/// q^-n / (a - a^-1) ((1 - eps H^-1 a^-1) a^(n+1) - (1 - eps H^-1 a) a^-(n+1)).
/// eps is 1, -1 or the symbol. Throws std::domain_error for n < 0.
BfhValue bfh_whittaker(int n, const RatFunc &eps = sym::eps());

/// Integral of psi(p^k u) over units: 1 - q^-1 for k >= 0, -q^-1 for k = -1, else 0.
RatFunc gauss_unit(int k);

/// Integral of psi(p^k r) over the integers: 1 for k >= 0, else 0.
RatFunc additive_integral(int k);

/// Function x -> scale * |..|^(1/2) mu_psi(..) * psi(phase(x)) * phi(point(x)),
/// with phase quadratic and point affine in x. phi is the characteristic function of o.
struct WeilState {
  RatFunc point_coeff{1};
  RatFunc point_shift{0};
  /// phase[0] + phase[1] x + phase[2] x^2
  std::array<RatFunc, 3> phase{RatFunc(0), RatFunc(0), RatFunc(0)};
  RatFunc scale{1};
  /// Arguments of formal mu_psi factors.
  std::vector<RatFunc> mu_args;
  /// Arguments of formal |.|^(1/2) factors.
  std::vector<RatFunc> abs_args;
  /// Count of Fourier transforms, each with the formal constant gamma(psi).
  int fourier = 0;

  /// Nonvanishing condition of the state, "point in o".
  std::string support() const;
  RatFunc point_at(const RatFunc &x) const { return point_coeff * x + point_shift; }
  RatFunc phase_at(const RatFunc &x) const { return phase[0] + phase[1] * x + phase[2] * x * x; }

  friend bool operator==(const WeilState &s, const WeilState &t);
};

namespace weil {
struct N {
  RatFunc b;
};
struct T {
  RatFunc a;
};
struct Heis {
  RatFunc r1, r2, r3;
};
struct W1 {};
} // namespace weil

using WeilGenerator = std::variant<weil::N, weil::T, weil::Heis, weil::W1>;

/// omega(gen) applied to the function described by state:
///   n(b):          psi(b x^2) F(x)
///   t(a):          |a|^(1/2) mu_psi(a) F(a x)
///   (r1, r2, r3):  psi(r3 - 2 x r2 - r1 r2) F(x + r1)
///   w1:            gamma(psi) times the Fourier transform of F
/// Throws std::domain_error for t(0).
WeilState weil_apply(const WeilGenerator &gen, const WeilState &state);

} // namespace g2rs
