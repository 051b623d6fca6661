#pragma once

#include "g2rs/exppoly.hpp"
#include "g2rs/localmodels.hpp"

#include <string>

namespace g2rs {

/// Sign choice for chi(p): +1, -1, or the symbol eps with eps^2 = 1.
enum class EpsChoice { plus, minus, symbolic };

RatFunc eps_value(EpsChoice e);
std::string to_string(EpsChoice e);

/// I(n) from its defining finite sum of Whittaker values.
RatFunc I_defining(int n);
/// Closed form of I(n) as an exponential polynomial in n.
const ExpPoly &I_closed();
/// The closed form at n, written as one expression in X.
RatFunc I_closed_display(int n);
RatFunc I_closed(int n);

/// (1 - Z^2 H^2 b1 b2) / (1 - Y) I(n)
RatFunc J1(int n);
/// I(n) + sum_{m >= 1} (1 - q^-1) Y^m I(n)
RatFunc J1_decomposition(int n);

RatFunc R1(int n);
/// Sum over additive_integral and gauss_unit values before closing.
RatFunc R1_defining(int n);
RatFunc R2(int n);
/// I(n) sum_{m >= 1} Y^m gauss_unit(m + n - 2), the constant tail closed by geom_sum.
RatFunc R2_defining(int n);
/// Three-branch display of R(n) = R1(n) + R2(n).
RatFunc R(int n);
RatFunc R_defining(int n);

/// Single sign flips in the J(n) branch formulas, for harness sanity checks.
enum class JMutation { none, y_in_j0, i_in_j1, middle_term, last_term };
std::string to_string(JMutation m);

/// Branch values: 1 + Y, I(1), I(n) - q^-1 Y^2 I(n-1) + q^-n Y^(n+1).
RatFunc J(int n, JMutation mutation = JMutation::none);
/// J as an exponential polynomial with threshold 2.
ExpPoly J_exppoly(JMutation mutation = JMutation::none);
/// J1(n) - R(n) with each part from its defining path.
RatFunc J_assembled(int n);
/// sum_{m >= 1} q^m gauss_unit(-m) T(m, n), T(1, n) = R(n) from its defining path.
RatFunc J2(int n);

/// n -> bfh_whittaker(n).value * q^(5n/2) * eps^n, as an exponential polynomial.
ExpPoly bfh_weight(EpsChoice e);

/// sum_{n >= 0} bfh value * q^(5n/2) * eps^n * J(n).
RatFunc local_factor(EpsChoice e, JMutation mutation = JMutation::none);

/// Ratio of local L-factors built from Euler factors.
RatFunc l_ratio_target(EpsChoice e);
/// The same ratio written as the product display in X = Z H^3.
RatFunc l_ratio_display(EpsChoice e);

struct LocalFactorReport {
  std::string eps;
  RatFunc computed;
  RatFunc target;
  bool equal = false;
  /// Serialized cross-multiplication residue, empty when equal.
  std::string witness;
  std::size_t residue_terms = 0;
};

LocalFactorReport verify_main_identity(EpsChoice e, JMutation mutation = JMutation::none);

} // namespace g2rs
