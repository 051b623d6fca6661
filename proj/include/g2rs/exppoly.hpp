#pragma once

#include "g2rs/ratfunc.hpp"

#include <vector>

namespace g2rs {

/// n -> coef * ratio^n
struct ExpTerm {
  RatFunc coef;
  RatFunc ratio;
};

/// Function on n >= 0 given by sum_i coef_i ratio_i^n for n >= threshold and by explicit
/// overrides below the threshold.
class ExpPoly {
public:
  ExpPoly() = default;
  static ExpPoly constant(const RatFunc &c) { return geometric(c, RatFunc(1)); }
  static ExpPoly geometric(const RatFunc &coef, const RatFunc &ratio);

  const std::vector<ExpTerm> &terms() const { return terms_; }
  int threshold() const { return static_cast<int>(overrides_.size()); }
  const std::vector<RatFunc> &overrides() const { return overrides_; }

  /// Value of the generic formula at any integer n, ignoring overrides.
  RatFunc generic_at(int n) const;
  /// Throws std::domain_error for n < 0.
  RatFunc eval(int n) const;

  /// Replaces the values at n = 0..values.size()-1.
  ExpPoly with_overrides(std::vector<RatFunc> values) const;
  /// n -> f(n + k). Values with n + k < 0 come from the generic formula.
  ExpPoly shifted(int k) const;
  /// Equal ratios merged, zero coefficients dropped.
  ExpPoly merged() const;

  friend ExpPoly operator+(const ExpPoly &f, const ExpPoly &g);
  friend ExpPoly operator-(const ExpPoly &f, const ExpPoly &g);
  friend ExpPoly operator*(const ExpPoly &f, const ExpPoly &g);
  friend ExpPoly operator*(const RatFunc &c, const ExpPoly &f);

private:
  std::vector<ExpTerm> terms_;
  std::vector<RatFunc> overrides_;
};

/// f(n) at n >= 0. Throws std::domain_error for negative n.
RatFunc exppoly_eval(const ExpPoly &f, int n);

/// sum_{n >= 0} f(n) t^n: overrides summed directly, each generic term closed by geom_sum from
/// the threshold. Throws PoleError if some ratio * t equals 1.
RatFunc exppoly_weighted_sum(const ExpPoly &f, const RatFunc &t);

} // namespace g2rs
