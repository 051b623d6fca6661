#pragma once

#include "g2rs/zeta.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2rs {

using cplx = std::complex<double>;

class EvaluationError : public std::domain_error {
  using std::domain_error::domain_error;
};

class DivergenceError : public std::domain_error {
  using std::domain_error::domain_error;
};

/// Numeric specialization of the symbols: H = sqrt(q), Z = q^(-3s).
struct NumericPoint {
  double q = 9.0;
  double s = 2.0;
  cplx a{1.0, 0.0};
  cplx b1{1.0, 0.0};
  cplx b2{1.0, 0.0};
  int eps = 1;
  std::uint64_t seed = 0;
};

/// Unit-modulus a, b1, b2 drawn from the seed.
NumericPoint sample_point(std::uint64_t seed, int eps, double q = 9.0, double s = 2.0);

VarValues to_var_values(const NumericPoint &pt);

/// Throws EvaluationError naming the factor when a denominator factor is below 1e-12.
cplx eval_ratfunc(const RatFunc &f, const NumericPoint &pt);

/// Neumaier summation on real and imaginary parts.
class CompensatedSum {
public:
  void add(cplx v);
  cplx value() const { return {re_ + cre_, im_ + cim_}; }

private:
  static void step(double &sum, double &comp, double v);
  double re_ = 0, im_ = 0, cre_ = 0, cim_ = 0;
};

struct SeriesResult {
  cplx sum;
  double tail_bound = 0;
};

/// Sum of term(0..N) in ascending order with the tail bound C rho^(N+1) / (1 - rho), where
/// C = max |term(n)| rho^-n over the last five terms. Throws DivergenceError when rho >= 1.
SeriesResult truncated_series(const std::function<cplx(int)> &term, int N, double ratio_bound);

/// Direct complex-arithmetic versions of the defining sums, sharing no code with the symbolic
/// layer.
class NumericModel {
public:
  explicit NumericModel(const NumericPoint &pt, int nmax = 260);

  cplx shintani(int k, int l) const;
  cplx gauss_unit(int k) const;
  cplx I(int n) const;
  /// Inner geometric sums truncated at M terms.
  cplx J1(int n, int M = 300) const;
  cplx R1(int n) const;
  cplx R2(int n, int M = 300) const;
  cplx J(int n, int M = 300) const { return J1(n, M) - R1(n) - R2(n, M); }
  /// Branch formula for J evaluated with the numeric I.
  cplx J_branch(int n) const;
  cplx bfh(int n) const;
  /// bfh(n) q^(5n/2) eps^n J(n)
  cplx final_term(int n) const;

private:
  NumericPoint pt_;
  double H_, Z_;
  cplx w_, Y_;
  std::vector<cplx> shintani0_;
  std::vector<cplx> I_;
};

enum class Status { pass, fail, inconclusive };
std::string to_string(Status s);

struct ComparisonReport {
  std::string label;
  std::uint64_t seed = 0;
  int eps = 1;
  cplx symbolic_value;
  cplx truncated_value;
  int terms_used = 0;
  double tail_bound = 0;
  double relative_error = 0;
  Status status = Status::fail;
  std::string note;
  bool pass() const { return status == Status::pass; }
};

struct SuiteOptions {
  double tolerance = 1e-9;
  int nmax = 200;
  /// Largest n for I(n) comparisons.
  int i_nmax = 30;
  /// Largest n for the lemma comparisons.
  int lemma_nmax = 6;
  JMutation mutation = JMutation::none;
};

/// Points with s below this are outside the region where every ratio is known to be < 1.
inline constexpr double convergence_s_min = 1.5;

/// Symbolic vs numeric comparisons at each point; failures are reports, not exceptions.
std::vector<ComparisonReport> run_suite(const std::vector<NumericPoint> &points,
                                        const SuiteOptions &opts = {});

/// Only the final-sum comparison, for the acceptance oracle.
ComparisonReport compare_final_sum(const NumericPoint &pt, const SuiteOptions &opts = {});

} // namespace g2rs
