#pragma once

#include "g2rs/group_word.hpp"
#include "g2rs/rational.hpp"
#include "g2rs/rootsys.hpp"

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2rs {

inline constexpr int adjoint_dim = 14;
/// Basis order of the adjoint module: e_r for r in all_roots(), then h_alpha, h_beta.
inline constexpr int h_alpha_index = 12;
inline constexpr int h_beta_index = 13;

/// Dense 14x14 matrix over Q acting on adjoint coordinates.
class AdjointMatrix {
public:
  AdjointMatrix();
  static AdjointMatrix identity();

  Rational &operator()(int row, int col) { return entries_[row * adjoint_dim + col]; }
  const Rational &operator()(int row, int col) const { return entries_[row * adjoint_dim + col]; }

  friend AdjointMatrix operator*(const AdjointMatrix &a, const AdjointMatrix &b);
  friend AdjointMatrix operator+(const AdjointMatrix &a, const AdjointMatrix &b);
  friend AdjointMatrix operator-(const AdjointMatrix &a, const AdjointMatrix &b);
  friend AdjointMatrix operator*(const Rational &s, const AdjointMatrix &a);
  friend bool operator==(const AdjointMatrix &a, const AdjointMatrix &b) {
    return a.entries_ == b.entries_;
  }

  bool is_zero() const;
  bool is_identity() const;
  AdjointMatrix transpose() const;
  Rational determinant() const;
  /// Throws std::domain_error if singular.
  AdjointMatrix inverse() const;

private:
  std::vector<Rational> entries_;
};

class ConstructionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class CalibrationError : public std::runtime_error {
public:
  CalibrationError(const std::string &what, std::vector<std::string> best_subset)
      : std::runtime_error(what), satisfiable(std::move(best_subset)) {}
  std::vector<std::string> satisfiable;
};

/// Chevalley basis of g2 in its adjoint action.
///
/// [e_r, e_s] = N(r,s) e_{r+s} with |N(r,s)| = p+1, p the largest integer with s - p r a root.
/// [e_r, e_{-r}] = h_r, expanded through coroot_coordinates. [h, e_r] = <r, .> e_r.
struct ChevalleyBasis {
  /// structure_constants[i][j] = N(root i, root j), zero when the sum is not a root.
  std::array<std::array<int, 12>, 12> structure_constants{};
  /// Rescaling e_r -> sign * e_r (and e_{-r} likewise) applied to each positive root.
  std::array<int, 6> signs{1, 1, 1, 1, 1, 1};
  std::array<AdjointMatrix, 12> e;
  AdjointMatrix h_alpha;
  AdjointMatrix h_beta;

  const AdjointMatrix &ad(Root r) const { return e[root_index(r)]; }
  /// Structure-constant bracket of two basis vectors, as (index, coefficient) pairs.
  std::vector<std::pair<int, int>> bracket(int i, int j) const;
  /// Jacobi identity on every triple of basis vectors.
  bool jacobi_holds() const;
  /// Gram matrix of the Killing form tr(ad x ad y) on the basis.
  AdjointMatrix killing_gram() const;
};

/// Structure constants found by sign backtracking against the Jacobi identity.
ChevalleyBasis build_basis();

/// Rescales root vectors by +-1 so the one-parameter subgroups satisfy the
/// commutator table for positive roots (x_a, x_b), (x_a, x_{a+b}), (x_a, x_{2a+b}),
/// (x_b, x_{3a+b}), (x_{a+b}, x_{2a+b}) and trivial commutators for the other pairs,
/// with [g1,g2] = g1^-1 g2^-1 g1 g2. The first of the 64 sign choices that passes is
/// returned. Throws CalibrationError otherwise.
ChevalleyBasis calibrate_signs(const ChevalleyBasis &basis);

/// Group elements of G2(Q) in the adjoint model of a fixed basis.
class AdjointModel {
public:
  explicit AdjointModel(ChevalleyBasis basis);
  /// Built once from build_basis() followed by calibrate_signs().
  static const AdjointModel &calibrated();

  const ChevalleyBasis &basis() const { return basis_; }

  /// exp(t ad e_r), a terminating sum.
  AdjointMatrix x(Root r, const Rational &t) const;
  /// w_r(t) = x_r(t) x_{-r}(-1/t) x_r(t)
  AdjointMatrix w(Root r, const Rational &t) const;
  AdjointMatrix w(Root r) const { return w(r, Rational(1)); }
  AdjointMatrix w_inv(Root r) const { return w(r, Rational(-1)); }
  /// h_r(t) = w_r(t) w_r(1)^-1
  AdjointMatrix h_root(Root r, const Rational &t) const;
  /// h(t1,t2) = h_alpha(t1 t2) h_beta(t1^2 t2). Throws std::domain_error on zero arguments.
  AdjointMatrix h(const Rational &t1, const Rational &t2) const;

  AdjointMatrix evaluate(const GroupWord<Rational> &word) const;

  /// Parameter c with m = x_r(c), if m lies in the root subgroup U_r.
  std::optional<Rational> root_subgroup_parameter(const AdjointMatrix &m, Root r) const;
  /// Coordinates [r1..r5] of m in V, peeled in bracket order, if m lies in V.
  std::optional<std::array<Rational, 5>> v_coordinates(const AdjointMatrix &m) const;

  /// Sign c with w_s x_r(t) w_s^-1 = x_{s(r)}(c t), read off the model.
  int weyl_sign(Root s, Root r) const;

  using WordBuilder = std::function<GroupWord<Rational>(const std::vector<Rational> &)>;
  /// Per-sample equality of lhs(sample) and rhs(sample). Throws std::invalid_argument when a
  /// sample does not assign exactly nparams values.
  std::vector<bool> verify_identity(const WordBuilder &lhs, const WordBuilder &rhs, int nparams,
                                    const std::vector<std::vector<Rational>> &samples) const;

private:
  ChevalleyBasis basis_;
  // Powers ad(e_r)^k / k! for k = 1.. until zero.
  std::array<std::vector<AdjointMatrix>, 12> exp_terms_;
};

/// Lie algebra coordinates of log(m) for unipotent m: (ad X) with X = sum c_r e_r + ...;
/// returns the e_r coefficients in all_roots() order if log(m) is a root-vector combination.
std::optional<std::array<Rational, 12>> unipotent_log_coordinates(const ChevalleyBasis &basis,
                                                                  const AdjointMatrix &m);

} // namespace g2rs
