#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace g2rs {

/// A vector m*alpha + n*beta of the G2 root lattice, alpha short and beta long.
struct Root {
  int m = 0;
  int n = 0;

  constexpr Root() = default;
  constexpr Root(int m_, int n_) : m(m_), n(n_) {}

  constexpr Root operator-() const { return {-m, -n}; }
  constexpr Root operator+(Root o) const { return {m + o.m, n + o.n}; }
  constexpr Root operator-(Root o) const { return {m - o.m, n - o.n}; }
  friend constexpr Root operator*(int k, Root r) { return {k * r.m, k * r.n}; }
  constexpr auto operator<=>(const Root &) const = default;

  constexpr int height() const { return m + n; }
  constexpr bool positive() const { return m > 0 || (m == 0 && n > 0); }
};

std::ostream &operator<<(std::ostream &os, Root r);
std::string to_string(Root r);

namespace roots {
inline constexpr Root alpha{1, 0};
inline constexpr Root beta{0, 1};
inline constexpr Root alpha_beta{1, 1};
inline constexpr Root two_alpha_beta{2, 1};
inline constexpr Root three_alpha_beta{3, 1};
inline constexpr Root three_alpha_two_beta{3, 2};
} // namespace roots

/// Positive roots ordered by height, alpha before beta at height one.
inline constexpr std::array<Root, 6> positive_roots{
    roots::alpha,          roots::beta,             roots::alpha_beta,
    roots::two_alpha_beta, roots::three_alpha_beta, roots::three_alpha_two_beta};

/// All twelve roots: the positive ones followed by their negatives.
const std::array<Root, 12> &all_roots();

/// Index of r in all_roots(); throws std::domain_error for non-roots.
int root_index(Root r);

bool is_root(Root r);

/// Invariant form with (alpha,alpha)=2, (beta,beta)=6, (alpha,beta)=-3.
int inner_product(Root a, Root b);

/// <g1,g2> = 2(g1,g2)/(g2,g2). g2 must be a root.
int pairing(Root g1, Root g2);

/// s_{g2}(g1) = g1 - <g1,g2> g2.
Root reflect(Root g1, Root g2);

/// Coroot of r written as (c_alpha, c_beta) in the basis {h_alpha, h_beta}.
std::array<int, 2> coroot_coordinates(Root r);

/// Roots of the unipotent radical V of P (beta in the Levi), in bracket order.
inline constexpr std::array<Root, 5> v_roots{
    roots::alpha, roots::alpha_beta, roots::two_alpha_beta, roots::three_alpha_beta,
    roots::three_alpha_two_beta};

/// Roots of P' = M'V' (alpha in the Levi): +-alpha and everything with n > 0.
bool in_p_prime(Root r);

enum class SimpleReflection : std::uint8_t { alpha, beta };

/// Element of the Weyl group, stored as its integer action on (m,n) coordinates.
/// Equality compares the action only; the word is one reduced expression.
class WeylElement {
public:
  using Matrix = std::array<std::array<int, 2>, 2>;

  WeylElement();
  static WeylElement simple(SimpleReflection s);
  static WeylElement from_word(const std::vector<SimpleReflection> &word);

  const Matrix &action() const { return action_; }
  const std::vector<SimpleReflection> &word() const { return word_; }

  Root apply(Root r) const;
  WeylElement inverse() const;
  bool is_identity() const;

  /// Composition: (a*b)(r) = a(b(r)); the word is concatenated.
  friend WeylElement operator*(const WeylElement &a, const WeylElement &b);
  friend bool operator==(const WeylElement &a, const WeylElement &b) {
    return a.action_ == b.action_;
  }

  /// Word written left to right, e.g. "s_b s_a"; "1" for the identity.
  std::string word_string() const;

private:
  WeylElement(Matrix m, std::vector<SimpleReflection> w)
      : action_(m), word_(std::move(w)) {}
  Matrix action_;
  std::vector<SimpleReflection> word_;
};

/// The full Weyl group, generated by breadth-first closure; each word is of minimal length.
std::vector<WeylElement> weyl_group();

struct DoubleCoset {
  WeylElement representative;
  std::vector<WeylElement> members;
};

/// The double cosets {1,s_a} \ W / {1,s_b} with representatives
/// 1, s_b s_a and (s_b s_a)^2.
std::vector<DoubleCoset> double_coset_reps();

enum class LeviIntersection { full, borel, opposite_borel, torus };
std::string to_string(LeviIntersection l);

struct StabilizerData {
  std::vector<Root> v_roots;   ///< roots of V sent into P' by the representative
  LeviIntersection levi;       ///< SL2 (roots +-beta) intersected with the conjugate of P'
};

/// Throws std::domain_error unless delta is one of the three coset representatives.
StabilizerData stabilizer_data(const WeylElement &delta);

} // namespace g2rs
