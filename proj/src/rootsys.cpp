#include "g2rs/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace g2rs {

std::ostream &operator<<(std::ostream &os, Root r) { return os << to_string(r); }

std::string to_string(Root r) {
  if (r.m == 0 && r.n == 0) return "0";
  std::ostringstream os;
  auto term = [&](int c, const char *name, bool first) {
    if (c == 0) return;
    if (c < 0) os << "-";
    else if (!first) os << "+";
    if (c != 1 && c != -1) os << (c < 0 ? -c : c);
    os << name;
  };
  term(r.m, "a", true);
  term(r.n, "b", r.m == 0);
  return os.str();
}

const std::array<Root, 12> &all_roots() {
  static const std::array<Root, 12> table = [] {
    std::array<Root, 12> t{};
    for (std::size_t i = 0; i < 6; ++i) {
      t[i] = positive_roots[i];
      t[i + 6] = -positive_roots[i];
    }
    return t;
  }();
  return table;
}

int root_index(Root r) {
  const auto &t = all_roots();
  auto it = std::find(t.begin(), t.end(), r);
  if (it == t.end()) throw std::domain_error("not a G2 root: " + to_string(r));
  return static_cast<int>(it - t.begin());
}

bool is_root(Root r) {
  const auto &t = all_roots();
  return std::find(t.begin(), t.end(), r) != t.end();
}

int inner_product(Root a, Root b) {
  return 2 * a.m * b.m + 6 * a.n * b.n - 3 * (a.m * b.n + a.n * b.m);
}

int pairing(Root g1, Root g2) {
  if (!is_root(g2)) throw std::domain_error("pairing: second argument is not a root");
  int num = 2 * inner_product(g1, g2);
  int den = inner_product(g2, g2);
  if (num % den != 0) throw std::domain_error("pairing: non-integral value");
  return num / den;
}

Root reflect(Root g1, Root g2) { return g1 - pairing(g1, g2) * g2; }

std::array<int, 2> coroot_coordinates(Root r) {
  if (!is_root(r)) throw std::domain_error("coroot of a non-root");
  // r^vee = 2r/(r,r); alpha^vee = alpha and beta^vee = beta/3.
  int len = inner_product(r, r);
  return {2 * r.m / len, 6 * r.n / len};
}

bool in_p_prime(Root r) {
  return is_root(r) && (r.n > 0 || r == roots::alpha || r == -roots::alpha);
}

namespace {

using Mat = WeylElement::Matrix;

Mat multiply(const Mat &a, const Mat &b) {
  Mat c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

// Columns are the images of alpha and beta.
Mat reflection_matrix(SimpleReflection s) {
  Root img_a = reflect(roots::alpha, s == SimpleReflection::alpha ? roots::alpha : roots::beta);
  Root img_b = reflect(roots::beta, s == SimpleReflection::alpha ? roots::alpha : roots::beta);
  return Mat{{{img_a.m, img_b.m}, {img_a.n, img_b.n}}};
}

} // namespace

WeylElement::WeylElement() : action_{{{1, 0}, {0, 1}}} {}

WeylElement WeylElement::simple(SimpleReflection s) {
  return WeylElement(reflection_matrix(s), {s});
}

WeylElement WeylElement::from_word(const std::vector<SimpleReflection> &word) {
  WeylElement w;
  for (auto s : word) w = w * simple(s);
  return w;
}

Root WeylElement::apply(Root r) const {
  return {action_[0][0] * r.m + action_[0][1] * r.n, action_[1][0] * r.m + action_[1][1] * r.n};
}

WeylElement WeylElement::inverse() const {
  // det = +-1, so the inverse is the adjugate times det.
  int det = action_[0][0] * action_[1][1] - action_[0][1] * action_[1][0];
  Mat inv{{{det * action_[1][1], -det * action_[0][1]}, {-det * action_[1][0], det * action_[0][0]}}};
  std::vector<SimpleReflection> w(word_.rbegin(), word_.rend());
  return WeylElement(inv, std::move(w));
}

bool WeylElement::is_identity() const { return action_ == WeylElement().action_; }

WeylElement operator*(const WeylElement &a, const WeylElement &b) {
  std::vector<SimpleReflection> w = a.word_;
  w.insert(w.end(), b.word_.begin(), b.word_.end());
  return WeylElement(multiply(a.action_, b.action_), std::move(w));
}

std::string WeylElement::word_string() const {
  if (word_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += ' ';
    out += word_[i] == SimpleReflection::alpha ? "s_a" : "s_b";
  }
  return out;
}

std::vector<WeylElement> weyl_group() {
  std::vector<WeylElement> group{WeylElement()};
  std::deque<std::size_t> frontier{0};
  const std::array gens{WeylElement::simple(SimpleReflection::alpha),
                        WeylElement::simple(SimpleReflection::beta)};
  while (!frontier.empty()) {
    WeylElement cur = group[frontier.front()];
    frontier.pop_front();
    for (const auto &g : gens) {
      WeylElement next = cur * g;
      if (std::find(group.begin(), group.end(), next) == group.end()) {
        group.push_back(next);
        frontier.push_back(group.size() - 1);
      }
    }
  }
  return group;
}

namespace {

std::vector<WeylElement> double_coset(const WeylElement &rep) {
  const WeylElement one;
  const WeylElement sa = WeylElement::simple(SimpleReflection::alpha);
  const WeylElement sb = WeylElement::simple(SimpleReflection::beta);
  std::vector<WeylElement> out;
  for (const auto &l : {one, sa})
    for (const auto &r : {one, sb}) {
      WeylElement e = l * rep * r;
      if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    }
  return out;
}

const std::array<WeylElement, 3> &representatives() {
  using S = SimpleReflection;
  static const std::array<WeylElement, 3> reps{
      WeylElement(), WeylElement::from_word({S::beta, S::alpha}),
      WeylElement::from_word({S::beta, S::alpha, S::beta, S::alpha})};
  return reps;
}

} // namespace

std::vector<DoubleCoset> double_coset_reps() {
  std::vector<DoubleCoset> out;
  for (const auto &rep : representatives()) out.push_back({rep, double_coset(rep)});
  return out;
}

std::string to_string(LeviIntersection l) {
  switch (l) {
  case LeviIntersection::full: return "SL2";
  case LeviIntersection::borel: return "B_SL2";
  case LeviIntersection::opposite_borel: return "opposite B_SL2";
  case LeviIntersection::torus: return "A_SL2";
  }
  return "?";
}

StabilizerData stabilizer_data(const WeylElement &delta) {
  const auto &reps = representatives();
  if (std::find(reps.begin(), reps.end(), delta) == reps.end())
    throw std::domain_error("stabilizer_data: not a double coset representative");
  StabilizerData data;
  for (Root r : v_roots)
    if (in_p_prime(delta.apply(r))) data.v_roots.push_back(r);
  bool up = in_p_prime(delta.apply(roots::beta));
  bool down = in_p_prime(delta.apply(-roots::beta));
  data.levi = up && down   ? LeviIntersection::full
              : up         ? LeviIntersection::borel
              : down       ? LeviIntersection::opposite_borel
                           : LeviIntersection::torus;
  return data;
}

} // namespace g2rs
