#pragma once

#include "g2rs/adjoint.hpp"
#include "g2rs/commutators.hpp"
#include "g2rs/group_word.hpp"
#include "g2rs/rootsys.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace g2rs {

class UnsupportedWord : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class RewriteLimitExceeded : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rational &r) { return sgn(r) == 0; }

template <class K> K int_power(const K &x, int k) {
  K base = k < 0 ? K(K(1) / x) : x;
  K r(1);
  for (int i = 0; i < (k < 0 ? -k : k); ++i) r = r * base;
  return r;
}

/// Element (x, y, z) of the Heisenberg group with
/// (x1,y1,z1)(x2,y2,z2) = (x1+x2, y1+y2, z1+z2 - x1 y2 + y1 x2).
template <class K> struct HeisenbergElement {
  K x, y, z;

  friend HeisenbergElement operator*(const HeisenbergElement &a, const HeisenbergElement &b) {
    return {K(a.x + b.x), K(a.y + b.y), K(a.z + b.z - a.x * b.y + a.y * b.x)};
  }
  friend bool operator==(const HeisenbergElement &a, const HeisenbergElement &b) {
    return is_zero(K(a.x - b.x)) && is_zero(K(a.y - b.y)) && is_zero(K(a.z - b.z));
  }
};

/// Position of a positive root in the fixed normal order.
int normal_order_position(Root r);

/// Sign table c(s, r) with w_s x_r(t) w_s^-1 = x_{s(r)}(c(s,r) t), taken from a calibrated
/// adjoint model.
class WeylSigns {
public:
  explicit WeylSigns(const AdjointModel &model);
  static const WeylSigns &calibrated();

  int sign(Root s, Root r) const { return table_[root_index(s)][root_index(r)]; }
  /// Sign for w_s^-1 x_r(t) w_s = x_{s(r)}(c t).
  int inverse_sign(Root s, Root r) const { return sign(s, reflect(r, s)); }

private:
  std::array<std::array<int, 12>, 12> table_{};
};

namespace detail {

template <class K> std::vector<XGen<K>> positive_x_generators(const GroupWord<K> &w) {
  std::vector<XGen<K>> out;
  for (const auto &g : w.generators()) {
    const auto *x = std::get_if<XGen<K>>(&g);
    if (!x) throw UnsupportedWord("normal_order: only x_r generators are supported");
    if (!x->root.positive() || !is_root(x->root))
      throw UnsupportedWord("normal_order: negative root generator " + to_string(x->root));
    out.push_back(*x);
  }
  return out;
}

} // namespace detail

/// Rewrites a word in positive root subgroups to the ordered form
/// x_a x_b x_{a+b} x_{2a+b} x_{3a+b} x_{3a+2b}, at most one factor per root, using
/// x_s(y) x_r(x) = x_r(x) x_s(y) [x_r(x), x_s(y)]^-1 for r before s.
/// Each swap appends factors of strictly greater height, so the rewrite terminates;
/// max_steps guards against a malformed rule table.
template <class K> GroupWord<K> normal_order(const GroupWord<K> &w, int max_steps = 10000) {
  std::vector<XGen<K>> gens = detail::positive_x_generators(w);
  std::erase_if(gens, [](const XGen<K> &g) { return is_zero(g.t); });
  int steps = 0;
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < gens.size() &&
           normal_order_position(gens[i].root) < normal_order_position(gens[i + 1].root))
      ++i;
    if (i + 1 >= gens.size()) break;
    if (++steps > max_steps) throw RewriteLimitExceeded("normal_order: rewrite bound exceeded");
    XGen<K> left = gens[i], right = gens[i + 1];
    std::vector<XGen<K>> replacement;
    if (left.root == right.root) {
      K sum = left.t + right.t;
      if (!is_zero(sum)) replacement.push_back({left.root, sum});
    } else {
      // left = x_s(y), right = x_r(x) with r before s.
      replacement.push_back(right);
      replacement.push_back(left);
      if (auto rule = find_commutator_rule(right.root, left.root)) {
        for (auto it = rule->terms.rbegin(); it != rule->terms.rend(); ++it) {
          K c = K(-it->coeff) * int_power(right.t, it->x_power) * int_power(left.t, it->y_power);
          if (!is_zero(c)) replacement.push_back({it->root, c});
        }
      }
    }
    gens.erase(gens.begin() + static_cast<long>(i), gens.begin() + static_cast<long>(i) + 2);
    gens.insert(gens.begin() + static_cast<long>(i), replacement.begin(), replacement.end());
  }
  std::vector<Generator<K>> out(gens.begin(), gens.end());
  return GroupWord<K>(std::move(out));
}

/// [r1,r2,r3,r4,r5] = x_a(r1) x_{a+b}(r2) x_{2a+b}(r3) x_{3a+b}(r4) x_{3a+2b}(r5), zero factors
/// omitted.
template <class K> GroupWord<K> v_element(const K &r1, const K &r2, const K &r3, const K &r4,
                                          const K &r5) {
  std::vector<Generator<K>> gens;
  const std::array<const K *, 5> coeffs{&r1, &r2, &r3, &r4, &r5};
  for (std::size_t i = 0; i < 5; ++i)
    if (!is_zero(*coeffs[i])) gens.push_back(XGen<K>{v_roots[i], *coeffs[i]});
  return GroupWord<K>(std::move(gens));
}

/// Bracket coordinates of a word in V after normal ordering. Throws std::domain_error for
/// generators outside V.
template <class K> std::array<K, 5> v_coordinates(const GroupWord<K> &v) {
  for (const auto &g : v.generators()) {
    const auto *x = std::get_if<XGen<K>>(&g);
    if (!x || std::find(v_roots.begin(), v_roots.end(), x->root) == v_roots.end())
      throw std::domain_error("generator outside V");
  }
  std::array<K, 5> out{K(0), K(0), K(0), K(0), K(0)};
  const GroupWord<K> ordered = normal_order(v);
  for (const auto &g : ordered.generators()) {
    const auto &x = std::get<XGen<K>>(g);
    auto it = std::find(v_roots.begin(), v_roots.end(), x.root);
    out[static_cast<std::size_t>(it - v_roots.begin())] = x.t;
  }
  return out;
}

/// pr([r1,...,r5]) = (r1, r2, r3 - r1 r2).
template <class K> HeisenbergElement<K> pr(const GroupWord<K> &v) {
  auto r = v_coordinates(v);
  return {r[0], r[1], K(r[2] - r[0] * r[1])};
}

/// Character of h(t1,t2) on the root m a + n b: h x_r(u) h^-1 = x_r(t1^n t2^(m-n) u).
template <class K> K torus_character(Root r, const K &t1, const K &t2) {
  return int_power(t1, r.n) * int_power(t2, r.m - r.n);
}

/// by * w * by^-1 for a conjugator made of h(t1,t2) and w_r generators. The word w may contain
/// x_r and h generators.
template <class K>
GroupWord<K> conj(const GroupWord<K> &w, const GroupWord<K> &by,
                  const WeylSigns &signs = WeylSigns::calibrated()) {
  for (const auto &g : by.generators())
    if (std::holds_alternative<XGen<K>>(g))
      throw UnsupportedWord("conj: conjugator must be a product of torus and Weyl generators");
  std::vector<Generator<K>> cur = w.generators();
  for (auto it = by.generators().rbegin(); it != by.generators().rend(); ++it) {
    for (auto &g : cur) {
      if (auto *x = std::get_if<XGen<K>>(&g)) {
        if (const auto *h = std::get_if<HGen<K>>(&*it)) {
          x->t = torus_character(x->root, h->t1, h->t2) * x->t;
        } else {
          const auto &wg = std::get<WGen>(*it);
          int c = wg.inverse ? signs.inverse_sign(wg.root, x->root) : signs.sign(wg.root, x->root);
          x->root = reflect(x->root, wg.root);
          if (c < 0) x->t = -x->t;
        }
      } else if (auto *hg = std::get_if<HGen<K>>(&g)) {
        const auto *wg = std::get_if<WGen>(&*it);
        if (!wg) continue;
        if (wg->root == roots::alpha || wg->root == -roots::alpha) {
          *hg = HGen<K>{K(hg->t1 * hg->t2), K(K(1) / hg->t2)};
        } else if (wg->root == roots::beta || wg->root == -roots::beta) {
          *hg = HGen<K>{hg->t2, hg->t1};
        } else {
          throw UnsupportedWord("conj: torus conjugation by non-simple Weyl generator");
        }
      } else {
        throw UnsupportedWord("conj: Weyl generators inside the conjugated word");
      }
    }
  }
  return GroupWord<K>(std::move(cur));
}

} // namespace g2rs
