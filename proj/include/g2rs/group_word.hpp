#pragma once

#include "g2rs/rootsys.hpp"

#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace g2rs {

/// x_root(t)
template <class K> struct XGen {
  Root root;
  K t;
};

/// h(t1,t2) = h_alpha(t1 t2) h_beta(t1^2 t2)
template <class K> struct HGen {
  K t1;
  K t2;
};

/// w_root = w_root(1), or its inverse w_root(-1)
struct WGen {
  Root root;
  bool inverse = false;
};

template <class K> using Generator = std::variant<XGen<K>, HGen<K>, WGen>;

/// Finite product of abstract Chevalley generators over a coefficient field K.
/// The empty word is the identity.
template <class K> class GroupWord {
public:
  GroupWord() = default;
  GroupWord(std::initializer_list<Generator<K>> g) : gens_(g) {}
  explicit GroupWord(std::vector<Generator<K>> g) : gens_(std::move(g)) {}

  static GroupWord x(Root r, K t) { return GroupWord{XGen<K>{r, std::move(t)}}; }
  static GroupWord h(K t1, K t2) { return GroupWord{HGen<K>{std::move(t1), std::move(t2)}}; }
  static GroupWord w(Root r) { return GroupWord{WGen{r, false}}; }
  static GroupWord w_inv(Root r) { return GroupWord{WGen{r, true}}; }

  const std::vector<Generator<K>> &generators() const { return gens_; }
  std::vector<Generator<K>> &generators() { return gens_; }
  bool empty() const { return gens_.empty(); }
  std::size_t size() const { return gens_.size(); }

  GroupWord &operator*=(const GroupWord &o) {
    gens_.insert(gens_.end(), o.gens_.begin(), o.gens_.end());
    return *this;
  }
  friend GroupWord operator*(GroupWord a, const GroupWord &b) { return a *= b; }

  /// Reversed word with each generator inverted. Requires K to support 1/t.
  GroupWord inverse() const {
    std::vector<Generator<K>> out;
    out.reserve(gens_.size());
    for (auto it = gens_.rbegin(); it != gens_.rend(); ++it) {
      std::visit(
          [&](const auto &g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, XGen<K>>) out.push_back(XGen<K>{g.root, K(-g.t)});
            else if constexpr (std::is_same_v<T, HGen<K>>)
              out.push_back(HGen<K>{K(K(1) / g.t1), K(K(1) / g.t2)});
            else out.push_back(WGen{g.root, !g.inverse});
          },
          *it);
    }
    return GroupWord(std::move(out));
  }

private:
  std::vector<Generator<K>> gens_;
};

template <class K> std::ostream &operator<<(std::ostream &os, const GroupWord<K> &w) {
  if (w.empty()) return os << "1";
  bool first = true;
  for (const auto &g : w.generators()) {
    if (!first) os << " ";
    first = false;
    std::visit(
        [&](const auto &v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, XGen<K>>) os << "x_{" << v.root << "}(" << v.t << ")";
          else if constexpr (std::is_same_v<T, HGen<K>>) os << "h(" << v.t1 << "," << v.t2 << ")";
          else os << "w_{" << v.root << "}" << (v.inverse ? "^-1" : "");
        },
        g);
  }
  return os;
}

template <class K> std::string to_string(const GroupWord<K> &w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

} // namespace g2rs
