#pragma once

#include "g2rs/rootsys.hpp"

#include <optional>
#include <vector>

namespace g2rs {

/// One factor x_root(coeff * x^x_power * y^y_power) of a commutator.
struct CommutatorTerm {
  Root root;
  int coeff;
  int x_power;
  int y_power;
};

/// [x_first(x), x_second(y)] = prod of terms, in the listed order,
/// with [g1,g2] = g1^-1 g2^-1 g1 g2.
struct CommutatorRule {
  Root first;
  Root second;
  std::vector<CommutatorTerm> terms;
};

/// The five nontrivial commutators among positive root subgroups. Every other
/// pair of positive roots commutes.
const std::vector<CommutatorRule> &commutator_table();

/// Rule for (first, second) if the pair is listed, in that order.
std::optional<CommutatorRule> find_commutator_rule(Root first, Root second);

} // namespace g2rs
