#include "g2rs/commutators.hpp"

namespace g2rs {

const std::vector<CommutatorRule> &commutator_table() {
  using namespace roots;
  static const std::vector<CommutatorRule> table{
      {alpha,
       beta,
       {{alpha_beta, -1, 1, 1},
        {two_alpha_beta, -1, 2, 1},
        {three_alpha_beta, 1, 3, 1},
        {three_alpha_two_beta, -2, 3, 2}}},
      {alpha,
       alpha_beta,
       {{two_alpha_beta, -2, 1, 1}, {three_alpha_beta, 3, 2, 1}, {three_alpha_two_beta, 3, 1, 2}}},
      {alpha, two_alpha_beta, {{three_alpha_beta, 3, 1, 1}}},
      {beta, three_alpha_beta, {{three_alpha_two_beta, 1, 1, 1}}},
      {alpha_beta, two_alpha_beta, {{three_alpha_two_beta, 3, 1, 1}}},
  };
  return table;
}

std::optional<CommutatorRule> find_commutator_rule(Root first, Root second) {
  for (const auto &rule : commutator_table())
    if (rule.first == first && rule.second == second) return rule;
  return std::nullopt;
}

} // namespace g2rs
