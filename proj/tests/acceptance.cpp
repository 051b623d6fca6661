// One PASS/FAIL line per acceptance criterion; exit status is nonzero if any criterion fails.

#include "g2rs/audit.hpp"
#include "g2rs/oracle.hpp"
#include "g2rs/rootsys.hpp"
#include "g2rs/zeta.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace g2rs;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome main_identity() {
  for (EpsChoice e : {EpsChoice::minus, EpsChoice::plus, EpsChoice::symbolic}) {
    LocalFactorReport r = verify_main_identity(e);
    if (!r.equal) return {false, "eps " + r.eps + " residue " + std::to_string(r.residue_terms) + " terms"};
  }
  return {true, "eps -1, +1, sym: zero residue"};
}

Outcome lemma_suite() {
  for (int n = 0; n <= 8; ++n)
    if (!(I_closed(n) == I_defining(n))) return {false, "I at n=" + std::to_string(n)};
  for (int n = 0; n <= 6; ++n) {
    std::string at = " at n=" + std::to_string(n);
    if (!(J1(n) == J1_decomposition(n))) return {false, "J1" + at};
    if (!(R1(n) == R1_defining(n))) return {false, "R1" + at};
    if (!(R2(n) == R2_defining(n))) return {false, "R2" + at};
    if (!(R(n) == R_defining(n))) return {false, "R" + at};
    if (!(J(n) == J_assembled(n))) return {false, "J" + at};
    if (!(J2(n) == -R(n))) return {false, "J2" + at};
  }
  return {true, "I n<=8; J1, R1, R2, R, J, J2 n<=6"};
}

Outcome group_audit() {
  int checked = 0;
  std::string note;
  for (const auto &r : audit_group(5, 1)) {
    if (r.status == AuditStatus::fail) return {false, r.id + ": " + std::to_string(r.passed) + "/" + std::to_string(r.samples)};
    if (r.status == AuditStatus::discrepancy) note += "; discrepancy in " + r.id + ": " + r.detail;
    ++checked;
  }
  return {true, std::to_string(checked) + " identities at 5 samples" + note};
}

Outcome unfolding() {
  auto cosets = double_coset_reps();
  if (cosets.size() != 3) return {false, std::to_string(cosets.size()) + " double cosets"};
  auto sa = WeylElement::simple(SimpleReflection::alpha), sb = WeylElement::simple(SimpleReflection::beta);
  if (!cosets[0].representative.is_identity() || !(cosets[1].representative == sb * sa) ||
      !(cosets[2].representative == sb * sa * sb * sa))
    return {false, "representatives differ"};
  StabilizerData g = stabilizer_data(cosets[2].representative);
  if (g.v_roots != std::vector<Root>{roots::alpha_beta}) return {false, "V^gamma differs"};
  if (g.levi != LeviIntersection::borel) return {false, "levi intersection " + to_string(g.levi)};
  return {true, "3 cosets, V^gamma = {a+b}, borel"};
}

Outcome numeric_oracle() {
  double worst = 0, worst_tail = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed)
    for (int eps : {1, -1}) {
      ComparisonReport r = compare_final_sum(sample_point(seed, eps));
      if (!r.pass() || r.tail_bound >= 1e-12)
        return {false, "seed " + std::to_string(seed) + " eps " + std::to_string(eps) + ": " + to_string(r.status)};
      worst = std::max(worst, r.relative_error);
      worst_tail = std::max(worst_tail, r.tail_bound);
    }
  char buf[96];
  std::snprintf(buf, sizeof buf, "20 points, max rel err %.1e, max tail %.1e", worst, worst_tail);
  return {true, buf};
}

Outcome formula_layer() {
  for (int k = 0; k <= 6; ++k) {
    if (!shintani(k, -1).is_zero()) return {false, "shintani(k,-1)"};
    for (int l = 0; l <= 6; ++l)
      if (!(shintani(k, l) == central_twist(k) * shintani(0, l))) return {false, "central twist"};
  }
  BfhValue b = bfh_whittaker(0);
  if (!(b.value == RatFunc(1)) || b.mu_power != 0) return {false, "bfh(0)"};
  RatFunc qi = sym::q_inv();
  for (int k = -5; k <= 5; ++k) {
    RatFunc g = k >= 0 ? RatFunc(1) - qi : k == -1 ? -qi : RatFunc(0);
    if (!(gauss_unit(k) == g)) return {false, "gauss_unit(" + std::to_string(k) + ")"};
    if (!(additive_integral(k) == (k >= 0 ? RatFunc(1) : RatFunc(0))))
      return {false, "additive_integral(" + std::to_string(k) + ")"};
  }
  return {true, "shintani, central twist, bfh(0), integral tables"};
}

Outcome mutation_sanity() {
  std::string caught;
  for (JMutation m : {JMutation::y_in_j0, JMutation::i_in_j1, JMutation::middle_term, JMutation::last_term}) {
    bool exact_fails = !verify_main_identity(EpsChoice::minus, m).equal;
    SuiteOptions opts;
    opts.mutation = m;
    bool oracle_fails = !compare_final_sum(sample_point(1, -1), opts).pass();
    if (!exact_fails && !oracle_fails) return {false, "undetected: " + to_string(m)};
    caught += (caught.empty() ? "" : ", ") + to_string(m);
  }
  return {true, "detected: " + caught};
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"main identity", main_identity},     {"lemma suite", lemma_suite},
      {"group identity audit", group_audit}, {"unfolding combinatorics", unfolding},
      {"numeric oracle", numeric_oracle},   {"formula layer", formula_layer},
      {"mutation sanity", mutation_sanity},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::printf("criterion %zu %s: %s (%.2f s) %s\n", i + 1, criteria[i].first.c_str(), o.pass ? "PASS" : "FAIL", secs,
                o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
