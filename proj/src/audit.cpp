#include "g2rs/audit.hpp"

#include "g2rs/commutators.hpp"

#include <functional>

namespace g2rs {

std::string to_string(AuditStatus s) {
  switch (s) {
  case AuditStatus::pass: return "pass";
  case AuditStatus::fail: return "fail";
  default: return "discrepancy";
  }
}

namespace {

using Params = std::vector<Rational>;
using Predicate = std::function<bool(const Params &)>;

struct Check {
  std::string id;
  std::string category;
  std::string statement;
  int nparams;
  /// Number of one-parameter factors an individual parameter enters, for the degree bound.
  int occurrences;
  Predicate holds;
  /// When set, the statement as written is expected to fail and this weaker claim is checked.
  Predicate corrected;
  std::string correction;
};

Rational power(const Rational &x, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

/// Largest k with (ad e_r)^k != 0 over all roots.
int nilpotency_degree(const ChevalleyBasis &b) {
  int best = 0;
  for (const auto &e : b.e) {
    AdjointMatrix p = e;
    int k = 1;
    while (!p.is_zero()) {
      p = p * e;
      ++k;
    }
    best = std::max(best, k - 1);
  }
  return best;
}

AuditReport run(const Check &c, int samples, RationalSampler &rng, int degree) {
  AuditReport r{c.id, c.category, c.statement, samples, 0, degree * c.occurrences, AuditStatus::fail, ""};
  int literal = 0;
  for (int s = 0; s < samples; ++s) {
    Params p;
    for (int i = 0; i < c.nparams; ++i) p.push_back(rng.nonzero());
    if (c.holds(p)) ++literal;
    if (c.corrected && c.corrected(p)) ++r.passed;
  }
  if (!c.corrected) {
    r.passed = literal;
    r.status = literal == samples ? AuditStatus::pass : AuditStatus::fail;
    return r;
  }
  if (literal == samples) {
    r.status = AuditStatus::pass;
  } else if (r.passed == samples) {
    r.status = AuditStatus::discrepancy;
    r.detail = "as written: holds at " + std::to_string(literal) + "/" + std::to_string(samples) +
               " samples; verified instead: " + c.correction;
  } else {
    r.status = AuditStatus::fail;
    r.detail = "neither the statement nor the correction holds";
  }
  return r;
}

std::vector<Check> structure_checks(const AdjointModel &M) {
  const auto &b = M.basis();
  std::vector<Check> out;
  out.push_back({"jacobi", "structure", "Jacobi identity on all basis triples", 0, 0,
                 [&b](const Params &) { return b.jacobi_holds(); }, {}, ""});
  out.push_back({"cartan", "structure", "[h, e_r] = <r, coroot> e_r for h = h_a, h_b", 0, 0,
                 [&b](const Params &) {
                   for (const Root &r : all_roots()) {
                     const AdjointMatrix &e = b.ad(r);
                     for (Root s : {roots::alpha, roots::beta}) {
                       const AdjointMatrix &h = s == roots::alpha ? b.h_alpha : b.h_beta;
                       if (!(h * e - e * h == Rational(pairing(r, s)) * e)) return false;
                     }
                   }
                   return true;
                 },
                 {}, ""});
  out.push_back({"determinant", "structure", "det x_r(t) = det h(t1,t2) = det w_r = 1", 3, 1,
                 [&M](const Params &p) {
                   for (const Root &r : all_roots())
                     if (M.x(r, p[0]).determinant() != 1 || M.w(r).determinant() != 1) return false;
                   return M.h(p[1], p[2]).determinant() == 1;
                 },
                 {}, ""});
  out.push_back({"killing", "structure", "generator images preserve the Killing form", 3, 1,
                 [&M](const Params &p) {
                   AdjointMatrix K = M.basis().killing_gram();
                   auto preserves = [&K](const AdjointMatrix &g) {
                     AdjointMatrix gi = g.inverse();
                     return gi.transpose() * K * gi == K && g.transpose() * K * g == K;
                   };
                   for (Root r : {roots::alpha, roots::beta, -roots::alpha, -roots::beta})
                     if (!preserves(M.x(r, p[0]))) return false;
                   return preserves(M.h(p[1], p[2])) && preserves(M.w(roots::alpha)) &&
                          preserves(M.w(roots::beta));
                 },
                 {}, ""});
  return out;
}

std::vector<Check> commutator_checks(const AdjointModel &M) {
  std::vector<Check> out;
  for (const auto &rule : commutator_table()) {
    std::string stmt = "[x_" + to_string(rule.first) + "(x), x_" + to_string(rule.second) + "(y)] =";
    for (const auto &t : rule.terms)
      stmt += " x_" + to_string(t.root) + "(" + std::to_string(t.coeff) + " x^" + std::to_string(t.x_power) +
              " y^" + std::to_string(t.y_power) + ")";
    out.push_back({"commutator " + to_string(rule.first) + "," + to_string(rule.second), "commutator", stmt, 2,
                   static_cast<int>(rule.terms.size()) * 3 + 2,
                   [&M, rule](const Params &p) {
                     const Rational &x = p[0], &y = p[1];
                     AdjointMatrix lhs = M.x(rule.first, -x) * M.x(rule.second, -y) * M.x(rule.first, x) *
                                         M.x(rule.second, y);
                     AdjointMatrix rhs = AdjointMatrix::identity();
                     for (const auto &t : rule.terms)
                       rhs = rhs * M.x(t.root, t.coeff * power(x, t.x_power) * power(y, t.y_power));
                     return lhs == rhs;
                   },
                   {}, ""});
  }
  out.push_back({"commutator trivial", "commutator", "x_r(x), x_s(y) commute for every other pair of positive roots",
                 2, 2,
                 [&M](const Params &p) {
                   for (std::size_t i = 0; i < positive_roots.size(); ++i)
                     for (std::size_t j = i + 1; j < positive_roots.size(); ++j) {
                       Root r = positive_roots[i], s = positive_roots[j];
                       if (find_commutator_rule(r, s)) continue;
                       if (!(M.x(r, p[0]) * M.x(s, p[1]) == M.x(s, p[1]) * M.x(r, p[0]))) return false;
                     }
                   return true;
                 },
                 {}, ""});
  return out;
}

std::vector<Check> torus_checks(const AdjointModel &M) {
  // h^-1(t1,t2) x_r(u) h(t1,t2) = x_r(t1^i t2^j u)
  struct Row {
    Root root;
    int i, j;
  };
  const std::vector<Row> table{{roots::alpha, 0, -1},          {roots::beta, -1, 1},
                               {roots::alpha_beta, -1, 0},     {roots::two_alpha_beta, -1, -1},
                               {roots::three_alpha_beta, -1, -2}, {roots::three_alpha_two_beta, -2, -1}};
  std::vector<Check> out;
  for (const auto &row : table) {
    auto mono = [](int i, int j) {
      std::string s;
      if (i) s += "t1^" + std::to_string(i) + " ";
      if (j) s += "t2^" + std::to_string(j) + " ";
      return s;
    };
    out.push_back({"torus " + to_string(row.root), "torus",
                   "h(t1,t2)^-1 x_" + to_string(row.root) + "(u) h(t1,t2) = x_" + to_string(row.root) + "(" +
                       mono(row.i, row.j) + "u)",
                   3, 3,
                   [&M, row](const Params &p) {
                     const Rational &t1 = p[0], &t2 = p[1], &u = p[2];
                     auto pw = [](const Rational &x, int k) { return k >= 0 ? power(x, k) : Rational(1 / power(x, -k)); };
                     AdjointMatrix h = M.h(t1, t2);
                     return h.inverse() * M.x(row.root, u) * h == M.x(row.root, pw(t1, row.i) * pw(t2, row.j) * u);
                   },
                   {}, ""});
  }
  return out;
}

std::vector<Check> weyl_torus_checks(const AdjointModel &M) {
  return {
      {"weyl_torus alpha", "weyl_torus", "w_a h(t1,t2) w_a^-1 = h(t1 t2, t2^-1)", 2, 2,
       [&M](const Params &p) {
         return M.w(roots::alpha) * M.h(p[0], p[1]) * M.w_inv(roots::alpha) == M.h(p[0] * p[1], 1 / p[1]);
       },
       {}, ""},
      {"weyl_torus beta", "weyl_torus", "w_b h(t1,t2) w_b^-1 = h(t2, t1)", 2, 2,
       [&M](const Params &p) {
         return M.w(roots::beta) * M.h(p[0], p[1]) * M.w_inv(roots::beta) == M.h(p[1], p[0]);
       },
       {}, ""},
  };
}

std::vector<Check> iwasawa_checks(const AdjointModel &M) {
  return {
      {"iwasawa beta", "iwasawa", "w_b x_b(r) = x_b(-r^-1) h(-r^-1, -r) x_-b(r^-1)", 1, 4,
       [&M](const Params &p) {
         const Rational &r = p[0];
         Rational ri = 1 / r;
         return M.w(roots::beta) * M.x(roots::beta, r) ==
                M.x(roots::beta, -ri) * M.h(-ri, -r) * M.x(-roots::beta, ri);
       },
       {}, ""},
      {"iwasawa alpha", "iwasawa", "w_a x_a(-p^-1) = x_a(p) h(p^-1, p^2) x_-a(-p)", 1, 4,
       [&M](const Params &p) {
         const Rational &q = p[0];
         Rational qi = 1 / q;
         return M.w(roots::alpha) * M.x(roots::alpha, -qi) ==
                M.x(roots::alpha, q) * M.h(qi, q * q) * M.x(-roots::alpha, -q);
       },
       {}, ""},
  };
}

std::vector<Check> conjugation_checks(const AdjointModel &M) {
  using namespace roots;
  AdjointMatrix gamma = M.w(beta) * M.w(alpha) * M.w(beta) * M.w(alpha);
  AdjointMatrix delta = M.w(beta) * M.w(alpha);
  auto in_root_subgroup = [&M](const AdjointMatrix &m, Root r) { return M.root_subgroup_parameter(m, r).has_value(); };
  std::vector<Check> out;
  out.push_back({"gamma x_a+b", "conjugation", "gamma x_a+b(r) gamma^-1 = x_a(r), gamma = w_b w_a w_b w_a", 1, 1,
                 [&M, gamma](const Params &p) {
                   return gamma * M.x(alpha_beta, p[0]) * gamma.inverse() == M.x(alpha, p[0]);
                 },
                 {}, ""});
  out.push_back({"gamma U_b", "conjugation", "gamma x_b(r) gamma^-1 in U_3a+b", 1, 1,
                 [&M, gamma, in_root_subgroup](const Params &p) {
                   return in_root_subgroup(gamma * M.x(beta, p[0]) * gamma.inverse(), three_alpha_beta);
                 },
                 {}, ""});
  out.push_back({"delta U_b", "conjugation", "(w_b w_a) x_b(r) (w_b w_a)^-1 in U_2a+b", 1, 1,
                 [&M, delta, in_root_subgroup](const Params &p) {
                   return in_root_subgroup(delta * M.x(beta, p[0]) * delta.inverse(), two_alpha_beta);
                 },
                 [&M, delta, in_root_subgroup](const Params &p) {
                   return in_root_subgroup(delta * M.x(beta, p[0]) * delta.inverse(), three_alpha_two_beta) &&
                          in_p_prime(three_alpha_two_beta);
                 },
                 "the image lies in U_3a+2b, a root subgroup of V'"});
  out.push_back({"delta U_a+b", "conjugation", "(w_b w_a) x_a+b(r) (w_b w_a)^-1 in U_2a+b", 1, 1,
                 [&M, delta, in_root_subgroup](const Params &p) {
                   return in_root_subgroup(delta * M.x(alpha_beta, p[0]) * delta.inverse(), two_alpha_beta);
                 },
                 {}, ""});
  out.push_back({"gamma t(a)", "conjugation", "gamma t(a) = h(1,a) gamma, t(a) = h(a, a^-1)", 1, 2,
                 [&M, gamma](const Params &p) { return gamma * M.h(p[0], 1 / p[0]) == M.h(1, p[0]) * gamma; }, {},
                 ""});
  out.push_back({"unfolded word", "conjugation",
                 "h(1,a) gamma [r1,0,r3,r4,r5] = h(1,a) w_b w_a w_b x_a+b(-r3) x_b(-r4-3 r1 r3) x_3a+2b(r5) w_a x_a(r1)",
                 5, 3,
                 [&M, gamma](const Params &p) {
                   const Rational &a = p[0], &r1 = p[1], &r3 = p[2], &r4 = p[3], &r5 = p[4];
                   AdjointMatrix v = M.x(alpha, r1) * M.x(two_alpha_beta, r3) * M.x(three_alpha_beta, r4) *
                                     M.x(three_alpha_two_beta, r5);
                   AdjointMatrix lhs = M.h(1, a) * gamma * v;
                   AdjointMatrix rhs = M.h(1, a) * M.w(beta) * M.w(alpha) * M.w(beta) * M.x(alpha_beta, -r3) *
                                       M.x(beta, -r4 - 3 * r1 * r3) * M.x(three_alpha_two_beta, r5) * M.w(alpha) *
                                       M.x(alpha, r1);
                   return lhs == rhs;
                 },
                 {}, ""});
  return out;
}

std::vector<Check> sl2_checks(const AdjointModel &M) {
  using namespace roots;
  return {
      {"sl2 conjugation", "sl2_conjugation",
       "g^-1 [r1,r2,r3,0,0] g = [r1',r2',r3',r4',r5'] with r1' = a r1 - c r2, r2' = -b r1 + d r2, "
       "r3' - r1' r2' = r3 - r1 r2",
       6, 4,
       [&M](const Params &p) {
         const Rational &a = p[0], &b = p[1], &c = p[2], &r1 = p[3], &r2 = p[4], &r3 = p[5];
         Rational d = (1 + b * c) / a;
         // [[a,b],[c,d]] = n(a/c) t(-1/c) w1 n(d/c) with n(x) = x_b(x), t(x) = h(x, x^-1), w1 = w_b
         AdjointMatrix g = M.x(beta, a / c) * M.h(-1 / c, -c) * M.w(beta) * M.x(beta, d / c);
         AdjointMatrix v = M.x(alpha, r1) * M.x(alpha_beta, r2) * M.x(two_alpha_beta, r3);
         auto coords = M.v_coordinates(g.inverse() * v * g);
         if (!coords) return false;
         const auto &r = *coords;
         Rational r1p = a * r1 - c * r2, r2p = -b * r1 + d * r2;
         return r[0] == r1p && r[1] == r2p && r[2] - r[0] * r[1] == r3 - r1 * r2;
       },
       {}, ""},
      {"sl2 embedding", "sl2_conjugation", "n(b) = x_b(b), t(a) = h(a,a^-1), w1 = w_b satisfy w1 t(a) w1^-1 = t(a^-1)",
       1, 2,
       [&M](const Params &p) {
         return M.w(beta) * M.h(p[0], 1 / p[0]) * M.w_inv(beta) == M.h(1 / p[0], p[0]);
       },
       {}, ""},
  };
}

std::vector<Check> representative_checks(const AdjointModel &M) {
  using namespace roots;
  return {
      {"w representative", "representative",
       "w_r = w_r(1): the Iwasawa identity for w_b fails with w_b(-1) in its place", 1, 4,
       [&M](const Params &p) {
         const Rational &r = p[0];
         Rational ri = 1 / r;
         return !(M.w_inv(beta) * M.x(beta, r) == M.x(beta, -ri) * M.h(-ri, -r) * M.x(-beta, ri));
       },
       {}, ""},
  };
}

} // namespace

std::vector<AuditReport> audit_group(int samples, std::uint64_t seed) {
  const AdjointModel &M = AdjointModel::calibrated();
  int degree = nilpotency_degree(M.basis());
  RationalSampler rng(seed);
  std::vector<Check> checks;
  for (auto *f : {structure_checks, commutator_checks, torus_checks, weyl_torus_checks, iwasawa_checks,
                  conjugation_checks, sl2_checks, representative_checks}) {
    auto part = f(M);
    checks.insert(checks.end(), part.begin(), part.end());
  }
  std::vector<AuditReport> out;
  for (const auto &c : checks) out.push_back(run(c, c.nparams == 0 ? 1 : samples, rng, degree));
  return out;
}

} // namespace g2rs
