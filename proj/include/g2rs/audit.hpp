#pragma once

#include "g2rs/adjoint.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace g2rs {

enum class AuditStatus { pass, fail, discrepancy };
std::string to_string(AuditStatus s);

/// Outcome of one identity checked as exact 14x14 matrix equality at random rational samples.
struct AuditReport {
  std::string id;
  std::string category;
  std::string statement;
  int samples = 0;
  int passed = 0;
  /// Bound on the degree of each matrix entry in each sampled parameter.
  int degree_bound = 0;
  AuditStatus status = AuditStatus::fail;
  /// For a discrepancy: what fails as written and what was verified instead.
  std::string detail;
};

/// Every group identity used by the unfolding and the local computation, with the calibrated
/// model. Categories: structure, commutator, torus, weyl_torus, iwasawa, conjugation,
/// sl2_conjugation, representative.
std::vector<AuditReport> audit_group(int samples = 5, std::uint64_t seed = 1);

} // namespace g2rs
