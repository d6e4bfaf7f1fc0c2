#pragma once

#include <string>
#include <vector>

#include "wcb/json_io.hpp"
#include "wcb/proofstate.hpp"

namespace wcb {

struct VerifyOptions {
  int max_n = 12;
  bool audit_statements = false;
  bool full_e = false;  // one extra e (e/2 = n+1) per size, where Θ is the identity
  int jobs = 1;
  double time_limit_seconds = 0.0;  // 0 = unlimited
};

/// One (symmetric bipartition, e) work item.
struct CaseResult {
  Bipartition start;
  int e = 0;
  Bipartition image;
  bool first_part_preserved = false;
  std::vector<std::string> failures;
  AuditTallies tallies;
  json trajectory;  // filled only for failing cases

  bool passed() const noexcept { return failures.empty(); }
};

struct VerificationReport {
  VerifyOptions options;
  int base_bipartitions = 0;
  int planned_cases = 0;
  int case_count = 0;
  int pass_count = 0;
  std::vector<CaseResult> failures;
  AuditTallies audit;
  bool incomplete = false;
  double duration_seconds = 0.0;

  int failure_count() const noexcept { return case_count - pass_count; }
  bool ok() const noexcept { return !incomplete && failures.empty(); }
};

/// Work items in canonical order: even n ascending, bipartitions in
/// enumeration order, e ascending.
std::vector<std::pair<Bipartition, int>> verification_grid(const VerifyOptions& options);

CaseResult verify_case(const Bipartition& b, int e, bool audit_statements);

VerificationReport run_verification(const VerifyOptions& options);

json to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

}  // namespace wcb
