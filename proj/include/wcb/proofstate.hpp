#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wcb/wallcross.hpp"

namespace wcb {

enum class Statement { A, B, C, D, E, F, G };

char to_char(Statement s);

/// Outcome of one statement at step k. `witness` holds the 1-based indices
/// of a violation and is present exactly when `holds` is false.
struct StatementReport {
  Statement id = Statement::A;
  int k = 0;
  bool holds = true;
  std::optional<std::vector<int>> witness;
};

/// bottom[j] ≥ top[j] for every bottom index j.
StatementReport check_A(const TwoRowTableau& t, int k = 0);
/// No cycles.
StatementReport check_B(const SwapTrace& trace, int k = 0);
/// Every pair of M has bottom value ≥ paired top value.
StatementReport check_C(const SwapTrace& trace, const TwoRowTableau& t, int k = 0);
/// Holes keep their value and position. Tableaux of different depth are
/// compared after padding the shallower one.
StatementReport check_D(const SwapTrace& trace, const TwoRowTableau& before, const TwoRowTableau& after, int k = 0);
/// Every pairing is a swap (no cycles) and exchanging along M without
/// re-sorting already yields `after`.
StatementReport check_E(const SwapTrace& trace, const TwoRowTableau& before, const TwoRowTableau& after, int k = 0);

/// D(j) = i_j − j. Only defined when E holds;
/// throws Error(undefined_displacement) otherwise.
std::vector<int> displacements_of(const SwapTrace& trace);

/// F_k: b^i_{k+1} ≥ a^{i+D(i,k)}_{k+1} for all i. Throws
/// Error(prerequisite_failed) unless E holds at steps 0..k.
StatementReport check_F(const Trajectory& traj, int k);
/// G_k (k ≥ 1): D(j,k−1) ≤ D(j,k) for all j. Same prerequisite as F.
StatementReport check_G(const Trajectory& traj, int k);

struct IndexRange {
  int first = 1;
  int last = 0;

  int size() const noexcept { return last - first + 1; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Leftmost ke + e/2 top indices. e must be even.
IndexRange filler_indices(const TwoRowTableau& t, int k, int e);

/// λ¹_i ≥ λ²_{i+s₂−s₁} for all i.
bool base_condition_parts(const ChargedBipartition& cb);
/// a^{i+D(i)} ≥ b^{i+D(i)−e} + e on the initial tableau, skipping i whose
/// bottom index falls outside the row. False when displacements are undefined.
bool base_condition_displacement(const ChargedBipartition& cb, int e);
bool base_conditions(const ChargedBipartition& cb, int e);

/// A–E evaluated on one crossing.
struct StepStatements {
  StatementReport a, b, c, d, e;
};

StepStatements evaluate_step(const TwoRowTableau& before, const SwapTrace& trace, const TwoRowTableau& after,
                             int k = 0);

/// Implications A⇒B, B⇒C, C⇒D, A⇔E that fail on this step.
std::vector<std::string> implication_violations(const StepStatements& s);

struct Tally {
  long checked = 0;
  long passed = 0;

  void record(bool ok) {
    ++checked;
    if (ok) ++passed;
  }
  Tally& operator+=(const Tally& o) {
    checked += o.checked;
    passed += o.passed;
    return *this;
  }
  friend bool operator==(const Tally&, const Tally&) = default;
};

/// Keys: "A".."G", "A=>B", "B=>C", "C=>D", "A<=>E", "last-top-hole", "conservation".
using AuditTallies = std::map<std::string, Tally>;

void merge(AuditTallies& into, const AuditTallies& from);

struct StepAudit {
  StepStatements statements;
  std::optional<bool> f;
  std::optional<bool> g;
};

/// Audit of a whole trajectory. With `expect_theorem` (symmetric start at
/// (0, e/2), e even) B, last-top-hole, F and G are required at every step;
/// otherwise only the implications and conservation are.
struct TrajectoryAudit {
  std::vector<StepAudit> steps;
  AuditTallies tallies;
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

TrajectoryAudit audit_trajectory(const Trajectory& traj, bool expect_theorem);

}  // namespace wcb
