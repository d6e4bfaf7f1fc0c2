#include "wcb/proofstate.hpp"

#include <algorithm>

#include "wcb/error.hpp"

namespace wcb {

char to_char(Statement s) { return static_cast<char>('A' + static_cast<int>(s)); }

namespace {

StatementReport pass(Statement id, int k) { return {id, k, true, std::nullopt}; }
StatementReport fail(Statement id, int k, std::vector<int> witness) { return {id, k, false, std::move(witness)}; }

// Prepends m consecutive integers below the leftmost entry without
// validating, so unsorted intermediate rows can be aligned too.
TwoRowTableau prepend_run(const TwoRowTableau& t, int m) {
  if (m <= 0) return t;
  TwoRowTableau out;
  const int first = t.top.front();
  for (int i = m; i >= 1; --i) {
    out.top.push_back(first - i);
    out.bottom.push_back(first - i);
  }
  out.top.insert(out.top.end(), t.top.begin(), t.top.end());
  out.bottom.insert(out.bottom.end(), t.bottom.begin(), t.bottom.end());
  return out;
}

int depth_gap(const TwoRowTableau& before, const TwoRowTableau& after) {
  const auto top_gap = static_cast<long>(after.top.size()) - static_cast<long>(before.top.size());
  const auto bottom_gap = static_cast<long>(after.bottom.size()) - static_cast<long>(before.bottom.size());
  if (top_gap != bottom_gap || before.top.empty() || after.top.empty())
    throw Error(ErrorKind::malformed_tableau, "tableaux have incompatible shapes");
  return static_cast<int>(top_gap);
}

void require_exchange_only_prefix(const Trajectory& traj, int k, char which) {
  if (k < 0 || k >= static_cast<int>(traj.steps.size()))
    throw Error(ErrorKind::range, std::string(1, which) + "_k: step " + std::to_string(k) + " not in trajectory");
  for (int kk = 0; kk <= k; ++kk)
    if (!traj.steps[kk].trace.exchange_only)
      throw Error(ErrorKind::prerequisite_failed,
                  std::string(1, which) + "_" + std::to_string(k) + " needs E at step " + std::to_string(kk));
}

}  // namespace

StatementReport check_A(const TwoRowTableau& t, int k) {
  for (std::size_t j = 0; j < t.bottom.size() && j < t.top.size(); ++j)
    if (t.bottom[j] < t.top[j]) return fail(Statement::A, k, {static_cast<int>(j + 1)});
  return pass(Statement::A, k);
}

StatementReport check_B(const SwapTrace& trace, int k) {
  if (!trace.cycle_indices.empty()) return fail(Statement::B, k, {trace.cycle_indices.front()});
  return pass(Statement::B, k);
}

StatementReport check_C(const SwapTrace& trace, const TwoRowTableau& t, int k) {
  for (auto [j, i] : trace.pairs)
    if (t.bottom[j - 1] < t.top[i - 1]) return fail(Statement::C, k, {j, i});
  return pass(Statement::C, k);
}

StatementReport check_D(const SwapTrace& trace, const TwoRowTableau& before, const TwoRowTableau& after, int k) {
  const int gap = depth_gap(before, after);
  const auto lhs = prepend_run(before, gap);
  const auto rhs = prepend_run(after, -gap);
  const int shift = std::max(gap, 0);
  for (int hole : trace.hole_indices) {
    const int idx = hole + shift;
    if (lhs.top[idx - 1] != rhs.top[idx - 1]) return fail(Statement::D, k, {hole});
  }
  return pass(Statement::D, k);
}

StatementReport check_E(const SwapTrace& trace, const TwoRowTableau& before, const TwoRowTableau& after, int k) {
  // A cycle is not a swap, so it cannot be drawn as an arrow.
  if (!trace.cycle_indices.empty()) return fail(Statement::E, k, {1, trace.cycle_indices.front()});
  auto exchanged = before;
  for (auto [j, i] : trace.pairs) std::swap(exchanged.top[i - 1], exchanged.bottom[j - 1]);

  const int gap = depth_gap(exchanged, after);
  const auto lhs = prepend_run(exchanged, gap);
  const auto rhs = prepend_run(after, -gap);
  for (std::size_t i = 0; i < lhs.top.size(); ++i)
    if (lhs.top[i] != rhs.top[i]) return fail(Statement::E, k, {1, static_cast<int>(i + 1)});
  for (std::size_t j = 0; j < lhs.bottom.size(); ++j)
    if (lhs.bottom[j] != rhs.bottom[j]) return fail(Statement::E, k, {2, static_cast<int>(j + 1)});
  return pass(Statement::E, k);
}

std::vector<int> displacements_of(const SwapTrace& trace) {
  if (!trace.exchange_only)
    throw Error(ErrorKind::undefined_displacement, "displacements need an exchange-only crossing (statement E)");
  return trace.displacements;
}

StatementReport check_F(const Trajectory& traj, int k) {
  require_exchange_only_prefix(traj, k, 'F');
  const auto& step = traj.steps[k];
  const auto next = k + 1 < static_cast<int>(traj.steps.size()) ? traj.steps[k + 1].before
                                                                 : delta_e_padded(step.after, traj.e);
  if (next.bottom.size() != step.before.bottom.size())
    throw Error(ErrorKind::malformed_tableau, "trajectory steps do not share a bottom-row length");

  const auto disp = displacements_of(step.trace);
  for (std::size_t i = 1; i <= next.bottom.size(); ++i) {
    const std::size_t idx = i + static_cast<std::size_t>(disp[i - 1]);
    if (idx > next.top.size()) continue;
    if (next.bottom[i - 1] < next.top[idx - 1])
      return fail(Statement::F, k, {static_cast<int>(i), static_cast<int>(idx)});
  }
  return pass(Statement::F, k);
}

StatementReport check_G(const Trajectory& traj, int k) {
  if (k < 1) throw Error(ErrorKind::range, "G_k is defined for k >= 1");
  require_exchange_only_prefix(traj, k, 'G');
  const auto& prev = traj.steps[k - 1].trace.displacements;
  const auto& cur = traj.steps[k].trace.displacements;
  for (std::size_t j = 0; j < std::min(prev.size(), cur.size()); ++j)
    if (prev[j] > cur[j]) return fail(Statement::G, k, {static_cast<int>(j + 1)});
  return pass(Statement::G, k);
}

IndexRange filler_indices(const TwoRowTableau& t, int k, int e) {
  if (e < 1 || e % 2 != 0) throw Error(ErrorKind::domain, "filler needs a positive even e");
  if (k < 0) throw Error(ErrorKind::range, "filler needs k >= 0");
  const int count = k * e + e / 2;
  if (count > static_cast<int>(t.top.size()))
    throw Error(ErrorKind::range, "filler of " + std::to_string(count) + " indices exceeds top row of length " +
                                      std::to_string(t.top.size()));
  return {1, count};
}

bool base_condition_parts(const ChargedBipartition& cb) {
  require_supported(cb.charge);
  const auto& [l1, l2] = cb.bipartition;
  const int gap = cb.charge.gap();
  const long last = static_cast<long>(std::max(l1.length(), l2.length())) + 1;
  for (long i = 1; i <= last; ++i)
    if (l1.part_at(i) < l2.part_at(i + gap)) return false;
  return true;
}

bool base_condition_displacement(const ChargedBipartition& cb, int e) {
  const auto t = build_tableau(cb);
  const auto trace = swap_select(t);
  if (!trace.exchange_only) return false;
  const int bottom_len = static_cast<int>(t.bottom.size());
  for (int i = 1; i <= bottom_len; ++i) {
    const int idx = i + trace.displacements[i - 1];
    const int bidx = idx - e;
    if (bidx < 1 || bidx > bottom_len) continue;
    if (t.top[idx - 1] < t.bottom[bidx - 1] + e) return false;
  }
  return true;
}

bool base_conditions(const ChargedBipartition& cb, int e) {
  if (e < 1) throw Error(ErrorKind::domain, "e must be positive");
  return base_condition_parts(cb) && base_condition_displacement(cb, e);
}

StepStatements evaluate_step(const TwoRowTableau& before, const SwapTrace& trace, const TwoRowTableau& after,
                             int k) {
  return {check_A(before, k), check_B(trace, k), check_C(trace, before, k), check_D(trace, before, after, k),
          check_E(trace, before, after, k)};
}

std::vector<std::string> implication_violations(const StepStatements& s) {
  std::vector<std::string> out;
  const auto at = " at k=" + std::to_string(s.a.k);
  if (s.a.holds && !s.b.holds) out.push_back("A=>B fails" + at);
  if (s.b.holds && !s.c.holds) out.push_back("B=>C fails" + at);
  if (s.c.holds && !s.d.holds) out.push_back("C=>D fails" + at);
  if (s.a.holds != s.e.holds) out.push_back("A<=>E fails" + at);
  return out;
}

void merge(AuditTallies& into, const AuditTallies& from) {
  for (const auto& [key, tally] : from) into[key] += tally;
}

TrajectoryAudit audit_trajectory(const Trajectory& traj, bool expect_theorem) {
  TrajectoryAudit audit;
  auto& tl = audit.tallies;
  auto require = [&](const std::string& key, bool ok, const std::string& what) {
    tl[key].record(ok);
    if (!ok) audit.violations.push_back(what);
  };

  for (const auto& step : traj.steps) {
    const int k = step.k;
    const auto at = " at k=" + std::to_string(k);
    StepAudit sa{evaluate_step(step.before, step.trace, step.after, k), std::nullopt, std::nullopt};
    const auto& st = sa.statements;

    tl["A"].record(st.a.holds);
    tl["C"].record(st.c.holds);
    tl["D"].record(st.d.holds);
    tl["E"].record(st.e.holds);
    if (expect_theorem)
      require("B", st.b.holds, "B fails (cycle)" + at);
    else
      tl["B"].record(st.b.holds);

    if (st.a.holds) require("A=>B", st.b.holds, "A=>B fails" + at);
    if (st.b.holds) require("B=>C", st.c.holds, "B=>C fails" + at);
    if (st.c.holds) require("C=>D", st.d.holds, "C=>D fails" + at);
    require("A<=>E", st.a.holds == st.e.holds, "A<=>E fails" + at);

    auto broken = conservation_violations(step.before, step.trace, step.after);
    require("conservation", broken.empty(), (broken.empty() ? std::string() : broken.front()) + at);

    if (expect_theorem) {
      const int last = static_cast<int>(step.before.top.size());
      const auto& holes = step.trace.hole_indices;
      require("last-top-hole", std::find(holes.begin(), holes.end(), last) != holes.end(),
              "last top entry is not a hole" + at);

      try {
        sa.f = check_F(traj, k).holds;
      } catch (const Error&) {
        sa.f = false;
      }
      require("F", *sa.f, "F fails" + at);
      if (k >= 1) {
        try {
          sa.g = check_G(traj, k).holds;
        } catch (const Error&) {
          sa.g = false;
        }
        require("G", *sa.g, "G fails" + at);
      }
    }
    audit.steps.push_back(std::move(sa));
  }
  return audit;
}

}  // namespace wcb
