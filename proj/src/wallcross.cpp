#include "wcb/wallcross.hpp"

#include <algorithm>

#include "wcb/error.hpp"

namespace wcb {

namespace {

bool strictly_increasing(const std::vector<int>& row) {
  return std::adjacent_find(row.begin(), row.end(), std::greater_equal<>()) == row.end();
}

void require_positive_e(int e) {
  if (e < 1) throw Error(ErrorKind::domain, "e must be a positive integer, got " + std::to_string(e));
}

}  // namespace

SwapTrace swap_select(const TwoRowTableau& t) {
  if (!strictly_increasing(t.top) || !strictly_increasing(t.bottom))
    throw Error(ErrorKind::malformed_tableau, "rows must be strictly increasing");
  if (t.top.size() < t.bottom.size())
    throw Error(ErrorKind::malformed_tableau, "top row shorter than bottom row");

  const int top_len = static_cast<int>(t.top.size());
  const int bottom_len = static_cast<int>(t.bottom.size());
  std::vector<bool> used(t.top.size(), false);
  SwapTrace trace;

  // The bottom row is increasing, so its smallest unused entry is the next one.
  for (int j = 1; j <= bottom_len; ++j) {
    const int x = t.bottom[j - 1];
    int chosen = 0;
    for (int i = top_len; i >= 1; --i) {
      if (!used[i - 1] && t.top[i - 1] <= x) {
        chosen = i;
        break;
      }
    }
    bool cycle = false;
    if (chosen == 0) {
      for (int i = top_len; i >= 1 && chosen == 0; --i)
        if (!used[i - 1]) chosen = i;
      cycle = true;
      trace.cycle_indices.push_back(chosen);
    }
    used[chosen - 1] = true;
    trace.selections.push_back({j, chosen, cycle});
  }

  std::vector<int> selected;
  for (int i = 1; i <= top_len; ++i) {
    if (used[i - 1])
      selected.push_back(i);
    else
      trace.hole_indices.push_back(i);
  }
  std::sort(trace.cycle_indices.begin(), trace.cycle_indices.end());

  auto top = t.top;
  auto bottom = t.bottom;
  for (int j = 1; j <= bottom_len; ++j) {
    const int i = selected[j - 1];
    trace.pairs.emplace_back(j, i);
    trace.displacements.push_back(i - j);
    std::swap(top[i - 1], bottom[j - 1]);
  }
  trace.exchange_only = trace.cycle_indices.empty() && strictly_increasing(top) && strictly_increasing(bottom);
  return trace;
}

WallCrossing wall_cross(const TwoRowTableau& t) {
  validate(t);
  WallCrossing out{swap_select(t), {}};

  std::vector<bool> taken(t.top.size(), false);
  for (const auto& sel : out.trace.selections) {
    taken[sel.top - 1] = true;
    out.after.bottom.push_back(t.top[sel.top - 1]);
  }
  for (std::size_t i = 0; i < t.top.size(); ++i)
    if (!taken[i]) out.after.top.push_back(t.top[i]);
  out.after.top.insert(out.after.top.end(), t.bottom.begin(), t.bottom.end());
  std::sort(out.after.top.begin(), out.after.top.end());
  std::sort(out.after.bottom.begin(), out.after.bottom.end());

  if (!is_valid(out.after))
    throw Error(ErrorKind::malformed_result, "wall crossing of " + to_compact_string(t) + " produced " +
                                                 to_compact_string(out.after));
  return out;
}

TwoRowTableau apply_swap_sort(const TwoRowTableau& t) { return wall_cross(t).after; }

Bipartition phi(const ChargedBipartition& cb) {
  require_supported(cb.charge);
  return to_charged_bipartition(apply_swap_sort(build_tableau(cb))).bipartition;
}

TwoRowTableau delta_e(const TwoRowTableau& t, int e) {
  require_positive_e(e);
  auto cb = to_charged_bipartition(t);
  cb.charge.s2 += e;
  return build_tableau(cb);
}

TwoRowTableau delta_e_padded(const TwoRowTableau& t, int e) {
  require_positive_e(e);
  validate(t);
  TwoRowTableau out;
  out.bottom = t.bottom;
  for (int i = 0; i < e; ++i) out.top.push_back(t.bottom.front() + i);
  for (int v : t.top) out.top.push_back(v + e);
  return out;
}

Bipartition theta(const Bipartition& b, int e, const Charge& s) {
  require_supported(s);
  require_positive_e(e);
  const int n = b.size();
  Bipartition current = b;
  for (int k = 0;; ++k) {
    const Charge step{s.s1, s.s2 + k * e};
    current = phi({current, step});
    if (step.gap() > n) break;
  }
  return current;
}

Trajectory theta_trajectory(const Bipartition& b, int e, const Charge& s) {
  require_supported(s);
  require_positive_e(e);
  Trajectory traj{b, e, s, {}, {}};
  const int n = b.size();
  TwoRowTableau current = build_tableau({b, s});
  for (int k = 0;; ++k) {
    const Charge step{s.s1, s.s2 + k * e};
    auto crossing = wall_cross(current);
    traj.steps.push_back({k, step, current, crossing.trace, crossing.after});
    if (step.gap() > n) break;
    current = delta_e_padded(crossing.after, e);
  }
  traj.result = to_charged_bipartition(traj.steps.back().after).bipartition;
  return traj;
}

std::vector<std::string> conservation_violations(const TwoRowTableau& before, const SwapTrace& trace,
                                                 const TwoRowTableau& after) {
  std::vector<std::string> out;
  if (before.top.size() != after.top.size() || before.bottom.size() != after.bottom.size())
    out.push_back("row lengths changed");

  auto entries = [](const TwoRowTableau& t) {
    std::vector<int> all(t.top);
    all.insert(all.end(), t.bottom.begin(), t.bottom.end());
    std::sort(all.begin(), all.end());
    return all;
  };
  if (entries(before) != entries(after)) out.push_back("entry multiset changed");

  if (before.top.empty() || after.top.empty() || after.bottom.empty() || before.top.front() != after.top.front() ||
      after.top.front() != after.bottom.front())
    out.push_back("leftmost column changed");

  const auto expected_holes = static_cast<std::ptrdiff_t>(before.top.size()) -
                              static_cast<std::ptrdiff_t>(before.bottom.size());
  if (static_cast<std::ptrdiff_t>(trace.hole_indices.size()) != expected_holes)
    out.push_back("hole count " + std::to_string(trace.hole_indices.size()) + " != s2 - s1 = " +
                  std::to_string(expected_holes));
  return out;
}

}  // namespace wcb
