#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wcb/tableau.hpp"

namespace wcb {

/// One choice made by the swap procedure: the bottom entry at `bottom`
/// is exchanged with the top entry at `top` (both 1-based). `cycle` marks a
/// choice forced by the fallback branch (no unused top entry ≤ the bottom one).
struct Selection {
  int bottom = 0;
  int top = 0;
  bool cycle = false;

  friend bool operator==(const Selection&, const Selection&) = default;
};

/// Everything the swap procedure decided on one tableau. Indices are 1-based
/// positions, so equal values in different positions stay distinct.
struct SwapTrace {
  std::vector<Selection> selections;         // in selection order
  std::vector<std::pair<int, int>> pairs;    // ordered pairing M: (j, i_j), i_1 < i_2 < ...
  std::vector<int> cycle_indices;            // top indices, increasing
  std::vector<int> hole_indices;             // top indices never selected, increasing
  std::vector<int> displacements;            // i_j − j along M
  bool exchange_only = false;  // no cycles, and exchanging along M already yields sorted rows
};

struct WallCrossing {
  SwapTrace trace;
  TwoRowTableau after;
};

/// Runs the selection rule: for the smallest unused bottom entry x take the
/// largest unused top entry ≤ x if one exists, otherwise the largest unused
/// top entry. Rows must be strictly increasing with |top| ≥ |bottom|; the
/// shared-leftmost invariant is not required here.
SwapTrace swap_select(const TwoRowTableau& t);

/// Swap then sort. Output has the same depth as the input.
WallCrossing wall_cross(const TwoRowTableau& t);
TwoRowTableau apply_swap_sort(const TwoRowTableau& t);

/// Φ^∞ at the given charge.
Bipartition phi(const ChargedBipartition& cb);

/// Same bipartition at charge (s₁, s₂+e), minimal depth.
TwoRowTableau delta_e(const TwoRowTableau& t, int e);

/// Same bipartition at charge (s₁, s₂+e), keeping the bottom row: the top row
/// becomes e consecutive integers from bottom[1] followed by the old top + e.
TwoRowTableau delta_e_padded(const TwoRowTableau& t, int e);

struct ThetaStep {
  int k = 0;
  Charge charge;
  TwoRowTableau before;
  SwapTrace trace;
  TwoRowTableau after;
};

struct Trajectory {
  Bipartition start;
  int e = 0;
  Charge charge;
  std::vector<ThetaStep> steps;
  Bipartition result;

  Charge final_charge() const { return steps.back().charge; }
};

/// Θ_{e,s}: Φ^∞ at (s₁, ke+s₂) for k = 0, 1, ... up to and including the
/// first k with ke + s₂ − s₁ > |b|.
Bipartition theta(const Bipartition& b, int e, const Charge& s);

/// The same composition with every crossing recorded. Consecutive tableaux are
/// linked by delta_e_padded, so all steps share one bottom-row length and
/// positional indices are comparable across k.
Trajectory theta_trajectory(const Bipartition& b, int e, const Charge& s);

/// Multiset, row-length, leftmost-column and hole-count conservation for one
/// crossing. Returns human-readable violations, empty when all hold.
std::vector<std::string> conservation_violations(const TwoRowTableau& before, const SwapTrace& trace,
                                                 const TwoRowTableau& after);

}  // namespace wcb
