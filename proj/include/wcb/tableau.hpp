#pragma once

#include <compare>
#include <string>
#include <vector>

#include "wcb/partitions.hpp"

namespace wcb {

/// Integer pair (s₁, s₂). Only s₂ ≥ s₁ is supported by the tableau code.
struct Charge {
  int s1 = 0;
  int s2 = 0;

  int gap() const noexcept { return s2 - s1; }

  friend bool operator==(const Charge&, const Charge&) = default;
  friend auto operator<=>(const Charge&, const Charge&) = default;
};

/// |λ, s⟩
struct ChargedBipartition {
  Bipartition bipartition;
  Charge charge;

  friend bool operator==(const ChargedBipartition&, const ChargedBipartition&) = default;
};

/// Two strictly increasing integer rows sharing their leftmost entry. The top
/// row carries λ², the bottom row λ¹. With depth d the top row has d+1
/// entries and the bottom row d+1+s₁−s₂.
///
/// Any depth at or above the minimal one is a valid representation; padded
/// forms arise naturally when the charge is shifted.
struct TwoRowTableau {
  std::vector<int> top;
  std::vector<int> bottom;

  int depth() const noexcept { return static_cast<int>(top.size()) - 1; }
  /// Charge read off the row lengths and the leftmost entry.
  Charge charge() const;

  friend bool operator==(const TwoRowTableau&, const TwoRowTableau&) = default;
};

/// Throws Error(malformed_tableau) on the first violated shape invariant.
void validate(const TwoRowTableau& t);
bool is_valid(const TwoRowTableau& t) noexcept;

/// Throws Error(unsupported_charge) if s₁ > s₂.
void require_supported(const Charge& s);

int minimal_depth(const ChargedBipartition& cb);

/// The tableau of |λ, s⟩ at minimal depth.
TwoRowTableau build_tableau(const ChargedBipartition& cb);

/// Same, at an explicit depth d ≥ minimal_depth(cb).
TwoRowTableau build_tableau(const ChargedBipartition& cb, int depth);

/// Inverse of build_tableau; accepts padded tableaux.
ChargedBipartition to_charged_bipartition(const TwoRowTableau& t);

/// Prepends top[1]−m, ..., top[1]−1 to both rows.
TwoRowTableau pad(const TwoRowTableau& t, int m);

/// Restores minimal depth.
TwoRowTableau canonicalize(const TwoRowTableau& t);

/// "(-1,0,2)/(-1,1)"
std::string to_compact_string(const TwoRowTableau& t);

/// Two lines, columns right-aligned to a common width, rows left-justified so
/// the shared leftmost entry lines up.
std::string render(const TwoRowTableau& t);

}  // namespace wcb
