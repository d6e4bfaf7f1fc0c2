#pragma once

#include <optional>
#include <string>

#include <boost/rational.hpp>

#include "wcb/tableau.hpp"

namespace wcb {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& q);

/// Type B parameter (c₁, c₂). The sign of c₁ follows the convention c₁ = −1/e
/// (opposite to Losev's); translate when exchanging data with other tools.
struct CherednikParamB {
  Rational c1;
  Rational c2;

  friend bool operator==(const CherednikParamB&, const CherednikParamB&) = default;
};

/// c₁ = −1/e, c₂ = (s₂ − s₁ − e/2)/e, exact.
CherednikParamB charge_to_params(const Charge& s, int e);

enum class Verdict { certified_infinite, not_ruled_out };
enum class Criterion { asymptotic_chamber, odd_e, symmetric_theorem };

const char* to_string(Verdict v);
const char* to_string(Criterion c);

struct Certificate {
  char type = 'B';  // 'B' for L_c(λ), 'D' for L_c(λ±)
  Bipartition subject;
  int e = 0;
  int r = -1;  // numerator of c₁ = r/e before normalization; metadata only
  std::optional<Charge> charge;
  std::optional<CherednikParamB> params;
  Verdict verdict = Verdict::not_ruled_out;
  Criterion criterion = Criterion::asymptotic_chamber;
  std::optional<Bipartition> theta_image;
  std::optional<Charge> final_charge;
  bool small_rank = false;  // n < 4: combinatorics only, no D_n interpretation

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Applies Θ_{e,s} until the charge is in the asymptotic chamber s₁ < s₂ − n,
/// then certifies infinite dimension iff the image has nonempty λ².
/// `r` (negative, coprime to e) only annotates the certificate: crossings for
/// c₁ = r/e coincide with those for −1/e.
Certificate certify_infinite_type_B(const Bipartition& b, int e, const Charge& s, int r = -1);

/// λ± for symmetric λ ≠ (∅,∅). Odd e is certified directly; even e goes
/// through type B at (0, e/2) and must preserve λ²₁, else
/// Error(theorem_contradiction).
Certificate certify_infinite_type_D(const Bipartition& b, int e, int r = -1);

}  // namespace wcb
