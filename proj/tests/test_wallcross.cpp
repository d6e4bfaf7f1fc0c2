#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracle.hpp"
#include "wcb/error.hpp"
#include "wcb/wallcross.hpp"

using namespace wcb;

namespace {

oracle::Bip to_oracle(const Bipartition& b) {
  return {{b.first.parts().begin(), b.first.parts().end()}, {b.second.parts().begin(), b.second.parts().end()}};
}

Bipartition from_oracle(const oracle::Bip& b) { return {Partition(b.first), Partition(b.second)}; }

}  // namespace

TEST_CASE("swap_select on the worked example") {
  const auto tr = swap_select({{-1, 0, 2}, {-1, 1}});
  CHECK(tr.selections == std::vector<Selection>{{1, 1, false}, {2, 2, false}});
  CHECK(tr.pairs == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}});
  CHECK(tr.hole_indices == std::vector<int>{3});
  CHECK(tr.cycle_indices.empty());
  CHECK(tr.displacements == std::vector<int>{0, 0});
  CHECK(tr.exchange_only);
}

TEST_CASE("swap_select small cases") {
  auto empty = swap_select({{0, 1}, {0}});
  CHECK(empty.pairs == std::vector<std::pair<int, int>>{{1, 1}});
  CHECK(empty.hole_indices == std::vector<int>{2});
  CHECK(empty.cycle_indices.empty());

  // x = 3, min top 0 ≤ 3 so y = 0.
  auto one = swap_select({{0, 5}, {3}});
  CHECK(one.pairs == std::vector<std::pair<int, int>>{{1, 1}});
  CHECK(one.hole_indices == std::vector<int>{2});
  CHECK(one.cycle_indices.empty());

  // No top entry ≤ 0: the fallback takes the largest, 5 at index 2.
  auto cyc = swap_select({{3, 5}, {0}});
  CHECK(cyc.cycle_indices == std::vector<int>{2});
  CHECK(cyc.selections.front().cycle);
  CHECK(cyc.hole_indices == std::vector<int>{1});
}

TEST_CASE("swap_select rejects unsorted rows") {
  CHECK_THROWS_AS(swap_select({{2, 1}, {0}}), Error);
  CHECK_THROWS_AS(swap_select({{0}, {0, 1}}), Error);
}

TEST_CASE("apply_swap_sort examples") {
  CHECK(apply_swap_sort({{-1, 0, 2}, {-1, 1}}) == TwoRowTableau{{-1, 1, 2}, {-1, 0}});
  CHECK(apply_swap_sort({{0, 1}, {0}}) == TwoRowTableau{{0, 1}, {0}});
  CHECK_THROWS_AS(apply_swap_sort({{0, 2}, {1}}), Error);
}

TEST_CASE("phi examples") {
  CHECK(phi({{{1}, {1}}, {0, 1}}) == Bipartition{{}, {1, 1}});
  CHECK(phi({{{1}, {}}, {0, 3}}) == Bipartition{{1}, {}});
  CHECK(phi({{{}, {}}, {0, 1}}) == Bipartition{{}, {}});
  CHECK_THROWS_AS(phi({{{1}, {}}, {1, 0}}), Error);
}

TEST_CASE("phi agrees with the multiset re-trace oracle") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& b : enumerate_bipartitions(n))
      for (int s1 = -1; s1 <= 1; ++s1)
        for (int s2 = s1; s2 <= s1 + 5; ++s2) {
          const auto t = build_tableau({b, {s1, s2}});
          const auto crossing = wall_cross(t);
          const auto ref = oracle::cross({t.top, t.bottom});
          CHECK(crossing.after.top == ref.after.top);
          CHECK(crossing.after.bottom == ref.after.bottom);
          CHECK(static_cast<int>(crossing.trace.cycle_indices.size()) == ref.cycles);
          std::vector<int> hole_values;
          for (int h : crossing.trace.hole_indices) hole_values.push_back(t.top[h - 1]);
          CHECK(hole_values == ref.hole_values);
          CHECK(phi({b, {s1, s2}}) == from_oracle(oracle::phi(to_oracle(b), s1, s2)));
        }
}

TEST_CASE("phi is a size-preserving permutation for each charge") {
  for (int n = 0; n <= 8; ++n) {
    const auto all = enumerate_bipartitions(n);
    const std::set<Bipartition> domain(all.begin(), all.end());
    for (int s2 = 1; s2 <= 6; ++s2) {
      std::set<Bipartition> image;
      for (const auto& b : all) {
        const auto out = phi({b, {0, s2}});
        CHECK(out.size() == n);
        image.insert(out);
      }
      CHECK(image == domain);
    }
  }
}

TEST_CASE("phi fixes bipartitions smaller than s2 - s1") {
  for (int n = 0; n <= 8; ++n)
    for (const auto& b : enumerate_bipartitions(n))
      for (int s1 = -1; s1 <= 0; ++s1)
        for (int s2 = s1 + n + 1; s2 <= s1 + n + 3; ++s2) CHECK(phi({b, {s1, s2}}) == b);
}

TEST_CASE("conservation, leftmost column, hole count, monotone pairing") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& b : enumerate_bipartitions(n))
      for (int s2 = 0; s2 <= 6; ++s2) {
        const auto t = build_tableau({b, {0, s2}});
        const auto c = wall_cross(t);
        CHECK(conservation_violations(t, c.trace, c.after).empty());
        CHECK(c.after.top.front() == t.top.front());
        CHECK(c.trace.hole_indices.size() == static_cast<std::size_t>(s2));
        for (std::size_t j = 1; j < c.trace.pairs.size(); ++j) {
          CHECK(c.trace.pairs[j].first == c.trace.pairs[j - 1].first + 1);
          CHECK(c.trace.pairs[j].second > c.trace.pairs[j - 1].second);
        }
        std::vector<int> used;
        for (const auto& sel : c.trace.selections) used.push_back(sel.top);
        std::sort(used.begin(), used.end());
        CHECK(std::adjacent_find(used.begin(), used.end()) == used.end());
      }
}

TEST_CASE("conservation_violations reports breakage") {
  const TwoRowTableau before{{-1, 0, 2}, {-1, 1}};
  const auto c = wall_cross(before);
  CHECK_FALSE(conservation_violations(before, c.trace, TwoRowTableau{{-1, 1, 3}, {-1, 0}}).empty());
  CHECK_FALSE(conservation_violations(before, c.trace, TwoRowTableau{{-1, 2}, {-1, 0, 1}}).empty());
  auto bad = c.trace;
  bad.hole_indices.clear();
  CHECK_FALSE(conservation_violations(before, bad, c.after).empty());
}

TEST_CASE("padding commutes with wall crossing") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& b : enumerate_bipartitions(n))
      for (int s2 = 0; s2 <= 4; ++s2) {
        const auto t = build_tableau({b, {0, s2}});
        for (int m = 1; m <= 3; ++m) CHECK(apply_swap_sort(pad(t, m)) == pad(apply_swap_sort(t), m));
      }
}

TEST_CASE("delta_e") {
  const TwoRowTableau t{{-1, 1, 2}, {-1, 0}};
  const auto canon = delta_e(t, 2);
  CHECK(canon == TwoRowTableau{{0, 1, 3, 4}, {0}});
  CHECK(canon.charge() == Charge{0, 3});
  const auto padded = delta_e_padded(t, 2);
  CHECK(padded == TwoRowTableau{{-1, 0, 1, 3, 4}, {-1, 0}});
  CHECK(padded == pad(canon, static_cast<int>(padded.bottom.size() - canon.bottom.size())));
  CHECK(delta_e({{0, 1}, {0}}, 2) == TwoRowTableau{{0, 1, 2, 3}, {0}});
  CHECK_THROWS_AS(delta_e(t, 0), Error);
}

TEST_CASE("delta_e_padded represents the shifted charge") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& b : enumerate_bipartitions(n))
      for (int e = 1; e <= 4; ++e) {
        const ChargedBipartition cb{b, {0, 1}};
        const auto t = build_tableau(cb);
        const auto padded = delta_e_padded(t, e);
        const auto canon = delta_e(t, e);
        CHECK(to_charged_bipartition(padded) == ChargedBipartition{b, {0, 1 + e}});
        CHECK(canonicalize(padded) == canon);
      }
}

TEST_CASE("theta examples") {
  CHECK(theta({{1}, {1}}, 2, {0, 1}) == Bipartition{{}, {1, 1}});
  CHECK(theta({{}, {}}, 3, {-2, 4}) == Bipartition{{}, {}});
  // Frozen from the oracle re-trace.
  const auto image = theta({{2, 1}, {2, 1}}, 2, {0, 1});
  CHECK(image == Bipartition{{}, {2, 2, 1, 1}});
  CHECK(image.second.part_at(1) == 2);
  CHECK_THROWS_AS(theta({{1}, {}}, 2, {1, 0}), Error);
  CHECK_THROWS_AS(theta({{1}, {}}, 0, {0, 1}), Error);
}

TEST_CASE("theta agrees with the oracle and with the padded trajectory") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& b : enumerate_bipartitions(n))
      for (int e = 1; e <= 4; ++e)
        for (int s2 = 0; s2 <= 2; ++s2) {
          const Charge s{0, s2};
          const auto image = theta(b, e, s);
          CHECK(image == from_oracle(oracle::theta(to_oracle(b), e, 0, s2)));
          const auto traj = theta_trajectory(b, e, s);
          CHECK(traj.result == image);
          CHECK(traj.final_charge().gap() > n);
          for (const auto& step : traj.steps) {
            CHECK(step.charge == step.before.charge());
            CHECK(step.before.bottom.size() == traj.steps.front().before.bottom.size());
          }
        }
}

TEST_CASE("theta_trajectory records") {
  const auto traj = theta_trajectory({{1}, {1}}, 2, {0, 1});
  REQUIRE(traj.steps.size() == 2);
  CHECK(traj.steps[0].trace.hole_indices.size() == 1);
  CHECK(traj.steps[0].after == TwoRowTableau{{-1, 1, 2}, {-1, 0}});
  CHECK(traj.steps[1].charge == Charge{0, 3});
  CHECK(traj.steps[1].before == TwoRowTableau{{-1, 0, 1, 3, 4}, {-1, 0}});
  CHECK(traj.steps[1].after == traj.steps[1].before);

  const auto trivial = theta_trajectory({{}, {}}, 2, {0, 1});
  REQUIRE(trivial.steps.size() == 1);
  CHECK(trivial.steps[0].trace.pairs.size() == 1);  // the shared leftmost entry

  for (int half = 1; half <= 4; ++half)
    for (int m = 1; m <= 4; ++m)
      for (const auto& b : enumerate_symmetric_bipartitions(2 * m))
        for (const auto& step : theta_trajectory(b, 2 * half, {0, half}).steps)
          CHECK(step.trace.cycle_indices.empty());
}
