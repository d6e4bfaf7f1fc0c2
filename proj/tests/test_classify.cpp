#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wcb/classify.hpp"
#include "wcb/error.hpp"
#include "wcb/json_io.hpp"

using namespace wcb;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::domain;
}

}  // namespace

TEST_CASE("charge_to_params examples") {
  CHECK(charge_to_params({0, 1}, 2) == CherednikParamB{Rational(-1, 2), Rational(0)});
  CHECK(charge_to_params({1, 4}, 4) == CherednikParamB{Rational(-1, 4), Rational(1, 4)});
  CHECK(charge_to_params({0, 3}, 2) == CherednikParamB{Rational(-1, 2), Rational(1)});
  CHECK(to_string(Rational(-1, 2)) == "-1/2");
  CHECK(to_string(Rational(3)) == "3");
  CHECK(kind_of([] { charge_to_params({0, 1}, 0); }) == ErrorKind::domain);
}

TEST_CASE("charge_to_params: c2 = k on (0, ke + e/2), injective in the gap") {
  for (int e = 2; e <= 8; e += 2)
    for (int k = 0; k <= 6; ++k) {
      const auto p = charge_to_params({0, k * e + e / 2}, e);
      CHECK(p.c1 == Rational(-1, e));
      CHECK(p.c2 == Rational(k));
    }
  for (int e = 1; e <= 5; ++e)
    for (int g = 0; g <= 10; ++g)
      for (int h = g + 1; h <= 10; ++h) CHECK(charge_to_params({0, g}, e).c2 != charge_to_params({3, 3 + h}, e).c2);
}

TEST_CASE("type B certificates") {
  const auto worked = certify_infinite_type_B({{1}, {1}}, 2, {0, 1});
  CHECK(worked.verdict == Verdict::certified_infinite);
  CHECK(worked.criterion == Criterion::asymptotic_chamber);
  CHECK(worked.theta_image == Bipartition{{}, {1, 1}});
  CHECK(worked.final_charge == Charge{0, 3});
  CHECK(worked.small_rank);

  const auto empty = certify_infinite_type_B({{}, {}}, 2, {0, 1});
  CHECK(empty.verdict == Verdict::not_ruled_out);

  // Frozen from the oracle re-trace: Θ((2),∅) = ((1),(1)).
  const auto two = certify_infinite_type_B({{2}, {}}, 2, {0, 1});
  CHECK(two.theta_image == Bipartition{{1}, {1}});
  CHECK(two.verdict == Verdict::certified_infinite);

  CHECK(kind_of([] { certify_infinite_type_B({{1}, {}}, 2, {2, 1}); }) == ErrorKind::unsupported_charge);
}

TEST_CASE("certified verdicts always carry chamber evidence") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& b : enumerate_bipartitions(n))
      for (int e = 1; e <= 4; ++e) {
        const auto c = certify_infinite_type_B(b, e, {0, 1});
        REQUIRE(c.final_charge);
        CHECK(c.final_charge->s1 < c.final_charge->s2 - n);
        CHECK((c.verdict == Verdict::certified_infinite) == !c.theta_image->second.empty());
      }
}

TEST_CASE("negative r is metadata only") {
  auto base = certify_infinite_type_B({{2, 1}, {1}}, 4, {0, 2});
  auto other = certify_infinite_type_B({{2, 1}, {1}}, 4, {0, 2}, -3);
  CHECK(other.r == -3);
  other.r = base.r;
  CHECK(other == base);
  CHECK(kind_of([] { certify_infinite_type_B({{1}, {}}, 4, {0, 2}, -2); }) == ErrorKind::domain);
  CHECK(kind_of([] { certify_infinite_type_B({{1}, {}}, 4, {0, 2}, 1); }) == ErrorKind::domain);
}

TEST_CASE("type D certificates") {
  const auto even = certify_infinite_type_D({{1}, {1}}, 2);
  CHECK(even.verdict == Verdict::certified_infinite);
  CHECK(even.criterion == Criterion::symmetric_theorem);
  CHECK(even.type == 'D');

  const auto odd = certify_infinite_type_D({{1}, {1}}, 3);
  CHECK(odd.verdict == Verdict::certified_infinite);
  CHECK(odd.criterion == Criterion::odd_e);
  CHECK_FALSE(odd.theta_image);

  const auto big = certify_infinite_type_D({{2, 1}, {2, 1}}, 2);
  CHECK(big.theta_image == Bipartition{{}, {2, 2, 1, 1}});
  CHECK(big.theta_image->second.part_at(1) == 2);
  CHECK_FALSE(big.small_rank);

  CHECK(kind_of([] { certify_infinite_type_D({{2}, {1, 1}}, 2); }) == ErrorKind::domain);
  CHECK(kind_of([] { certify_infinite_type_D({{}, {}}, 2); }) == ErrorKind::domain);
}

TEST_CASE("type D is certified for every symmetric bipartition of n <= 12") {
  for (int n = 2; n <= 12; n += 2)
    for (const auto& b : enumerate_symmetric_bipartitions(n))
      for (int e = 1; e <= 2 * n; ++e) {
        const auto c = certify_infinite_type_D(b, e);
        CHECK(c.verdict == Verdict::certified_infinite);
      }
}

TEST_CASE("certificate JSON") {
  const auto j = to_json(certify_infinite_type_B({{1}, {1}}, 2, {0, 1}));
  CHECK(j["verdict"] == "CERTIFIED_INFINITE");
  CHECK(j["criterion"] == "asymptotic-chamber");
  CHECK(j["theta_image"].dump() == "[[],[1,1]]");
  CHECK(j["final_charge"].dump() == "[0,3]");
  CHECK(j["subject"]["c1"] == "-1/2");
  CHECK(j["subject"]["c2"] == "0");

  const auto d = to_json(certify_infinite_type_D({{1}, {1}}, 3));
  CHECK(d["criterion"] == "odd-e");
  CHECK(d["theta_image"].is_null());
  CHECK(d["subject"]["type"] == "D");
}
