#include "wcb/classify.hpp"

#include <numeric>

#include "wcb/error.hpp"
#include "wcb/wallcross.hpp"

namespace wcb {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

CherednikParamB charge_to_params(const Charge& s, int e) {
  if (e < 1) throw Error(ErrorKind::domain, "e must be a positive integer");
  const Rational c1(-1, e);
  const Rational c2 = (Rational(s.gap()) - Rational(e, 2)) / Rational(e);
  return {c1, c2};
}

const char* to_string(Verdict v) {
  return v == Verdict::certified_infinite ? "CERTIFIED_INFINITE" : "NOT_RULED_OUT";
}

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::asymptotic_chamber: return "asymptotic-chamber";
    case Criterion::odd_e: return "odd-e";
    case Criterion::symmetric_theorem: return "symmetric-theorem";
  }
  return "unknown";
}

namespace {

void require_parameter(int e, int r) {
  if (e < 1) throw Error(ErrorKind::domain, "e must be a positive integer");
  if (r >= 0 || std::gcd(r, e) != 1)
    throw Error(ErrorKind::domain, "r must be negative and coprime to e, got r=" + std::to_string(r));
}

}  // namespace

Certificate certify_infinite_type_B(const Bipartition& b, int e, const Charge& s, int r) {
  require_supported(s);
  require_parameter(e, r);
  const int n = b.size();

  Certificate cert;
  cert.type = 'B';
  cert.subject = b;
  cert.e = e;
  cert.r = r;
  cert.charge = s;
  cert.params = charge_to_params(s, e);
  cert.criterion = Criterion::asymptotic_chamber;
  cert.small_rank = n < 4;

  const auto image = theta(b, e, s);
  int k = 0;
  while (k * e + s.gap() <= n) ++k;
  const Charge last{s.s1, s.s2 + k * e};
  if (!(last.s1 < last.s2 - n)) throw Error(ErrorKind::malformed_result, "final charge outside asymptotic chamber");

  cert.theta_image = image;
  cert.final_charge = last;
  cert.verdict = image.second.empty() ? Verdict::not_ruled_out : Verdict::certified_infinite;
  return cert;
}

Certificate certify_infinite_type_D(const Bipartition& b, int e, int r) {
  require_parameter(e, r);
  if (!is_symmetric(b)) throw Error(ErrorKind::domain, "type D certificates need a symmetric bipartition");
  if (b.size() == 0) throw Error(ErrorKind::domain, "type D certificates need n >= 1");

  if (e % 2 != 0) {
    Certificate cert;
    cert.type = 'D';
    cert.subject = b;
    cert.e = e;
    cert.r = r;
    cert.verdict = Verdict::certified_infinite;
    cert.criterion = Criterion::odd_e;
    cert.small_rank = b.size() < 4;
    return cert;
  }

  auto cert = certify_infinite_type_B(b, e, {0, e / 2}, r);
  cert.type = 'D';
  cert.criterion = Criterion::symmetric_theorem;
  if (cert.verdict != Verdict::certified_infinite ||
      cert.theta_image->second.part_at(1) != b.second.part_at(1))
    throw Error(ErrorKind::theorem_contradiction, "theta moved the first part of the second component of " +
                                                      to_string(b) + " to " + to_string(*cert.theta_image));
  return cert;
}

}  // namespace wcb
