#include "wcb/json_io.hpp"

#include "wcb/error.hpp"

namespace wcb {

json to_json(const Partition& p) {
  json out = json::array();
  for (int v : p.parts()) out.push_back(v);
  return out;
}

json to_json(const Bipartition& b) { return json::array({to_json(b.first), to_json(b.second)}); }

json to_json(const Charge& s) { return json::array({s.s1, s.s2}); }

json to_json(const TwoRowTableau& t) {
  json out;
  out["top"] = t.top;
  out["bottom"] = t.bottom;
  out["charge"] = to_json(t.charge());
  return out;
}

json to_json(const StepAudit& audit) {
  const auto& s = audit.statements;
  json out;
  out["A"] = s.a.holds;
  out["B"] = s.b.holds;
  out["C"] = s.c.holds;
  out["D"] = s.d.holds;
  out["E"] = s.e.holds;
  out["F"] = audit.f ? json(*audit.f) : json(nullptr);
  out["G"] = audit.g ? json(*audit.g) : json(nullptr);
  return out;
}

json to_json(const ThetaStep& step, const StepAudit* audit) {
  json out;
  out["k"] = step.k;
  out["charge"] = to_json(step.charge);
  out["before"] = to_json(step.before);
  json pairs = json::array();
  for (auto [j, i] : step.trace.pairs) pairs.push_back(json::array({j, i}));
  out["pairs"] = pairs;
  out["cycles"] = step.trace.cycle_indices;
  out["holes"] = step.trace.hole_indices;
  out["displacements"] = step.trace.displacements;
  out["after"] = to_json(step.after);
  json selections = json::array();
  for (const auto& sel : step.trace.selections) selections.push_back(json::array({sel.bottom, sel.top}));
  out["selections"] = selections;
  if (audit) out["statements"] = to_json(*audit);
  return out;
}

json to_json(const Trajectory& traj, const TrajectoryAudit* audit) {
  json out;
  out["start"] = to_json(traj.start);
  out["e"] = traj.e;
  out["charge"] = to_json(traj.charge);
  out["result"] = to_json(traj.result);
  out["final_charge"] = to_json(traj.final_charge());
  json steps = json::array();
  for (std::size_t i = 0; i < traj.steps.size(); ++i)
    steps.push_back(to_json(traj.steps[i], audit && i < audit->steps.size() ? &audit->steps[i] : nullptr));
  out["steps"] = steps;
  if (audit) out["violations"] = audit->violations;
  return out;
}

json to_json(const Certificate& cert) {
  json subject;
  subject["type"] = std::string(1, cert.type);
  subject["bipartition"] = to_json(cert.subject);
  if (cert.type == 'D') subject["component"] = "±";
  subject["e"] = cert.e;
  subject["r"] = cert.r;
  if (cert.charge) subject["charge"] = to_json(*cert.charge);
  if (cert.params) {
    subject["c1"] = to_string(cert.params->c1);
    subject["c2"] = to_string(cert.params->c2);
  }

  json out;
  out["subject"] = subject;
  out["verdict"] = to_string(cert.verdict);
  out["criterion"] = to_string(cert.criterion);
  out["theta_image"] = cert.theta_image ? to_json(*cert.theta_image) : json(nullptr);
  out["final_charge"] = cert.final_charge ? to_json(*cert.final_charge) : json(nullptr);
  out["small_rank_warning"] = cert.small_rank;
  return out;
}

json to_json(const AuditTallies& tallies) {
  json out = json::object();
  for (const auto& [key, t] : tallies) out[key] = {{"checked", t.checked}, {"passed", t.passed}};
  return out;
}

Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::parse, "partition must be a JSON array");
  return Partition(j.get<std::vector<int>>());
}

}  // namespace wcb
