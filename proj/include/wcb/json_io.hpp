#pragma once

#include <json.hpp>

#include "wcb/classify.hpp"
#include "wcb/proofstate.hpp"
#include "wcb/wallcross.hpp"

namespace wcb {

using json = nlohmann::ordered_json;

json to_json(const Partition& p);
/// [[λ¹ parts], [λ² parts]]
json to_json(const Bipartition& b);
json to_json(const Charge& s);
/// {"top": [...], "bottom": [...], "charge": [s1, s2]}
json to_json(const TwoRowTableau& t);
/// {"A": bool, ..., "F": bool|null, "G": bool|null}
json to_json(const StepAudit& audit);
/// {"k", "charge", "before", "pairs", "cycles", "holes", "displacements", "after"}
/// plus "selections"; "statements" is appended when given.
json to_json(const ThetaStep& step, const StepAudit* audit = nullptr);
/// {"start", "e", "charge", "result", "final_charge", "steps": [...]}
json to_json(const Trajectory& traj, const TrajectoryAudit* audit = nullptr);
json to_json(const Certificate& cert);
json to_json(const AuditTallies& tallies);

Partition partition_from_json(const json& j);

}  // namespace wcb
