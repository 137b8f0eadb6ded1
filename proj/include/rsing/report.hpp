#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "rsing/enumerate.hpp"
#include "rsing/invariants.hpp"
#include "rsing/selftest.hpp"
#include "rsing/tower.hpp"

namespace rsing {

using json = nlohmann::ordered_json;

/// JSON shape is part of the tool's interface: undetermined correction terms
/// are {"kind":"undetermined","t2hat_zero":...,"notes":[...]} so that bounds
/// can never be mistaken for exact values.
json c_status_json(const CStatus& c);
std::string c_status_text(const CStatus& c);

json invariants_json(const InvariantsReport& report);
std::string invariants_text(const InvariantsReport& report);

json cycle_json(const DualGraph& g, const Cycle& z, const NumericInvariants& inv,
                const ComputationSequence& seq);
std::string cycle_text(const DualGraph& g, const Cycle& z, const NumericInvariants& inv,
                       const ComputationSequence& seq);

json tower_json(const TowerNode& t);
std::string tower_text(const TowerNode& t);

json graph_json(const DualGraph& g);

json identity_suite_json(const IdentitySuiteResult& r);
std::string identity_suite_text(const IdentitySuiteResult& r);

} // namespace rsing
