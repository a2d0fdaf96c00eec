#pragma once

#include "grasscat/artube.hpp"
#include "grasscat/oracle.hpp"
#include "grasscat/roots.hpp"

#include "json.hpp"

namespace grasscat {

using nlohmann::json;

json to_json(const KSubset& I);
KSubset ksubset_from_json(const json& j);

json to_json(const Profile& P);
Profile profile_from_json(const json& j);

json to_json(const ProfileRootData& d);

json to_json(const TruncatedModule& M);
TruncatedModule module_from_json(const json& j);

json to_json(const QuasiBox& b);
json to_json(const CensusEntry& e);

/// DOT rendering of a tau-orbit as a cycle of profile nodes.
std::string tube_to_dot(const TubeRow& row);

} // namespace grasscat
