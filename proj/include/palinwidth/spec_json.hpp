#pragma once

#include <json.hpp>

#include "palinwidth/group.hpp"
#include "palinwidth/presentations.hpp"

namespace palinwidth {

GroupSpec group_spec_from_json(const nlohmann::json& j);
/// Strings are parsed as words in g; integers are taken as values of
/// integer and cyclic groups.
Element element_from_json(const Group& g, const nlohmann::json& j);
SubgroupSpec subgroup_from_json(const Group& g, const nlohmann::json& j);
IsoSpec iso_from_json(const Group& from, const Group& to, const nlohmann::json& j);

/// HNN when the object has "base", amalgam when it has "factorA".
Presentation presentation_from_json(const nlohmann::json& j);

}  // namespace palinwidth
