#pragma once

// Input schema: {"n": int, "configs": [[[int,...],...],...], "labels": [...]?}
// configs holds n blocks, each an ordered list of n-dimensional integer
// points. All exact integers are serialized as strings in reports.

#include "mdisc/cayley.hpp"
#include "mdisc/point_config.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace mdisc {

std::vector<PointConfig> parse_configs(const nlohmann::json& doc);
std::vector<PointConfig> load_configs(const std::string& path);

nlohmann::json configs_to_json(const std::vector<PointConfig>& configs);

}  // namespace mdisc
