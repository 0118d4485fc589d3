#pragma once

#include <string>
#include <vector>

#include "shrink/scenario_file.hpp"

namespace shrink {

struct Preset {
    std::string name;
    std::string description;
};

/// Catalog of built-in scenarios, in listing order.
const std::vector<Preset>& preset_catalog();

/// Builds the named preset; throws std::invalid_argument for unknown names.
ParsedScenario make_preset(const std::string& name);

}  // namespace shrink
