// Figure presets as data: each maps a name to the exact parameter assignments
// of the corresponding plotted configuration.
#pragma once

#include <string>
#include <vector>

#include "cli/config.hpp"

namespace cli {

struct Preset {
    std::string name;
    std::string command;  // which subcommand the preset drives
    std::string description;
    std::vector<std::pair<std::string, std::string>> assignments;
};

const std::vector<Preset>& presets();
const Preset* find_preset(const std::string& name);
void apply_preset(Config& cfg, const Preset& p);

}  // namespace cli
