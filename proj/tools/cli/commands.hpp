#pragma once

#include "cli/config.hpp"

namespace cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitForbidden = 3;
inline constexpr int kExitNonConvergence = 4;

int cmd_trajectory(const Config& cfg);
int cmd_floquet_map(const Config& cfg);
int cmd_quasimomentum(const Config& cfg);
int cmd_compton(const Config& cfg);
int cmd_presets_list();

}  // namespace cli
