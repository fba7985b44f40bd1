#pragma once

#include <iosfwd>
#include <string>

#include "airways/scenario.hpp"

namespace airways {

// Config files are JSON with nested sections; unknown keys are errors.
// All fields are optional and default to the reference setup. See
// ScenarioConfig for units.
//
// {
//   "grid":     {"width_cells": 12, "height_cells": 12, "cell_width_mi": 2.65},
//   "traffic":  {"k_t": 0.0, "epsilon_clamp": 1e-3},
//   "conflict": {"k_r": 0.01, "k_rdot": 0.01, "activation_radius_mi": 10,
//                "max_turn_deg_s": 6},
//   "flight":   {"speed_mph": 250, "arrival_radius_mi": 0.5},
//   "sim":      {"dt_s": 1, "stagger_s": 40, "max_time_s": 0},
//   "scenario": {"n_aircraft": 20, "seed": 1, "od_mode": "opposite-sides",
//                "fixed_od": [{"origin": [x, y], "destination": [x, y]}, ...]},
//   "sweep":    {"k_t_values": [...], "n_values": [...], "seeds": [...],
//                "n_seeds": 20, "first_seed": 1}
// }
ScenarioConfig load_scenario_config(const std::string& path);
ScenarioConfig parse_scenario_config(const std::string& json_text);

SweepConfig load_sweep_config(const std::string& path);
SweepConfig parse_sweep_config(const std::string& json_text);

}  // namespace airways
