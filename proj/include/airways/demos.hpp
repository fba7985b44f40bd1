#pragma once

#include "airways/scenario.hpp"

namespace airways {

// Convoy-following demo: four aircraft fly the same bottom-left to top-right
// diagonal at 40 s spacing, a fifth "ownship" enters last on a parallel
// diagonal offset about 4 miles. With k_t = 0 the ownship ignores the convoy
// corridor; with k_t = 3 the accumulated traffic pulls it onto the corridor.
ScenarioConfig convoy_demo_config(double k_t);
constexpr int kConvoySize = 4;  // ownship is aircraft index 4

// Head-on demo: two aircraft enter simultaneously from the left and right
// mid-grid edges aimed straight at each other's origins.
ScenarioConfig headon_demo_config();

}  // namespace airways
