#pragma once

#include "airways/traffic_map.hpp"

namespace airways {

// Shannon entropy (natural log, nats) of a cell's edge-pair usage
// distribution. Zero for a virgin cell or one with a single used pair;
// bounded above by ln(36).
double cell_entropy(const TrafficMatrix& t);

struct GridEntropy {
    double total_nats = 0.0;      // sum of per-cell entropies
    double mean_cell_nats = 0.0;  // average over cells with any traffic
    int active_cells = 0;         // cells with grand sum > 0
};

GridEntropy grid_entropy(const TrafficPatternMap& map);

}  // namespace airways
