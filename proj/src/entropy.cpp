#include "airways/entropy.hpp"

#include <cmath>

namespace airways {

double cell_entropy(const TrafficMatrix& t) {
    const NormalizedTrafficMatrix n = normalized(t);
    double h = 0.0;
    for (const auto& row : n.weights)
        for (double p : row)
            if (p > 0.0) h -= p * std::log(p);  // 0 ln 0 = 0
    return h;
}

GridEntropy grid_entropy(const TrafficPatternMap& map) {
    GridEntropy g;
    for (const auto& t : map.cells()) {
        if (t.grand_sum() == 0) continue;
        g.total_nats += cell_entropy(t);
        ++g.active_cells;
    }
    g.mean_cell_nats = g.active_cells > 0 ? g.total_nats / g.active_cells : 0.0;
    return g;
}

}  // namespace airways
