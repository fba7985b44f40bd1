#pragma once

#include <array>

#include "airways/hexgrid.hpp"
#include "airways/traffic_map.hpp"

namespace airways {

using CostMatrix = std::array<std::array<double, 6>, 6>;

// Traffic-independent transit cost between edge midpoints: pure Euclidean
// distance in miles, U-turns charged twice the cell width. Identical for
// every cell (uniform winds and weather).
CostMatrix unimpeded_matrix(const GridSpec& grid);

// Entry-wise 1 - k_t * t_hat. Edge pairs carrying more of the cell's traffic
// become cheaper; k_t = 0 ignores history entirely.
CostMatrix traffic_cost(const NormalizedTrafficMatrix& t_hat, double k_t);

// u + 1 - k_t * t_hat, entry-wise, clamped below at epsilon so arc weights
// stay positive for the shortest-path search. The raw sum can go negative
// once k_t exceeds the smallest midpoint distance plus one.
CostMatrix total_cost(const CostMatrix& u, const NormalizedTrafficMatrix& t_hat, double k_t,
                      double epsilon);

}  // namespace airways
