#include "airways/cost_model.hpp"

#include <algorithm>
#include <cassert>

namespace airways {

CostMatrix unimpeded_matrix(const GridSpec& grid) {
    CostMatrix u{};
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) u[i - 1][j - 1] = grid.edge_pair_distance(i, j);
    return u;
}

CostMatrix traffic_cost(const NormalizedTrafficMatrix& t_hat, double k_t) {
    assert(k_t >= 0.0);
    CostMatrix c{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) c[i][j] = 1.0 - k_t * t_hat.weights[i][j];
    return c;
}

CostMatrix total_cost(const CostMatrix& u, const NormalizedTrafficMatrix& t_hat, double k_t,
                      double epsilon) {
    assert(epsilon > 0.0);
    CostMatrix c{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            c[i][j] = std::max(epsilon, u[i][j] + 1.0 - k_t * t_hat.weights[i][j]);
    return c;
}

}  // namespace airways
