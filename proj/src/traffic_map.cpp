#include "airways/traffic_map.hpp"

#include <cassert>
#include <stdexcept>

namespace airways {

NormalizedTrafficMatrix normalized(const TrafficMatrix& t) {
    NormalizedTrafficMatrix n;
    const std::uint64_t sum = t.grand_sum();
    if (sum == 0) return n;  // virgin cell: all-zero weights
    const double inv = 1.0 / static_cast<double>(sum);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            n.weights[i][j] = static_cast<double>(t.counts[i][j]) * inv;
    return n;
}

void TrafficPatternMap::record_traversal(CellIndex c, int entry, int exit) {
    assert(entry >= 1 && entry <= 6 && exit >= 1 && exit <= 6);
    if (!grid_.in_bounds(c)) throw std::out_of_range("record_traversal: cell outside grid");
    cells_[static_cast<std::size_t>(grid_.linear_index(c))].record(entry, exit);
}

const TrafficMatrix& TrafficPatternMap::at(CellIndex c) const {
    if (!grid_.in_bounds(c)) throw std::out_of_range("TrafficPatternMap::at: cell outside grid");
    return cells_[static_cast<std::size_t>(grid_.linear_index(c))];
}

std::uint64_t TrafficPatternMap::total_traversals() const {
    std::uint64_t s = 0;
    for (const auto& m : cells_) s += m.grand_sum();
    return s;
}

}  // namespace airways
