#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "airways/hexgrid.hpp"

namespace airways {

// Per-cell 6x6 traversal counts: counts[i-1][j-1] is the number of completed
// crossings that entered the cell at edge i and exited at edge j. Diagonal
// entries are U-turns.
struct TrafficMatrix {
    std::array<std::array<std::uint64_t, 6>, 6> counts{};

    std::uint64_t grand_sum() const {
        std::uint64_t s = 0;
        for (const auto& row : counts)
            for (auto v : row) s += v;
        return s;
    }

    void record(int entry, int exit) { ++counts[entry - 1][exit - 1]; }

    std::uint64_t at(int entry, int exit) const { return counts[entry - 1][exit - 1]; }
};

// Entry-pair usage frequencies; entries sum to 1 unless the source matrix is
// all zero, in which case the whole matrix stays zero.
struct NormalizedTrafficMatrix {
    std::array<std::array<double, 6>, 6> weights{};

    double at(int entry, int exit) const { return weights[entry - 1][exit - 1]; }
};

NormalizedTrafficMatrix normalized(const TrafficMatrix& t);

// One traffic matrix per grid cell.
class TrafficPatternMap {
public:
    TrafficPatternMap() = default;
    explicit TrafficPatternMap(const GridSpec& grid)
        : grid_(grid), cells_(static_cast<std::size_t>(grid.cell_count())) {}

    const GridSpec& grid() const { return grid_; }

    // Throws std::out_of_range on a cell outside the grid.
    void record_traversal(CellIndex c, int entry, int exit);

    const TrafficMatrix& at(CellIndex c) const;
    const std::vector<TrafficMatrix>& cells() const { return cells_; }

    std::uint64_t total_traversals() const;

private:
    GridSpec grid_;
    std::vector<TrafficMatrix> cells_;
};

}  // namespace airways
