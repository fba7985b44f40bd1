#include "airways/hexgrid.hpp"

#include <array>
#include <cassert>
#include <cstdlib>

namespace airways {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

// Axial step across edge e (see the numbering in hexgrid.hpp).
constexpr std::array<std::array<int, 2>, 6> kEdgeStep = {{
    {+1, 0},   // 1: E
    {0, +1},   // 2: NE
    {-1, +1},  // 3: NW
    {-1, 0},   // 4: W
    {0, -1},   // 5: SW
    {+1, -1},  // 6: SE
}};

int offset_col(CellIndex c) {
    // odd-r offset; rows are non-negative inside the grid.
    return c.q + (c.r - (c.r & 1)) / 2;
}

}  // namespace

bool GridSpec::in_bounds(CellIndex c) const {
    if (c.r < 0 || c.r >= height_cells) return false;
    const int col = offset_col(c);
    return col >= 0 && col < width_cells;
}

int GridSpec::linear_index(CellIndex c) const {
    assert(in_bounds(c));
    return c.r * width_cells + offset_col(c);
}

CellIndex GridSpec::cell_from_linear(int idx) const {
    const int r = idx / width_cells;
    const int col = idx % width_cells;
    return {col - (r - (r & 1)) / 2, r};
}

Point2D GridSpec::center(CellIndex c) const {
    return {cell_width * (c.q + 0.5 * c.r), cell_width * (kSqrt3 / 2.0) * c.r};
}

Point2D GridSpec::edge_midpoint(CellIndex c, int edge) const {
    assert(edge >= 1 && edge <= 6);
    const double theta = (edge - 1) * (M_PI / 3.0);
    const Point2D ctr = center(c);
    return {ctr.x + apothem() * std::cos(theta), ctr.y + apothem() * std::sin(theta)};
}

std::optional<CellIndex> GridSpec::locate(Point2D p) const {
    // Fractional axial coordinates, then cube rounding.
    const double rf = p.y / (cell_width * kSqrt3 / 2.0);
    const double qf = p.x / cell_width - 0.5 * rf;
    const double sf = -qf - rf;

    double q = std::round(qf), r = std::round(rf), s = std::round(sf);
    const double dq = std::abs(q - qf), dr = std::abs(r - rf), ds = std::abs(s - sf);
    if (dq > dr && dq > ds)
        q = -r - s;
    else if (dr > ds)
        r = -q - s;

    CellIndex best{static_cast<int>(q), static_cast<int>(r)};

    // Boundary points: among equidistant candidate centers pick the
    // lexicographically smallest (q, r).
    const double tol = 1e-9 * cell_width;
    double best_d = distance(p, center(best));
    for (const auto& step : kEdgeStep) {
        CellIndex cand{best.q + step[0], best.r + step[1]};
        const double d = distance(p, center(cand));
        if (d < best_d - tol || (d < best_d + tol && cand < best)) {
            best = cand;
            best_d = d;
        }
    }
    if (!in_bounds(best)) return std::nullopt;
    return best;
}

std::optional<std::pair<CellIndex, int>> GridSpec::neighbor_across(CellIndex c, int edge) const {
    assert(edge >= 1 && edge <= 6);
    const auto& step = kEdgeStep[edge - 1];
    CellIndex n{c.q + step[0], c.r + step[1]};
    if (!in_bounds(n)) return std::nullopt;
    return std::make_pair(n, opposite_edge(edge));
}

std::optional<int> GridSpec::shared_edge(CellIndex from, CellIndex to) const {
    for (int e = 1; e <= 6; ++e) {
        const auto& step = kEdgeStep[e - 1];
        if (from.q + step[0] == to.q && from.r + step[1] == to.r) return e;
    }
    return std::nullopt;
}

double GridSpec::edge_pair_distance(int i, int j) const {
    assert(i >= 1 && i <= 6 && j >= 1 && j <= 6);
    if (i == j) return 2.0 * cell_width;
    const double dtheta = std::abs(i - j) * (M_PI / 3.0);
    return 2.0 * apothem() * std::sin(std::min(dtheta, 2.0 * M_PI - dtheta) / 2.0);
}

void GridSpec::bounding_box(Point2D& lo, Point2D& hi) const {
    const double rr = circumradius();
    lo = {-0.5 * cell_width, -rr};
    hi = {cell_width * width_cells, cell_width * (kSqrt3 / 2.0) * (height_cells - 1) + rr};
}

}  // namespace airways
