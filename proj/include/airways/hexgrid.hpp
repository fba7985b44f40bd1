#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <utility>

namespace airways {

struct Point2D {
    double x = 0.0;  // miles east
    double y = 0.0;  // miles north
};

inline Point2D operator+(Point2D a, Point2D b) { return {a.x + b.x, a.y + b.y}; }
inline Point2D operator-(Point2D a, Point2D b) { return {a.x - b.x, a.y - b.y}; }
inline Point2D operator*(double s, Point2D p) { return {s * p.x, s * p.y}; }
inline double dot(Point2D a, Point2D b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2D a, Point2D b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2D p) { return std::hypot(p.x, p.y); }
inline double distance(Point2D a, Point2D b) { return norm(a - b); }

// Axial hexagon address. r is the row (0 at the bottom, increasing north),
// q runs along the row axis.
struct CellIndex {
    int q = 0;
    int r = 0;
    friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

// Hexagon edges are numbered 1..6 with the same orientation in every cell:
// edge e faces direction (e-1)*60 degrees from east, counterclockwise.
//   1=E, 2=NE, 3=NW, 4=W, 5=SW, 6=SE
constexpr int kEdgesPerCell = 6;

inline int opposite_edge(int e) { return (e + 2) % 6 + 1; }

// Regular pointy-top hexagonal tessellation over a rectangular footprint of
// width_cells x height_cells cells (odd-r offset rows). cell_width is the
// across-flats width: the distance between midpoints of opposite edges.
struct GridSpec {
    int width_cells = 12;
    int height_cells = 12;
    double cell_width = 2.65;  // miles

    double apothem() const { return 0.5 * cell_width; }
    double circumradius() const { return cell_width / std::sqrt(3.0); }
    int cell_count() const { return width_cells * height_cells; }

    bool in_bounds(CellIndex c) const;

    // Dense index in [0, cell_count) for in-bounds cells, row-major.
    int linear_index(CellIndex c) const;
    CellIndex cell_from_linear(int idx) const;

    Point2D center(CellIndex c) const;
    Point2D edge_midpoint(CellIndex c, int edge) const;

    // Cell containing p, or nullopt outside the tiled region. Points that are
    // equidistant from several cell centers (edge/vertex points) go to the
    // lexicographically smallest (q, r).
    std::optional<CellIndex> locate(Point2D p) const;

    // Adjacent cell across edge e together with the index of the same
    // physical edge in the neighbor's numbering; nullopt on the outer border.
    std::optional<std::pair<CellIndex, int>> neighbor_across(CellIndex c, int edge) const;

    // Shared edge e of `from` such that neighbor_across(from, e) is `to`.
    std::optional<int> shared_edge(CellIndex from, CellIndex to) const;

    // Euclidean distance between the midpoints of edges i and j of one cell;
    // a U-turn (i == j) is charged twice the cell width.
    double edge_pair_distance(int i, int j) const;

    // Axis-aligned bounding box of the tiled region.
    void bounding_box(Point2D& lo, Point2D& hi) const;
};

}  // namespace airways
