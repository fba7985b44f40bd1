#pragma once

#include <optional>
#include <vector>

#include "airways/cost_model.hpp"
#include "airways/hexgrid.hpp"
#include "airways/traffic_map.hpp"

namespace airways {

// One node per (cell, edge) pair. Coincident physical edges of neighboring
// cells are two distinct nodes joined by zero-weight arcs.
struct EdgeNode {
    CellIndex cell;
    int edge = 1;
    friend auto operator<=>(const EdgeNode&, const EdgeNode&) = default;
};

struct Route {
    std::vector<EdgeNode> waypoints;
    double total_cost = 0.0;
};

// Weighted graph over the hexagon-edge nodes. Arcs come in three kinds:
//   (cell,i) -> (cell,j), i != j   weight c_ij of that cell  (transit)
//   (cell,e) -> (nbr, e')          weight 0                   (coincident edge)
//   (cell,e) -> (nbr, e')          weight c_ee                (U-turn back out)
// A U-turn at the outer border is a self-loop and never improves a path.
class RouteGraph {
public:
    RouteGraph(const GridSpec& grid, const TrafficPatternMap& map, double k_t, double epsilon);

    const GridSpec& grid() const { return grid_; }
    int num_nodes() const { return static_cast<int>(adj_.size()); }
    int num_arcs() const;
    int zero_arc_count() const;

    int node_id(EdgeNode n) const;  // throws std::out_of_range off-grid
    EdgeNode node(int id) const;

    struct Arc {
        int to;
        double weight;
    };
    const std::vector<Arc>& arcs_from(int id) const { return adj_[static_cast<std::size_t>(id)]; }

private:
    GridSpec grid_;
    std::vector<std::vector<Arc>> adj_;
};

// Dijkstra with deterministic tie-breaking: minimal cost, then fewest
// waypoints, then the smallest predecessor node id. Returns nullopt only if
// the goal is unreachable.
std::optional<Route> shortest_path(const RouteGraph& g, EdgeNode start, EdgeNode goal);

// Fresh graph snapshot, then shortest_path.
std::optional<Route> replan(const GridSpec& grid, const TrafficPatternMap& map, double k_t,
                            double epsilon, EdgeNode current, EdgeNode goal);

}  // namespace airways
