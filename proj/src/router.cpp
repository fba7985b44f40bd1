#include "airways/router.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace airways {

RouteGraph::RouteGraph(const GridSpec& grid, const TrafficPatternMap& map, double k_t,
                       double epsilon)
    : grid_(grid) {
    const CostMatrix u = unimpeded_matrix(grid);
    adj_.resize(static_cast<std::size_t>(grid.cell_count()) * 6);
    for (int li = 0; li < grid.cell_count(); ++li) {
        const CellIndex c = grid.cell_from_linear(li);
        const CostMatrix cost = total_cost(u, normalized(map.at(c)), k_t, epsilon);
        for (int i = 1; i <= 6; ++i) {
            auto& out = adj_[static_cast<std::size_t>(li * 6 + i - 1)];
            for (int j = 1; j <= 6; ++j) {
                if (j != i) out.push_back({li * 6 + j - 1, cost[i - 1][j - 1]});
            }
            if (auto nbr = grid.neighbor_across(c, i)) {
                const int partner = grid.linear_index(nbr->first) * 6 + nbr->second - 1;
                out.push_back({partner, 0.0});                // coincident edge
                out.push_back({partner, cost[i - 1][i - 1]});  // U-turn re-entry
            } else {
                out.push_back({li * 6 + i - 1, cost[i - 1][i - 1]});  // border U-turn
            }
        }
    }
}

int RouteGraph::num_arcs() const {
    int n = 0;
    for (const auto& a : adj_) n += static_cast<int>(a.size());
    return n;
}

int RouteGraph::zero_arc_count() const {
    int n = 0;
    for (const auto& out : adj_)
        for (const auto& a : out)
            if (a.weight == 0.0) ++n;
    return n;
}

int RouteGraph::node_id(EdgeNode n) const {
    if (!grid_.in_bounds(n.cell) || n.edge < 1 || n.edge > 6)
        throw std::out_of_range("RouteGraph::node_id: unknown node");
    return grid_.linear_index(n.cell) * 6 + n.edge - 1;
}

EdgeNode RouteGraph::node(int id) const {
    return {grid_.cell_from_linear(id / 6), id % 6 + 1};
}

std::optional<Route> shortest_path(const RouteGraph& g, EdgeNode start, EdgeNode goal) {
    const int s = g.node_id(start);
    const int t = g.node_id(goal);
    const int n = g.num_nodes();

    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(static_cast<std::size_t>(n), kInf);
    std::vector<std::uint32_t> hops(static_cast<std::size_t>(n),
                                    std::numeric_limits<std::uint32_t>::max());
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<char> done(static_cast<std::size_t>(n), 0);

    using Key = std::tuple<double, std::uint32_t, int>;  // cost, hops, node
    std::priority_queue<Key, std::vector<Key>, std::greater<Key>> pq;
    dist[static_cast<std::size_t>(s)] = 0.0;
    hops[static_cast<std::size_t>(s)] = 0;
    pq.emplace(0.0, 0, s);

    while (!pq.empty()) {
        const auto [d, h, u] = pq.top();
        pq.pop();
        if (done[static_cast<std::size_t>(u)]) continue;
        done[static_cast<std::size_t>(u)] = 1;
        if (u == t) break;
        for (const auto& arc : g.arcs_from(u)) {
            if (arc.to == u) continue;
            const std::size_t v = static_cast<std::size_t>(arc.to);
            if (done[v]) continue;
            const double nd = d + arc.weight;
            const std::uint32_t nh = h + 1;
            bool better = false;
            if (nd < dist[v])
                better = true;
            else if (nd == dist[v]) {
                if (nh < hops[v])
                    better = true;
                else if (nh == hops[v] && u < parent[v])
                    better = true;
            }
            if (better) {
                dist[v] = nd;
                hops[v] = nh;
                parent[v] = u;
                pq.emplace(nd, nh, arc.to);
            }
        }
    }

    if (dist[static_cast<std::size_t>(t)] == kInf) return std::nullopt;

    Route route;
    route.total_cost = dist[static_cast<std::size_t>(t)];
    for (int v = t; v != -1; v = parent[static_cast<std::size_t>(v)])
        route.waypoints.push_back(g.node(v));
    std::reverse(route.waypoints.begin(), route.waypoints.end());
    return route;
}

std::optional<Route> replan(const GridSpec& grid, const TrafficPatternMap& map, double k_t,
                            double epsilon, EdgeNode current, EdgeNode goal) {
    RouteGraph g(grid, map, k_t, epsilon);
    return shortest_path(g, current, goal);
}

}  // namespace airways
