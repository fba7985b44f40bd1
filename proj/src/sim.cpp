#include "airways/sim.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "airways/entropy.hpp"

namespace airways {

double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * M_PI);
    if (a > M_PI) a -= 2.0 * M_PI;
    if (a <= -M_PI) a += 2.0 * M_PI;
    return a;
}

double RunMetrics::mean_travel_time() const {
    double sum = 0.0;
    int n = 0;
    for (double t : travel_times)
        if (!std::isnan(t)) {
            sum += t;
            ++n;
        }
    return n > 0 ? sum / n : std::numeric_limits<double>::quiet_NaN();
}

World::World(const GridSpec& grid, const SimParams& params)
    : grid_(grid), params_(params), traffic_(grid), traffic_snapshot_(grid) {}

int World::add_aircraft(Point2D origin, Point2D destination, double speed, double entry_time) {
    if (!grid_.locate(origin) || !grid_.locate(destination))
        throw std::invalid_argument("add_aircraft: origin/destination outside the grid");
    if (speed <= 0.0) throw std::invalid_argument("add_aircraft: speed must be positive");
    AircraftState a;
    a.id = static_cast<int>(fleet_.size());
    a.pos = origin;
    a.origin = origin;
    a.destination = destination;
    a.speed = speed;
    a.entry_time = entry_time;
    fleet_.push_back(std::move(a));
    return fleet_.back().id;
}

const RouteGraph& World::step_graph() {
    if (!graph_cache_)
        graph_cache_.emplace(grid_, traffic_snapshot_, params_.k_t, params_.epsilon_clamp);
    return *graph_cache_;
}

EdgeNode World::nearest_edge_node(CellIndex cell, Point2D p) const {
    int best = 1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int e = 1; e <= 6; ++e) {
        const double d = distance(p, grid_.edge_midpoint(cell, e));
        if (d < best_d) {
            best_d = d;
            best = e;
        }
    }
    return {cell, best};
}

void World::plan(AircraftState& a, EdgeNode start, bool skip_start_midpoint) {
    const CellIndex dest_cell = *grid_.locate(a.destination);
    a.targets.clear();
    a.target_index = 0;
    a.route = Route{};

    if (!(start.cell == dest_cell)) {
        const EdgeNode goal = nearest_edge_node(dest_cell, a.destination);
        auto route = shortest_path(step_graph(), start, goal);
        assert(route);  // the grid graph is connected
        a.route = std::move(*route);

        const Point2D start_mid = grid_.edge_midpoint(start.cell, start.edge);
        Point2D prev{std::numeric_limits<double>::quiet_NaN(), 0.0};
        for (const auto& wp : a.route.waypoints) {
            const Point2D mid = grid_.edge_midpoint(wp.cell, wp.edge);
            if (skip_start_midpoint && distance(mid, start_mid) < 1e-9) continue;
            if (!std::isnan(prev.x) && distance(mid, prev) < 1e-9) continue;  // zero-arc twin
            std::optional<CellIndex> far;
            if (auto nbr = grid_.neighbor_across(wp.cell, wp.edge)) far = nbr->first;
            a.targets.push_back({mid, far});
            prev = mid;
        }
    }
    a.targets.push_back({a.destination, std::nullopt});
}

void World::activate(AircraftState& a) {
    a.status = AircraftStatus::active;
    a.pos = a.origin;
    a.cell = *grid_.locate(a.origin);
    a.entry_edge = 0;
    a.visited_cells.push_back(a.cell);
    // Plan from the nearest edge node but head straight for the first real
    // waypoint; detouring back to the spawn cell's own edge midpoint would be
    // wasted path (and can point off-grid for border spawns).
    plan(a, nearest_edge_node(a.cell, a.origin), /*skip_start_midpoint=*/true);
    a.heading = std::atan2(current_target(a).y - a.pos.y, current_target(a).x - a.pos.x);
}

void World::handle_cell_change(AircraftState& a, CellIndex newcell) {
    const auto exit_edge = grid_.shared_edge(a.cell, newcell);
    if (exit_edge) {
        if (a.entry_edge != 0) traffic_.record_traversal(a.cell, a.entry_edge, *exit_edge);
        a.entry_edge = opposite_edge(*exit_edge);
        a.cell = newcell;
        a.visited_cells.push_back(newcell);
        plan(a, EdgeNode{newcell, a.entry_edge}, /*skip_start_midpoint=*/true);
    } else {
        // Crossed through a vertex into a non-edge-adjacent cell. No complete
        // edge-to-edge traversal to record; replan from the nearest edge.
        a.entry_edge = 0;
        a.cell = newcell;
        a.visited_cells.push_back(newcell);
        plan(a, nearest_edge_node(newcell, a.pos), /*skip_start_midpoint=*/true);
    }
}

void World::advance_targets(AircraftState& a) {
    while (a.target_index + 1 < a.targets.size()) {
        const GuidanceTarget& t = a.targets[a.target_index];
        const bool reached = distance(a.pos, t.point) <= params_.waypoint_radius;
        const bool crossed = t.far_cell && a.cell == *t.far_cell;
        if (!reached && !crossed) break;
        ++a.target_index;
    }
}

Point2D World::current_target(const AircraftState& a) const {
    return a.targets[std::min(a.target_index, a.targets.size() - 1)].point;
}

void World::step() {
    traffic_snapshot_ = traffic_;
    graph_cache_.reset();

    for (auto& a : fleet_)
        if (a.status == AircraftStatus::pending && a.entry_time <= clock_) activate(a);

    for (auto& a : fleet_) {
        if (a.status != AircraftStatus::active) continue;

        const auto located = grid_.locate(a.pos);
        if (located && !(*located == a.cell)) handle_cell_change(a, *located);
        advance_targets(a);

        const Point2D tgt = current_target(a);
        const double desired = std::atan2(tgt.y - a.pos.y, tgt.x - a.pos.x);
        const double limit = params_.max_turn * params_.dt;
        double plan_turn = std::clamp(wrap_angle(desired - a.heading), -limit, limit);

        // Go-around: a destination lying inside the minimum turning circle can
        // never be captured and the aircraft would orbit it forever. When the
        // final target is close but far off the nose, hold the heading until
        // there is room to line up again.
        if (a.target_index + 1 == a.targets.size()) {
            const double turn_radius = a.speed / params_.max_turn;
            if (distance(a.pos, tgt) < 3.0 * turn_radius &&
                std::abs(wrap_angle(desired - a.heading)) > M_PI / 3.0)
                plan_turn = 0.0;
        }

        std::vector<Mover> others;
        others.reserve(fleet_.size());
        const Point2D own_vel{a.speed * std::cos(a.heading), a.speed * std::sin(a.heading)};
        for (const auto& b : fleet_)
            if (b.id != a.id && b.status == AircraftStatus::active)
                others.push_back(
                    {b.pos, {b.speed * std::cos(b.heading), b.speed * std::sin(b.heading)}});
        const double rep_turn = total_heading_deviation({a.pos, own_vel}, others,
                                                        params_.repulsion, params_.dt,
                                                        params_.max_turn);

        const double dpsi = plan_turn + rep_turn;
        a.heading = wrap_angle(a.heading + dpsi);
        a.cumulative_heading_change += std::abs(dpsi);

        const Point2D next{a.pos.x + a.speed * params_.dt * std::cos(a.heading),
                           a.pos.y + a.speed * params_.dt * std::sin(a.heading)};
        if (grid_.locate(next)) {
            a.pos = next;
        } else {
            // Clamp back inside and bounce; only reachable with a destination
            // close to the border plus repulsion push.
            a.heading = wrap_angle(a.heading + M_PI);
            ++anomalies_;
        }

        if (distance(a.pos, a.destination) <= params_.arrival_radius) {
            a.status = AircraftStatus::arrived;
            a.travel_time = clock_ + params_.dt - a.entry_time;
        }
    }

    for (std::size_t i = 0; i < fleet_.size(); ++i) {
        if (fleet_[i].status != AircraftStatus::active) continue;
        for (std::size_t j = i + 1; j < fleet_.size(); ++j) {
            if (fleet_[j].status != AircraftStatus::active) continue;
            min_separation_ = std::min(min_separation_, distance(fleet_[i].pos, fleet_[j].pos));
        }
    }

    clock_ += params_.dt;
    if (observer_) observer_(*this);
}

double World::default_max_time() const {
    Point2D lo, hi;
    grid_.bounding_box(lo, hi);
    const double diag = distance(lo, hi);
    double min_speed = std::numeric_limits<double>::infinity();
    double max_entry = 0.0;
    for (const auto& a : fleet_) {
        min_speed = std::min(min_speed, a.speed);
        max_entry = std::max(max_entry, a.entry_time);
    }
    if (fleet_.empty()) return 0.0;
    return 4.0 * diag / min_speed + max_entry;
}

RunMetrics World::run(double max_time_s) {
    RunMetrics m;
    const int sample_steps =
        std::max(1, static_cast<int>(std::lround(params_.entropy_sample_s / params_.dt)));
    int step_count = 0;

    auto all_done = [&] {
        return std::all_of(fleet_.begin(), fleet_.end(),
                           [](const AircraftState& a) { return a.status == AircraftStatus::arrived; });
    };

    while (!fleet_.empty() && !all_done() && clock_ < max_time_s) {
        if (step_count % sample_steps == 0)
            m.entropy_timeline.emplace_back(clock_, grid_entropy(traffic_).total_nats);
        step();
        ++step_count;
    }

    const GridEntropy ge = grid_entropy(traffic_);
    m.entropy_timeline.emplace_back(clock_, ge.total_nats);
    m.grid_entropy_nats = ge.total_nats;
    m.mean_cell_entropy_nats = ge.mean_cell_nats;
    m.active_cells = ge.active_cells;
    m.min_separation_mi = min_separation_;
    m.anomalies = anomalies_;
    m.travel_times.reserve(fleet_.size());
    for (const auto& a : fleet_) {
        m.travel_times.push_back(a.travel_time);
        if (a.status != AircraftStatus::arrived) ++m.stragglers;
    }
    return m;
}

}  // namespace airways
