#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "airways/conflict.hpp"
#include "airways/hexgrid.hpp"
#include "airways/router.hpp"
#include "airways/traffic_map.hpp"

namespace airways {

enum class AircraftStatus { pending, active, arrived };

// A guidance target: an edge midpoint along the planned route (consumed when
// reached or when the aircraft crosses into the cell on the far side), or the
// destination point itself.
struct GuidanceTarget {
    Point2D point;
    std::optional<CellIndex> far_cell;
};

struct AircraftState {
    int id = 0;
    Point2D pos;
    double heading = 0.0;  // radians CCW from east
    double speed = 0.0;    // miles/s, constant for the aircraft's lifetime
    Point2D origin;
    Point2D destination;
    double entry_time = 0.0;  // seconds
    AircraftStatus status = AircraftStatus::pending;

    CellIndex cell{};
    int entry_edge = 0;  // 0 = no entry edge yet (spawn cell)
    Route route;
    std::vector<GuidanceTarget> targets;
    std::size_t target_index = 0;

    double cumulative_heading_change = 0.0;  // radians, sum of |per-step changes|
    double travel_time = std::numeric_limits<double>::quiet_NaN();  // set on arrival
    std::vector<CellIndex> visited_cells;
};

struct SimParams {
    double k_t = 0.0;
    double epsilon_clamp = 1e-3;
    RepulsionParams repulsion{};
    double max_turn = 6.0 * M_PI / 180.0;  // rad/s
    double dt = 1.0;                       // seconds
    double arrival_radius = 0.5;           // miles
    double waypoint_radius = 0.25;         // miles
    double entropy_sample_s = 40.0;        // timeline sampling period
};

struct RunMetrics {
    std::vector<double> travel_times;  // per aircraft, NaN for non-arrived
    std::vector<std::pair<double, double>> entropy_timeline;  // (clock, grid nats)
    double grid_entropy_nats = 0.0;
    double mean_cell_entropy_nats = 0.0;
    int active_cells = 0;
    double min_separation_mi = std::numeric_limits<double>::infinity();
    int stragglers = 0;
    int anomalies = 0;

    double mean_travel_time() const;
};

// The discrete-time world. Within a step, aircraft are updated strictly
// sequentially in fleet order: cell-entry bookkeeping and replanning, then
// the heading update (planner pull plus repulsion), then motion and arrival.
// Replans within one step all read the traffic map as it stood when the step
// began.
class World {
public:
    World(const GridSpec& grid, const SimParams& params);

    // Origin and destination must lie inside the grid; throws otherwise.
    // Fleet order (and hence update order) is the insertion order.
    int add_aircraft(Point2D origin, Point2D destination, double speed, double entry_time);

    void step();
    RunMetrics run(double max_time_s);
    double default_max_time() const;

    double clock() const { return clock_; }
    const GridSpec& grid() const { return grid_; }
    const SimParams& params() const { return params_; }
    const TrafficPatternMap& traffic() const { return traffic_; }
    const std::vector<AircraftState>& fleet() const { return fleet_; }
    double min_separation() const { return min_separation_; }
    int anomalies() const { return anomalies_; }

    // Invoked at the end of every step (after the clock advances); used for
    // trajectory tracing.
    void set_step_observer(std::function<void(const World&)> cb) { observer_ = std::move(cb); }

private:
    const RouteGraph& step_graph();
    EdgeNode nearest_edge_node(CellIndex cell, Point2D p) const;
    void plan(AircraftState& a, EdgeNode start, bool skip_start_midpoint);
    void activate(AircraftState& a);
    void handle_cell_change(AircraftState& a, CellIndex newcell);
    void advance_targets(AircraftState& a);
    Point2D current_target(const AircraftState& a) const;

    GridSpec grid_;
    SimParams params_;
    TrafficPatternMap traffic_;
    TrafficPatternMap traffic_snapshot_;
    std::optional<RouteGraph> graph_cache_;
    std::vector<AircraftState> fleet_;
    double clock_ = 0.0;
    double min_separation_ = std::numeric_limits<double>::infinity();
    int anomalies_ = 0;
    std::function<void(const World&)> observer_;
};

double wrap_angle(double a);  // to (-pi, pi]

}  // namespace airways
