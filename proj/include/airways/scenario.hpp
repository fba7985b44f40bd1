#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "airways/sim.hpp"

namespace airways {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class OdMode { opposite_sides, fixed_list };

struct OdPair {
    Point2D origin;
    Point2D destination;
};

struct ScenarioConfig {
    GridSpec grid{};  // 12 x 12 cells, 2.65 mi across flats
    int n_aircraft = 20;
    double k_t = 0.0;
    double k_r = 0.01;
    double k_rdot = 0.01;
    double activation_radius_mi = 10.0;
    double speed_mph = 250.0;
    double dt_s = 1.0;
    double stagger_s = 40.0;
    std::uint64_t seed = 1;
    double epsilon_clamp = 1e-3;
    double max_turn_deg_s = 6.0;
    double arrival_radius_mi = 0.5;
    double max_time_s = 0.0;  // 0 = derived from grid size and fleet
    OdMode od_mode = OdMode::opposite_sides;
    std::vector<OdPair> fixed_od;  // used when od_mode == fixed_list

    double speed_mi_s() const { return speed_mph / 3600.0; }
    SimParams sim_params() const;
    void validate() const;  // throws ConfigError
};

// Seeded scenario: aircraft i enters at i * stagger_s. In opposite-sides mode
// origins are drawn uniformly inside a one-cell-deep band on the left or
// right side of the grid (direction alternating with aircraft index) and
// destinations in the band on the far side.
World generate_scenario(const ScenarioConfig& cfg);

struct SweepConfig {
    ScenarioConfig base;
    std::vector<double> k_t_values{0, 1, 2, 3, 4, 5};
    std::vector<int> n_values{5, 10, 15, 20, 25, 30, 35, 40, 45, 50,
                              55, 60, 65, 70, 75, 80, 85, 90, 95, 100};
    std::vector<std::uint64_t> seeds;  // same seed list for every k_t value

    static std::vector<std::uint64_t> default_seeds(int count, std::uint64_t first = 1);
};

struct SweepResultRow {
    double k_t = 0.0;
    int n_aircraft = 0;
    std::uint64_t seed = 0;
    double mean_travel_time_s = 0.0;
    double grid_entropy_nats = 0.0;
    double mean_cell_entropy_nats = 0.0;
    int active_cells = 0;
    double min_separation_mi = 0.0;
    int stragglers = 0;
    bool failed = false;
    std::string error;
};

// One row per (k_t, N, seed), in deterministic key order regardless of the
// degree of parallelism. Failures of individual runs are recorded per row.
std::vector<SweepResultRow> run_sweep(const SweepConfig& sw, int parallelism);

struct SummaryRow {
    double k_t = 0.0;
    int n_aircraft = 0;
    int runs = 0;
    double mean_travel_time_mean = 0.0, mean_travel_time_sd = 0.0;
    double grid_entropy_mean = 0.0, grid_entropy_sd = 0.0;
    double mean_cell_entropy_mean = 0.0, mean_cell_entropy_sd = 0.0;
    double active_cells_mean = 0.0, active_cells_sd = 0.0;
    double min_separation_mean = 0.0, min_separation_sd = 0.0;
    double stragglers_mean = 0.0, stragglers_sd = 0.0;
};

// Mean and population standard deviation per metric, keyed by (k_t, N).
// Throws ConfigError on empty input. Failed rows are skipped.
std::vector<SummaryRow> summarize(const std::vector<SweepResultRow>& rows);

}  // namespace airways
