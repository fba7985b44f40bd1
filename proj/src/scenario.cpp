#include "airways/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <thread>

#include "airways/rng.hpp"

namespace airways {

SimParams ScenarioConfig::sim_params() const {
    SimParams p;
    p.k_t = k_t;
    p.epsilon_clamp = epsilon_clamp;
    p.repulsion = {k_r, k_rdot, activation_radius_mi};
    p.max_turn = max_turn_deg_s * M_PI / 180.0;
    p.dt = dt_s;
    p.arrival_radius = arrival_radius_mi;
    return p;
}

void ScenarioConfig::validate() const {
    auto require = [](bool ok, const char* msg) {
        if (!ok) throw ConfigError(msg);
    };
    require(grid.width_cells > 0 && grid.height_cells > 0, "grid dimensions must be positive");
    require(grid.cell_width > 0, "cell_width must be positive");
    require(n_aircraft >= 0, "n_aircraft must be non-negative");
    require(k_t >= 0, "k_t must be non-negative");
    require(k_r >= 0 && k_rdot >= 0, "repulsion gains must be non-negative");
    require(activation_radius_mi >= 0, "activation_radius must be non-negative");
    require(speed_mph > 0, "speed must be positive");
    require(dt_s > 0, "dt must be positive");
    require(stagger_s >= 0, "stagger must be non-negative");
    require(epsilon_clamp > 0, "epsilon_clamp must be positive");
    require(max_turn_deg_s > 0, "max_turn must be positive");
    require(arrival_radius_mi > 0, "arrival_radius must be positive");
    if (od_mode == OdMode::opposite_sides)
        require(grid.width_cells >= 3, "opposite-sides mode needs a grid at least 3 cells wide");
    if (od_mode == OdMode::fixed_list)
        require(static_cast<int>(fixed_od.size()) >= n_aircraft,
                "fixed-list mode needs an od pair per aircraft");
}

namespace {

// Uniform point inside the one-cell-deep band of offset column `col`.
Point2D draw_in_column(const GridSpec& grid, int col, SplitMix64& rng) {
    Point2D lo, hi;
    grid.bounding_box(lo, hi);
    const double x_lo = lo.x + col * grid.cell_width;
    const double x_hi = x_lo + 1.5 * grid.cell_width;  // odd rows shift half a cell
    for (;;) {
        const Point2D p{rng.uniform(x_lo, x_hi), rng.uniform(lo.y, hi.y)};
        const auto c = grid.locate(p);
        if (!c) continue;
        const int pc = c->q + (c->r - (c->r & 1)) / 2;
        if (pc == col) return p;
    }
}

}  // namespace

World generate_scenario(const ScenarioConfig& cfg) {
    cfg.validate();
    World world(cfg.grid, cfg.sim_params());
    SplitMix64 rng(cfg.seed);
    for (int i = 0; i < cfg.n_aircraft; ++i) {
        Point2D origin, dest;
        if (cfg.od_mode == OdMode::fixed_list) {
            origin = cfg.fixed_od[static_cast<std::size_t>(i)].origin;
            dest = cfg.fixed_od[static_cast<std::size_t>(i)].destination;
        } else {
            const bool eastbound = (i % 2 == 0);
            const int o_col = eastbound ? 0 : cfg.grid.width_cells - 1;
            const int d_col = eastbound ? cfg.grid.width_cells - 1 : 0;
            origin = draw_in_column(cfg.grid, o_col, rng);
            dest = draw_in_column(cfg.grid, d_col, rng);
        }
        world.add_aircraft(origin, dest, cfg.speed_mi_s(), i * cfg.stagger_s);
    }
    return world;
}

std::vector<std::uint64_t> SweepConfig::default_seeds(int count, std::uint64_t first) {
    std::vector<std::uint64_t> s(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) s[static_cast<std::size_t>(i)] = first + static_cast<std::uint64_t>(i);
    return s;
}

std::vector<SweepResultRow> run_sweep(const SweepConfig& sw, int parallelism) {
    struct Task {
        double k_t;
        int n;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (double k_t : sw.k_t_values)
        for (int n : sw.n_values)
            for (std::uint64_t seed : sw.seeds) tasks.push_back({k_t, n, seed});

    std::vector<SweepResultRow> rows(tasks.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& t = tasks[i];
            SweepResultRow& row = rows[i];
            row.k_t = t.k_t;
            row.n_aircraft = t.n;
            row.seed = t.seed;
            try {
                ScenarioConfig cfg = sw.base;
                cfg.k_t = t.k_t;
                cfg.n_aircraft = t.n;
                cfg.seed = t.seed;
                World world = generate_scenario(cfg);
                const double max_time =
                    cfg.max_time_s > 0 ? cfg.max_time_s : world.default_max_time();
                const RunMetrics m = world.run(max_time);
                row.mean_travel_time_s = m.mean_travel_time();
                row.grid_entropy_nats = m.grid_entropy_nats;
                row.mean_cell_entropy_nats = m.mean_cell_entropy_nats;
                row.active_cells = m.active_cells;
                row.min_separation_mi = m.min_separation_mi;
                row.stragglers = m.stragglers;
            } catch (const std::exception& e) {
                row.failed = true;
                row.error = e.what();
            }
        }
    };

    const int threads = std::max(1, parallelism);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return rows;
}

std::vector<SummaryRow> summarize(const std::vector<SweepResultRow>& rows) {
    if (rows.empty()) throw ConfigError("summarize: no rows");

    struct Acc {
        std::vector<double> tt, ge, ce, ac, ms, st;
    };
    std::map<std::pair<double, int>, Acc> groups;
    for (const auto& r : rows) {
        if (r.failed) continue;
        Acc& a = groups[{r.k_t, r.n_aircraft}];
        if (!std::isnan(r.mean_travel_time_s)) a.tt.push_back(r.mean_travel_time_s);
        a.ge.push_back(r.grid_entropy_nats);
        a.ce.push_back(r.mean_cell_entropy_nats);
        a.ac.push_back(r.active_cells);
        a.ms.push_back(r.min_separation_mi);
        a.st.push_back(r.stragglers);
    }
    if (groups.empty()) throw ConfigError("summarize: all rows failed");

    auto mean_sd = [](const std::vector<double>& v, double& mean, double& sd) {
        if (v.empty()) {
            mean = sd = std::numeric_limits<double>::quiet_NaN();
            return;
        }
        double s = 0;
        for (double x : v) s += x;
        mean = s / static_cast<double>(v.size());
        double ss = 0;
        for (double x : v) ss += (x - mean) * (x - mean);
        sd = std::sqrt(ss / static_cast<double>(v.size()));
    };

    std::vector<SummaryRow> out;
    for (const auto& [key, acc] : groups) {
        SummaryRow s;
        s.k_t = key.first;
        s.n_aircraft = key.second;
        s.runs = static_cast<int>(acc.ge.size());
        mean_sd(acc.tt, s.mean_travel_time_mean, s.mean_travel_time_sd);
        mean_sd(acc.ge, s.grid_entropy_mean, s.grid_entropy_sd);
        mean_sd(acc.ce, s.mean_cell_entropy_mean, s.mean_cell_entropy_sd);
        mean_sd(acc.ac, s.active_cells_mean, s.active_cells_sd);
        mean_sd(acc.ms, s.min_separation_mean, s.min_separation_sd);
        mean_sd(acc.st, s.stragglers_mean, s.stragglers_sd);
        out.push_back(s);
    }
    return out;
}

}  // namespace airways
