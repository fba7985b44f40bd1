#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <thread>

#include <CLI11.hpp>

#include "airways/config.hpp"
#include "airways/demos.hpp"
#include "airways/entropy.hpp"
#include "airways/trace.hpp"

namespace {

using namespace airways;

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitRuntimeAnomaly = 2;

RunMetrics run_with_optional_trace(World& world, double max_time, const std::string& trace_path) {
    std::ofstream trace_out;
    std::optional<TraceWriter> writer;
    if (!trace_path.empty()) {
        trace_out.open(trace_path);
        if (!trace_out) throw ConfigError("cannot open trace output: " + trace_path);
        writer.emplace(trace_out, world.grid());
        world.set_step_observer([&](const World& w) { writer->record_step(w); });
    }
    RunMetrics m = world.run(max_time);
    if (writer) writer->finish(world.traffic());
    return m;
}

void print_metrics(const RunMetrics& m) {
    std::cout << "mean_travel_time_s=" << format_g6(m.mean_travel_time()) << "\n"
              << "grid_entropy_nats=" << format_g6(m.grid_entropy_nats) << "\n"
              << "mean_cell_entropy_nats=" << format_g6(m.mean_cell_entropy_nats) << "\n"
              << "active_cells=" << m.active_cells << "\n"
              << "min_separation_mi=" << format_g6(m.min_separation_mi) << "\n"
              << "stragglers=" << m.stragglers << "\n"
              << "anomalies=" << m.anomalies << "\n";
}

int run_command(const std::string& config_path, const std::string& trace_path) {
    ScenarioConfig cfg = config_path.empty() ? ScenarioConfig{} : load_scenario_config(config_path);
    World world = generate_scenario(cfg);
    const double max_time = cfg.max_time_s > 0 ? cfg.max_time_s : world.default_max_time();
    const RunMetrics m = run_with_optional_trace(world, max_time, trace_path);
    print_metrics(m);
    return (m.stragglers > 0 || m.anomalies > 0) ? kExitRuntimeAnomaly : kExitOk;
}

int sweep_command(const std::string& config_path, const std::string& rows_path,
                  const std::string& summary_path, int parallelism) {
    SweepConfig sw = config_path.empty() ? SweepConfig{.seeds = SweepConfig::default_seeds(20)}
                                         : load_sweep_config(config_path);
    const auto rows = run_sweep(sw, parallelism);

    std::ofstream rows_out(rows_path);
    if (!rows_out) throw ConfigError("cannot open rows output: " + rows_path);
    write_rows_csv(rows_out, rows);

    if (!summary_path.empty()) {
        std::ofstream summary_out(summary_path);
        if (!summary_out) throw ConfigError("cannot open summary output: " + summary_path);
        write_summary_csv(summary_out, summarize(rows));
    }

    int failures = 0, stragglers = 0;
    for (const auto& r : rows) {
        if (r.failed) ++failures;
        stragglers += r.stragglers;
    }
    std::cout << "rows=" << rows.size() << " failed_runs=" << failures
              << " total_stragglers=" << stragglers << "\n";
    return (failures > 0 || stragglers > 0) ? kExitRuntimeAnomaly : kExitOk;
}

int demo_command(const std::string& which, double k_t, const std::string& trace_path) {
    ScenarioConfig cfg;
    if (which == "convoy")
        cfg = convoy_demo_config(k_t);
    else if (which == "headon")
        cfg = headon_demo_config();
    else
        throw ConfigError("unknown demo '" + which + "' (expected convoy or headon)");

    World world = generate_scenario(cfg);
    const RunMetrics m = run_with_optional_trace(world, world.default_max_time(), trace_path);
    print_metrics(m);

    if (which == "convoy") {
        std::set<CellIndex> corridor, own;
        for (int i = 0; i < kConvoySize; ++i)
            for (const auto& c : world.fleet()[static_cast<std::size_t>(i)].visited_cells)
                corridor.insert(c);
        for (const auto& c : world.fleet()[kConvoySize].visited_cells) own.insert(c);
        std::size_t shared = 0;
        for (const auto& c : own)
            if (corridor.count(c)) ++shared;
        std::cout << "ownship_cells=" << own.size() << " corridor_cells=" << corridor.size()
                  << " shared_cells=" << shared << "\n";
    }
    return (m.stragglers > 0 || m.anomalies > 0) ? kExitRuntimeAnomaly : kExitOk;
}

int entropy_command(const std::string& path) {
    const TraceData trace = read_trace(path);
    const GridEntropy g = entropy_of_trace(trace);
    std::cout << "grid_entropy_nats=" << format_g6(g.total_nats) << "\n"
              << "mean_cell_entropy_nats=" << format_g6(g.mean_cell_nats) << "\n"
              << "active_cells=" << g.active_cells << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distributed airspace traffic-following simulator"};
    app.require_subcommand(1);

    std::string config_path, trace_path, rows_path, summary_path, demo_name, entropy_path;
    int parallelism = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    double demo_k_t = 3.0;

    auto* run = app.add_subcommand("run", "Run one scenario and print its metrics");
    run->add_option("--config", config_path, "Scenario config (JSON)");
    run->add_option("--trace", trace_path, "Write a trajectory trace file");

    auto* sweep = app.add_subcommand("sweep", "Run a seeded k_t x N parameter sweep");
    sweep->add_option("--config", config_path, "Sweep config (JSON)");
    sweep->add_option("--rows", rows_path, "Per-run rows CSV output")->required();
    sweep->add_option("--summary", summary_path, "Aggregate summary CSV output");
    sweep->add_option("--parallelism", parallelism, "Concurrent runs");

    auto* demo = app.add_subcommand("demo", "Reproduce the convoy or head-on scenario");
    demo->add_option("name", demo_name, "convoy | headon")->required();
    demo->add_option("--k-t", demo_k_t, "Traffic-following factor for the convoy demo");
    demo->add_option("--trace", trace_path, "Write a trajectory trace file");

    auto* entropy = app.add_subcommand("entropy", "Entropy report for a trace file");
    entropy->add_option("file", entropy_path, "Trace or traffic-map file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return run_command(config_path, trace_path);
        if (sweep->parsed()) return sweep_command(config_path, rows_path, summary_path, parallelism);
        if (demo->parsed()) return demo_command(demo_name, demo_k_t, trace_path);
        if (entropy->parsed()) return entropy_command(entropy_path);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntimeAnomaly;
    }
    return kExitOk;
}
