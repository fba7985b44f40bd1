#include "airways/trace.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace airways {

std::string format_g6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

TraceWriter::TraceWriter(std::ostream& out, const GridSpec& grid) : out_(out) {
    out_ << "# airways trace v1\n";
    out_ << "# grid " << grid.width_cells << " " << grid.height_cells << " "
         << format_g6(grid.cell_width) << "\n";
    out_ << "clock,id,x,y,heading,q,r,status\n";
}

void TraceWriter::record_step(const World& world) {
    for (const auto& a : world.fleet()) {
        if (a.status == AircraftStatus::pending) continue;
        if (a.status == AircraftStatus::arrived &&
            a.travel_time + a.entry_time < world.clock())  // already reported
            continue;
        const char* status = a.status == AircraftStatus::active ? "active" : "arrived";
        out_ << format_g6(world.clock()) << ',' << a.id << ',' << format_g6(a.pos.x) << ','
             << format_g6(a.pos.y) << ',' << format_g6(a.heading) << ',' << a.cell.q << ','
             << a.cell.r << ',' << status << '\n';
    }
}

void TraceWriter::finish(const TrafficPatternMap& traffic) {
    out_ << "# traffic\n";
    out_ << "q,r,i,j,count\n";
    const GridSpec& grid = traffic.grid();
    for (int li = 0; li < grid.cell_count(); ++li) {
        const CellIndex c = grid.cell_from_linear(li);
        const TrafficMatrix& t = traffic.at(c);
        for (int i = 1; i <= 6; ++i)
            for (int j = 1; j <= 6; ++j)
                if (t.at(i, j) > 0)
                    out_ << c.q << ',' << c.r << ',' << i << ',' << j << ',' << t.at(i, j)
                         << '\n';
    }
}

TraceData read_trace(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open trace file: " + path);

    TraceData data;
    std::string line;
    bool grid_seen = false;
    bool in_traffic = false;

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("# grid", 0) == 0) {
            std::istringstream ss(line.substr(6));
            if (!(ss >> data.grid.width_cells >> data.grid.height_cells >> data.grid.cell_width))
                throw ConfigError("malformed grid header in trace");
            grid_seen = true;
            data.traffic = TrafficPatternMap(data.grid);
            continue;
        }
        if (line == "# traffic") {
            in_traffic = true;
            data.has_traffic_dump = true;
            continue;
        }
        if (line[0] == '#' || line.rfind("clock,", 0) == 0 || line.rfind("q,r,", 0) == 0)
            continue;
        if (!grid_seen) throw ConfigError("trace is missing the grid header");

        std::istringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);

        if (in_traffic) {
            if (fields.size() != 5) throw ConfigError("malformed traffic line: " + line);
            const CellIndex c{std::stoi(fields[0]), std::stoi(fields[1])};
            const int i = std::stoi(fields[2]), j = std::stoi(fields[3]);
            const long long count = std::stoll(fields[4]);
            for (long long k = 0; k < count; ++k) data.traffic.record_traversal(c, i, j);
        } else {
            if (fields.size() != 8) throw ConfigError("malformed trace record: " + line);
            data.records.push_back({std::stod(fields[0]), std::stoi(fields[1]),
                                    std::stod(fields[2]), std::stod(fields[3]),
                                    std::stod(fields[4]), std::stoi(fields[5]),
                                    std::stoi(fields[6]), fields[7]});
        }
    }
    if (!grid_seen) throw ConfigError("trace is missing the grid header");
    return data;
}

TrafficPatternMap replay_traffic(const TraceData& trace) {
    TrafficPatternMap map(trace.grid);

    struct Track {
        bool started = false;
        CellIndex cell{};
        int entry_edge = 0;
    };
    std::map<int, Track> tracks;

    // Records are written in clock order per step; keep file order.
    for (const auto& rec : trace.records) {
        Track& tr = tracks[rec.id];
        const CellIndex cell{rec.q, rec.r};
        if (!tr.started) {
            tr.started = true;
            tr.cell = cell;
            tr.entry_edge = 0;
            continue;
        }
        if (cell == tr.cell) continue;
        const auto exit_edge = trace.grid.shared_edge(tr.cell, cell);
        if (exit_edge) {
            if (tr.entry_edge != 0) map.record_traversal(tr.cell, tr.entry_edge, *exit_edge);
            tr.entry_edge = opposite_edge(*exit_edge);
        } else {
            tr.entry_edge = 0;  // vertex hop, no complete traversal
        }
        tr.cell = cell;
    }
    return map;
}

GridEntropy entropy_of_trace(const TraceData& trace) {
    if (trace.has_traffic_dump) return grid_entropy(trace.traffic);
    return grid_entropy(replay_traffic(trace));
}

void write_rows_csv(std::ostream& out, const std::vector<SweepResultRow>& rows) {
    std::vector<SweepResultRow> sorted = rows;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return std::tie(a.k_t, a.n_aircraft, a.seed) < std::tie(b.k_t, b.n_aircraft, b.seed);
    });
    out << "k_t,n_aircraft,seed,mean_travel_time_s,grid_entropy_nats,mean_cell_entropy_nats,"
           "active_cells,min_separation_mi,stragglers\n";
    for (const auto& r : sorted) {
        out << format_g6(r.k_t) << ',' << r.n_aircraft << ',' << r.seed << ','
            << format_g6(r.mean_travel_time_s) << ',' << format_g6(r.grid_entropy_nats) << ','
            << format_g6(r.mean_cell_entropy_nats) << ',' << r.active_cells << ','
            << format_g6(r.min_separation_mi) << ',' << r.stragglers << '\n';
    }
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
    out << "k_t,n_aircraft,runs,mean_travel_time_s_mean,mean_travel_time_s_sd,"
           "grid_entropy_nats_mean,grid_entropy_nats_sd,mean_cell_entropy_nats_mean,"
           "mean_cell_entropy_nats_sd,active_cells_mean,active_cells_sd,"
           "min_separation_mi_mean,min_separation_mi_sd,stragglers_mean,stragglers_sd\n";
    for (const auto& s : rows) {
        out << format_g6(s.k_t) << ',' << s.n_aircraft << ',' << s.runs << ','
            << format_g6(s.mean_travel_time_mean) << ',' << format_g6(s.mean_travel_time_sd)
            << ',' << format_g6(s.grid_entropy_mean) << ',' << format_g6(s.grid_entropy_sd) << ','
            << format_g6(s.mean_cell_entropy_mean) << ',' << format_g6(s.mean_cell_entropy_sd)
            << ',' << format_g6(s.active_cells_mean) << ',' << format_g6(s.active_cells_sd) << ','
            << format_g6(s.min_separation_mean) << ',' << format_g6(s.min_separation_sd) << ','
            << format_g6(s.stragglers_mean) << ',' << format_g6(s.stragglers_sd) << '\n';
    }
}

}  // namespace airways
