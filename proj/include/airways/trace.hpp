#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "airways/entropy.hpp"
#include "airways/scenario.hpp"
#include "airways/sim.hpp"

namespace airways {

// All floating-point output uses 6 significant digits.
std::string format_g6(double v);

// Trace file: a grid header, one line-delimited record per (clock, aircraft)
// while the run is in progress, and a dump of the nonzero traffic-map
// entries at the end:
//
//   # airways trace v1
//   # grid <width_cells> <height_cells> <cell_width_mi>
//   clock,id,x,y,heading,q,r,status
//   ...
//   # traffic
//   q,r,i,j,count
//   ...
class TraceWriter {
public:
    explicit TraceWriter(std::ostream& out, const GridSpec& grid);
    void record_step(const World& world);  // one record per non-pending aircraft
    void finish(const TrafficPatternMap& traffic);

private:
    std::ostream& out_;
};

struct TraceRecord {
    double clock;
    int id;
    double x, y, heading;
    int q, r;
    std::string status;
};

struct TraceData {
    GridSpec grid;
    std::vector<TraceRecord> records;
    TrafficPatternMap traffic;
    bool has_traffic_dump = false;
};

TraceData read_trace(const std::string& path);

// Entropy report for a trace: uses the end-of-run traffic dump when present,
// otherwise replays the trajectory records to rebuild the traffic map.
GridEntropy entropy_of_trace(const TraceData& trace);

// Rebuild a traffic map from trajectory records alone (complete edge-to-edge
// traversals only, exactly like the simulator's bookkeeping).
TrafficPatternMap replay_traffic(const TraceData& trace);

void write_rows_csv(std::ostream& out, const std::vector<SweepResultRow>& rows);
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);

}  // namespace airways
