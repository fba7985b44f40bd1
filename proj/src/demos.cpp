#include "airways/demos.hpp"

namespace airways {

namespace {

Point2D cell_center(const GridSpec& grid, int col, int row) {
    return grid.center({col - (row - (row & 1)) / 2, row});
}

}  // namespace

ScenarioConfig convoy_demo_config(double k_t) {
    ScenarioConfig cfg;
    cfg.k_t = k_t;
    cfg.od_mode = OdMode::fixed_list;
    cfg.n_aircraft = kConvoySize + 1;
    // Wide spacing so the lead aircraft has finished, and with it laid down a
    // complete corridor in the traffic map, before the ownship enters.
    cfg.stagger_s = 120.0;

    const Point2D convoy_o = cell_center(cfg.grid, 1, 1);
    const Point2D convoy_d = cell_center(cfg.grid, 10, 10);
    for (int i = 0; i < kConvoySize; ++i) cfg.fixed_od.push_back({convoy_o, convoy_d});
    // Ownship: parallel diagonal offset toward the bottom-right.
    cfg.fixed_od.push_back({cell_center(cfg.grid, 3, 0), cell_center(cfg.grid, 11, 8)});
    return cfg;
}

ScenarioConfig headon_demo_config() {
    ScenarioConfig cfg;
    cfg.od_mode = OdMode::fixed_list;
    cfg.n_aircraft = 2;
    cfg.stagger_s = 0.0;
    // Fast movers: at a 1000 mph closure the closing-speed term saturates the
    // turn-rate clamp throughout the approach, producing the full mutual
    // diversion rather than a shallow offset.
    cfg.speed_mph = 500.0;
    const int mid_row = cfg.grid.height_cells / 2;
    const Point2D left = cell_center(cfg.grid, 0, mid_row);
    const Point2D right = cell_center(cfg.grid, cfg.grid.width_cells - 1, mid_row);
    cfg.fixed_od.push_back({left, right});
    cfg.fixed_od.push_back({right, left});
    return cfg;
}

}  // namespace airways
