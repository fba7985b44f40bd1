#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "airways/config.hpp"
#include "airways/cost_model.hpp"
#include "airways/demos.hpp"
#include "airways/entropy.hpp"
#include "airways/router.hpp"
#include "airways/trace.hpp"

namespace py = pybind11;
using namespace airways;

namespace {

TrafficMatrix matrix_from_counts(const std::vector<std::vector<std::uint64_t>>& counts) {
    if (counts.size() != 6) throw py::value_error("traffic matrix must be 6x6");
    TrafficMatrix t;
    for (int i = 0; i < 6; ++i) {
        if (counts[static_cast<std::size_t>(i)].size() != 6)
            throw py::value_error("traffic matrix must be 6x6");
        for (int j = 0; j < 6; ++j)
            t.counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return t;
}

py::dict metrics_dict(const RunMetrics& m) {
    py::dict d;
    d["travel_times"] = m.travel_times;
    d["mean_travel_time_s"] = m.mean_travel_time();
    d["grid_entropy_nats"] = m.grid_entropy_nats;
    d["mean_cell_entropy_nats"] = m.mean_cell_entropy_nats;
    d["active_cells"] = m.active_cells;
    d["min_separation_mi"] = m.min_separation_mi;
    d["stragglers"] = m.stragglers;
    d["anomalies"] = m.anomalies;
    d["entropy_timeline"] = m.entropy_timeline;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Distributed airspace traffic-following simulator";

    py::class_<CellIndex>(m, "CellIndex")
        .def(py::init<int, int>(), py::arg("q"), py::arg("r"))
        .def_readwrite("q", &CellIndex::q)
        .def_readwrite("r", &CellIndex::r)
        .def("__eq__", [](const CellIndex& a, const CellIndex& b) { return a == b; })
        .def("__repr__", [](const CellIndex& c) {
            std::ostringstream ss;
            ss << "CellIndex(q=" << c.q << ", r=" << c.r << ")";
            return ss.str();
        });

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init([](int w, int h, double cw) {
                 return GridSpec{w, h, cw};
             }),
             py::arg("width_cells") = 12, py::arg("height_cells") = 12,
             py::arg("cell_width") = 2.65)
        .def_readwrite("width_cells", &GridSpec::width_cells)
        .def_readwrite("height_cells", &GridSpec::height_cells)
        .def_readwrite("cell_width", &GridSpec::cell_width)
        .def("cell_count", &GridSpec::cell_count)
        .def("locate",
             [](const GridSpec& g, double x, double y) -> std::optional<CellIndex> {
                 return g.locate({x, y});
             })
        .def("neighbor_across", &GridSpec::neighbor_across)
        .def("edge_midpoint",
             [](const GridSpec& g, CellIndex c, int e) {
                 const Point2D p = g.edge_midpoint(c, e);
                 return std::make_pair(p.x, p.y);
             })
        .def("edge_pair_distance", &GridSpec::edge_pair_distance);

    m.def("cell_entropy",
          [](const std::vector<std::vector<std::uint64_t>>& counts) {
              return cell_entropy(matrix_from_counts(counts));
          },
          "Shannon entropy (nats) of a 6x6 traffic count matrix");

    m.def("normalized_matrix", [](const std::vector<std::vector<std::uint64_t>>& counts) {
        const NormalizedTrafficMatrix n = normalized(matrix_from_counts(counts));
        std::vector<std::vector<double>> out(6, std::vector<double>(6));
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) out[i][j] = n.weights[i][j];
        return out;
    });

    m.def("unimpeded_matrix", [](double cell_width) {
        GridSpec g;
        g.cell_width = cell_width;
        const CostMatrix u = unimpeded_matrix(g);
        std::vector<std::vector<double>> out(6, std::vector<double>(6));
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) out[i][j] = u[i][j];
        return out;
    });

    m.def("run_scenario",
          [](const std::string& config_json) {
              const ScenarioConfig cfg = parse_scenario_config(config_json);
              World world = generate_scenario(cfg);
              const double max_time =
                  cfg.max_time_s > 0 ? cfg.max_time_s : world.default_max_time();
              return metrics_dict(world.run(max_time));
          },
          py::arg("config_json"),
          "Run one seeded scenario from a JSON config string and return its metrics");

    m.def("run_demo",
          [](const std::string& which, double k_t) {
              ScenarioConfig cfg =
                  which == "convoy" ? convoy_demo_config(k_t) : headon_demo_config();
              World world = generate_scenario(cfg);
              py::dict d = metrics_dict(world.run(world.default_max_time()));
              py::list cells;
              for (const auto& a : world.fleet()) {
                  py::list path;
                  for (const auto& c : a.visited_cells) path.append(py::make_tuple(c.q, c.r));
                  cells.append(path);
              }
              d["visited_cells"] = cells;
              return d;
          },
          py::arg("which"), py::arg("k_t") = 3.0);

    m.def("run_sweep",
          [](const std::string& config_json, int parallelism) {
              const SweepConfig sw = parse_sweep_config(config_json);
              const auto rows = run_sweep(sw, parallelism);
              std::ostringstream ss;
              write_rows_csv(ss, rows);
              return ss.str();
          },
          py::arg("config_json"), py::arg("parallelism") = 1,
          "Run a sweep and return the sorted rows CSV as a string");

    py::register_exception<ConfigError>(m, "ConfigError");
}
