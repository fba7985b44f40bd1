#include "airways/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace airways {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    return j;
}

void check_keys(const json& j, const std::string& section, std::set<std::string> allowed) {
    if (!j.is_object()) throw ConfigError("section '" + section + "' must be an object");
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key))
            throw ConfigError("unknown key '" + key + "' in section '" + section + "'");
}

template <typename T>
void get(const json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

Point2D as_point(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2) throw ConfigError(what + " must be [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

void apply_scenario_sections(const json& j, ScenarioConfig& cfg, bool allow_sweep) {
    std::set<std::string> top{"grid", "traffic", "conflict", "flight", "sim", "scenario"};
    if (allow_sweep) top.insert("sweep");
    check_keys(j, "(top level)", top);

    if (j.contains("grid")) {
        const json& g = j.at("grid");
        check_keys(g, "grid", {"width_cells", "height_cells", "cell_width_mi"});
        get(g, "width_cells", cfg.grid.width_cells);
        get(g, "height_cells", cfg.grid.height_cells);
        get(g, "cell_width_mi", cfg.grid.cell_width);
    }
    if (j.contains("traffic")) {
        const json& t = j.at("traffic");
        check_keys(t, "traffic", {"k_t", "epsilon_clamp"});
        get(t, "k_t", cfg.k_t);
        get(t, "epsilon_clamp", cfg.epsilon_clamp);
    }
    if (j.contains("conflict")) {
        const json& c = j.at("conflict");
        check_keys(c, "conflict", {"k_r", "k_rdot", "activation_radius_mi", "max_turn_deg_s"});
        get(c, "k_r", cfg.k_r);
        get(c, "k_rdot", cfg.k_rdot);
        get(c, "activation_radius_mi", cfg.activation_radius_mi);
        get(c, "max_turn_deg_s", cfg.max_turn_deg_s);
    }
    if (j.contains("flight")) {
        const json& f = j.at("flight");
        check_keys(f, "flight", {"speed_mph", "arrival_radius_mi"});
        get(f, "speed_mph", cfg.speed_mph);
        get(f, "arrival_radius_mi", cfg.arrival_radius_mi);
    }
    if (j.contains("sim")) {
        const json& s = j.at("sim");
        check_keys(s, "sim", {"dt_s", "stagger_s", "max_time_s"});
        get(s, "dt_s", cfg.dt_s);
        get(s, "stagger_s", cfg.stagger_s);
        get(s, "max_time_s", cfg.max_time_s);
    }
    if (j.contains("scenario")) {
        const json& s = j.at("scenario");
        check_keys(s, "scenario", {"n_aircraft", "seed", "od_mode", "fixed_od"});
        get(s, "n_aircraft", cfg.n_aircraft);
        get(s, "seed", cfg.seed);
        if (s.contains("od_mode")) {
            const std::string mode = s.at("od_mode").get<std::string>();
            if (mode == "opposite-sides")
                cfg.od_mode = OdMode::opposite_sides;
            else if (mode == "fixed-list")
                cfg.od_mode = OdMode::fixed_list;
            else
                throw ConfigError("od_mode must be 'opposite-sides' or 'fixed-list'");
        }
        if (s.contains("fixed_od")) {
            for (const json& od : s.at("fixed_od")) {
                check_keys(od, "fixed_od[]", {"origin", "destination"});
                cfg.fixed_od.push_back({as_point(od.at("origin"), "origin"),
                                        as_point(od.at("destination"), "destination")});
            }
        }
    }
    cfg.validate();
}

}  // namespace

ScenarioConfig parse_scenario_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    ScenarioConfig cfg;
    apply_scenario_sections(j, cfg, /*allow_sweep=*/false);
    return cfg;
}

ScenarioConfig load_scenario_config(const std::string& path) {
    ScenarioConfig cfg;
    apply_scenario_sections(load_json(path), cfg, /*allow_sweep=*/false);
    return cfg;
}

namespace {

SweepConfig sweep_from_json(const json& j) {
    SweepConfig sw;
    apply_scenario_sections(j, sw.base, /*allow_sweep=*/true);
    int n_seeds = 20;
    std::uint64_t first_seed = 1;
    if (j.contains("sweep")) {
        const json& s = j.at("sweep");
        check_keys(s, "sweep", {"k_t_values", "n_values", "seeds", "n_seeds", "first_seed"});
        get(s, "k_t_values", sw.k_t_values);
        get(s, "n_values", sw.n_values);
        get(s, "n_seeds", n_seeds);
        get(s, "first_seed", first_seed);
        if (s.contains("seeds")) {
            sw.seeds = s.at("seeds").get<std::vector<std::uint64_t>>();
            return sw;
        }
    }
    sw.seeds = SweepConfig::default_seeds(n_seeds, first_seed);
    return sw;
}

}  // namespace

SweepConfig parse_sweep_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    return sweep_from_json(j);
}

SweepConfig load_sweep_config(const std::string& path) { return sweep_from_json(load_json(path)); }

}  // namespace airways
