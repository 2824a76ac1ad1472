#include "config.hpp"

#include "errors.hpp"
#include "parse.hpp"

#include <json.hpp>

namespace lenard {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::ConfigInvalid, what); }

Rat rat_field(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return rat_parse(j.get<std::string>());
        } catch (const std::exception& e) {
            bad(where + ": " + e.what());
        }
    }
    bad(where + ": rationals must be integers or \"p/q\" strings");
}

RatMatrix rat_matrix(const json& j, int dim, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim) bad(where + ": expected " +
                                                                std::to_string(dim) + " rows");
    RatMatrix out;
    for (int r = 0; r < dim; ++r) {
        const json& row = j[r];
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            bad(where + ": row " + std::to_string(r) + " must have " + std::to_string(dim) +
                " entries");
        RatVector v;
        for (int c = 0; c < dim; ++c) v.push_back(rat_field(row[c], where));
        out.push_back(std::move(v));
    }
    return out;
}

RatVector rat_vector(const json& j, int dim, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        bad(where + ": expected " + std::to_string(dim) + " entries");
    RatVector out;
    for (int c = 0; c < dim; ++c) out.push_back(rat_field(j[c], where));
    return out;
}

ModelSpec model_from_json(const json& j) {
    if (!j.is_object()) bad("model: expected an object");
    std::string preset = j.value("preset", std::string("custom"));
    if (preset == "boussinesq" || preset == "broer-kaup") return preset_model(preset);
    if (preset != "custom") bad("model.preset: unknown preset " + preset);
    if (!j.contains("D")) bad("model.D: required for custom models");
    int dim = j["D"].get<int>();
    if (dim <= 0) bad("model.D: must be positive");
    for (const char* key : {"G", "F", "C", "K"})
        if (!j.contains(key)) bad(std::string("model.") + key + ": required for custom models");
    try {
        return make_model(dim, rat_matrix(j["G"], dim, "model.G"), rat_matrix(j["F"], dim, "model.F"),
                          rat_vector(j["C"], dim, "model.C"), rat_vector(j["K"], dim, "model.K"),
                          j.value("name", std::string("custom")));
    } catch (const Error& e) {
        bad(std::string("model: ") + e.what());
    }
}

sim::InitialData ics_from_json(const json& j) {
    if (!j.is_array()) bad("grid.ic: expected an array of per-component bump lists");
    sim::InitialData out;
    for (const auto& comp : j) {
        if (!comp.is_array()) bad("grid.ic: each component needs a list of bumps");
        std::vector<sim::GaussianBump> bumps;
        for (const auto& b : comp) {
            sim::GaussianBump bump;
            bump.amp = b.value("amp", 0.0);
            bump.center = b.value("center", 0.0);
            bump.width = b.value("width", 1.0);
            if (bump.width <= 0) bad("grid.ic: bump width must be positive");
            bumps.push_back(bump);
        }
        out.push_back(std::move(bumps));
    }
    return out;
}

findim::Instance instance_from_json(const json& j) {
    findim::Instance inst;
    if (!j.contains("n")) bad("findim.instance.n: required");
    inst.n = j["n"].get<int>();
    if (inst.n <= 0) bad("findim.instance.n: must be positive");
    inst.c = rat_field(j.value("c", json(-1)), "findim.instance.c");
    if (!j.contains("E") || !j["E"].is_array() || static_cast<int>(j["E"].size()) != inst.n)
        bad("findim.instance.E: expected " + std::to_string(inst.n) + " polynomials");
    try {
        for (const auto& comp : j["E"])
            inst.e.push_back(findim::parse_coord_poly(inst.n, comp.get<std::string>()));
        inst.j = findim::parse_coord_poly(inst.n, j.value("J", std::string("0")));
    } catch (const std::exception& e) {
        bad(std::string("findim.instance: ") + e.what());
    }
    return inst;
}

}  // namespace

ModelSpec parse_model_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& e) {
        bad(std::string("model file is not valid JSON: ") + e.what());
    }
    return model_from_json(j);
}

RunConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& e) {
        bad(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) bad("config: expected a JSON object");

    RunConfig cfg;
    cfg.version = j.value("version", 0);
    if (cfg.version != 1) bad("version: expected 1");
    cfg.command = j.value("command", std::string());
    if (j.contains("seed")) {
        if (!j["seed"].is_number_integer() || j["seed"].get<long long>() < 0)
            bad("seed: expected a nonnegative integer");
        cfg.seed = j["seed"].get<std::uint64_t>();
    }
    cfg.depth = j.value("depth", 4);
    if (cfg.depth < 0) bad("depth: must be nonnegative");
    cfg.out_dir = j.value("out", std::string("out"));

    if (j.contains("model")) {
        cfg.model = model_from_json(j["model"]);
        cfg.has_model = true;
    }

    if (j.contains("checks")) {
        if (!j["checks"].is_array()) bad("checks: expected an array of names");
        for (const auto& c : j["checks"]) cfg.checks.push_back(c.get<std::string>());
    }

    if (j.contains("grid")) {
        const json& g = j["grid"];
        cfg.has_grid = true;
        cfg.grid.half_width = g.value("L", 20.0);
        cfg.grid.n = g.value("N", 256);
        cfg.grid.dt = g.value("dt", 1e-3);
        cfg.grid.t_final = g.value("T", 1.0);
        cfg.grid.sample_every = g.value("sample_every", 10);
        cfg.grid.drift_threshold = g.value("drift_threshold", 1e-6);
        cfg.grid.control_min = g.value("control_min", 1e-3);
        cfg.grid.control = g.value("control", true);
        cfg.grid.ladder_depth = g.value("ladder_depth", 3);
        if (cfg.grid.dt <= 0) bad("grid.dt: must be positive");
        if (cfg.grid.t_final <= 0) bad("grid.T: must be positive");
        if (cfg.grid.sample_every <= 0) bad("grid.sample_every: must be positive");
        if (g.contains("params"))
            for (const auto& [key, value] : g["params"].items())
                cfg.grid.params[key] = value.get<double>();
        if (g.contains("ic")) cfg.grid.ics = ics_from_json(g["ic"]);
    }

    if (j.contains("findim")) {
        const json& f = j["findim"];
        cfg.findim.mode = f.value("mode", std::string("verify"));
        if (cfg.findim.mode != "verify" && cfg.findim.mode != "search")
            bad("findim.mode: expected \"verify\" or \"search\"");
        cfg.findim.n = f.value("n", 4);
        cfg.findim.max_degree = f.value("max_degree", 2);
        cfg.findim.points = f.value("points", 100);
        cfg.findim.depth = f.value("depth", 3);
        if (f.contains("c_grid")) {
            cfg.findim.c_grid.clear();
            for (const auto& c : f["c_grid"]) cfg.findim.c_grid.push_back(rat_field(c, "findim.c_grid"));
        }
        if (f.contains("instance")) cfg.findim.instance = instance_from_json(f["instance"]);
    }

    return cfg;
}

}  // namespace lenard
