#pragma once

#include "findim.hpp"
#include "models.hpp"
#include "simulate.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lenard {

struct GridConfig {
    double half_width = 20.0;
    int n = 256;
    double dt = 1e-3;
    double t_final = 1.0;
    int sample_every = 10;
    sim::ParamValues params{{"c", 1.0}, {"k", 1.0}, {"m", 1.0}};
    sim::InitialData ics;
    double drift_threshold = 1e-6;
    double control_min = 1e-3;
    bool control = true;
    int ladder_depth = 3;
};

struct FindimConfig {
    std::string mode = "verify";  // "verify" | "search"
    int n = 4;
    int max_degree = 2;
    std::vector<Rat> c_grid{Rat(-1), Rat(-1, 2), Rat(1, 2), Rat(3, 2)};
    int points = 100;
    int depth = 3;
    // Instance for the verify mode; when absent, the canonical shear witness
    // on R^4 is used.
    std::optional<findim::Instance> instance;
};

struct RunConfig {
    int version = 1;
    std::string command;  // optional in the file; the CLI subcommand overrides
    std::uint64_t seed = 0;
    int depth = 4;
    ModelSpec model;
    bool has_model = false;
    std::vector<std::string> checks;
    GridConfig grid;
    bool has_grid = false;
    FindimConfig findim;
    std::string out_dir = "out";
};

// Parses and validates the version-1 config schema; throws ConfigInvalid with
// the offending field or model error named.
RunConfig parse_config(const std::string& json_text);

// Model section alone (used for model definition files).
ModelSpec parse_model_json(const std::string& json_text);

}  // namespace lenard
