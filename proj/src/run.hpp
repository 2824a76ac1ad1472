#pragma once

#include "config.hpp"

#include <string>
#include <vector>

namespace lenard {

struct RunSummary {
    bool pass = false;
    std::string failed_check;         // first failing check, when any
    std::vector<std::string> lines;   // human-readable output
    std::string summary_json;
    std::vector<std::string> files;   // files written, relative to out dir
};

struct RunOverrides {
    std::string command;   // empty keeps the config value
    std::string out_dir;
    long long seed = -1;   // negative keeps the config value
    int depth = -1;
};

// Executes one subcommand (ladder | verify | simulate | findim) and writes
// the report files under the output directory. Reports are bit-stable for a
// fixed config and seed.
RunSummary run_config(const RunConfig& config, const RunOverrides& overrides = {});

RunSummary run_config_text(const std::string& config_json, const RunOverrides& overrides = {});

}  // namespace lenard
