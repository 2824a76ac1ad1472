// Command-line front end. Talks to the core exclusively through the C API.

#include <lenard/lenard.h>

#include <CLI11.hpp>

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CLI::ValidationError("--config", "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CommonArgs {
    std::string config_path;
    std::string out_dir;
    long long seed = -1;
    int depth = -1;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "JSON config file (version 1)")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", args.out_dir, "output directory for reports");
    cmd->add_option("--seed", args.seed, "seed override (nonnegative)");
    cmd->add_option("--depth", args.depth, "ladder depth override");
}

int execute(const std::string& command, const CommonArgs& args) {
    std::string config = read_file(args.config_path);
    char* summary = nullptr;
    lenard_status status =
        lenard_run_config(config.c_str(), command.c_str(),
                          args.out_dir.empty() ? nullptr : args.out_dir.c_str(), args.seed,
                          args.depth, &summary);

    if (summary) {
        try {
            auto j = nlohmann::json::parse(summary);
            for (const auto& line : j["lines"]) std::cout << line.get<std::string>() << "\n";
            for (const auto& file : j["files"])
                std::cout << "wrote " << j["out_dir"].get<std::string>() << "/"
                          << file.get<std::string>() << "\n";
            std::cout << (j["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
        } catch (const std::exception&) {
            std::cout << summary;
        }
        lenard_string_free(summary);
    }

    if (status == LENARD_OK) return 0;
    std::cerr << "error [" << lenard_status_name(status) << "]: " << lenard_last_error() << "\n";
    if (status == LENARD_ERR_CHECK_FAILED) return 1;
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conservation-law ladders of bi-Hamiltonian evolution equations: exact symbolic "
                 "verification and numeric drift measurement"};
    app.require_subcommand(1);
    app.set_version_flag("--version", lenard_version());

    CommonArgs args;
    const char* commands[] = {"ladder", "verify", "simulate", "findim"};
    const char* descriptions[] = {
        "generate the conservation-law ladder and print canonical densities",
        "run the exact identity checks (involutivity, schouten, lenard, jacobi, symmetry, "
        "bihamiltonian, antisymmetry)",
        "integrate the flow and measure conservation drift",
        "finite-dimensional checks: verify a witness or search for one"};
    for (int i = 0; i < 4; ++i) add_common(app.add_subcommand(commands[i], descriptions[i]), args);

    CLI11_PARSE(app, argc, argv);

    for (const char* name : commands)
        if (app.get_subcommand(name)->parsed()) return execute(name, args);
    return 2;
}
