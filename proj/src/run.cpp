#include "run.hpp"

#include "checks.hpp"
#include "errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace lenard {

using nlohmann::json;

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_file(const std::filesystem::path& dir, const std::string& name,
                const std::string& content, RunSummary& summary) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw Error(Errc::Io, "cannot write " + (dir / name).string());
    out << content;
    summary.files.push_back(name);
}

json check_to_json(const CheckResult& r) {
    json j;
    j["check"] = r.check;
    j["model"] = r.model;
    j["indices"] = r.indices;
    j["residual_is_zero"] = r.residual_is_zero;
    if (!r.residual_is_zero) j["residual_density"] = r.residual_density;
    return j;
}

ModelSpec required_model(const RunConfig& cfg, const std::string& command) {
    if (!cfg.has_model)
        throw Error(Errc::ConfigInvalid, "command " + command + " requires a model section");
    return cfg.model;
}

findim::Instance default_findim_instance() {
    // Shear of the first canonical pair by the second coordinate, with the
    // quadratic first integral it pairs with.
    findim::Instance inst;
    inst.n = 4;
    inst.e.assign(4, DiffPoly(4));
    inst.e[0] = findim::coord(4, 1);
    inst.j = findim::parse_coord_poly(4, "q1*p1 + q2*p2");
    inst.c = Rat(-1);
    return inst;
}

json instance_to_json(const findim::Instance& inst) {
    json j;
    j["n"] = inst.n;
    j["c"] = rat_str(inst.c);
    json e = json::array();
    for (const auto& comp : inst.e) e.push_back(comp.str());
    j["E"] = e;
    j["J"] = inst.j.str();
    return j;
}

void run_ladder(const RunConfig& cfg, int depth, const std::filesystem::path& out_dir,
                RunSummary& summary) {
    ModelSpec spec = required_model(cfg, "ladder");
    Characteristics e = model_e(spec);
    Ladder ladder = ladder_generate(default_ladder_seed(spec), e, depth, spec.name);

    json j;
    j["model"] = spec.name;
    j["depth"] = depth;
    json gen = json::array();
    for (int i = 0; i < e.dim(); ++i) gen.push_back(e[i].str());
    j["generator"] = gen;
    json entries = json::array();
    std::string text;
    for (int i = 0; i <= depth; ++i) {
        std::string density = ladder.entries[i].density().str();
        entries.push_back(density);
        std::string line = "J^(" + std::to_string(i) + ") = " + density;
        summary.lines.push_back(line);
        text += line + "\n";
    }
    j["entries"] = entries;
    write_file(out_dir, "ladder.json", j.dump(2) + "\n", summary);
    write_file(out_dir, "ladder.txt", text, summary);
    summary.pass = true;
}

void run_verify(const RunConfig& cfg, int depth, std::uint64_t seed,
                const std::filesystem::path& out_dir, RunSummary& summary) {
    ModelSpec spec = required_model(cfg, "verify");
    std::vector<std::string> checks = cfg.checks.empty() ? all_check_names() : cfg.checks;
    VerifyContext ctx = make_verify_context(spec, depth, seed);

    json report;
    report["model"] = spec.name;
    report["depth"] = depth;
    report["seed"] = seed;
    json entries = json::array();
    summary.pass = true;
    std::string csv = "k,m,zero\n";
    bool has_involutivity = false;

    for (const auto& name : checks) {
        std::vector<CheckResult> results = run_named_check(ctx, name);
        int failures = 0;
        for (const auto& r : results) {
            entries.push_back(check_to_json(r));
            if (!r.residual_is_zero) ++failures;
            if (r.check == "involutivity") {
                has_involutivity = true;
                csv += std::to_string(r.indices[0]) + "," + std::to_string(r.indices[1]) + "," +
                       (r.residual_is_zero ? "1" : "0") + "\n";
            }
        }
        if (failures > 0 && summary.pass) {
            summary.pass = false;
            summary.failed_check = name;
        }
        summary.lines.push_back("check " + name + ": " +
                                (failures == 0 ? "PASS" : "FAIL (" + std::to_string(failures) +
                                                              " nonzero residuals)") +
                                " [" + std::to_string(results.size()) + " cases]");
    }
    report["checks"] = entries;
    report["pass"] = summary.pass;
    write_file(out_dir, "verify_report.json", report.dump(2) + "\n", summary);
    if (has_involutivity) write_file(out_dir, "involutivity.csv", csv, summary);
}

void run_simulate(const RunConfig& cfg, const std::filesystem::path& out_dir,
                  RunSummary& summary) {
    ModelSpec spec = required_model(cfg, "simulate");
    if (!cfg.has_grid) throw Error(Errc::ConfigInvalid, "command simulate requires a grid section");
    if (cfg.grid.ics.empty())
        throw Error(Errc::ConfigInvalid, "grid.ic: initial data is required for simulate");

    sim::Grid grid = sim::make_grid(cfg.grid.half_width, cfg.grid.n);
    Characteristics e = model_e(spec);
    Ladder ladder = ladder_generate(default_ladder_seed(spec), e, cfg.grid.ladder_depth, spec.name);

    Functional control = Functional(DiffPoly::jet(spec.dim, 0, 0).pow(3));
    sim::RunProtocol protocol;
    protocol.t_final = cfg.grid.t_final;
    protocol.dt = cfg.grid.dt;
    protocol.sample_every = cfg.grid.sample_every;
    protocol.drift_threshold = cfg.grid.drift_threshold;
    protocol.control_min = cfg.grid.control_min;

    sim::DriftReport report =
        sim::conservation_run(spec, ladder.entries, cfg.grid.control ? &control : nullptr, grid,
                              cfg.grid.ics, protocol, cfg.grid.params);

    json j;
    j["model"] = report.model;
    j["grid"] = {{"L", report.half_width}, {"N", report.n}};
    j["dt"] = report.dt;
    j["T"] = report.t_final;
    json drifts;
    for (std::size_t i = 0; i < report.drifts.size(); ++i)
        drifts["J" + std::to_string(i)] = report.drifts[i];
    j["drifts"] = drifts;
    if (report.has_control) j["control_drift"] = report.control_drift;
    j["blew_up"] = report.blew_up;
    if (report.blew_up) j["blowup_time"] = report.blowup_time;
    j["pass"] = report.pass;
    write_file(out_dir, "drift.json", j.dump(2) + "\n", summary);

    std::string csv = "t";
    for (std::size_t i = 0; i < report.drifts.size(); ++i) csv += ",J" + std::to_string(i);
    if (report.has_control) csv += ",control";
    csv += "\n";
    for (const auto& row : report.series) {
        for (std::size_t i = 0; i < row.size(); ++i) csv += (i ? "," : "") + fmt_double(row[i]);
        csv += "\n";
    }
    write_file(out_dir, "series.csv", csv, summary);

    for (std::size_t i = 0; i < report.drifts.size(); ++i)
        summary.lines.push_back("drift J" + std::to_string(i) + " = " + fmt_double(report.drifts[i]));
    if (report.has_control)
        summary.lines.push_back("drift control = " + fmt_double(report.control_drift));
    if (report.blew_up)
        summary.lines.push_back("blow-up detected at t = " + fmt_double(report.blowup_time));
    summary.pass = report.pass;
    if (!summary.pass) summary.failed_check = "conservation";
}

void run_findim(const RunConfig& cfg, std::uint64_t seed, const std::filesystem::path& out_dir,
                RunSummary& summary) {
    const FindimConfig& fc = cfg.findim;
    json report;
    report["mode"] = fc.mode;

    if (fc.mode == "search") {
        findim::SearchOutcome outcome = findim::oracle_search(fc.n, fc.max_degree, fc.c_grid);
        report["check"] = "oracle_search";
        report["model"] = "canonical R^" + std::to_string(fc.n);
        report["generators_tested"] = outcome.generators_tested;
        report["systems_solved"] = outcome.systems_solved;
        report["note"] = outcome.note;
        report["found"] = outcome.instance.has_value();
        summary.pass = true;
        if (outcome.instance) {
            json inst = instance_to_json(*outcome.instance);
            report["instance"] = inst;
            write_file(out_dir, "instance.json", inst.dump(2) + "\n", summary);
            // Closing the loop: the found witness must satisfy the checks.
            findim::Theorem1Report verify =
                findim::fd_verify_theorem1(*outcome.instance, fc.depth, fc.points, seed);
            report["closure"] = {{"eq_residual_max", verify.eq6_max},
                                 {"defect2_max", verify.defect2_max},
                                 {"pairwise_max", verify.pairwise_max},
                                 {"pass", verify.pass()}};
            summary.pass = verify.pass();
            if (!summary.pass) summary.failed_check = "oracle_closure";
            summary.lines.push_back("instance found: E nonzero shear, c = " +
                                    rat_str(outcome.instance->c));
        } else {
            summary.lines.push_back(outcome.note);
        }
    } else {
        findim::Instance inst = fc.instance ? *fc.instance : default_findim_instance();
        findim::Theorem1Report r = findim::fd_verify_theorem1(inst, fc.depth, fc.points, seed);
        report["check"] = "theorem1";
        report["model"] = "canonical R^" + std::to_string(inst.n);
        report["indices"] = json::array({r.depth, r.points});
        report["eq_residual_max"] = r.eq6_max;
        report["defect2_max"] = r.defect2_max;
        report["pairwise_max"] = r.pairwise_max;
        report["tolerances"] = {{"eq_residual", r.tol_eq6},
                                {"defect2", r.tol_defect2},
                                {"pairwise", r.tol_pairwise}};
        report["residual_is_zero"] = r.pass();
        report["pass"] = r.pass();
        summary.pass = r.pass();
        if (!summary.pass) summary.failed_check = "theorem1";
        summary.lines.push_back("eq residual max = " + fmt_double(r.eq6_max));
        summary.lines.push_back("defect2 max = " + fmt_double(r.defect2_max));
        summary.lines.push_back("pairwise bracket max = " + fmt_double(r.pairwise_max));
    }
    write_file(out_dir, "findim_report.json", report.dump(2) + "\n", summary);
}

}  // namespace

RunSummary run_config(const RunConfig& cfg, const RunOverrides& overrides) {
    std::string command = overrides.command.empty() ? cfg.command : overrides.command;
    if (command.empty())
        throw Error(Errc::ConfigInvalid, "no command given (config `command` or CLI subcommand)");
    std::uint64_t seed = overrides.seed >= 0 ? static_cast<std::uint64_t>(overrides.seed) : cfg.seed;
    int depth = overrides.depth >= 0 ? overrides.depth : cfg.depth;
    std::filesystem::path out_dir = overrides.out_dir.empty() ? cfg.out_dir : overrides.out_dir;

    RunSummary summary;
    if (command == "ladder")
        run_ladder(cfg, depth, out_dir, summary);
    else if (command == "verify")
        run_verify(cfg, depth, seed, out_dir, summary);
    else if (command == "simulate")
        run_simulate(cfg, out_dir, summary);
    else if (command == "findim")
        run_findim(cfg, seed, out_dir, summary);
    else
        throw Error(Errc::ConfigInvalid, "unknown command: " + command);

    json j;
    j["command"] = command;
    j["model"] = cfg.has_model ? cfg.model.name : "";
    j["seed"] = seed;
    j["pass"] = summary.pass;
    if (!summary.pass) j["failed_check"] = summary.failed_check;
    j["lines"] = summary.lines;
    j["files"] = summary.files;
    j["out_dir"] = out_dir.string();
    summary.summary_json = j.dump(2) + "\n";
    return summary;
}

RunSummary run_config_text(const std::string& config_json, const RunOverrides& overrides) {
    return run_config(parse_config(config_json), overrides);
}

}  // namespace lenard
