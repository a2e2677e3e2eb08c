#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "otg/scenario.hpp"

namespace fs = std::filesystem;

namespace {

int status_exit_code(otg::RunStatus s) {
    switch (s) {
    case otg::RunStatus::ReachedGoal: return 0;
    case otg::RunStatus::RoadBlocked: return 2;
    case otg::RunStatus::ReplanCapExceeded: return 3;
    }
    return 1;
}

void print_report(const std::string& name, const otg::RunReport& r) {
    std::printf("%-24s %-20s replans=%-3d steps=%-5d path=%.2f versions=%d wall=%.3fs\n",
                name.c_str(), otg::to_string(r.status), r.replans, r.steps, r.path_length,
                r.env_versions, r.wall_seconds);
}

struct RunArgs {
    std::string scenario_path;
    std::string out_dir = "out";
    std::string frames_dir;
    std::string schedule;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string labels_path;
};

otg::ExecuteOptions make_options(const RunArgs& args) {
    otg::ExecuteOptions opts;
    opts.out_dir = args.out_dir;
    if (!args.frames_dir.empty()) opts.frames_dir = args.frames_dir;
    if (args.seed_set) opts.seed_override = args.seed;
    if (args.schedule == "literal") opts.schedule_override = otg::Schedule::Literal;
    if (args.schedule == "constant") opts.schedule_override = otg::Schedule::Constant;
    return opts;
}

int cmd_run(const RunArgs& args) {
    const otg::Scenario sc = otg::load_scenario(args.scenario_path);
    if (!args.labels_path.empty()) {
        const otg::GridSpec grid = sc.grid();
        const otg::Environment env = sc.environment();
        const otg::LabelGrid lg =
            otg::build_labels(env, grid, grid.cell_of_point(sc.goal));
        std::ofstream out(args.labels_path, std::ios::binary | std::ios::trunc);
        out << lg.to_text();
    }
    const otg::RunReport report = otg::execute(sc, make_options(args));
    print_report(sc.name, report);
    return status_exit_code(report.status);
}

int cmd_validate(const std::string& path) {
    const otg::Scenario sc = otg::load_scenario(path);
    std::printf("%s: valid (%zuD, %zu obstacles, mode %s)\n", sc.name.c_str(),
                sc.workspace.dim(), sc.obstacles.size(),
                sc.config.mode.kinodynamic ? "kinodynamic" : "geometric");
    return 0;
}

int cmd_batch(const RunArgs& args) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(args.scenario_path))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        std::fprintf(stderr, "batch: no .json scenarios in %s\n", args.scenario_path.c_str());
        return 1;
    }

    struct Result {
        std::string name;
        otg::RunReport report;
        std::string error;
    };
    std::vector<Result> results(files.size());

    // Runs are independent; spread them over a small worker pool.
    std::mutex next_mutex;
    std::size_t next = 0;
    auto worker = [&] {
        while (true) {
            std::size_t mine;
            {
                std::lock_guard lock(next_mutex);
                if (next >= files.size()) return;
                mine = next++;
            }
            Result& r = results[mine];
            r.name = files[mine].stem().string();
            try {
                const otg::Scenario sc = otg::load_scenario(files[mine]);
                r.name = sc.name;
                r.report = otg::execute(sc, make_options(args));
            } catch (const std::exception& e) {
                r.error = e.what();
            }
        }
    };
    const unsigned n_threads =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                           static_cast<unsigned>(files.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    bool failed = false;
    for (const Result& r : results) {
        if (!r.error.empty()) {
            std::printf("%-24s ERROR: %s\n", r.name.c_str(), r.error.c_str());
            failed = true;
        } else {
            print_report(r.name, r.report);
        }
    }
    return failed ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"on-the-go replanning over a wavefront grid planner"};
    app.require_subcommand(1);

    RunArgs args;

    CLI::App* run_cmd = app.add_subcommand("run", "run one scenario");
    run_cmd->add_option("scenario", args.scenario_path, "scenario JSON file")->required();
    run_cmd->add_option("--seed", args.seed, "override the scenario seed")
        ->each([&](const std::string&) { args.seed_set = true; });
    run_cmd->add_option("--out", args.out_dir, "output directory for logs (default: out)");
    run_cmd->add_option("--frames", args.frames_dir, "emit one SVG frame per replan boundary");
    run_cmd->add_option("--schedule", args.schedule, "override the schedule")
        ->check(CLI::IsMember({"literal", "constant"}));
    run_cmd->add_option("--dump-labels", args.labels_path,
                        "write the version-0 label grid as a text matrix");

    CLI::App* validate_cmd = app.add_subcommand("validate", "validate a scenario file");
    std::string validate_path;
    validate_cmd->add_option("scenario", validate_path, "scenario JSON file")->required();

    CLI::App* batch_cmd = app.add_subcommand("batch", "run every scenario in a directory");
    batch_cmd->add_option("dir", args.scenario_path, "directory of scenario JSON files")
        ->required();
    batch_cmd->add_option("--out", args.out_dir, "output directory for logs (default: out)");
    batch_cmd->add_option("--schedule", args.schedule, "override the schedule")
        ->check(CLI::IsMember({"literal", "constant"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) return cmd_run(args);
        if (validate_cmd->parsed()) return cmd_validate(validate_path);
        if (batch_cmd->parsed()) return cmd_batch(args);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
