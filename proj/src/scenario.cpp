#include "otg/scenario.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "otg/render.hpp"

namespace otg {

namespace {

using nlohmann::json;

Vec vec_from_json(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty())
        throw ScenarioError(field + ": expected a non-empty array of numbers");
    std::vector<double> comps;
    comps.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) throw ScenarioError(field + ": expected numbers");
        comps.push_back(v.get<double>());
    }
    return Vec(std::move(comps));
}

Box box_from_json(const json& j, const std::string& field) {
    if (!j.is_object() || !j.contains("lower") || !j.contains("upper"))
        throw ScenarioError(field + ": expected an object with 'lower' and 'upper'");
    try {
        return Box(vec_from_json(j.at("lower"), field + ".lower"),
                   vec_from_json(j.at("upper"), field + ".upper"));
    } catch (const std::invalid_argument& e) {
        throw ScenarioError(field + ": " + e.what());
    }
}

json vec_to_json(const Vec& v) { return json(v.comps()); }

json box_to_json(const Box& b) {
    return json{{"lower", vec_to_json(b.lower())}, {"upper", vec_to_json(b.upper())}};
}

ObstacleKind kind_from_string(const std::string& s) {
    if (s == "static") return ObstacleKind::Static;
    if (s == "spawned") return ObstacleKind::Spawned;
    if (s == "adversarial") return ObstacleKind::Adversarial;
    throw ScenarioError("obstacles[].kind: unknown kind '" + s + "'");
}

const char* kind_to_string(ObstacleKind k) {
    switch (k) {
    case ObstacleKind::Static: return "static";
    case ObstacleKind::Spawned: return "spawned";
    case ObstacleKind::Adversarial: return "adversarial";
    }
    return "unknown";
}

CaseTag tag_from_string(const std::string& s) {
    if (s == "case1") return CaseTag::Case1;
    if (s == "case2a") return CaseTag::Case2a;
    if (s == "case2b") return CaseTag::Case2b;
    if (s == "case3") return CaseTag::Case3;
    if (s == "case4") return CaseTag::Case4;
    throw ScenarioError("case.tag: unknown tag '" + s + "'");
}

const char* tag_to_string(CaseTag t) {
    switch (t) {
    case CaseTag::Case1: return "case1";
    case CaseTag::Case2a: return "case2a";
    case CaseTag::Case2b: return "case2b";
    case CaseTag::Case3: return "case3";
    case CaseTag::Case4: return "case4";
    }
    return "unknown";
}

} // namespace

Environment Scenario::environment() const {
    Environment env;
    env.workspace = workspace;
    env.obstacles = obstacles;
    // Start and goal are configured as points; their regions are the
    // containing cells.
    const GridSpec g = grid();
    env.start_region = g.cell_box(g.cell_of_point(start));
    env.goal_region = g.cell_box(g.cell_of_point(goal));
    env.spawn_region = spawn_region;
    env.version = 0;
    env.next_obstacle_id = static_cast<int>(obstacles.size());
    return env;
}

Scenario scenario_from_json(const json& j) {
    if (!j.is_object()) throw ScenarioError("scenario: expected a JSON object");
    auto need = [&](const char* field) -> const json& {
        if (!j.contains(field)) throw ScenarioError(std::string(field) + ": missing");
        return j.at(field);
    };

    // defaults first so validate() sees the complete picture
    Vec eta = vec_from_json(need("eta"), "eta");
    Box workspace = box_from_json(need("workspace"), "workspace");

    Scenario sc{.name = need("name").get<std::string>(),
                .notes = j.value("notes", std::string{}),
                .workspace = workspace,
                .eta = eta,
                .start = vec_from_json(need("start"), "start"),
                .goal = vec_from_json(need("goal"), "goal"),
                .obstacles = {},
                .spawn_region = std::nullopt,
                .config = {}};

    if (j.contains("obstacles")) {
        int id = 0;
        for (const auto& ob : j.at("obstacles")) {
            Box raw = box_from_json(ob, "obstacles[]");
            const ObstacleKind kind = kind_from_string(ob.value("kind", "static"));
            Box clamped = [&] {
                try {
                    return clamp_into(raw, workspace);
                } catch (const std::invalid_argument&) {
                    throw ScenarioError("obstacles[]: obstacle larger than the workspace");
                }
            }();
            sc.obstacles.push_back({id++, std::move(clamped), kind});
        }
    }
    if (j.contains("spawn_region"))
        sc.spawn_region = box_from_json(j.at("spawn_region"), "spawn_region");

    const json& c = need("case");
    DistortionCase dc;
    dc.tag = tag_from_string(c.value("tag", "case1"));
    dc.spawn_count = c.value("spawn_count", 3);
    dc.half_extent = c.contains("half_extent")
                         ? vec_from_json(c.at("half_extent"), "case.half_extent")
                         : Vec(workspace.dim(), 0.4);
    dc.step_amplitude = c.value("step_amplitude", 0.2);
    dc.protect_planned = c.value("protect_planned", false);
    sc.config.distortion = dc;

    sc.config.distortion_time = j.value("distortion_time", 6);
    sc.config.max_replans = j.value("max_replans", 100);
    sc.config.seed = j.value("seed", std::uint64_t{0});

    const std::string schedule = j.value("schedule", "literal");
    if (schedule == "literal")
        sc.config.schedule = Schedule::Literal;
    else if (schedule == "constant")
        sc.config.schedule = Schedule::Constant;
    else
        throw ScenarioError("schedule: expected 'literal' or 'constant'");

    const std::string mode = j.value("mode", "geometric");
    if (mode == "kinodynamic") {
        sc.config.mode.kinodynamic = true;
        if (j.contains("steering")) {
            const json& st = j.at("steering");
            sc.config.mode.steering.horizon = st.value("horizon", 0.3);
            sc.config.mode.steering.rk4_substeps = st.value("rk4_substeps", 4);
            sc.config.mode.steering.control_grid = st.value("control_grid", 5);
        }
    } else if (mode != "geometric") {
        throw ScenarioError("mode: expected 'geometric' or 'kinodynamic'");
    }

    validate(sc);
    return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open scenario file: " + path.string());
    json j;
    try {
        j = json::parse(in, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw ScenarioError("parse error in " + path.string() + ": " + e.what());
    }
    return scenario_from_json(j);
}

json to_json(const Scenario& sc) {
    json obstacles = json::array();
    for (const Obstacle& ob : sc.obstacles) {
        json o = box_to_json(ob.box);
        o["kind"] = kind_to_string(ob.kind);
        obstacles.push_back(std::move(o));
    }
    json c{{"tag", tag_to_string(sc.config.distortion.tag)},
           {"spawn_count", sc.config.distortion.spawn_count},
           {"half_extent", vec_to_json(sc.config.distortion.half_extent)},
           {"step_amplitude", sc.config.distortion.step_amplitude},
           {"protect_planned", sc.config.distortion.protect_planned}};
    json j{{"name", sc.name},
           {"notes", sc.notes},
           {"workspace", box_to_json(sc.workspace)},
           {"eta", vec_to_json(sc.eta)},
           {"start", vec_to_json(sc.start)},
           {"goal", vec_to_json(sc.goal)},
           {"obstacles", std::move(obstacles)},
           {"case", std::move(c)},
           {"distortion_time", sc.config.distortion_time},
           {"max_replans", sc.config.max_replans},
           {"seed", sc.config.seed},
           {"schedule", sc.config.schedule == Schedule::Literal ? "literal" : "constant"},
           {"mode", sc.config.mode.kinodynamic ? "kinodynamic" : "geometric"}};
    if (sc.spawn_region) j["spawn_region"] = box_to_json(*sc.spawn_region);
    if (sc.config.mode.kinodynamic)
        j["steering"] = json{{"horizon", sc.config.mode.steering.horizon},
                             {"rk4_substeps", sc.config.mode.steering.rk4_substeps},
                             {"control_grid", sc.config.mode.steering.control_grid}};
    return j;
}

void validate(const Scenario& sc) {
    const std::size_t dim = sc.workspace.dim();
    auto check = [](bool ok, const std::string& msg) {
        if (!ok) throw ScenarioError(msg);
    };
    check(!sc.name.empty(), "name: must be non-empty");
    check(!sc.workspace.degenerate(), "workspace: must be nondegenerate");
    check(sc.eta.dim() == dim, "eta: dimension must match the workspace");
    for (std::size_t a = 0; a < dim; ++a) check(sc.eta[a] > 0.0, "eta: must be positive");
    check(sc.start.dim() == dim, "start: dimension must match the workspace");
    check(sc.goal.dim() == dim, "goal: dimension must match the workspace");
    check(sc.workspace.contains(sc.start), "start: outside the workspace");
    check(sc.workspace.contains(sc.goal), "goal: outside the workspace");

    for (const Obstacle& ob : sc.obstacles) {
        check(ob.box.dim() == dim, "obstacles[]: dimension must match the workspace");
        check(!ob.box.degenerate(), "obstacles[]: must be nondegenerate");
        check(sc.workspace.contains_box(ob.box), "obstacles[]: outside the workspace");
        check(!ob.box.contains(sc.start), "start: lies inside an obstacle");
        check(!ob.box.contains(sc.goal), "goal: lies inside an obstacle");
    }

    const DistortionCase& dc = sc.config.distortion;
    check(dc.spawn_count >= 0, "case.spawn_count: must be >= 0");
    check(dc.half_extent.dim() == dim, "case.half_extent: dimension must match the workspace");
    for (std::size_t a = 0; a < dim; ++a)
        check(dc.half_extent[a] > 0.0, "case.half_extent: must be positive");
    const bool needs_spawn_region =
        dc.tag == CaseTag::Case1 || dc.tag == CaseTag::Case2a || dc.tag == CaseTag::Case2b;
    if (needs_spawn_region)
        check(sc.spawn_region.has_value(), "spawn_region: required for cases 1 and 2");
    if (sc.spawn_region) {
        check(sc.spawn_region->dim() == dim, "spawn_region: dimension must match the workspace");
        check(sc.workspace.contains_box(*sc.spawn_region), "spawn_region: outside the workspace");
    }
    if (dc.tag == CaseTag::Case4)
        check(dc.step_amplitude > 0.0, "case.step_amplitude: must be positive for case 4");

    check(sc.config.distortion_time >= 1, "distortion_time: must be >= 1");
    check(sc.config.max_replans >= 1, "max_replans: must be >= 1");
    if (sc.config.mode.kinodynamic) {
        check(dim == 3, "mode: kinodynamic runs require a 3D workspace");
        const SteeringSpec& st = sc.config.mode.steering;
        check(st.horizon > 0.0, "steering.horizon: must be positive");
        check(st.rk4_substeps >= 1, "steering.rk4_substeps: must be >= 1");
        check(st.control_grid >= 2, "steering.control_grid: must be >= 2");
    }

    // Cell-level feasibility at version 0.
    const GridSpec g = sc.grid();
    const Environment env = sc.environment();
    check(!env.is_obstacle(g.cell_box(g.cell_of_point(sc.start))),
          "start: its grid cell intersects an obstacle");
    check(!env.is_obstacle(g.cell_box(g.cell_of_point(sc.goal))),
          "goal: its grid cell intersects an obstacle");
}

std::string steps_to_jsonl(const RunOutcome& outcome) {
    std::ostringstream out;
    for (const StepRecord& s : outcome.steps) {
        json j{{"step", s.step},
               {"replan", s.replan},
               {"env_version", s.env_version},
               {"state", vec_to_json(s.state)}};
        out << j.dump() << '\n';
    }
    return out.str();
}

namespace {

json obstacle_to_json(const Obstacle& ob) {
    json j = box_to_json(ob.box);
    j["id"] = ob.id;
    j["kind"] = kind_to_string(ob.kind);
    return j;
}

} // namespace

json summary_to_json(const Scenario& sc, std::uint64_t seed, const RunOutcome& outcome,
                     const RunReport& report) {
    json env_history = json::array();
    for (const Environment& env : outcome.env_history) {
        json obs = json::array();
        for (const Obstacle& ob : env.obstacles) obs.push_back(obstacle_to_json(ob));
        env_history.push_back(json{{"version", env.version}, {"obstacles", std::move(obs)}});
    }
    json replans = json::array();
    for (const ReplanRecord& r : outcome.replan_log) {
        replans.push_back(json{{"replan", r.replan},
                               {"iter", r.iter},
                               {"t_current", r.t_current},
                               {"plan_hops", r.plan_hops},
                               {"executed", r.executed},
                               {"env_version", r.env_version},
                               {"result", r.result}});
    }
    json events = json::array();
    for (const RunEvent& e : outcome.events)
        events.push_back(json{{"kind", e.kind}, {"env_version", e.env_version}});

    // No wall-clock entry: summaries must be byte-identical across runs
    // with the same seed.
    return json{{"scenario", sc.name},
                {"seed", seed},
                {"status", to_string(outcome.status)},
                {"steps", report.steps},
                {"replans", report.replans},
                {"path_length", report.path_length},
                {"env_versions", report.env_versions},
                {"events", std::move(events)},
                {"replan_log", std::move(replans)},
                {"env_history", std::move(env_history)}};
}

RunReport execute(const Scenario& sc, const ExecuteOptions& opts, RunOutcome* outcome_out) {
    Scenario run_sc = sc;
    if (opts.seed_override) run_sc.config.seed = *opts.seed_override;
    if (opts.schedule_override) run_sc.config.schedule = *opts.schedule_override;

    const GridSpec grid = run_sc.grid();
    const Environment env = run_sc.environment();

    const auto t0 = std::chrono::steady_clock::now();
    RunOutcome outcome = run(run_sc.start, run_sc.goal, env, grid, run_sc.config);

    RunReport report;
    report.status = outcome.status;
    report.steps = static_cast<int>(outcome.steps.size());
    report.replans = outcome.replans;
    report.env_versions = static_cast<int>(outcome.env_history.size());
    for (std::size_t i = 0; i + 1 < outcome.covered.states.size(); ++i)
        report.path_length += distance(outcome.covered.states[i].prefix(grid.dim()),
                                       outcome.covered.states[i + 1].prefix(grid.dim()));

    if (opts.write_files) {
        std::filesystem::create_directories(opts.out_dir);
        {
            std::ofstream steps(opts.out_dir / (run_sc.name + ".steps.jsonl"),
                                std::ios::binary | std::ios::trunc);
            steps << steps_to_jsonl(outcome);
        }
        {
            std::ofstream summary(opts.out_dir / (run_sc.name + ".summary.json"),
                                  std::ios::binary | std::ios::trunc);
            summary << summary_to_json(run_sc, run_sc.config.seed, outcome, report).dump(2)
                    << '\n';
        }
    }

    if (opts.frames_dir) {
        std::filesystem::create_directories(*opts.frames_dir);
        // One frame per replan boundary (environment at plan time, covered
        // prefix, planned remainder), plus the final frame.
        std::size_t covered_count = 1;
        for (const ReplanRecord& r : outcome.replan_log) {
            std::vector<Vec> covered(outcome.covered.states.begin(),
                                     outcome.covered.states.begin() +
                                         static_cast<long>(covered_count));
            const std::vector<Vec>& planned = r.planned_states;
            char fname[64];
            std::snprintf(fname, sizeof fname, "%s_frame_%04d.svg", run_sc.name.c_str(), r.replan);
            std::ofstream frame(*opts.frames_dir / fname, std::ios::binary | std::ios::trunc);
            frame << render_frame(outcome.env_history[static_cast<std::size_t>(r.env_version)],
                                  covered, planned, run_sc.start, run_sc.goal);
            covered_count += static_cast<std::size_t>(r.executed);
        }
        std::ofstream final_frame(*opts.frames_dir / (run_sc.name + "_frame_final.svg"),
                                  std::ios::binary | std::ios::trunc);
        final_frame << render_frame(outcome.env_history.back(), outcome.covered.states, {},
                                    run_sc.start, run_sc.goal);
    }

    const auto t1 = std::chrono::steady_clock::now();
    report.wall_seconds = std::chrono::duration<double>(t1 - t0).count();

    if (outcome_out) *outcome_out = std::move(outcome);
    return report;
}

} // namespace otg
