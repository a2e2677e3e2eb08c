#include "otg/onthego.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace otg {

const char* to_string(RunStatus s) {
    switch (s) {
    case RunStatus::ReachedGoal: return "reached_goal";
    case RunStatus::RoadBlocked: return "road_blocked";
    case RunStatus::ReplanCapExceeded: return "replan_cap_exceeded";
    }
    return "unknown";
}

std::int64_t schedule_mul(std::int64_t t, std::int64_t i) {
    if (t > std::numeric_limits<std::int64_t>::max() / i)
        return std::numeric_limits<std::int64_t>::max();
    return t * i;
}

namespace {

const char* plan_error_name(PlanErrorKind k) {
    switch (k) {
    case PlanErrorKind::StartUnreachable: return "start_unreachable";
    case PlanErrorKind::GoalBlocked: return "goal_blocked";
    case PlanErrorKind::SteeringFailed: return "steering_failed";
    }
    return "unknown";
}

bool adversarial_case(CaseTag tag) { return tag == CaseTag::Case3 || tag == CaseTag::Case4; }

} // namespace

RunOutcome run(const Vec& x0, const Vec& xg, const Environment& env0, const GridSpec& grid,
               const RunConfig& cfg) {
    if (cfg.distortion_time < 1) throw std::invalid_argument("run: distortion_time must be >= 1");
    if (cfg.max_replans < 1) throw std::invalid_argument("run: max_replans must be >= 1");
    if (cfg.mode.kinodynamic && grid.dim() != 3)
        throw std::invalid_argument("run: kinodynamic mode requires a 3D workspace");
    if (env0.version != 0) throw std::invalid_argument("run: environment must start at version 0");

    const Vec start_pos = x0.prefix(grid.dim());
    if (!env0.workspace.contains(start_pos) || !env0.workspace.contains(xg))
        throw std::invalid_argument("run: start or goal outside the workspace");
    if (env0.point_blocked(start_pos) || env0.point_blocked(xg))
        throw std::invalid_argument("run: start or goal lies inside an obstacle");
    const CellIndex goal_cell = grid.cell_of_point(xg);
    if (env0.is_obstacle(grid.cell_box(grid.cell_of_point(start_pos))))
        throw std::invalid_argument("run: start cell is blocked at version 0");
    if (env0.is_obstacle(grid.cell_box(goal_cell)))
        throw std::invalid_argument("run: goal cell is blocked at version 0");

    RandomSource rng(cfg.seed);
    Environment env = env0;

    RunOutcome out;
    out.env_history.push_back(env);

    Vec state = cfg.mode.kinodynamic && x0.dim() == grid.dim()
                    ? Vec{x0[0], x0[1], x0[2], 0.0, 0.0, 0.0}
                    : x0;
    out.covered.states.push_back(state);
    out.covered.cells.push_back(grid.cell_of_point(state.prefix(grid.dim())));
    out.steps.push_back({0, 0, env.version, state});

    std::int64_t t_current = cfg.distortion_time;
    int iter = 1;
    int step_count = 0;

    while (true) {
        if (out.replans >= cfg.max_replans) {
            out.status = RunStatus::ReplanCapExceeded;
            break;
        }
        out.replans += 1;

        ReplanRecord rec;
        rec.replan = out.replans;
        rec.iter = iter;
        rec.t_current = t_current;
        rec.env_version = env.version;

        bool planned = false;
        Trajectory traj;
        try {
            traj = plan(env, state, xg, grid.eta(), cfg.mode);
            planned = true;
            rec.plan_hops = traj.hops();
            rec.planned_states = traj.states;
            rec.result = "ok";
        } catch (const PlanError& e) {
            rec.result = plan_error_name(e.kind());
        }

        int executed = 0;
        if (planned) {
            const std::size_t limit =
                std::min<std::int64_t>(t_current, static_cast<std::int64_t>(traj.hops()));
            for (std::size_t j = 1; j <= limit; ++j) {
                state = traj.states[j];
                out.covered.states.push_back(state);
                out.covered.cells.push_back(traj.cells[j]);
                out.steps.push_back({++step_count, out.replans, env.version, state});
            }
            executed = static_cast<int>(limit);
        }
        rec.executed = executed;
        out.replan_log.push_back(rec);

        if (planned && grid.cell_of_point(state.prefix(grid.dim())) == goal_cell) {
            out.status = RunStatus::ReachedGoal;
            break;
        }
        if (!planned && adversarial_case(cfg.distortion.tag)) {
            // Alg.-1 cases 3 and 4: losing the game ends the run.
            out.status = RunStatus::RoadBlocked;
            break;
        }
        // Cases 1-2 with a failed plan fall through: the next distortion may
        // clear the blockage, and the replan cap bounds the retries.

        std::vector<Vec> protect = out.covered.states;
        if (planned && cfg.distortion.protect_planned)
            protect.insert(protect.end(), traj.states.begin() + executed + 1, traj.states.end());
        env = distort(env, cfg.distortion, protect, grid, rng);
        out.env_history.push_back(env);

        if (env.is_obstacle(grid.cell_box(grid.cell_of_point(state.prefix(grid.dim()))))) {
            out.events.push_back({"collision_at_distortion", env.version});
            out.status = RunStatus::RoadBlocked;
            break;
        }

        if (cfg.schedule == Schedule::Literal) t_current = schedule_mul(t_current, iter);
        iter += 1;
    }

    out.covered.env_version = env.version;
    return out;
}

} // namespace otg
