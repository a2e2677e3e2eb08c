#include "otg/wavefront.hpp"

#include <cmath>
#include <cstdlib>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace otg {

std::string LabelGrid::to_text() const {
    std::ostringstream out;
    const std::size_t n = grid.cell_count();
    const std::size_t dim = grid.dim();
    const std::size_t row = static_cast<std::size_t>(grid.cells(dim - 1));
    const std::size_t block = dim >= 2 ? row * static_cast<std::size_t>(grid.cells(dim - 2)) : n;
    for (std::size_t f = 0; f < n; ++f) {
        if (f > 0) {
            if (f % block == 0)
                out << "\n\n";
            else if (f % row == 0)
                out << "\n";
            else
                out << ' ';
        }
        out << labels[f];
    }
    out << "\n";
    return out.str();
}

LabelGrid build_labels(const Environment& env, const GridSpec& grid, const CellIndex& goal) {
    if (!grid.valid(goal)) throw std::invalid_argument("build_labels: invalid goal cell");
    LabelGrid lg{grid, std::vector<std::uint32_t>(grid.cell_count(), LabelGrid::kUnlabeled)};
    for (std::size_t f = 0; f < lg.labels.size(); ++f)
        if (env.is_obstacle(grid.cell_box(grid.unflat(f)))) lg.labels[f] = LabelGrid::kObstacle;

    const std::size_t goal_flat = grid.flat(goal);
    if (lg.labels[goal_flat] == LabelGrid::kObstacle)
        throw PlanError(PlanErrorKind::GoalBlocked, "build_labels: goal cell is an obstacle cell");
    lg.labels[goal_flat] = LabelGrid::kGoal;

    std::deque<std::size_t> queue{goal_flat};
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        const std::uint32_t next_label = lg.labels[cur] + 1;
        for (const CellIndex& nb : grid.neighbors(grid.unflat(cur))) {
            const std::size_t f = grid.flat(nb);
            if (lg.labels[f] == LabelGrid::kUnlabeled) {
                lg.labels[f] = next_label;
                queue.push_back(f);
            }
        }
    }
    return lg;
}

namespace {

// Deterministic pick among the neighbors one label below the current cell:
// lexicographic preference for moves that reduce the per-axis index
// distance to the goal, then lowest index.
CellIndex descend_step(const LabelGrid& lg, const CellIndex& cur, const CellIndex& goal) {
    const std::uint32_t want = lg.at(cur) - 1;
    bool have = false;
    CellIndex best;
    std::vector<int> best_key;
    for (const CellIndex& nb : lg.grid.neighbors(cur)) {
        if (lg.at(nb) != want) continue;
        std::vector<int> key;
        key.reserve(2 * nb.dim());
        for (std::size_t a = 0; a < nb.dim(); ++a)
            key.push_back(std::abs(goal[a] - nb[a]) < std::abs(goal[a] - cur[a]) ? 0 : 1);
        for (std::size_t a = 0; a < nb.dim(); ++a) key.push_back(nb[a]);
        if (!have || key < best_key) {
            have = true;
            best = nb;
            best_key = std::move(key);
        }
    }
    if (!have)
        throw std::logic_error("descend_step: no neighbor one label below; labels inconsistent");
    return best;
}

Trajectory plan_geometric(const Environment& env, const GridSpec& grid, const LabelGrid& lg,
                          const Vec& x0, const CellIndex& start, const CellIndex& goal) {
    (void)env;
    Trajectory traj;
    traj.env_version = env.version;
    traj.states.push_back(x0);
    traj.cells.push_back(start);
    CellIndex cur = start;
    while (cur != goal) {
        cur = descend_step(lg, cur, goal);
        traj.states.push_back(grid.rep(cur));
        traj.cells.push_back(cur);
    }
    return traj;
}

Trajectory plan_kinodynamic(const Environment& env, const GridSpec& grid, const LabelGrid& lg,
                            const Vec& x0, const CellIndex& goal, const SteeringSpec& spec) {
    DroneState state{};
    if (x0.dim() == 6) {
        state = DroneState::from_vec(x0);
    } else if (x0.dim() == 3) {
        state.x = x0[0];
        state.y = x0[1];
        state.z = x0[2];
    } else {
        throw std::invalid_argument("plan: kinodynamic start must have 3 or 6 components");
    }

    Trajectory traj;
    traj.env_version = env.version;
    traj.states.push_back(state.as_vec());
    traj.cells.push_back(grid.cell_of_point(state.position()));

    // Steering may undershoot its target cell, so the descent re-anchors at
    // the cell actually reached before each segment. Guard against stalls.
    const std::size_t max_segments = 4 * grid.cell_count();
    while (true) {
        const CellIndex cur = grid.cell_of_point(state.position());
        if (cur == goal) break;
        if (traj.hops() >= max_segments)
            throw PlanError(PlanErrorKind::SteeringFailed,
                            "plan: steering made no progress within the segment budget");
        const std::uint32_t label = lg.at(cur);
        if (label <= LabelGrid::kObstacle)
            throw PlanError(PlanErrorKind::SteeringFailed,
                            "plan: steering left the labeled free region");
        const CellIndex target = descend_step(lg, cur, goal);
        state = steer_to_cell(state, grid.cell_box(target), env, grid, spec);
        traj.states.push_back(state.as_vec());
        traj.cells.push_back(grid.cell_of_point(state.position()));
    }
    return traj;
}

} // namespace

Trajectory plan(const Environment& env, const Vec& x0, const Vec& xg, const Vec& eta,
                const PlanMode& mode) {
    const GridSpec grid(env.workspace, eta);
    if (mode.kinodynamic && grid.dim() != 3)
        throw std::invalid_argument("plan: kinodynamic mode requires a 3D workspace");

    const Vec start_pos = x0.prefix(grid.dim());
    const CellIndex start = grid.cell_of_point(start_pos);
    const CellIndex goal = grid.cell_of_point(xg);
    const LabelGrid lg = build_labels(env, grid, goal);

    const std::uint32_t start_label = lg.at(start);
    if (start_label < LabelGrid::kGoal)
        throw PlanError(PlanErrorKind::StartUnreachable,
                        start_label == LabelGrid::kObstacle
                            ? "plan: start cell is an obstacle cell"
                            : "plan: no labeled path from start to goal");

    if (mode.kinodynamic) return plan_kinodynamic(env, grid, lg, x0, goal, mode.steering);
    return plan_geometric(env, grid, lg, start_pos, start, goal);
}

} // namespace otg
