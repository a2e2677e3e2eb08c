#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "otg/environment.hpp"
#include "otg/errors.hpp"
#include "otg/geometry.hpp"
#include "otg/kinodynamics.hpp"

namespace otg {

/// Wavefront labels over a grid: 0 = unlabeled, 1 = obstacle cell,
/// 2 = goal cell, n >= 3 = Moore-hop distance to the goal plus 2.
struct LabelGrid {
    static constexpr std::uint32_t kUnlabeled = 0;
    static constexpr std::uint32_t kObstacle = 1;
    static constexpr std::uint32_t kGoal = 2;

    GridSpec grid;
    std::vector<std::uint32_t> labels;  // indexed by grid.flat

    std::uint32_t at(const CellIndex& c) const { return labels[grid.flat(c)]; }

    /// Debug dump: space-separated integers, row-major (last axis varies
    /// along a line, leading-axis blocks separated by blank lines).
    std::string to_text() const;
};

/// Label obstacle cells, then breadth-first flood from the goal cell over
/// the Moore-connected free cells. Throws PlanError(GoalBlocked) when the
/// goal cell itself is an obstacle cell.
LabelGrid build_labels(const Environment& env, const GridSpec& grid, const CellIndex& goal);

/// Planner mode: geometric label descent, or label descent driven through
/// the drone dynamics.
struct PlanMode {
    bool kinodynamic = false;
    SteeringSpec steering{};
};

/// Agent state sequence with the cell each state occupies. Geometric
/// trajectories carry cell representative points after the start state;
/// kinodynamic trajectories carry full 6-component drone states.
struct Trajectory {
    std::vector<Vec> states;
    std::vector<CellIndex> cells;
    int env_version = 0;

    std::size_t hops() const { return states.empty() ? 0 : states.size() - 1; }
};

/// Plan from x0 to xg over the discretized workspace. In kinodynamic mode
/// x0 may be a 6-component drone state (or a position, extended with zero
/// attitude and speed). Throws PlanError on StartUnreachable, GoalBlocked,
/// or SteeringFailed.
Trajectory plan(const Environment& env, const Vec& x0, const Vec& xg, const Vec& eta,
                const PlanMode& mode);

} // namespace otg
