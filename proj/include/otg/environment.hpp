#pragma once

#include <optional>
#include <vector>

#include "otg/geometry.hpp"
#include "otg/random.hpp"

namespace otg {

enum class ObstacleKind { Static, Spawned, Adversarial };

struct Obstacle {
    int id = 0;
    Box box;
    ObstacleKind kind = ObstacleKind::Static;
};

enum class CaseTag { Case1, Case2a, Case2b, Case3, Case4 };

/// Parameters of one distortion regime. `spawn_count` obstacles of
/// half-extent `half_extent` appear per distortion in the spawning cases;
/// `step_amplitude` is the random-walk bound for adversarial motion.
/// `protect_planned` extends the case-3/4 no-spawn zone from the covered
/// path to the planned remainder as well.
struct DistortionCase {
    CaseTag tag = CaseTag::Case1;
    int spawn_count = 3;
    Vec half_extent;
    double step_amplitude = 0.2;
    bool protect_planned = false;
};

/// Immutable snapshot of the workspace and its obstacle set. `distort`
/// produces the next version; snapshots are safe to share.
struct Environment {
    Box workspace;
    std::vector<Obstacle> obstacles;
    Box start_region;
    Box goal_region;
    std::optional<Box> spawn_region;
    int version = 0;
    int next_obstacle_id = 0;

    /// True iff the probe box intersects any obstacle box (closed overlap).
    bool is_obstacle(const Box& probe) const;

    /// True iff the point lies inside (or on the boundary of) an obstacle.
    bool point_blocked(const Vec& p) const;
};

/// One random-walk move of an adversarial obstacle: in 2D the center moves
/// by (2*R([-h,h]), R([-h,h])), in 3D by (R, R, R) with independent draws,
/// then the box is translated back inside the workspace if needed.
Obstacle adversarial_step(const Obstacle& ob, double h, RandomSource& rs, const Box& workspace);

/// Deterministic core of adversarial_step with the draws supplied, for
/// callers that stub the random source.
Obstacle apply_adversarial_delta(const Obstacle& ob, const Vec& delta, const Box& workspace);

/// Number of retries per spawn / move before it is skipped.
inline constexpr int kDistortRetryCap = 100;

/// Produce the next environment version under the given case. `covered`
/// holds every agent state visited so far (last entry = current state;
/// entries may carry trailing non-position components, which are ignored);
/// `grid` supplies the cell geometry used for path protection.
Environment distort(const Environment& env, const DistortionCase& dc,
                    const std::vector<Vec>& covered, const GridSpec& grid,
                    RandomSource& rs);

} // namespace otg
