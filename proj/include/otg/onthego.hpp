#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "otg/environment.hpp"
#include "otg/geometry.hpp"
#include "otg/wavefront.hpp"

namespace otg {

enum class RunStatus { ReachedGoal, RoadBlocked, ReplanCapExceeded };

enum class Schedule { Literal, Constant };

/// Replanning-loop configuration. `distortion_time` is the number of
/// motion steps executed per environment version; under the literal
/// schedule the executed segment grows as T * (i-1)! with the iteration
/// counter, under the constant schedule it stays at T.
struct RunConfig {
    DistortionCase distortion{};
    int distortion_time = 6;
    int max_replans = 100;
    PlanMode mode{};
    std::uint64_t seed = 0;
    Schedule schedule = Schedule::Literal;
};

struct StepRecord {
    int step = 0;
    int replan = 0;  // 0 for the initial state, k for steps under plan k
    int env_version = 0;
    Vec state;
};

struct ReplanRecord {
    int replan = 0;
    int iter = 0;                    // loop counter i at plan time
    std::int64_t t_current = 0;      // schedule value before capping
    std::size_t plan_hops = 0;       // 0 when the plan attempt failed
    int executed = 0;
    int env_version = 0;
    std::string result;              // ok | start_unreachable | goal_blocked | steering_failed
    std::vector<Vec> planned_states; // full planned trajectory (empty on failure)
};

struct RunEvent {
    std::string kind;
    int env_version = 0;
};

struct RunOutcome {
    RunStatus status = RunStatus::ReplanCapExceeded;
    Trajectory covered;
    int replans = 0;
    std::vector<Environment> env_history;  // snapshot per version, index = version
    std::vector<StepRecord> steps;
    std::vector<ReplanRecord> replan_log;
    std::vector<RunEvent> events;
};

const char* to_string(RunStatus s);

/// Saturating product used by the literal schedule; the factorial growth
/// overflows int64 long before max_replans otherwise.
std::int64_t schedule_mul(std::int64_t t, std::int64_t i);

/// Alternate planning, partial execution over the distortion time, and
/// environment distortion until the goal cell is reached, the road is
/// blocked, or the replan cap is hit. Throws std::invalid_argument when
/// the start or goal is invalid at version 0.
RunOutcome run(const Vec& x0, const Vec& xg, const Environment& env, const GridSpec& grid,
               const RunConfig& cfg);

} // namespace otg
