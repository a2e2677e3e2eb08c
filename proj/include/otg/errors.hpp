#pragma once

#include <stdexcept>
#include <string>

namespace otg {

/// Expected planner failure modes; the replanning loop turns these into
/// run outcomes instead of aborting.
enum class PlanErrorKind { StartUnreachable, GoalBlocked, SteeringFailed };

class PlanError : public std::runtime_error {
public:
    PlanError(PlanErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    PlanErrorKind kind() const { return kind_; }

private:
    PlanErrorKind kind_;
};

} // namespace otg
