#pragma once

#include <array>
#include <vector>

#include "otg/environment.hpp"
#include "otg/errors.hpp"
#include "otg/geometry.hpp"

namespace otg {

inline constexpr double kYawMax = 0.5235987755982988;    // pi/6
inline constexpr double kPitchMax = 0.5235987755982988;  // pi/6
inline constexpr double kSpeedMax = 0.5;
inline constexpr double kYawRateMax = 1.5707963267948966;    // pi/2
inline constexpr double kPitchRateMax = 1.5707963267948966;  // pi/2
inline constexpr double kAccelMax = 1.0;

/// Six-state drone: position, yaw, pitch, signed speed. Yaw and pitch are
/// bounded by pi/6 and speed by 1/2; integration keeps the bounds by
/// saturation.
struct DroneState {
    double x = 0.0, y = 0.0, z = 0.0;
    double psi = 0.0;    // yaw, rotation about the vertical axis
    double theta = 0.0;  // pitch, rotation about the lateral axis
    double v = 0.0;      // signed linear speed

    Vec position() const { return Vec{x, y, z}; }
    /// Full state as a 6-vector (x, y, z, psi, theta, v).
    Vec as_vec() const { return Vec{x, y, z, psi, theta, v}; }
    static DroneState from_vec(const Vec& s);
};

/// Piecewise-constant control over one steering segment.
struct ControlInput {
    double omega = 0.0;  // yaw rate
    double alpha = 0.0;  // pitch rate
    double a = 0.0;      // linear acceleration
};

/// Fixed-horizon steering configuration.
struct SteeringSpec {
    double horizon = 0.3;
    int rk4_substeps = 4;
    int control_grid = 5;  // samples per control axis, endpoints included
};

/// Right-hand side of the drone ODE:
/// (v cos(psi) cos(theta), v sin(psi) cos(theta), v sin(theta), omega, alpha, a).
std::array<double, 6> derivative(const DroneState& s, const ControlInput& u);

/// Classic RK4 over the spec horizon with `rk4_substeps` fixed steps.
/// After each substep psi/theta/v are saturated to their boxes and the
/// position is clamped to the workspace.
DroneState integrate(const DroneState& s, const ControlInput& u, const SteeringSpec& spec,
                     const Box& workspace);

/// Same integration, returning all substep states (first entry = s).
std::vector<DroneState> integrate_path(const DroneState& s, const ControlInput& u,
                                       const SteeringSpec& spec, const Box& workspace);

/// Steer toward a neighboring grid cell by exhaustive control sampling.
/// The zero input is evaluated first, then the control grid in
/// lexicographic (omega, alpha, a) order; a candidate is valid when every
/// substep position lies in a non-obstacle cell. Among valid candidates
/// whose endpoint lands in `target` the one closest to the target
/// representative point wins; if none lands there, the closest valid
/// endpoint is returned instead (progress fallback). Throws
/// PlanError(SteeringFailed) when no candidate is valid.
DroneState steer_to_cell(const DroneState& s, const Box& target, const Environment& env,
                         const GridSpec& grid, const SteeringSpec& spec);

} // namespace otg
