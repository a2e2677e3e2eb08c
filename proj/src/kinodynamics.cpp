#include "otg/kinodynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace otg {

DroneState DroneState::from_vec(const Vec& s) {
    if (s.dim() != 6) throw std::invalid_argument("drone state requires 6 components");
    return DroneState{s[0], s[1], s[2], s[3], s[4], s[5]};
}

std::array<double, 6> derivative(const DroneState& s, const ControlInput& u) {
    const double cpsi = std::cos(s.psi);
    const double spsi = std::sin(s.psi);
    const double cth = std::cos(s.theta);
    const double sth = std::sin(s.theta);
    return {s.v * cpsi * cth, s.v * spsi * cth, s.v * sth, u.omega, u.alpha, u.a};
}

namespace {

std::array<double, 6> to_array(const DroneState& s) {
    return {s.x, s.y, s.z, s.psi, s.theta, s.v};
}

DroneState from_array(const std::array<double, 6>& a) {
    return DroneState{a[0], a[1], a[2], a[3], a[4], a[5]};
}

double clamp(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

DroneState saturate(DroneState s, const Box& workspace) {
    s.x = clamp(s.x, workspace.lower()[0], workspace.upper()[0]);
    s.y = clamp(s.y, workspace.lower()[1], workspace.upper()[1]);
    s.z = clamp(s.z, workspace.lower()[2], workspace.upper()[2]);
    s.psi = clamp(s.psi, -kYawMax, kYawMax);
    s.theta = clamp(s.theta, -kPitchMax, kPitchMax);
    s.v = clamp(s.v, -kSpeedMax, kSpeedMax);
    return s;
}

DroneState rk4_substep(const DroneState& s, const ControlInput& u, double h) {
    const auto y = to_array(s);
    const auto k1 = derivative(s, u);
    std::array<double, 6> y2, y3, y4;
    for (int i = 0; i < 6; ++i) y2[i] = y[i] + 0.5 * h * k1[i];
    const auto k2 = derivative(from_array(y2), u);
    for (int i = 0; i < 6; ++i) y3[i] = y[i] + 0.5 * h * k2[i];
    const auto k3 = derivative(from_array(y3), u);
    for (int i = 0; i < 6; ++i) y4[i] = y[i] + h * k3[i];
    const auto k4 = derivative(from_array(y4), u);
    std::array<double, 6> out;
    for (int i = 0; i < 6; ++i)
        out[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return from_array(out);
}

} // namespace

std::vector<DroneState> integrate_path(const DroneState& s, const ControlInput& u,
                                       const SteeringSpec& spec, const Box& workspace) {
    if (spec.rk4_substeps < 1) throw std::invalid_argument("rk4_substeps must be >= 1");
    if (spec.horizon <= 0.0) throw std::invalid_argument("horizon must be positive");
    if (workspace.dim() != 3) throw std::invalid_argument("drone workspace must be 3D");
    const double h = spec.horizon / spec.rk4_substeps;
    std::vector<DroneState> path;
    path.reserve(static_cast<std::size_t>(spec.rk4_substeps) + 1);
    path.push_back(s);
    DroneState cur = s;
    for (int k = 0; k < spec.rk4_substeps; ++k) {
        cur = saturate(rk4_substep(cur, u, h), workspace);
        path.push_back(cur);
    }
    return path;
}

DroneState integrate(const DroneState& s, const ControlInput& u, const SteeringSpec& spec,
                     const Box& workspace) {
    return integrate_path(s, u, spec, workspace).back();
}

namespace {

bool path_is_free(const std::vector<DroneState>& path, const Environment& env,
                  const GridSpec& grid) {
    // Collision model is cell-level: each substep position must sit in a
    // non-obstacle cell. Positions are already clamped to the workspace.
    for (std::size_t k = 1; k < path.size(); ++k) {
        const CellIndex c = grid.cell_of_point(path[k].position());
        if (env.is_obstacle(grid.cell_box(c))) return false;
    }
    return true;
}

} // namespace

DroneState steer_to_cell(const DroneState& s, const Box& target, const Environment& env,
                         const GridSpec& grid, const SteeringSpec& spec) {
    if (spec.control_grid < 2) throw std::invalid_argument("control_grid must be >= 2");
    const Vec target_rep = target.midpoint();

    std::vector<ControlInput> controls;
    controls.reserve(static_cast<std::size_t>(spec.control_grid) * spec.control_grid *
                         spec.control_grid +
                     1);
    controls.push_back(ControlInput{});  // zero input first, keeps a resting agent at rest
    const int g = spec.control_grid;
    auto sample = [g](double lo, double hi, int i) {
        return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(g - 1);
    };
    for (int io = 0; io < g; ++io)
        for (int ia = 0; ia < g; ++ia)
            for (int iacc = 0; iacc < g; ++iacc)
                controls.push_back(ControlInput{sample(-kYawRateMax, kYawRateMax, io),
                                                sample(-kPitchRateMax, kPitchRateMax, ia),
                                                sample(-kAccelMax, kAccelMax, iacc)});

    bool have_hit = false, have_any = false;
    double best_hit = std::numeric_limits<double>::infinity();
    double best_any = std::numeric_limits<double>::infinity();
    DroneState hit_state, any_state;
    for (const ControlInput& u : controls) {
        const auto path = integrate_path(s, u, spec, env.workspace);
        if (!path_is_free(path, env, grid)) continue;
        const DroneState& end = path.back();
        const double d = distance(end.position(), target_rep);
        if (!have_any || d < best_any) {
            have_any = true;
            best_any = d;
            any_state = end;
        }
        if (target.contains(end.position()) && (!have_hit || d < best_hit)) {
            have_hit = true;
            best_hit = d;
            hit_state = end;
        }
    }
    if (have_hit) return hit_state;
    if (have_any) return any_state;
    throw PlanError(PlanErrorKind::SteeringFailed,
                    "steer_to_cell: every control candidate collides");
}

} // namespace otg
