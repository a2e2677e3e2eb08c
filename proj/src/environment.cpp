#include "otg/environment.hpp"

#include <stdexcept>

namespace otg {

bool Environment::is_obstacle(const Box& probe) const {
    for (const Obstacle& ob : obstacles)
        if (intersects(probe, ob.box)) return true;
    return false;
}

bool Environment::point_blocked(const Vec& p) const {
    for (const Obstacle& ob : obstacles)
        if (ob.box.contains(p)) return true;
    return false;
}

Obstacle apply_adversarial_delta(const Obstacle& ob, const Vec& delta, const Box& workspace) {
    Obstacle moved = ob;
    moved.box = clamp_into(shift(delta, ob.box), workspace);
    return moved;
}

Obstacle adversarial_step(const Obstacle& ob, double h, RandomSource& rs, const Box& workspace) {
    if (ob.kind != ObstacleKind::Adversarial)
        throw std::invalid_argument("adversarial_step: obstacle is not adversarial");
    const std::size_t dim = ob.box.dim();
    Vec delta(dim);
    if (dim == 2) {
        delta[0] = 2.0 * rs.uniform(-h, h);
        delta[1] = rs.uniform(-h, h);
    } else if (dim == 3) {
        for (std::size_t a = 0; a < 3; ++a) delta[a] = rs.uniform(-h, h);
    } else {
        throw std::invalid_argument("adversarial_step: only 2D and 3D obstacles supported");
    }
    return apply_adversarial_delta(ob, delta, workspace);
}

namespace {

// Inflated covered path plus the agent's current cell: the region that
// case-3/4 distortions must leave free.
std::vector<Box> protected_boxes(const std::vector<Vec>& covered, const GridSpec& grid) {
    if (covered.empty())
        throw std::invalid_argument("distort: covered path must contain the current state");
    std::vector<Box> boxes;
    boxes.reserve(covered.size() + 1);
    for (const Vec& p : covered)
        boxes.push_back(ball(p.prefix(grid.dim()), grid.eta()));
    const Vec current = covered.back().prefix(grid.dim());
    boxes.push_back(grid.cell_box(grid.cell_of_point(current)));
    return boxes;
}

bool hits_any(const Box& b, const std::vector<Box>& boxes) {
    for (const Box& p : boxes)
        if (intersects(b, p)) return true;
    return false;
}

Vec draw_center(const Box& region, RandomSource& rs) {
    Vec c(region.dim());
    for (std::size_t a = 0; a < region.dim(); ++a)
        c[a] = rs.uniform(region.lower()[a], region.upper()[a]);
    return c;
}

void spawn_in_region(Environment& env, const Box& region, const DistortionCase& dc,
                     RandomSource& rs) {
    for (int k = 0; k < dc.spawn_count; ++k) {
        const Vec center = draw_center(region, rs);
        Box box = clamp_into(ball(center, dc.half_extent), env.workspace);
        env.obstacles.push_back({env.next_obstacle_id++, std::move(box), ObstacleKind::Spawned});
    }
}

void spawn_protected(Environment& env, const DistortionCase& dc,
                     const std::vector<Box>& keep_free, RandomSource& rs) {
    for (int k = 0; k < dc.spawn_count; ++k) {
        for (int attempt = 0; attempt < kDistortRetryCap; ++attempt) {
            const Vec center = draw_center(env.workspace, rs);
            Box box = clamp_into(ball(center, dc.half_extent), env.workspace);
            if (!hits_any(box, keep_free)) {
                env.obstacles.push_back(
                    {env.next_obstacle_id++, std::move(box), ObstacleKind::Spawned});
                break;
            }
        }
        // retry cap exhausted: this spawn is skipped
    }
}

void move_adversarial(Environment& env, const DistortionCase& dc,
                      const std::vector<Box>& keep_free, RandomSource& rs) {
    for (Obstacle& ob : env.obstacles) {
        if (ob.kind != ObstacleKind::Adversarial) continue;
        for (int attempt = 0; attempt < kDistortRetryCap; ++attempt) {
            const Obstacle moved = adversarial_step(ob, dc.step_amplitude, rs, env.workspace);
            if (!hits_any(moved.box, keep_free)) {
                ob = moved;
                break;
            }
        }
        // retry cap exhausted: the move is skipped, obstacle stays put
    }
}

} // namespace

Environment distort(const Environment& env, const DistortionCase& dc,
                    const std::vector<Vec>& covered, const GridSpec& grid, RandomSource& rs) {
    Environment out = env;
    out.version += 1;
    switch (dc.tag) {
    case CaseTag::Case1:
    case CaseTag::Case2b: {
        if (!out.spawn_region)
            throw std::invalid_argument("distort: cases 1 and 2 require a spawn region");
        spawn_in_region(out, *out.spawn_region, dc, rs);
        break;
    }
    case CaseTag::Case2a: {
        if (!out.spawn_region)
            throw std::invalid_argument("distort: cases 1 and 2 require a spawn region");
        std::erase_if(out.obstacles,
                      [](const Obstacle& ob) { return ob.kind == ObstacleKind::Spawned; });
        spawn_in_region(out, *out.spawn_region, dc, rs);
        break;
    }
    case CaseTag::Case3: {
        spawn_protected(out, dc, protected_boxes(covered, grid), rs);
        break;
    }
    case CaseTag::Case4: {
        move_adversarial(out, dc, protected_boxes(covered, grid), rs);
        break;
    }
    }
    return out;
}

} // namespace otg
