#pragma once

#include <string>
#include <vector>

#include "otg/environment.hpp"
#include "otg/geometry.hpp"

namespace otg {

/// Render one standalone SVG frame: red obstacle boxes, the covered path
/// as a solid polyline, the planned remainder as a faint polyline, a
/// purple start marker and a green goal marker. 2D workspaces are drawn
/// directly; 3D workspaces use a fixed orthographic projection with
/// painter's-algorithm depth ordering. Output is deterministic for
/// identical inputs. States may carry trailing non-position components.
std::string render_frame(const Environment& env, const std::vector<Vec>& covered,
                         const std::vector<Vec>& planned, const Vec& start, const Vec& goal);

} // namespace otg
