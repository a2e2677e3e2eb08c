#include "otg/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace otg {

namespace {

constexpr double kScale = 70.0;   // px per workspace unit
constexpr double kMargin = 20.0;  // px

const char* kObstacleFill = "#d62728";
const char* kObstacleTopFill = "#e57373";
const char* kObstacleSideFill = "#b71c1c";
const char* kPathColor = "#1f77b4";
const char* kStartColor = "#9467bd";
const char* kGoalColor = "#2ca02c";

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    // avoid the two distinct zeros
    if (std::string_view(buf) == "-0.00") return "0.00";
    return buf;
}

struct Pt {
    double u = 0.0, v = 0.0;  // screen px, v grows downward
};

// Fixed orthographic view along (1,1,1): u spans (x - y), v spans height
// against depth; larger x+y+z is closer to the viewer.
struct Projector {
    std::size_t dim;
    double u0, v0;  // workspace-units offsets so everything is positive
    double width, height;

    explicit Projector(const Box& ws) : dim(ws.dim()) {
        if (dim == 2) {
            u0 = ws.lower()[0];
            v0 = 0.0;
            width = ws.upper()[0] - ws.lower()[0];
            height = ws.upper()[1] - ws.lower()[1];
        } else if (dim == 3) {
            double umin = 1e300, umax = -1e300, vmin = 1e300, vmax = -1e300;
            for (int cx = 0; cx < 2; ++cx)
                for (int cy = 0; cy < 2; ++cy)
                    for (int cz = 0; cz < 2; ++cz) {
                        const double x = cx ? ws.upper()[0] : ws.lower()[0];
                        const double y = cy ? ws.upper()[1] : ws.lower()[1];
                        const double z = cz ? ws.upper()[2] : ws.lower()[2];
                        umin = std::min(umin, raw_u(x, y));
                        umax = std::max(umax, raw_u(x, y));
                        vmin = std::min(vmin, raw_v(x, y, z));
                        vmax = std::max(vmax, raw_v(x, y, z));
                    }
            u0 = umin;
            v0 = vmin;
            width = umax - umin;
            height = vmax - vmin;
        } else {
            throw std::invalid_argument("render_frame: only 2D and 3D workspaces supported");
        }
    }

    static double raw_u(double x, double y) { return (x - y) * 0.70710678118654752; }
    static double raw_v(double x, double y, double z) {
        return (2.0 * z - x - y) * 0.40824829046386302;
    }

    Pt project(const Vec& p, const Box& ws) const {
        Pt s;
        if (dim == 2) {
            s.u = kMargin + (p[0] - u0) * kScale;
            s.v = kMargin + (ws.upper()[1] - p[1]) * kScale;  // y up on screen
        } else {
            s.u = kMargin + (raw_u(p[0], p[1]) - u0) * kScale;
            s.v = kMargin + (height - (raw_v(p[0], p[1], p[2]) - v0)) * kScale;
        }
        return s;
    }

    double canvas_w() const { return width * kScale + 2.0 * kMargin; }
    double canvas_h() const { return height * kScale + 2.0 * kMargin; }

    static double depth(const Vec& p) {
        double d = 0.0;
        for (std::size_t a = 0; a < p.dim(); ++a) d += p[a];
        return d;
    }
};

struct Element {
    double depth = 0.0;
    int seq = 0;
    std::string svg;
};

std::string polygon(const std::vector<Pt>& pts, const char* fill, double opacity) {
    std::ostringstream o;
    o << "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) o << ' ';
        o << fmt(pts[i].u) << ',' << fmt(pts[i].v);
    }
    o << "\" fill=\"" << fill << "\" fill-opacity=\"" << fmt(opacity)
      << "\" stroke=\"#7f1d1d\" stroke-width=\"0.5\"/>";
    return o.str();
}

void add_obstacle_2d(std::vector<Element>& els, int& seq, const Box& b, const Projector& pr,
                     const Box& ws) {
    const Pt a = pr.project(Vec{b.lower()[0], b.upper()[1]}, ws);  // top-left on screen
    const Pt c = pr.project(Vec{b.upper()[0], b.lower()[1]}, ws);  // bottom-right
    std::ostringstream o;
    o << "<rect x=\"" << fmt(a.u) << "\" y=\"" << fmt(a.v) << "\" width=\"" << fmt(c.u - a.u)
      << "\" height=\"" << fmt(c.v - a.v) << "\" fill=\"" << kObstacleFill
      << "\" stroke=\"#7f1d1d\" stroke-width=\"0.5\"/>";
    els.push_back({0.0, seq++, o.str()});
}

void add_obstacle_3d(std::vector<Element>& els, int& seq, const Box& b, const Projector& pr,
                     const Box& ws) {
    const Vec& lo = b.lower();
    const Vec& hi = b.upper();
    auto corner = [&](int cx, int cy, int cz) {
        return pr.project(Vec{cx ? hi[0] : lo[0], cy ? hi[1] : lo[1], cz ? hi[2] : lo[2]}, ws);
    };
    // Faces visible from (+1,+1,+1): top (z+), and the x+ / y+ sides.
    const std::vector<Pt> top{corner(0, 0, 1), corner(1, 0, 1), corner(1, 1, 1), corner(0, 1, 1)};
    const std::vector<Pt> xp{corner(1, 0, 0), corner(1, 1, 0), corner(1, 1, 1), corner(1, 0, 1)};
    const std::vector<Pt> yp{corner(0, 1, 0), corner(1, 1, 0), corner(1, 1, 1), corner(0, 1, 1)};
    const double d = Projector::depth(b.midpoint());
    std::string svg = polygon(yp, kObstacleSideFill, 1.0) + polygon(xp, kObstacleFill, 1.0) +
                      polygon(top, kObstacleTopFill, 1.0);
    els.push_back({d, seq++, std::move(svg)});
}

void add_path(std::vector<Element>& els, int& seq, const std::vector<Vec>& states,
              const Projector& pr, const Box& ws, double opacity, double width) {
    // Each segment is its own element so 3D depth sorting can interleave
    // path and obstacles.
    for (std::size_t i = 0; i + 1 < states.size(); ++i) {
        const Vec a = states[i].prefix(ws.dim());
        const Vec b = states[i + 1].prefix(ws.dim());
        const Pt pa = pr.project(a, ws);
        const Pt pb = pr.project(b, ws);
        std::ostringstream o;
        o << "<line x1=\"" << fmt(pa.u) << "\" y1=\"" << fmt(pa.v) << "\" x2=\"" << fmt(pb.u)
          << "\" y2=\"" << fmt(pb.v) << "\" stroke=\"" << kPathColor << "\" stroke-opacity=\""
          << fmt(opacity) << "\" stroke-width=\"" << fmt(width) << "\" stroke-linecap=\"round\"/>";
        const double d = 0.5 * (Projector::depth(a) + Projector::depth(b));
        els.push_back({d, seq++, o.str()});
    }
}

void add_marker(std::vector<Element>& els, int& seq, const Vec& p, const char* color,
                const Projector& pr, const Box& ws) {
    const Vec pos = p.prefix(ws.dim());
    const Pt s = pr.project(pos, ws);
    std::ostringstream o;
    o << "<circle cx=\"" << fmt(s.u) << "\" cy=\"" << fmt(s.v)
      << "\" r=\"5.00\" fill=\"" << color << "\" stroke=\"#333333\" stroke-width=\"0.8\"/>";
    els.push_back({Projector::depth(pos), seq++, o.str()});
}

} // namespace

std::string render_frame(const Environment& env, const std::vector<Vec>& covered,
                         const std::vector<Vec>& planned, const Vec& start, const Vec& goal) {
    const Box& ws = env.workspace;
    const Projector pr(ws);

    std::vector<Element> els;
    int seq = 0;
    for (const Obstacle& ob : env.obstacles) {
        if (ws.dim() == 2)
            add_obstacle_2d(els, seq, ob.box, pr, ws);
        else
            add_obstacle_3d(els, seq, ob.box, pr, ws);
    }
    add_path(els, seq, planned, pr, ws, 0.25, 2.5);
    add_path(els, seq, covered, pr, ws, 1.0, 2.5);
    add_marker(els, seq, start, kStartColor, pr, ws);
    add_marker(els, seq, goal, kGoalColor, pr, ws);

    if (ws.dim() == 3) {
        // Painter's algorithm: draw far (small x+y+z) first; markers and
        // path segments interleave with obstacles by depth, equal depths
        // keep insertion order.
        std::stable_sort(els.begin(), els.end(),
                         [](const Element& a, const Element& b) { return a.depth < b.depth; });
    }

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(pr.canvas_w())
        << "\" height=\"" << fmt(pr.canvas_h()) << "\" viewBox=\"0 0 " << fmt(pr.canvas_w()) << ' '
        << fmt(pr.canvas_h()) << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << fmt(pr.canvas_w()) << "\" height=\""
        << fmt(pr.canvas_h()) << "\" fill=\"#ffffff\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    for (const Element& e : els) out << e.svg << '\n';
    out << "</svg>\n";
    return out.str();
}

} // namespace otg
