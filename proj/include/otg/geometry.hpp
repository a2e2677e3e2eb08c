#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace otg {

/// Dense real vector in workspace coordinates. Dimension is fixed at
/// construction and every component must be finite.
class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t dim, double fill = 0.0);
    Vec(std::initializer_list<double> comps);
    explicit Vec(std::vector<double> comps);

    std::size_t dim() const { return c_.size(); }
    double operator[](std::size_t i) const { return c_[i]; }
    double& operator[](std::size_t i) { return c_[i]; }
    const std::vector<double>& comps() const { return c_; }

    /// Leading `n` components as a new vector (used to take the position
    /// part of an extended agent state).
    Vec prefix(std::size_t n) const;

    bool operator==(const Vec& o) const { return c_ == o.c_; }
    bool operator!=(const Vec& o) const { return !(*this == o); }

private:
    void check_finite() const;
    std::vector<double> c_;
};

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(double s, const Vec& a);

/// Euclidean distance between two vectors of equal dimension.
double distance(const Vec& a, const Vec& b);

/// Axis-aligned compact box [lower, upper]. Degenerate axes (lower ==
/// upper) are allowed so points can be used as probes; proper obstacles
/// and workspaces are nondegenerate.
class Box {
public:
    /// Empty placeholder (dimension 0); real boxes come from the
    /// validating constructor.
    Box() = default;
    Box(Vec lower, Vec upper);

    std::size_t dim() const { return lo_.dim(); }
    const Vec& lower() const { return lo_; }
    const Vec& upper() const { return hi_; }

    Vec extent() const;
    Vec midpoint() const;
    bool degenerate() const;

    /// Closed membership test.
    bool contains(const Vec& p) const;
    /// True when `inner` lies entirely inside this box.
    bool contains_box(const Box& inner) const;

    bool operator==(const Box& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }

private:
    Vec lo_, hi_;
};

/// Componentwise translation of a box by `c`.
Box shift(const Vec& c, const Box& box);

/// The box centered at `center` with half-extent `r` per axis (r > 0).
Box ball(const Vec& center, const Vec& r);

/// Closed-interval overlap on every axis; touching boundaries count.
bool intersects(const Box& a, const Box& b);

/// Translate `box` the minimal amount so it fits inside `outer`.
/// Throws if `box` is larger than `outer` on some axis.
Box clamp_into(const Box& box, const Box& outer);

/// Per-axis integer address of a grid cell.
struct CellIndex {
    std::vector<int> ix;

    std::size_t dim() const { return ix.size(); }
    int operator[](std::size_t a) const { return ix[a]; }

    bool operator==(const CellIndex& o) const { return ix == o.ix; }
    bool operator!=(const CellIndex& o) const { return !(*this == o); }
    bool operator<(const CellIndex& o) const { return ix < o.ix; }
};

/// Uniform partition of a box domain into cells of half-width `eta` per
/// axis. Cell k on axis a spans [lower + 2*eta*k, lower + 2*eta*(k+1)]
/// with its representative point at the center; when 2*eta does not
/// divide the extent the last cell overhangs the upper boundary.
class GridSpec {
public:
    GridSpec(Box domain, Vec eta);

    const Box& domain() const { return domain_; }
    const Vec& eta() const { return eta_; }
    std::size_t dim() const { return eta_.dim(); }

    int cells(std::size_t axis) const { return counts_[axis]; }
    std::size_t cell_count() const;

    bool valid(const CellIndex& c) const;
    Vec rep(const CellIndex& c) const;
    Box cell_box(const CellIndex& c) const;

    /// Cell containing `x`; points on shared boundaries resolve to the
    /// lower-index cell. Throws if `x` is outside the domain.
    CellIndex cell_of_point(const Vec& x) const;

    /// Moore neighborhood of `c` (cells whose representative point lies
    /// in the 2*eta box around rep(c), excluding c itself).
    std::vector<CellIndex> neighbors(const CellIndex& c) const;

    /// Row-major flattening (last axis fastest).
    std::size_t flat(const CellIndex& c) const;
    CellIndex unflat(std::size_t f) const;

private:
    Box domain_;
    Vec eta_;
    std::vector<int> counts_;
};

} // namespace otg
