#include "otg/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace otg {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void require_same_dim(std::size_t a, std::size_t b) {
    if (a != b)
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a) +
                                    " vs " + std::to_string(b));
}

} // namespace

Vec::Vec(std::size_t dim, double fill) : c_(dim, fill) { check_finite(); }

Vec::Vec(std::initializer_list<double> comps) : c_(comps) { check_finite(); }

Vec::Vec(std::vector<double> comps) : c_(std::move(comps)) { check_finite(); }

void Vec::check_finite() const {
    for (double v : c_)
        require(std::isfinite(v), "vector component must be finite");
}

Vec Vec::prefix(std::size_t n) const {
    require(n <= dim(), "prefix longer than vector");
    return Vec(std::vector<double>(c_.begin(), c_.begin() + static_cast<long>(n)));
}

Vec operator+(const Vec& a, const Vec& b) {
    require_same_dim(a.dim(), b.dim());
    Vec r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    require_same_dim(a.dim(), b.dim());
    Vec r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec operator*(double s, const Vec& a) {
    Vec r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = s * a[i];
    return r;
}

double distance(const Vec& a, const Vec& b) {
    require_same_dim(a.dim(), b.dim());
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

Box::Box(Vec lower, Vec upper) : lo_(std::move(lower)), hi_(std::move(upper)) {
    require_same_dim(lo_.dim(), hi_.dim());
    require(lo_.dim() >= 1, "box must have dimension >= 1");
    for (std::size_t i = 0; i < lo_.dim(); ++i)
        require(lo_[i] <= hi_[i], "box lower bound exceeds upper bound");
}

Vec Box::extent() const { return hi_ - lo_; }

Vec Box::midpoint() const { return 0.5 * (lo_ + hi_); }

bool Box::degenerate() const {
    for (std::size_t i = 0; i < dim(); ++i)
        if (lo_[i] == hi_[i]) return true;
    return false;
}

bool Box::contains(const Vec& p) const {
    require_same_dim(dim(), p.dim());
    for (std::size_t i = 0; i < dim(); ++i)
        if (p[i] < lo_[i] || p[i] > hi_[i]) return false;
    return true;
}

bool Box::contains_box(const Box& inner) const {
    require_same_dim(dim(), inner.dim());
    for (std::size_t i = 0; i < dim(); ++i)
        if (inner.lower()[i] < lo_[i] || inner.upper()[i] > hi_[i]) return false;
    return true;
}

Box shift(const Vec& c, const Box& box) {
    require_same_dim(c.dim(), box.dim());
    return Box(box.lower() + c, box.upper() + c);
}

Box ball(const Vec& center, const Vec& r) {
    require_same_dim(center.dim(), r.dim());
    for (std::size_t i = 0; i < r.dim(); ++i)
        require(r[i] > 0.0, "ball radius must be positive");
    return shift(center, Box(-1.0 * r, r));
}

bool intersects(const Box& a, const Box& b) {
    require_same_dim(a.dim(), b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.upper()[i] < b.lower()[i] || b.upper()[i] < a.lower()[i]) return false;
    return true;
}

Box clamp_into(const Box& box, const Box& outer) {
    require_same_dim(box.dim(), outer.dim());
    Vec lo = box.lower();
    Vec hi = box.upper();
    for (std::size_t i = 0; i < box.dim(); ++i) {
        const double size = hi[i] - lo[i];
        if (size > outer.upper()[i] - outer.lower()[i])
            throw std::invalid_argument("box larger than clamp target");
        if (lo[i] < outer.lower()[i]) {
            lo[i] = outer.lower()[i];
            hi[i] = lo[i] + size;
        } else if (hi[i] > outer.upper()[i]) {
            hi[i] = outer.upper()[i];
            lo[i] = hi[i] - size;
        }
    }
    return Box(lo, hi);
}

GridSpec::GridSpec(Box domain, Vec eta) : domain_(std::move(domain)), eta_(std::move(eta)) {
    require_same_dim(domain_.dim(), eta_.dim());
    require(!domain_.degenerate(), "grid domain must be nondegenerate");
    counts_.resize(eta_.dim());
    for (std::size_t a = 0; a < eta_.dim(); ++a) {
        require(eta_[a] > 0.0, "eta must be positive");
        const double extent = domain_.upper()[a] - domain_.lower()[a];
        counts_[a] = static_cast<int>(std::ceil(extent / (2.0 * eta_[a])));
    }
}

std::size_t GridSpec::cell_count() const {
    std::size_t n = 1;
    for (int c : counts_) n *= static_cast<std::size_t>(c);
    return n;
}

bool GridSpec::valid(const CellIndex& c) const {
    if (c.dim() != dim()) return false;
    for (std::size_t a = 0; a < dim(); ++a)
        if (c[a] < 0 || c[a] >= counts_[a]) return false;
    return true;
}

Vec GridSpec::rep(const CellIndex& c) const {
    if (!valid(c)) throw std::out_of_range("invalid cell index");
    Vec r(dim());
    for (std::size_t a = 0; a < dim(); ++a)
        r[a] = domain_.lower()[a] + eta_[a] * (2.0 * c[a] + 1.0);
    return r;
}

Box GridSpec::cell_box(const CellIndex& c) const { return ball(rep(c), eta_); }

CellIndex GridSpec::cell_of_point(const Vec& x) const {
    if (!domain_.contains(x)) throw std::out_of_range("point outside grid domain");
    CellIndex c;
    c.ix.resize(dim());
    for (std::size_t a = 0; a < dim(); ++a) {
        const double raw = (x[a] - domain_.lower()[a]) / (2.0 * eta_[a]);
        double k = std::floor(raw);
        // Shared boundaries resolve to the lower-index cell.
        if (k > 0.0 && k == raw) k -= 1.0;
        int ki = static_cast<int>(k);
        if (ki >= counts_[a]) ki = counts_[a] - 1;
        if (ki < 0) ki = 0;
        c.ix[a] = ki;
    }
    return c;
}

std::vector<CellIndex> GridSpec::neighbors(const CellIndex& c) const {
    if (!valid(c)) throw std::out_of_range("invalid cell index");
    std::vector<CellIndex> out;
    const std::size_t n = dim();
    std::vector<int> off(n, -1);
    while (true) {
        bool all_zero = true;
        for (int o : off)
            if (o != 0) { all_zero = false; break; }
        if (!all_zero) {
            CellIndex cand;
            cand.ix.resize(n);
            bool in = true;
            for (std::size_t a = 0; a < n; ++a) {
                cand.ix[a] = c[a] + off[a];
                if (cand.ix[a] < 0 || cand.ix[a] >= counts_[a]) { in = false; break; }
            }
            if (in) out.push_back(std::move(cand));
        }
        // advance odometer over {-1,0,1}^n, last axis fastest
        bool wrapped = true;
        for (std::size_t a = n; a-- > 0;) {
            if (off[a] < 1) {
                ++off[a];
                wrapped = false;
                break;
            }
            off[a] = -1;
        }
        if (wrapped) break;
    }
    return out;
}

std::size_t GridSpec::flat(const CellIndex& c) const {
    if (!valid(c)) throw std::out_of_range("invalid cell index");
    std::size_t f = 0;
    for (std::size_t a = 0; a < dim(); ++a)
        f = f * static_cast<std::size_t>(counts_[a]) + static_cast<std::size_t>(c[a]);
    return f;
}

CellIndex GridSpec::unflat(std::size_t f) const {
    CellIndex c;
    c.ix.resize(dim());
    for (std::size_t a = dim(); a-- > 0;) {
        const std::size_t n = static_cast<std::size_t>(counts_[a]);
        c.ix[a] = static_cast<int>(f % n);
        f /= n;
    }
    return c;
}

} // namespace otg
