#include "lrc/polytope.hpp"

#include <algorithm>

namespace lrc {

Polytope::Polytope(std::uint32_t dim, std::vector<LatticePoint> pts) : dim_(dim) {
    for (auto& p : pts) {
        if (p.size() != dim) throw DimensionMismatch("lattice point length != dim");
        points_.insert(std::move(p));
    }
}

Polytope Polytope::with_points(const std::vector<LatticePoint>& add) const {
    Polytope r = *this;
    for (const auto& p : add) {
        if (p.size() != dim_) throw DimensionMismatch("lattice point length != dim");
        r.points_.insert(p);
    }
    return r;
}

std::uint32_t Polytope::i_degree(std::uint32_t axis) const {
    if (points_.empty()) throw InvalidArgument("i_degree of empty polytope");
    if (axis >= dim_) throw DimensionMismatch("axis out of range");
    std::uint32_t d = 0;
    for (const auto& p : points_) d = std::max(d, p[axis]);
    return d;
}

std::vector<Monomial> Polytope::monomial_basis() const {
    std::vector<Monomial> out;
    out.reserve(points_.size());
    for (const auto& p : points_) out.push_back(Monomial{p});
    std::sort(out.begin(), out.end());
    return out;
}

Polytope Polytope::product(const Polytope& o) const {
    std::vector<LatticePoint> pts;
    pts.reserve(points_.size() * o.points_.size());
    for (const auto& a : points_) {
        for (const auto& b : o.points_) {
            LatticePoint p = a;
            p.insert(p.end(), b.begin(), b.end());
            pts.push_back(std::move(p));
        }
    }
    return Polytope(dim_ + o.dim_, std::move(pts));
}

namespace {
void enumerate_simplex(std::uint32_t m, std::uint32_t budget, LatticePoint& cur,
                       std::vector<LatticePoint>& out) {
    if (cur.size() == m) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t v = 0; v <= budget; ++v) {
        cur.push_back(v);
        enumerate_simplex(m, budget - v, cur, out);
        cur.pop_back();
    }
}
}  // namespace

Polytope simplex(std::uint32_t m, std::uint32_t l) {
    if (m < 1) throw InvalidArgument("simplex dimension must be >= 1");
    std::vector<LatticePoint> pts;
    LatticePoint cur;
    enumerate_simplex(m, l, cur, pts);
    return Polytope(m, std::move(pts));
}

Polytope hypercube(const std::vector<std::uint32_t>& bounds) {
    if (bounds.empty()) throw InvalidArgument("hypercube needs at least one bound");
    for (auto b : bounds)
        if (b < 1) throw InvalidArgument("hypercube bounds must be >= 1");
    std::vector<LatticePoint> pts;
    LatticePoint cur(bounds.size(), 0);
    while (true) {
        pts.push_back(cur);
        std::size_t i = bounds.size();
        while (i > 0) {
            --i;
            if (++cur[i] < bounds[i]) break;
            cur[i] = 0;
            if (i == 0) return Polytope(static_cast<std::uint32_t>(bounds.size()), std::move(pts));
        }
    }
}

Polytope weighted_polytope(const std::vector<std::uint32_t>& weights, std::uint64_t l,
                           std::uint32_t cap_axis, std::uint32_t cap) {
    if (weights.empty()) throw InvalidArgument("need at least one weight");
    for (auto w : weights)
        if (w < 1) throw InvalidArgument("weights must be >= 1");
    if (cap_axis >= weights.size()) throw DimensionMismatch("cap axis out of range");
    std::vector<LatticePoint> pts;
    LatticePoint cur(weights.size(), 0);
    // odometer over the box of per-axis maxima, filtered by the weight budget
    std::vector<std::uint32_t> maxv(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        maxv[i] = static_cast<std::uint32_t>(l / weights[i]);
        if (i == cap_axis) maxv[i] = std::min(maxv[i], cap);
    }
    while (true) {
        std::uint64_t tot = 0;
        for (std::size_t i = 0; i < weights.size(); ++i)
            tot += std::uint64_t(weights[i]) * cur[i];
        if (tot <= l) pts.push_back(cur);
        std::size_t i = weights.size();
        bool done = true;
        while (i > 0) {
            --i;
            if (++cur[i] <= maxv[i]) {
                done = false;
                break;
            }
            cur[i] = 0;
        }
        if (done) break;
    }
    return Polytope(static_cast<std::uint32_t>(weights.size()), std::move(pts));
}

RemoveResult remove_points(const Polytope& p, const std::vector<LatticePoint>& drops) {
    std::vector<LatticePoint> keep, absent;
    std::set<LatticePoint> dropset(drops.begin(), drops.end());
    for (const auto& d : dropset)
        if (!p.contains(d)) absent.push_back(d);
    for (const auto& pt : p.points())
        if (!dropset.count(pt)) keep.push_back(pt);
    return {Polytope(p.dim(), std::move(keep)), std::move(absent)};
}

Polytope reduce_shape(const Polytope& p, const std::vector<std::uint32_t>& axis_orders) {
    if (axis_orders.size() != p.dim()) throw DimensionMismatch("one order per axis required");
    std::vector<LatticePoint> pts;
    for (const auto& pt : p.points()) {
        LatticePoint r = pt;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (r[i] == 0) continue;
            std::uint32_t m = r[i] % axis_orders[i];
            r[i] = (m == 0) ? axis_orders[i] : m;
        }
        pts.push_back(std::move(r));
    }
    return Polytope(p.dim(), std::move(pts));
}

}  // namespace lrc
