#include "lrc/grid.hpp"

#include <algorithm>

namespace lrc {
namespace {

bool axis_contains_zero(const std::vector<FieldElement>& axis) {
    for (const auto& e : axis)
        if (e.is_zero()) return true;
    return false;
}

}  // namespace

GridSpec affine_variety_grid(const FieldPtr& field, const std::vector<std::uint32_t>& ns) {
    if (ns.empty()) throw InvalidArgument("need at least one axis");
    GridSpec g;
    g.field = field;
    g.kind = GridKind::affine_variety;
    for (auto n : ns) {
        if (n == 0 || (field->q() - 1) % n != 0)
            throw InvalidArgument("affine variety grid needs n_i | q-1");
        g.axes.push_back(nth_roots_of_unity(field, n));
    }
    return g;
}

GridSpec toric_grid(const FieldPtr& field, std::uint32_t m) {
    GridSpec g = affine_variety_grid(field, std::vector<std::uint32_t>(
                                                m, static_cast<std::uint32_t>(field->q() - 1)));
    g.kind = GridKind::toric;
    return g;
}

GridSpec reed_muller_grid(const FieldPtr& field, std::uint32_t m) {
    if (m == 0) throw InvalidArgument("need at least one axis");
    GridSpec g;
    g.field = field;
    g.kind = GridKind::reed_muller;
    auto all = enumerate_field(field);
    for (std::uint32_t i = 0; i < m; ++i) g.axes.push_back(all);
    return g;
}

GridSpec product_grid(const GridSpec& a, const GridSpec& b) {
    if (a.field != b.field) throw FieldMismatch("grids over different fields");
    GridSpec g;
    g.field = a.field;
    g.kind = GridKind::custom;
    g.axes = a.axes;
    g.axes.insert(g.axes.end(), b.axes.begin(), b.axes.end());
    return g;
}

std::vector<Point> grid_points(const GridSpec& grid) {
    std::vector<Point> pts;
    std::vector<std::size_t> idx(grid.axes.size(), 0);
    while (true) {
        Point P;
        P.reserve(grid.axes.size());
        for (std::size_t i = 0; i < grid.axes.size(); ++i) P.push_back(grid.axes[i][idx[i]]);
        pts.push_back(std::move(P));
        std::size_t i = grid.axes.size();
        while (i > 0) {
            --i;
            if (++idx[i] < grid.axes[i].size()) break;
            idx[i] = 0;
            if (i == 0) return pts;
        }
    }
}

Polytope reduce_shape_for_grid(const Polytope& shape, const GridSpec& grid) {
    if (shape.dim() != grid.nvars()) throw DimensionMismatch("shape dim != grid vars");
    std::vector<LatticePoint> pts;
    for (const auto& pt : shape.points()) {
        LatticePoint r = pt;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (r[i] == 0) continue;
            if (axis_contains_zero(grid.axes[i])) {
                // full axis: x^(q-1) != 1 at 0, so land in [1, q-1]
                std::uint32_t order = static_cast<std::uint32_t>(grid.field->q() - 1);
                std::uint32_t m = r[i] % order;
                r[i] = (m == 0) ? order : m;
            } else {
                // zero-free axis of n-th roots: x^n = 1 everywhere
                r[i] = r[i] % static_cast<std::uint32_t>(grid.axes[i].size());
            }
        }
        pts.push_back(std::move(r));
    }
    return Polytope(shape.dim(), std::move(pts));
}

Mat grid_evaluation_matrix(const GridSpec& grid, const Polytope& shape) {
    Polytope reduced = reduce_shape_for_grid(shape, grid);
    auto pts = grid_points(grid);
    auto basis = reduced.monomial_basis();
    Mat g(grid.field, basis.size(), pts.size());
    for (std::size_t r = 0; r < basis.size(); ++r) {
        MultiPoly mono = MultiPoly::monomial(grid.field, basis[r], grid.field->one());
        for (std::size_t c = 0; c < pts.size(); ++c) g.at(r, c) = mono.evaluate(pts[c]);
    }
    return g;
}

namespace {

// Fibre structure for recovery along `axis`: group by all other coordinates.
FibreStructure axis_fibres(const GridSpec& grid, const std::vector<Point>& pts,
                           std::uint32_t axis) {
    std::vector<RationalFunction> proj;
    for (std::uint32_t j = 0; j < grid.nvars(); ++j)
        if (j != axis)
            proj.push_back(RationalFunction(MultiPoly::var_power(grid.field, grid.nvars(), j, 1)));
    RationalFunction node(MultiPoly::var_power(grid.field, grid.nvars(), axis, 1));
    return make_fibres(proj, node, pts);
}

}  // namespace

CodeBlueprint grid_blueprint(const GridSpec& grid, const Polytope& shape, std::uint32_t axis) {
    if (axis >= grid.nvars()) throw DimensionMismatch("axis out of range");
    Polytope reduced = reduce_shape_for_grid(shape, grid);
    const auto ns = grid.sizes();
    const std::uint32_t n_axis = ns[axis];
    const std::uint32_t i_deg = reduced.i_degree(axis);
    if (i_deg + 2 > n_axis)
        throw InvalidArgument("i-degree too large for the recovery axis (need <= n_i - 2)");
    for (std::uint32_t j = 0; j < grid.nvars(); ++j)
        if (reduced.i_degree(j) + 1 > ns[j])
            throw InvalidArgument("shape exceeds the grid box after reduction");

    CodeBlueprint bp;
    bp.field = grid.field;
    bp.name = "grid-axis" + std::to_string(axis + 1);
    bp.points = grid_points(grid);
    for (std::uint32_t j = 0; j < grid.nvars(); ++j)
        if (j != axis)
            bp.map.push_back(
                RationalFunction(MultiPoly::var_power(grid.field, grid.nvars(), j, 1)));
    bp.phi_last = RationalFunction(MultiPoly::var_power(grid.field, grid.nvars(), axis, 1));
    bp.fibres = make_fibres(bp.map, bp.phi_last, bp.points);
    bp.locality = i_deg + 1;
    bp.capability = n_axis - bp.locality;

    // basis: split each monomial into the part constant on fibres and the
    // node power; map variables are the non-axis coordinates in order
    for (const auto& mono : reduced.monomial_basis()) {
        Monomial g_mono;
        for (std::uint32_t j = 0; j < grid.nvars(); ++j)
            if (j != axis) g_mono.e.push_back(mono.e[j]);
        if (g_mono.e.empty()) g_mono.e = {};  // m = 1: constant part has 0 vars
        MultiPoly g = grid.nvars() > 1
                          ? MultiPoly::monomial(grid.field, g_mono, grid.field->one())
                          : MultiPoly::constant(grid.field, 0, grid.field->one());
        bp.basis.push_back(BasisFunction{g, mono.e[axis]});
    }

    const bool checksum_ok =
        grid.axis_is_full_field(axis) && bp.locality == grid.field->q() - 1;
    bp.mode = checksum_ok ? RecoveryMode::checksum : RecoveryMode::interpolation;

    // availability: one structure per other eligible axis
    for (std::uint32_t j = 0; j < grid.nvars(); ++j) {
        if (j == axis) continue;
        std::uint32_t dj = reduced.i_degree(j);
        if (dj + 2 > ns[j]) continue;
        RecoveryStructure alt;
        alt.fs = axis_fibres(grid, bp.points, j);
        alt.r = dj + 1;
        alt.rho = ns[j] - alt.r;
        alt.mode = (grid.axis_is_full_field(j) && alt.r == grid.field->q() - 1)
                       ? RecoveryMode::checksum
                       : RecoveryMode::interpolation;
        alt.label = "axis" + std::to_string(j + 1);
        bp.availability.push_back(std::move(alt));
    }

    std::int64_t bound = rm_distance_bound(reduced, grid.nvars(), grid.field->q(),
                                           bp.points.size());
    if (grid.kind == GridKind::reed_muller && bound > 0) bp.distance_lb = bound;
    return bp;
}

std::int64_t rm_distance_bound(const Polytope& shape, std::uint32_t m, std::uint64_t q,
                               std::uint64_t n) {
    std::uint64_t l = 0;
    for (const auto& pt : shape.points()) {
        std::uint64_t t = 0;
        for (auto e : pt) t += e;
        l = std::max(l, t);
    }
    if (l > (q - 1) * m) throw InvalidArgument("rm bound needs l <= (q-1)m");
    std::uint64_t rem = (q - 1) * m - l;
    std::uint64_t theta = rem / (q - 1), mu = rem % (q - 1);
    std::uint64_t delta = (mu + 1);
    for (std::uint64_t i = 0; i < theta; ++i) delta *= q;
    std::uint64_t qm = 1;
    for (std::uint32_t i = 0; i < m; ++i) qm *= q;
    return static_cast<std::int64_t>(delta) - static_cast<std::int64_t>(qm) +
           static_cast<std::int64_t>(n);
}

std::uint64_t product_distance(std::uint64_t d1, std::uint64_t d2) { return d1 * d2; }

std::uint64_t hypercube_distance(const std::vector<std::uint32_t>& ns,
                                 const std::vector<std::uint32_t>& ls) {
    if (ns.size() != ls.size()) throw DimensionMismatch("one bound per axis");
    std::uint64_t d = 1;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (ls[i] > ns[i]) throw InvalidArgument("hypercube corollary needs l_i <= n_i");
        d *= ns[i] - ls[i] + 1;
    }
    return d;
}

CapabilityProfile capability_profile(const Polytope& shape, const GridSpec& grid,
                                     std::uint32_t axis) {
    Polytope reduced = reduce_shape_for_grid(shape, grid);
    const std::uint32_t n_i = grid.sizes().at(axis);
    const std::uint32_t i_deg = reduced.i_degree(axis);
    if (i_deg >= n_i) throw InvalidArgument("shape exceeds the axis after reduction");
    std::uint32_t j = n_i - i_deg;
    return {n_i - 1, j >= 2 ? j : 1};
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> availability_profile(const Polytope& shape,
                                                                          const GridSpec& grid) {
    Polytope reduced = reduce_shape_for_grid(shape, grid);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    auto pts = grid_points(grid);
    const auto ns = grid.sizes();
    std::vector<FibreStructure> structs;
    std::vector<std::uint32_t> axes;
    for (std::uint32_t j = 0; j < grid.nvars(); ++j) {
        std::uint32_t dj = reduced.i_degree(j);
        if (dj + 2 > ns[j]) continue;
        out.emplace_back(j, dj + 1);
        axes.push_back(j);
        structs.push_back(axis_fibres(grid, pts, j));
    }
    // disjointness: fibres of two different axes through one point meet only
    // at that point (validated, not assumed)
    for (std::size_t a = 0; a < structs.size(); ++a) {
        std::vector<std::size_t> fibre_of_a(pts.size());
        for (std::size_t fi = 0; fi < structs[a].fibres.size(); ++fi)
            for (auto i : structs[a].fibres[fi].members) fibre_of_a[i] = fi;
        for (std::size_t b = a + 1; b < structs.size(); ++b) {
            std::vector<std::size_t> fibre_of_b(pts.size());
            for (std::size_t fi = 0; fi < structs[b].fibres.size(); ++fi)
                for (auto i : structs[b].fibres[fi].members) fibre_of_b[i] = fi;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                std::size_t shared = 0;
                for (auto x : structs[a].fibres[fibre_of_a[i]].members)
                    if (fibre_of_b[x] == fibre_of_b[i]) ++shared;
                if (shared != 1)
                    throw Error("availability structures are not pairwise disjoint");
            }
        }
    }
    return out;
}

}  // namespace lrc
