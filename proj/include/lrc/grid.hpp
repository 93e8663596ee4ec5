#pragma once

#include "lrc/rational.hpp"

namespace lrc {

enum class GridKind { affine_variety, toric, reed_muller, custom };

/// Cartesian evaluation grid: per-axis point sets whose product is P.
struct GridSpec {
    FieldPtr field;
    GridKind kind = GridKind::custom;
    std::vector<std::vector<FieldElement>> axes;

    std::uint32_t nvars() const { return static_cast<std::uint32_t>(axes.size()); }
    std::vector<std::uint32_t> sizes() const {
        std::vector<std::uint32_t> s;
        for (const auto& a : axes) s.push_back(static_cast<std::uint32_t>(a.size()));
        return s;
    }
    bool axis_is_full_field(std::uint32_t i) const { return axes.at(i).size() == field->q(); }
};

/// Zero set of (x_1^n_1 - 1, ..., x_m^n_m - 1): axis i = the n_i-th roots of
/// unity; every n_i must divide q-1.
GridSpec affine_variety_grid(const FieldPtr& field, const std::vector<std::uint32_t>& ns);
/// All axes GF(q)^* (the affine-variety case n_i = q-1).
GridSpec toric_grid(const FieldPtr& field, std::uint32_t m);
/// All axes the full field: P = A^m(GF(q)).
GridSpec reed_muller_grid(const FieldPtr& field, std::uint32_t m);
GridSpec product_grid(const GridSpec& a, const GridSpec& b);

/// Row-major product of the axis enumerations (last axis fastest).
std::vector<Point> grid_points(const GridSpec& grid);

/// Per-axis exponent reduction: mod n_i into [0, n_i) on zero-free axes,
/// into {0} + [1, q-1] on full-field axes.
Polytope reduce_shape_for_grid(const Polytope& shape, const GridSpec& grid);

/// Plain evaluation matrix of V(shape) on the grid, with no locality
/// structure attached (used for codes like RM(q-1, m) that fall outside the
/// LRC construction).
Mat grid_evaluation_matrix(const GridSpec& grid, const Polytope& shape);

/// LRC blueprint: phi = projection dropping `axis`, node = x_axis, fibres of
/// size n_axis, locality r = i_degree + 1 (requires i_degree <= n_axis - 2).
/// Checksum recovery when the axis carries the whole field and r = q-1;
/// availability structures attached for every other eligible axis.
CodeBlueprint grid_blueprint(const GridSpec& grid, const Polytope& shape, std::uint32_t axis);

/// Reed-Muller subcode bound: with l the max total degree over the shape,
/// write (q-1)m - l = theta(q-1) + mu, delta = (mu+1)q^theta; the distance
/// on an n-point subset of A^m is at least delta - q^m + n (possibly <= 0).
std::int64_t rm_distance_bound(const Polytope& shape, std::uint32_t m, std::uint64_t q,
                               std::uint64_t n);

/// Minimum distance of the product code on P1 x P2 with shape P1 x P2.
std::uint64_t product_distance(std::uint64_t d1, std::uint64_t d2);

/// Hypercube corollary: shape H(l_1..l_m) on axes of sizes n_i has
/// d = prod (n_i - l_i + 1).
std::uint64_t hypercube_distance(const std::vector<std::uint32_t>& ns,
                                 const std::vector<std::uint32_t>& ls);

/// Locality/capability pair of the multi-erasure corollary: with i-degree
/// n_i - j, j >= 2: r = n_i - 1 and rho = j (which corrects j - 1 erasures);
/// plain (n_i - 1, 1) otherwise.
struct CapabilityProfile {
    std::uint32_t r = 0;
    std::uint32_t rho = 1;
};
CapabilityProfile capability_profile(const Polytope& shape, const GridSpec& grid,
                                     std::uint32_t axis);

/// One (axis, r) entry per axis with i-degree <= n_i - 2; the corresponding
/// fibre structures meet pairwise only at the recovered coordinate.
std::vector<std::pair<std::uint32_t, std::uint32_t>> availability_profile(const Polytope& shape,
                                                                          const GridSpec& grid);

}  // namespace lrc
