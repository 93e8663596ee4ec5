#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "lrc/poly.hpp"

namespace lrc {

using LatticePoint = std::vector<std::uint32_t>;

/// Finite set of exponent vectors in N_0^dim; indexes monomial bases.
class Polytope {
  public:
    Polytope() = default;
    Polytope(std::uint32_t dim, std::vector<LatticePoint> pts);

    std::uint32_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    const std::set<LatticePoint>& points() const { return points_; }
    bool contains(const LatticePoint& p) const { return points_.count(p) != 0; }

    Polytope with_points(const std::vector<LatticePoint>& add) const;

    /// Largest exponent appearing on the given axis; the polytope must be
    /// nonempty.
    std::uint32_t i_degree(std::uint32_t axis) const;

    /// One monomial per lattice point, graded-lex order.
    std::vector<Monomial> monomial_basis() const;

    /// Cartesian product (used by the product-code composition helper).
    Polytope product(const Polytope& o) const;

    bool operator==(const Polytope& o) const { return dim_ == o.dim_ && points_ == o.points_; }

  private:
    std::uint32_t dim_ = 0;
    std::set<LatticePoint> points_;
};

/// All exponent vectors with coordinate sum <= l; |simplex(m,l)| = C(m+l, m).
Polytope simplex(std::uint32_t m, std::uint32_t l);

/// The box prod [0, l_i - 1]; every bound must be >= 1.
Polytope hypercube(const std::vector<std::uint32_t>& bounds);

/// Vectors with sum_i w_i a_i <= l and a_cap_axis <= cap. The capped axis is
/// configurable: curve families cap the last axis, the elliptic family the
/// first.
Polytope weighted_polytope(const std::vector<std::uint32_t>& weights, std::uint64_t l,
                           std::uint32_t cap_axis, std::uint32_t cap);

struct RemoveResult {
    Polytope result;
    std::vector<LatticePoint> absent;  // requested drops that were not present
};
RemoveResult remove_points(const Polytope& p, const std::vector<LatticePoint>& drops);

/// Exponent reduction of every point per axis order, merging duplicates.
Polytope reduce_shape(const Polytope& p, const std::vector<std::uint32_t>& axis_orders);

}  // namespace lrc
