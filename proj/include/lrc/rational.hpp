#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrc/matrix.hpp"
#include "lrc/poly.hpp"
#include "lrc/polytope.hpp"

namespace lrc {

/// Quotient of two multivariate polynomials; defined wherever the
/// denominator does not vanish.
struct RationalFunction {
    MultiPoly num;
    MultiPoly den;

    RationalFunction() = default;
    explicit RationalFunction(MultiPoly n)
        : num(std::move(n)),
          den(MultiPoly::constant(num.field(), num.nvars(), num.field()->one())) {}
    RationalFunction(MultiPoly n, MultiPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw InvalidArgument("denominator is identically zero");
    }

    bool is_polynomial() const;
    bool has_pole_at(std::span<const FieldElement> point) const {
        return den.evaluate(point).is_zero();
    }
    FieldElement evaluate(std::span<const FieldElement> point) const;

    std::string to_string() const;
    static RationalFunction parse(const FieldPtr& field, std::uint32_t nvars,
                                  const std::string& text);
};

using Point = std::vector<FieldElement>;

/// One member of the assembled basis of V: the fibre-constant factor g (a
/// polynomial in the map components phi_1..phi_t) times phi_last^power.
struct BasisFunction {
    MultiPoly g_of_phi;
    std::uint32_t power = 0;
};

struct Fibre {
    std::vector<std::size_t> members;  // indices into the point list
    std::vector<FieldElement> base;    // the common value of (phi_1..phi_t)
    std::size_t distinct_nodes = 0;
};

/// Partition of the coordinate positions by the value of phi, with the
/// interpolation abscissa phi_last recorded per point.
struct FibreStructure {
    std::vector<Fibre> fibres;
    std::vector<FieldElement> nodes;  // node value per point index

    std::size_t min_distinct_nodes() const;
    void check_partition(std::size_t npoints) const;
};

enum class RecoveryMode { interpolation, checksum };

/// One usable recovery structure: a fibre partition with its locality,
/// per-fibre erasure capability and mechanism. Availability = several of
/// these with pairwise-disjoint recovering sets.
struct RecoveryStructure {
    FibreStructure fs;
    std::uint32_t r = 0;
    std::uint32_t rho = 1;  // erasures recoverable per fibre
    RecoveryMode mode = RecoveryMode::interpolation;
    std::string label;
};

/// Everything needed to evaluate, analyze and locally repair one code.
struct CodeBlueprint {
    FieldPtr field;
    std::string name;
    std::vector<Point> points;
    std::vector<RationalFunction> map;  // phi_1..phi_t
    RationalFunction phi_last;
    std::vector<BasisFunction> basis;
    FibreStructure fibres;
    RecoveryMode mode = RecoveryMode::interpolation;
    std::uint32_t locality = 0;
    std::uint32_t capability = 1;  // erasures recoverable per fibre
    std::vector<RecoveryStructure> availability;  // alternatives beyond `fibres`
    std::optional<std::int64_t> goppa_degree;  // deg G with V in L(GQ)
    std::optional<std::int64_t> distance_lb;   // external bound on d, if any

    FieldElement evaluate_basis(std::size_t b, std::size_t point_index) const;
};

/// Points at which every listed function is pole-free.
std::vector<Point> domain_filter(const std::vector<RationalFunction>& functions,
                                 const std::vector<Point>& candidates);

/// Group points by the value of phi = (phi_1..phi_t); fibre order follows
/// first occurrence. Throws PoleError if some point was not filtered.
FibreStructure make_fibres(const std::vector<RationalFunction>& map,
                           const RationalFunction& phi_last, const std::vector<Point>& points);

/// r = (minimum distinct-node count over fibres) - rho; throws when <= 0.
std::uint32_t locality_of(const FibreStructure& fs, std::uint32_t rho);

/// Automatic pruning: within each fibre keep one point per distinct node
/// value, preferring the enumeration-order-first point.
std::vector<Point> prune_to_distinct_nodes(const std::vector<RationalFunction>& map,
                                           const RationalFunction& phi_last,
                                           const std::vector<Point>& points);

/// Concatenate component bases: {g * phi_last^i : g in components[i]}.
std::vector<BasisFunction> assemble_space(const std::vector<std::vector<MultiPoly>>& components);

/// Raw evaluation matrix: row per basis function, column per point.
Mat evaluation_matrix(const CodeBlueprint& bp);

/// Construction-time validation: fibre partition, pole freedom, per-fibre
/// degree <= r-1 restriction (checked by interpolation), and zero fibre sums
/// in checksum mode.
void validate_blueprint(const CodeBlueprint& bp);

}  // namespace lrc
