#include "lrc/rational.hpp"

#include <algorithm>
#include <map>

namespace lrc {

bool RationalFunction::is_polynomial() const {
    // denominator a nonzero constant
    if (den.terms().size() != 1) return false;
    const auto& [mono, c] = *den.terms().begin();
    return mono.total_degree() == 0;
}

FieldElement RationalFunction::evaluate(std::span<const FieldElement> point) const {
    FieldElement d = den.evaluate(point);
    if (d.is_zero()) throw PoleError("evaluation at a pole");
    return num.evaluate(point) / d;
}

std::string RationalFunction::to_string() const {
    if (is_polynomial()) {
        const auto& c = den.terms().begin()->second;
        if (c == num.field()->one()) return num.to_string();
    }
    return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

RationalFunction RationalFunction::parse(const FieldPtr& field, std::uint32_t nvars,
                                         const std::string& text) {
    auto slash = text.find(")/(");
    if (text.size() > 1 && text.front() == '(' && slash != std::string::npos &&
        text.back() == ')') {
        std::string ntext = text.substr(1, slash - 1);
        std::string dtext = text.substr(slash + 3, text.size() - slash - 4);
        return {MultiPoly::parse(field, nvars, ntext), MultiPoly::parse(field, nvars, dtext)};
    }
    return RationalFunction(MultiPoly::parse(field, nvars, text));
}

std::size_t FibreStructure::min_distinct_nodes() const {
    if (fibres.empty()) throw InvalidArgument("empty fibre structure");
    std::size_t mn = SIZE_MAX;
    for (const auto& f : fibres) mn = std::min(mn, f.distinct_nodes);
    return mn;
}

void FibreStructure::check_partition(std::size_t npoints) const {
    std::vector<bool> seen(npoints, false);
    for (const auto& f : fibres) {
        for (auto i : f.members) {
            if (i >= npoints || seen[i]) throw Error("fibres do not partition the coordinates");
            seen[i] = true;
        }
    }
    for (bool b : seen)
        if (!b) throw Error("fibres do not cover all coordinates");
}

FieldElement CodeBlueprint::evaluate_basis(std::size_t b, std::size_t point_index) const {
    const auto& bf = basis.at(b);
    const Point& P = points.at(point_index);
    std::vector<FieldElement> phi_vals;
    phi_vals.reserve(map.size());
    for (const auto& f : map) phi_vals.push_back(f.evaluate(P));
    FieldElement g = bf.g_of_phi.evaluate(phi_vals);
    if (bf.power == 0) return g;
    return g * phi_last.evaluate(P).pow(bf.power);
}

std::vector<Point> domain_filter(const std::vector<RationalFunction>& functions,
                                 const std::vector<Point>& candidates) {
    std::vector<Point> out;
    for (const auto& P : candidates) {
        bool ok = true;
        for (const auto& f : functions)
            if (f.has_pole_at(P)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(P);
    }
    return out;
}

namespace {
std::vector<FieldElement> map_value(const std::vector<RationalFunction>& map, const Point& P) {
    std::vector<FieldElement> v;
    v.reserve(map.size());
    for (const auto& f : map) {
        if (f.has_pole_at(P)) throw PoleError("point not filtered before fibre construction");
        v.push_back(f.evaluate(P));
    }
    return v;
}

std::size_t count_distinct(const std::vector<FieldElement>& vals,
                           const std::vector<std::size_t>& idx) {
    std::vector<std::uint64_t> seen;
    for (auto i : idx) seen.push_back(vals[i].index());
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    return seen.size();
}
}  // namespace

FibreStructure make_fibres(const std::vector<RationalFunction>& map,
                           const RationalFunction& phi_last, const std::vector<Point>& points) {
    FibreStructure fs;
    fs.nodes.reserve(points.size());
    std::map<std::vector<std::uint64_t>, std::size_t> index_of;  // phi value -> fibre
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (phi_last.has_pole_at(points[i]))
            throw PoleError("phi_last has a pole at an evaluation point");
        fs.nodes.push_back(phi_last.evaluate(points[i]));
        auto val = map_value(map, points[i]);
        std::vector<std::uint64_t> key;
        key.reserve(val.size());
        for (const auto& v : val) key.push_back(v.index());
        auto it = index_of.find(key);
        if (it == index_of.end()) {
            index_of.emplace(key, fs.fibres.size());
            fs.fibres.push_back(Fibre{{i}, val, 0});
        } else {
            fs.fibres[it->second].members.push_back(i);
        }
    }
    for (auto& f : fs.fibres) f.distinct_nodes = count_distinct(fs.nodes, f.members);
    return fs;
}

std::uint32_t locality_of(const FibreStructure& fs, std::uint32_t rho) {
    if (rho < 1) throw InvalidArgument("erasure capability must be >= 1");
    for (const auto& f : fs.fibres)
        if (f.members.empty()) throw InvalidArgument("empty fibre");
    std::size_t mn = fs.min_distinct_nodes();
    if (mn <= rho)
        throw InvalidArgument("some fibre is too small for the requested capability");
    return static_cast<std::uint32_t>(mn - rho);
}

std::vector<Point> prune_to_distinct_nodes(const std::vector<RationalFunction>& map,
                                           const RationalFunction& phi_last,
                                           const std::vector<Point>& points) {
    auto fs = make_fibres(map, phi_last, points);
    std::vector<bool> keep(points.size(), false);
    for (const auto& f : fs.fibres) {
        std::vector<std::uint64_t> seen;
        for (auto i : f.members) {
            std::uint64_t node = fs.nodes[i].index();
            if (std::find(seen.begin(), seen.end(), node) == seen.end()) {
                seen.push_back(node);
                keep[i] = true;
            }
        }
    }
    std::vector<Point> out;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (keep[i]) out.push_back(points[i]);
    return out;
}

std::vector<BasisFunction> assemble_space(const std::vector<std::vector<MultiPoly>>& components) {
    std::vector<BasisFunction> out;
    for (std::size_t i = 0; i < components.size(); ++i)
        for (const auto& g : components[i])
            out.push_back(BasisFunction{g, static_cast<std::uint32_t>(i)});
    return out;
}

Mat evaluation_matrix(const CodeBlueprint& bp) {
    Mat g(bp.field, bp.basis.size(), bp.points.size());
    for (std::size_t r = 0; r < bp.basis.size(); ++r)
        for (std::size_t c = 0; c < bp.points.size(); ++c) g.at(r, c) = bp.evaluate_basis(r, c);
    return g;
}

namespace {

// Restriction of every basis function to every fibre must be a polynomial
// of degree <= r-1 in the node: interpolate from r points, check the rest.
void check_structure(const CodeBlueprint& bp, const FibreStructure& fs, std::uint32_t r,
                     std::uint32_t rho, RecoveryMode mode) {
    fs.check_partition(bp.points.size());
    if (r < 1) throw InvalidArgument("locality must be >= 1");
    for (const auto& f : fs.fibres) {
        if (mode == RecoveryMode::interpolation && f.distinct_nodes < r + rho)
            throw InvalidArgument("fibre has too few distinct nodes for (r, rho)");
    }
    for (std::size_t b = 0; b < bp.basis.size(); ++b) {
        for (const auto& f : fs.fibres) {
            std::vector<FieldElement> nodes, values;
            std::vector<std::size_t> rest;
            for (auto i : f.members) {
                bool fresh = true;
                for (const auto& nd : nodes)
                    if (nd == fs.nodes[i]) fresh = false;
                if (fresh && nodes.size() < r) {
                    nodes.push_back(fs.nodes[i]);
                    values.push_back(bp.evaluate_basis(b, i));
                } else {
                    rest.push_back(i);
                }
            }
            UniPoly fit = lagrange_interpolate(nodes, values);
            for (auto i : rest) {
                if (fit.evaluate(fs.nodes[i]) != bp.evaluate_basis(b, i))
                    throw Error("basis function is not a degree <= r-1 polynomial on a fibre");
            }
        }
    }
    if (mode == RecoveryMode::checksum) {
        for (std::size_t b = 0; b < bp.basis.size(); ++b) {
            for (const auto& f : fs.fibres) {
                FieldElement s = bp.field->zero();
                for (auto i : f.members) s += bp.evaluate_basis(b, i);
                if (!s.is_zero()) throw Error("checksum mode but a fibre sum is nonzero");
            }
        }
    }
}

}  // namespace

void validate_blueprint(const CodeBlueprint& bp) {
    for (const auto& bf : bp.basis)
        if (bp.mode == RecoveryMode::interpolation && bf.power + 1 > bp.locality)
            throw InvalidArgument("basis phi_last-degree exceeds r-1");
    check_structure(bp, bp.fibres, bp.locality, bp.capability, bp.mode);
    for (const auto& alt : bp.availability) check_structure(bp, alt.fs, alt.r, alt.rho, alt.mode);
}

}  // namespace lrc
