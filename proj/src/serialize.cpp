#include "lrc/serialize.hpp"

#include <algorithm>

namespace lrc {
namespace {

json fibre_structure_to_json(const FibreStructure& fs) {
    json j;
    json fibres = json::array();
    for (const auto& f : fs.fibres) {
        json fb;
        fb["members"] = f.members;
        json base = json::array();
        for (const auto& b : f.base) base.push_back(b.index());
        fb["base"] = base;
        fibres.push_back(fb);
    }
    j["fibres"] = fibres;
    json nodes = json::array();
    for (const auto& nd : fs.nodes) nodes.push_back(nd.index());
    j["nodes"] = nodes;
    return j;
}

FibreStructure fibre_structure_from_json(const json& j, const FieldPtr& field) {
    FibreStructure fs;
    for (const auto& nd : j.at("nodes")) fs.nodes.push_back(field->from_index(nd.get<std::uint64_t>()));
    for (const auto& fb : j.at("fibres")) {
        Fibre f;
        f.members = fb.at("members").get<std::vector<std::size_t>>();
        for (const auto& b : fb.at("base")) f.base.push_back(field->from_index(b.get<std::uint64_t>()));
        std::vector<std::uint64_t> seen;
        for (auto i : f.members) seen.push_back(fs.nodes.at(i).index());
        std::sort(seen.begin(), seen.end());
        f.distinct_nodes = std::unique(seen.begin(), seen.end()) - seen.begin();
        fs.fibres.push_back(std::move(f));
    }
    return fs;
}

const char* mode_name(RecoveryMode m) {
    return m == RecoveryMode::checksum ? "checksum" : "interpolation";
}

RecoveryMode mode_from_name(const std::string& s) {
    if (s == "checksum") return RecoveryMode::checksum;
    if (s == "interpolation") return RecoveryMode::interpolation;
    throw InvalidArgument("unknown recovery mode: " + s);
}

}  // namespace

json field_to_json(const FieldPtr& f) {
    json j;
    j["p"] = f->p();
    j["m"] = f->m();
    if (f->m() > 1) j["modulus"] = f->modulus();
    j["primitive"] = f->primitive().coeffs();
    return j;
}

FieldPtr field_from_json(const json& j) {
    std::uint32_t p = j.at("p").get<std::uint32_t>();
    std::uint32_t m = j.at("m").get<std::uint32_t>();
    std::vector<std::uint32_t> modulus, primitive;
    if (j.contains("modulus")) modulus = j["modulus"].get<std::vector<std::uint32_t>>();
    if (j.contains("primitive")) primitive = j["primitive"].get<std::vector<std::uint32_t>>();
    return FieldSpec::make(p, m, std::move(modulus), std::move(primitive));
}

json polytope_to_json(const Polytope& p) {
    json j;
    j["dim"] = p.dim();
    json pts = json::array();
    for (const auto& pt : p.points()) pts.push_back(pt);
    j["points"] = pts;
    return j;
}

Polytope polytope_from_json(const json& j) {
    std::uint32_t dim = j.at("dim").get<std::uint32_t>();
    std::vector<LatticePoint> pts;
    for (const auto& pt : j.at("points")) pts.push_back(pt.get<LatticePoint>());
    return Polytope(dim, std::move(pts));
}

json blueprint_to_json(const CodeBlueprint& bp) {
    json j;
    j["name"] = bp.name;
    j["field"] = field_to_json(bp.field);
    json pts = json::array();
    for (const auto& P : bp.points) {
        json p = json::array();
        for (const auto& c : P) p.push_back(c.index());
        pts.push_back(p);
    }
    j["points"] = pts;
    json map = json::array();
    for (const auto& f : bp.map) map.push_back(f.to_string());
    j["map"] = map;
    j["phi_last"] = bp.phi_last.to_string();
    json basis = json::array();
    for (const auto& b : bp.basis) {
        json e;
        e["g"] = b.g_of_phi.to_string();
        e["power"] = b.power;
        basis.push_back(e);
    }
    j["basis"] = basis;
    j["fibres"] = fibre_structure_to_json(bp.fibres);
    j["mode"] = mode_name(bp.mode);
    j["locality"] = bp.locality;
    j["capability"] = bp.capability;
    json avail = json::array();
    for (const auto& a : bp.availability) {
        json e;
        e["label"] = a.label;
        e["r"] = a.r;
        e["rho"] = a.rho;
        e["mode"] = mode_name(a.mode);
        e["structure"] = fibre_structure_to_json(a.fs);
        avail.push_back(e);
    }
    j["availability"] = avail;
    if (bp.goppa_degree) j["goppa_degree"] = *bp.goppa_degree;
    if (bp.distance_lb) j["distance_lb"] = *bp.distance_lb;
    return j;
}

CodeBlueprint blueprint_from_json(const json& j) {
    CodeBlueprint bp;
    bp.name = j.value("name", "");
    bp.field = field_from_json(j.at("field"));
    const std::uint32_t nvars =
        j.at("points").empty() ? 0 : static_cast<std::uint32_t>(j["points"][0].size());
    for (const auto& p : j.at("points")) {
        Point P;
        for (const auto& c : p) P.push_back(bp.field->from_index(c.get<std::uint64_t>()));
        bp.points.push_back(std::move(P));
    }
    for (const auto& f : j.at("map"))
        bp.map.push_back(RationalFunction::parse(bp.field, nvars, f.get<std::string>()));
    bp.phi_last = RationalFunction::parse(bp.field, nvars, j.at("phi_last").get<std::string>());
    const std::uint32_t t = static_cast<std::uint32_t>(bp.map.size());
    for (const auto& b : j.at("basis")) {
        BasisFunction bf;
        bf.g_of_phi = MultiPoly::parse(bp.field, t, b.at("g").get<std::string>());
        bf.power = b.at("power").get<std::uint32_t>();
        bp.basis.push_back(std::move(bf));
    }
    bp.fibres = fibre_structure_from_json(j.at("fibres"), bp.field);
    bp.mode = mode_from_name(j.at("mode").get<std::string>());
    bp.locality = j.at("locality").get<std::uint32_t>();
    bp.capability = j.at("capability").get<std::uint32_t>();
    for (const auto& a : j.value("availability", json::array())) {
        RecoveryStructure rs;
        rs.label = a.value("label", "");
        rs.r = a.at("r").get<std::uint32_t>();
        rs.rho = a.at("rho").get<std::uint32_t>();
        rs.mode = mode_from_name(a.at("mode").get<std::string>());
        rs.fs = fibre_structure_from_json(a.at("structure"), bp.field);
        bp.availability.push_back(std::move(rs));
    }
    if (j.contains("goppa_degree")) bp.goppa_degree = j["goppa_degree"].get<std::int64_t>();
    if (j.contains("distance_lb")) bp.distance_lb = j["distance_lb"].get<std::int64_t>();
    return bp;
}

json word_to_json(const ErasableWord& w) {
    json j;
    j["length"] = w.values.size();
    json vals = json::array();
    for (std::size_t i = 0; i < w.values.size(); ++i)
        vals.push_back(w.erased[i] ? json(nullptr) : json(w.values[i].index()));
    j["values"] = vals;
    return j;
}

ErasableWord word_from_json(const json& j, const FieldPtr& field) {
    ErasableWord w;
    for (const auto& v : j.at("values")) {
        if (v.is_null()) {
            w.values.push_back(field->zero());
            w.erased.push_back(true);
        } else {
            w.values.push_back(field->from_index(v.get<std::uint64_t>()));
            w.erased.push_back(false);
        }
    }
    if (j.contains("length") && j["length"].get<std::size_t>() != w.values.size())
        throw InvalidArgument("word length field disagrees with the value list");
    return w;
}

json distance_to_json(const DistanceResult& d) {
    json j;
    j["status"] = d.exact ? "exact" : "interval";
    if (d.exact) {
        j["value"] = d.lo;
    } else {
        j["lo"] = d.lo;
        j["hi"] = d.hi;
    }
    json wit = json::array();
    for (const auto& c : d.witness) wit.push_back(c.index());
    j["witness"] = wit;
    j["enumerated"] = d.enumerated;
    j["method"] = d.method;
    return j;
}

json bound_report_to_json(const BoundReport& b) {
    json j;
    j["n"] = b.n;
    j["k"] = b.k;
    j["d"] = b.d;
    j["r"] = b.r;
    j["lhs"] = b.lhs;
    j["rhs"] = b.rhs;
    j["defect"] = b.defect;
    j["classification"] = to_string(b.classification);
    j["almost_optimal_condition"] = b.almost_condition;
    if (b.goppa_lower) j["goppa_lower"] = *b.goppa_lower;
    j["distance_exact"] = b.distance_exact;
    return j;
}

json analysis_report(const CodeBlueprint& bp, const LinearCode& code, const DistanceResult& d,
                     const BoundReport* bound, const json& config, std::uint64_t seed,
                     double elapsed_seconds) {
    json j;
    j["config"] = config;
    j["seed"] = seed;
    j["input_hash"] = fnv1a(blueprint_to_json(bp).dump());
    j["name"] = bp.name;
    j["n"] = code.n;
    j["k"] = code.k;
    j["injective"] = code.injective();
    j["d"] = distance_to_json(d);
    j["r"] = bp.locality;
    j["rho"] = bp.capability;
    j["availability"] = 1 + bp.availability.size();
    j["mode"] = bp.mode == RecoveryMode::checksum ? "checksum" : "interpolation";
    if (bound) j["bound"] = bound_report_to_json(*bound);
    j["timings"] = json{{"seconds", elapsed_seconds}};
    return j;
}

}  // namespace lrc
