#include "lrc/curves.hpp"

#include <algorithm>
#include <set>

namespace lrc {
namespace {

// max over the polytope of the weighted degree w1*a1 + w2*a2; this is the
// degree of the smallest sQ with V(P) in L(sQ)
std::int64_t max_weighted_degree(const Polytope& shape, std::uint32_t w1, std::uint32_t w2) {
    std::int64_t mx = 0;
    for (const auto& pt : shape.points())
        mx = std::max<std::int64_t>(mx, std::int64_t(w1) * pt[0] + std::int64_t(w2) * pt[1]);
    return mx;
}

// basis from a 2-d polytope, axis 0 mapped to the fibre-constant variable
// (a power of the single map function) and axis `node_axis` to phi_last
std::vector<BasisFunction> basis_from_shape(const FieldPtr& field, const Polytope& shape,
                                            std::uint32_t const_axis, std::uint32_t node_axis) {
    std::vector<BasisFunction> out;
    for (const auto& mono : shape.monomial_basis()) {
        MultiPoly g = MultiPoly::var_power(field, 1, 0, mono.e[const_axis]);
        out.push_back(BasisFunction{g, mono.e[node_axis]});
    }
    return out;
}

}  // namespace

PlaneCurveSpec klein_curve() {
    FieldPtr f = FieldSpec::make(8);
    // x^3 y + y^3 + x
    MultiPoly eq(f, 2);
    eq.add_term(Monomial{{3, 1}}, f->one());
    eq.add_term(Monomial{{0, 3}}, f->one());
    eq.add_term(Monomial{{1, 0}}, f->one());
    PlaneCurveSpec c;
    c.field = f;
    c.family = CurveFamily::klein;
    c.equation = eq;
    c.pole_orders = {3, 5};  // of phi_1 = x/y and phi_2 = x/y^2 at Q
    c.infinite_points = 2;   // R = (0:1:0) and Q = (1:0:0)
    return c;
}

PlaneCurveSpec elliptic_curve(const FieldPtr& field, const FieldElement& B) {
    if (field->p() == 2 || field->p() == 3)
        throw InvalidArgument("elliptic family needs characteristic != 2, 3");
    MultiPoly eq(field, 2);
    eq.add_term(Monomial{{0, 2}}, field->one());
    eq.add_term(Monomial{{3, 0}}, -field->one());
    eq.add_term(Monomial{{0, 0}}, -B);
    PlaneCurveSpec c;
    c.field = field;
    c.family = CurveFamily::elliptic_b;
    c.equation = eq;
    c.pole_orders = {2, 3};  // -v_Q(x) = 2, -v_Q(y) = 3
    c.infinite_points = 1;
    c.B = B;
    return c;
}

PlaneCurveSpec hermitian_curve(std::uint32_t q_base) {
    FieldPtr f = FieldSpec::make(std::uint64_t(q_base) * q_base);
    MultiPoly eq(f, 2);
    eq.add_term(Monomial{{q_base + 1, 0}}, f->one());
    eq.add_term(Monomial{{0, q_base}}, -f->one());
    eq.add_term(Monomial{{0, 1}}, -f->one());
    PlaneCurveSpec c;
    c.field = f;
    c.family = CurveFamily::hermitian;
    c.equation = eq;
    c.pole_orders = {q_base, q_base + 1};
    c.infinite_points = 1;
    return c;
}

PlaneCurveSpec artin_schreier_curve(const FieldPtr& field, UniPoly u, UniPoly v) {
    if (v.is_zero() || u.is_zero()) throw InvalidArgument("u and v must be nonzero");
    if (classify_p_polynomial(v) != PolyClass::linearized)
        throw InvalidArgument("v must be a linearized polynomial");
    if (v.coeff(1).is_zero()) throw InvalidArgument("v must be separable (y-coefficient nonzero)");
    const std::uint64_t m = static_cast<std::uint64_t>(v.degree());
    std::uint64_t t = m;
    while (t % field->p() == 0) t /= field->p();
    if (t != 1) throw InvalidArgument("deg v must be a power of the characteristic");
    std::uint64_t a = static_cast<std::uint64_t>(u.degree()), b = m;
    while (b) {
        std::uint64_t r = a % b;
        a = b;
        b = r;
    }
    if (a != 1) throw InvalidArgument("deg u and deg v must be coprime");
    // fibres of size m need the full kernel of v rational
    UniPoly vker = v;
    if (univariate_roots(vker).size() != m)
        throw InvalidArgument("kernel of v is not fully rational over this field");

    MultiPoly eq(field, 2);
    for (std::size_t i = 0; i < u.coeffs().size(); ++i)
        eq.add_term(Monomial{{static_cast<std::uint32_t>(i), 0}}, u.coeffs()[i]);
    for (std::size_t i = 0; i < v.coeffs().size(); ++i)
        eq.add_term(Monomial{{0, static_cast<std::uint32_t>(i)}}, -v.coeffs()[i]);
    PlaneCurveSpec c;
    c.field = field;
    c.family = CurveFamily::artin_schreier;
    c.equation = eq;
    c.pole_orders = {static_cast<std::uint32_t>(v.degree()),
                     static_cast<std::uint32_t>(u.degree())};
    c.infinite_points = 1;
    c.u = u;
    c.v = v;
    return c;
}

std::vector<Point> rational_points(const PlaneCurveSpec& curve) {
    std::vector<Point> pts;
    auto elems = enumerate_field(curve.field);
    for (const auto& x : elems) {
        for (const auto& y : elems) {
            Point P{x, y};
            if (curve.equation.evaluate(P).is_zero()) pts.push_back(P);
        }
    }
    return pts;
}

CodeBlueprint klein_blueprint(std::uint32_t l, const std::vector<LatticePoint>& drops) {
    if (l < 1 || l > 20) throw InvalidArgument("klein: l must be in [1, 20]");
    PlaneCurveSpec curve = klein_curve();
    const FieldPtr& f = curve.field;

    // phi_1 = x/y, phi_2 = x/y^2
    RationalFunction phi1(MultiPoly::var_power(f, 2, 0, 1), MultiPoly::var_power(f, 2, 1, 1));
    RationalFunction phi2(MultiPoly::var_power(f, 2, 0, 1), MultiPoly::var_power(f, 2, 1, 2));

    auto affine = rational_points(curve);
    std::vector<Point> P;
    for (const auto& pt : affine)
        if (!(pt[0].is_zero() && pt[1].is_zero())) P.push_back(pt);
    // (0,0) is the only affine point with y = 0, so P is exactly the
    // pole-free set of phi_1, phi_2
    if (domain_filter({phi1, phi2}, P).size() != P.size())
        throw Error("klein: unexpected pole among evaluation points");

    CodeBlueprint bp;
    bp.field = f;
    bp.name = "klein-l" + std::to_string(l);
    bp.points = std::move(P);
    bp.map = {phi1};
    bp.phi_last = phi2;
    bp.fibres = make_fibres(bp.map, bp.phi_last, bp.points);
    bp.locality = locality_of(bp.fibres, 1);  // unramified-fibre check by counting
    if (bp.locality != 2) throw Error("klein: expected locality 2");
    bp.capability = 1;
    bp.mode = RecoveryMode::interpolation;

    Polytope shape = weighted_polytope({3, 5}, l, 1, 1);
    if (!drops.empty()) {
        auto rem = remove_points(shape, drops);
        shape = rem.result;
    }
    bp.basis = basis_from_shape(f, shape, 0, 1);
    bp.goppa_degree = max_weighted_degree(shape, 3, 5);
    bp.distance_lb = static_cast<std::int64_t>(bp.points.size()) - *bp.goppa_degree;
    return bp;
}

CodeBlueprint elliptic_blueprint(const FieldPtr& field, const FieldElement& B, std::uint32_t l) {
    if (field->q() % 3 != 1)
        throw InvalidArgument("elliptic: q = 1 mod 3 required (otherwise no LRC interest)");
    if (B.is_zero()) throw InvalidArgument("elliptic: B must be nonzero");
    PlaneCurveSpec curve = elliptic_curve(field, B);
    auto affine = rational_points(curve);
    std::vector<Point> P;
    for (const auto& pt : affine)
        if (!pt[0].is_zero()) P.push_back(pt);  // points grouped in triples need a != 0
    if (l >= P.size()) throw InvalidArgument("elliptic: l must be < n");

    CodeBlueprint bp;
    bp.field = field;
    bp.name = "elliptic-l" + std::to_string(l);
    bp.points = std::move(P);
    bp.map = {RationalFunction(MultiPoly::var_power(field, 2, 1, 1))};  // phi = y
    bp.phi_last = RationalFunction(MultiPoly::var_power(field, 2, 0, 1));  // node = x
    bp.fibres = make_fibres(bp.map, bp.phi_last, bp.points);
    bp.locality = locality_of(bp.fibres, 1);
    if (bp.locality != 2) throw Error("elliptic: expected locality 2");
    bp.capability = 1;
    bp.mode = RecoveryMode::interpolation;

    Polytope shape = weighted_polytope({2, 3}, l, 0, 1);  // {2a+3b <= l, a <= 1}
    if (shape.size() != static_cast<std::size_t>(l - (l - 1) / 3))
        throw Error("elliptic: polytope cardinality formula violated");
    // axis 1 (the y-exponent) is fibre-constant, axis 0 (x) is the node power
    bp.basis = basis_from_shape(field, shape, 1, 0);
    bp.goppa_degree = max_weighted_degree(shape, 2, 3);
    bp.distance_lb = static_cast<std::int64_t>(bp.points.size()) - *bp.goppa_degree;
    return bp;
}

std::vector<long long> elliptic_twist_counts(const FieldPtr& field) {
    std::vector<long long> S;
    auto elems = enumerate_field(field);
    for (std::uint32_t i = 0; i < 6; ++i) {
        FieldElement B = field->primitive().pow(i);
        long long affine = 0;
        for (const auto& x : elems) {
            FieldElement rhs = x.pow(3) + B;
            for (const auto& y : elems)
                if (y * y == rhs) ++affine;
        }
        // one point at infinity; S_i = #X_i - q - 1
        S.push_back(affine + 1 - static_cast<long long>(field->q()) - 1);
    }
    return S;
}

CodeBlueprint hermitian_blueprint(std::uint32_t q_base, HermitianShape shape_kind,
                                  std::uint32_t l) {
    PlaneCurveSpec curve = hermitian_curve(q_base);
    const FieldPtr& f = curve.field;
    const std::uint32_t q = q_base;
    const std::uint32_t r = q - 1;
    if (r < 1) throw InvalidArgument("hermitian: q_base must be >= 2");

    auto P = rational_points(curve);
    const std::uint64_t n = P.size();
    if (n != std::uint64_t(q) * q * q) throw Error("hermitian: expected q^3 affine points");

    std::uint32_t l_eff = l;
    if (shape_kind == HermitianShape::distance_improved) {
        std::uint32_t cut = (r * (r - 1)) / (2 * q);
        if (cut > l) throw InvalidArgument("hermitian: l too small for distance improvement");
        l_eff = l - cut;
    }
    const std::uint64_t budget = std::uint64_t(l_eff) * q + std::uint64_t(r - 1) * (q + 1);
    if (budget >= n) throw InvalidArgument("hermitian: injectivity budget l*q+(r-1)(q+1) < q^3 violated");

    Polytope shape = (shape_kind == HermitianShape::rectangular)
                         ? hypercube({l + 1, r})
                         : weighted_polytope({q, q + 1}, budget, 1, r - 1);

    CodeBlueprint bp;
    bp.field = f;
    bp.name = "hermitian-q" + std::to_string(q) + "-l" + std::to_string(l);
    bp.points = std::move(P);
    bp.map = {RationalFunction(MultiPoly::var_power(f, 2, 0, 1))};  // phi = x
    bp.phi_last = RationalFunction(MultiPoly::var_power(f, 2, 1, 1));  // node = y
    bp.fibres = make_fibres(bp.map, bp.phi_last, bp.points);
    bp.locality = locality_of(bp.fibres, 1);
    if (bp.locality != r) throw Error("hermitian: expected locality q-1");
    bp.capability = 1;
    bp.mode = RecoveryMode::checksum;  // eligible via the Artin-Schreier family
    bp.basis = basis_from_shape(f, shape, 0, 1);
    bp.goppa_degree = max_weighted_degree(shape, q, q + 1);
    bp.distance_lb = static_cast<std::int64_t>(n) - *bp.goppa_degree;
    return bp;
}

RiemannRochResult riemann_roch_test(std::uint32_t q_base,
                                    const std::vector<std::uint32_t>& caps) {
    if (caps.empty()) throw InvalidArgument("need caps l_0..l_t");
    const std::uint32_t t = static_cast<std::uint32_t>(caps.size()) - 1;
    if (t > q_base - 2) throw InvalidArgument("riemann_roch_test requires t <= q-2");
    for (std::uint32_t j = 0; j <= t + 1; ++j) {
        bool ok = true;
        for (std::uint32_t i = 0; i <= t && ok; ++i) {
            std::uint32_t expect = (i < j) ? i : i + 1;
            if (caps[t - i] != expect) ok = false;
        }
        if (ok) {
            std::uint64_t s = (j <= t) ? std::uint64_t(t + 1) * q_base + t - j
                                       : std::uint64_t(t) * (q_base + 1);
            return {true, s};
        }
    }
    return {false, std::nullopt};
}

CodeBlueprint artin_schreier_blueprint(const FieldPtr& field, const UniPoly& u, const UniPoly& v,
                                       std::uint32_t l) {
    PlaneCurveSpec curve = artin_schreier_curve(field, u, v);
    const std::uint32_t m = static_cast<std::uint32_t>(v.degree());
    if (m < 2) throw InvalidArgument("artin-schreier: deg v must be >= 2");

    // S = {a : v(b) = u(a) solvable}; image of a linearized v is a subspace
    std::set<std::uint64_t> image;
    auto elems = enumerate_field(field);
    for (const auto& b : elems) image.insert(v.evaluate(b).index());
    std::vector<Point> P;
    for (const auto& a : elems) {
        if (!image.count(u.evaluate(a).index())) continue;
        for (const auto& b : elems)
            if (v.evaluate(b) == u.evaluate(a)) P.push_back(Point{a, b});
    }
    if (l >= P.size()) throw InvalidArgument("artin-schreier: l must be < n");

    CodeBlueprint bp;
    bp.field = field;
    bp.name = "artin-schreier-l" + std::to_string(l);
    bp.points = std::move(P);
    bp.map = {RationalFunction(MultiPoly::var_power(field, 2, 0, 1))};  // phi = x
    bp.phi_last = RationalFunction(MultiPoly::var_power(field, 2, 1, 1));  // node = y
    bp.fibres = make_fibres(bp.map, bp.phi_last, bp.points);
    for (const auto& fib : bp.fibres.fibres)
        if (fib.members.size() != m) throw Error("artin-schreier: fibre size != deg v");
    bp.locality = m - 1;
    bp.capability = 1;
    bp.mode = RecoveryMode::checksum;

    const auto dv = static_cast<std::uint32_t>(v.degree());
    const auto du = static_cast<std::uint32_t>(u.degree());
    Polytope shape = weighted_polytope({dv, du}, l, 1, m - 2);
    bp.basis = basis_from_shape(field, shape, 0, 1);
    bp.goppa_degree = max_weighted_degree(shape, dv, du);
    bp.distance_lb = static_cast<std::int64_t>(bp.points.size()) - *bp.goppa_degree;
    return bp;
}

CodeBlueprint norm_trace_blueprint(std::uint32_t q, std::uint32_t u_exp, std::uint32_t l) {
    if (u_exp < 2) throw InvalidArgument("norm-trace: u >= 2 required");
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < u_exp; ++i) order *= q;
    FieldPtr f = FieldSpec::make(order);

    // u(x) = x^(1+q+...+q^(u-1)), v(y) = y + y^q + ... + y^(q^(u-1))
    std::uint64_t norm_deg = 0, pw = 1;
    for (std::uint32_t i = 0; i < u_exp; ++i) {
        norm_deg += pw;
        pw *= q;
    }
    std::vector<FieldElement> uc(norm_deg + 1, f->zero());
    uc[norm_deg] = f->one();
    UniPoly u(f, std::move(uc));

    std::uint64_t vdeg = 1;
    for (std::uint32_t i = 0; i + 1 < u_exp; ++i) vdeg *= q;
    std::vector<FieldElement> vc(vdeg + 1, f->zero());
    pw = 1;
    for (std::uint32_t i = 0; i < u_exp; ++i) {
        vc[pw] = f->one();
        pw *= q;
    }
    UniPoly v(f, std::move(vc));

    auto bp = artin_schreier_blueprint(f, u, v, l);
    bp.name = "norm-trace-q" + std::to_string(q) + "-u" + std::to_string(u_exp) + "-l" +
              std::to_string(l);
    return bp;
}

}  // namespace lrc
