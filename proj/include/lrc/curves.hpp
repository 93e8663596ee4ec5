#pragma once

#include <optional>

#include "lrc/rational.hpp"

namespace lrc {

enum class CurveFamily { klein, elliptic_b, hermitian, artin_schreier, custom };

/// Affine plane model with one designated infinite point Q. Pole orders are
/// family constants: Klein (3,5) for (x/y, x/y^2), Hermitian (q, q+1),
/// Artin-Schreier (deg v, deg u), elliptic (2, 3).
struct PlaneCurveSpec {
    FieldPtr field;
    CurveFamily family = CurveFamily::custom;
    MultiPoly equation;  // two variables; zero set = affine curve
    std::pair<std::uint32_t, std::uint32_t> pole_orders{0, 0};
    std::uint32_t infinite_points = 1;  // reported count, never evaluated
    UniPoly u, v;                       // artin_schreier: u(x) = v(y)
    std::optional<FieldElement> B;      // elliptic: y^2 = x^3 + B
};

PlaneCurveSpec klein_curve();  // x^3 y + y^3 + x = 0 over GF(8)
PlaneCurveSpec elliptic_curve(const FieldPtr& field, const FieldElement& B);
PlaneCurveSpec hermitian_curve(std::uint32_t q_base);  // x^(q+1) = y^q + y over GF(q^2)
PlaneCurveSpec artin_schreier_curve(const FieldPtr& field, UniPoly u, UniPoly v);

/// All affine GF(q)-points of the curve, by exhaustive evaluation, in field
/// enumeration order (x-major).
std::vector<Point> rational_points(const PlaneCurveSpec& curve);

/// Klein quartic blueprint: phi_1 = x/y, phi_2 = x/y^2, P = A \ {(0,0)}
/// (n = 21), r = 2, weighted polytope {3a + 5b <= l, b <= 1} minus `drops`.
CodeBlueprint klein_blueprint(std::uint32_t l, const std::vector<LatticePoint>& drops = {});

/// Elliptic y^2 = x^3 + B blueprint (q = 1 mod 3): points with x != 0
/// grouped in triples sharing y; phi = y, node = x, r = 2; polytope
/// {2a + 3b <= l, a <= 1} of size l - floor((l-1)/3).
CodeBlueprint elliptic_blueprint(const FieldPtr& field, const FieldElement& B, std::uint32_t l);

/// S_i = #X_i(F_q) - q - 1 for the six twists y^2 = x^3 + xi^i, by brute
/// force point counting (one infinite point each).
std::vector<long long> elliptic_twist_counts(const FieldPtr& field);

enum class HermitianShape { rectangular, weighted, distance_improved };

/// Hermitian blueprint over GF(q^2): phi = x on all q^3 affine points,
/// r = q-1, checksum recovery. rectangular = H(l+1, r); weighted =
/// {qa + (q+1)b <= lq + (r-1)(q+1), b <= r-1}; distance_improved = the
/// weighted shape with l' = l - floor(r(r-1)/2q).
CodeBlueprint hermitian_blueprint(std::uint32_t q_base, HermitianShape shape, std::uint32_t l);

struct RiemannRochResult {
    bool is_rr_space = false;
    std::optional<std::uint64_t> s;  // V = L(sQ) when is_rr_space
};

/// Hermitian V = (+)_{i<=t} <1..x^{l_i}> y^i is a Riemann-Roch space iff
/// there is j with l_{t-i} = i for i < j and l_{t-i} = i+1 for i >= j;
/// then s = (t+1)q + t - j (j <= t) or s = t(q+1) (j = t+1).
RiemannRochResult riemann_roch_test(std::uint32_t q_base, const std::vector<std::uint32_t>& caps);

/// Separated-variable curve u(x) = v(y) with v separable linearized of
/// degree m = p^h and gcd(deg u, deg v) = 1: fibres of x have size m and
/// every codeword sums to zero on each of them (one-addition recovery).
CodeBlueprint artin_schreier_blueprint(const FieldPtr& field, const UniPoly& u, const UniPoly& v,
                                       std::uint32_t l);

/// Norm-Trace curve over GF(q^u): u(x) = x^(1+q+...+q^(u-1)),
/// v(y) = y + y^q + ... + y^(q^(u-1)); locality q^(u-1) - 1.
CodeBlueprint norm_trace_blueprint(std::uint32_t q, std::uint32_t u_exp, std::uint32_t l);

}  // namespace lrc
