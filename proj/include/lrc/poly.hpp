#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lrc/gf.hpp"

namespace lrc {

/// Exponent vector of a single term; length equals the variable count.
struct Monomial {
    std::vector<std::uint32_t> e;

    std::uint64_t total_degree() const {
        std::uint64_t t = 0;
        for (auto x : e) t += x;
        return t;
    }
    // graded lexicographic: by total degree, then by exponent vector
    bool operator<(const Monomial& o) const {
        auto ta = total_degree(), tb = o.total_degree();
        if (ta != tb) return ta < tb;
        return e < o.e;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

/// Sparse multivariate polynomial; terms kept in graded-lex order with no
/// zero coefficients stored.
class MultiPoly {
  public:
    MultiPoly() = default;
    MultiPoly(FieldPtr field, std::uint32_t nvars);
    static MultiPoly constant(const FieldPtr& field, std::uint32_t nvars, const FieldElement& c);
    static MultiPoly monomial(const FieldPtr& field, Monomial mono, const FieldElement& c);
    /// Convenience: c * x_var^e in an nvars-variable ring.
    static MultiPoly var_power(const FieldPtr& field, std::uint32_t nvars, std::uint32_t var,
                               std::uint32_t e);

    const FieldPtr& field() const { return field_; }
    std::uint32_t nvars() const { return nvars_; }
    const std::map<Monomial, FieldElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::uint64_t total_degree() const;  // 0 for the zero polynomial
    std::uint32_t degree_in(std::uint32_t var) const;

    void add_term(const Monomial& mono, const FieldElement& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const FieldElement& c) const;

    FieldElement evaluate(std::span<const FieldElement> point) const;

    /// Text form "c*x1^e1*...*xm^em + ..." with coefficients as element
    /// indices; round-trips through parse().
    std::string to_string() const;
    static MultiPoly parse(const FieldPtr& field, std::uint32_t nvars, const std::string& text);

    bool operator==(const MultiPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

  private:
    FieldPtr field_;
    std::uint32_t nvars_ = 0;
    std::map<Monomial, FieldElement> terms_;
};

/// Replace every positive exponent e by its representative in [1, q-1] with
/// e' = e mod (q-1); agrees with f at every point of A^nvars(GF(q)).
MultiPoly reduce_exponents(const MultiPoly& f);
/// Same, with a separate order per axis (grid axes satisfying x^n = 1 reduce
/// mod n instead of mod q-1).
MultiPoly reduce_exponents(const MultiPoly& f, const std::vector<std::uint32_t>& axis_orders);

/// Dense univariate polynomial, low-degree-first coefficients, normalized so
/// the leading coefficient is nonzero (zero polynomial = empty).
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(FieldPtr field) : field_(std::move(field)) {}
    UniPoly(FieldPtr field, std::vector<FieldElement> coeffs);
    static UniPoly from_roots(const FieldPtr& field, std::span<const FieldElement> roots);

    const FieldPtr& field() const { return field_; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    FieldElement coeff(std::size_t i) const;
    FieldElement evaluate(const FieldElement& x) const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const FieldElement& c) const;
    /// Quotient and remainder by a nonzero divisor.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& den) const;
    UniPoly derivative() const;

    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

  private:
    FieldPtr field_;
    std::vector<FieldElement> coeffs_;
};

/// Unique polynomial of degree < #nodes through the given (node, value)
/// pairs; nodes must be pairwise distinct.
UniPoly lagrange_interpolate(std::span<const FieldElement> nodes,
                             std::span<const FieldElement> values);

/// Elementary symmetric functions sigma_1..sigma_d of the inputs.
std::vector<FieldElement> elementary_symmetric(std::span<const FieldElement> roots);

/// Power sums pi_1..pi_upto, computed directly and cross-checked against the
/// Newton-Girard recursion.
std::vector<FieldElement> power_sums(std::span<const FieldElement> roots, std::size_t upto);

enum class PolyClass { linearized, affine, neither };

/// Classifies f: linearized (all exponents powers of p, no constant), affine
/// (linearized plus a nonzero constant), or neither. f must be nonzero.
PolyClass classify_p_polynomial(const UniPoly& f);
inline bool is_affine_p_polynomial(const UniPoly& f) {
    return classify_p_polynomial(f) != PolyClass::neither;
}

/// All roots of f in GF(q) with multiplicity, by exhaustive evaluation and
/// repeated deflation. f must be nonzero.
std::vector<FieldElement> univariate_roots(const UniPoly& f);

}  // namespace lrc
