#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "lrc/common.hpp"

namespace lrc {

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

/// One element of GF(p^m), stored as base-p packed polynomial-basis digits.
/// Plain value type; arithmetic between elements of different specs throws.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(const FieldSpec* spec, std::uint32_t packed) : spec_(spec), val_(packed) {}

    const FieldSpec* spec() const { return spec_; }
    bool is_zero() const { return val_ == 0; }
    std::uint32_t packed() const { return val_; }

    /// Coefficients of the polynomial-basis representation, low degree first.
    std::vector<std::uint32_t> coeffs() const;
    /// Position in the canonical enumeration: 0 -> 0, k -> xi^(k-1).
    std::uint64_t index() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(long long e) const;

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    bool operator==(const FieldElement& o) const { return spec_ == o.spec_ && val_ == o.val_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

  private:
    const FieldSpec* require_same(const FieldElement& o) const;
    const FieldSpec* spec_ = nullptr;
    std::uint32_t val_ = 0;
};

/// Description of GF(p^m): prime, degree, monic irreducible modulus (m > 1)
/// and a primitive element. Immutable after construction; share freely.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
  public:
    /// Field of the given order with the built-in modulus table (or the
    /// deterministic smallest-primitive search for fields outside it).
    static FieldPtr make(std::uint64_t q);
    /// Field with explicit parameters. Empty modulus/primitive select the
    /// defaults. Modulus is a monic coefficient list, low degree first.
    static FieldPtr make(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus,
                         std::vector<std::uint32_t> primitive = {});

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    FieldPtr handle() const { return shared_from_this(); }

    FieldElement zero() const { return {this, 0}; }
    FieldElement one() const { return {this, 1}; }
    FieldElement primitive() const { return {this, primitive_}; }
    /// Element from an integer, reduced mod p when m = 1; for extensions the
    /// value is interpreted as packed base-p digits and must be < q.
    FieldElement from_packed(std::uint64_t v) const;
    FieldElement from_coeffs(const std::vector<std::uint32_t>& c) const;
    /// Inverse of FieldElement::index().
    FieldElement from_index(std::uint64_t idx) const;
    /// Integer n mod p, embedded via the prime subfield (used for n*x sums).
    FieldElement from_int(long long n) const;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;

    std::uint64_t log(std::uint32_t a) const;  // a != 0
    std::uint32_t exp(std::uint64_t e) const;  // xi^e

  private:
    FieldSpec() = default;
    void init_tables();
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;

    std::uint32_t p_ = 0;
    std::uint32_t m_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;  // length m+1, monic
    std::uint32_t primitive_ = 0;
    std::vector<std::uint32_t> log_;  // index: packed value, defined for v != 0
    std::vector<std::uint32_t> exp_;  // index: 0..q-2
};

/// All q elements in the fixed order 0, xi^0, xi^1, ..., xi^(q-2).
std::vector<FieldElement> enumerate_field(const FieldPtr& spec);

/// The n distinct solutions of x^n = 1; requires n | q-1.
std::vector<FieldElement> nth_roots_of_unity(const FieldPtr& spec, std::uint64_t n);

}  // namespace lrc
