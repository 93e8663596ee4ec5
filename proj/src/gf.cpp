#include "lrc/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace lrc {
namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

std::vector<std::uint32_t> unpack(std::uint64_t v, std::uint32_t p, std::uint32_t m) {
    std::vector<std::uint32_t> d(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        d[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
    }
    return d;
}

std::uint64_t pack(const std::vector<std::uint32_t>& d, std::uint32_t p) {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

// Remainder of num by monic den, coefficients mod p, low degree first.
bool divides_exactly(std::vector<std::uint32_t> num, const std::vector<std::uint32_t>& den,
                     std::uint32_t p) {
    const std::size_t dd = den.size() - 1;
    for (std::size_t i = num.size(); i-- > dd;) {
        std::uint32_t c = num[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) {
            std::uint64_t t = (num[i - dd + j] + static_cast<std::uint64_t>(p - c) * den[j]) % p;
            num[i - dd + j] = static_cast<std::uint32_t>(t);
        }
    }
    for (std::size_t i = 0; i < dd; ++i)
        if (num[i] != 0) return false;
    return true;
}

bool is_irreducible(const std::vector<std::uint32_t>& mod, std::uint32_t p) {
    const std::uint32_t m = static_cast<std::uint32_t>(mod.size()) - 1;
    // trial division against all monic polynomials of degree <= m/2
    for (std::uint32_t deg = 1; deg <= m / 2; ++deg) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < deg; ++i) count *= p;
        for (std::uint64_t t = 0; t < count; ++t) {
            std::vector<std::uint32_t> den = unpack(t, p, deg);
            den.push_back(1);
            if (divides_exactly(mod, den, p)) return false;
        }
    }
    return true;
}

// Built-in moduli: the monic primitive polynomial with the smallest packed
// non-leading part, per field order. Verified by construction checks.
const std::map<std::uint64_t, std::vector<std::uint32_t>>& builtin_moduli() {
    static const std::map<std::uint64_t, std::vector<std::uint32_t>> tbl = {
        {4, {1, 1, 1}},
        {8, {1, 1, 0, 1}},
        {9, {2, 1, 1}},
        {16, {1, 1, 0, 0, 1}},
        {25, {2, 1, 1}},
        {27, {1, 2, 0, 1}},
        {32, {1, 0, 1, 0, 0, 1}},
        {49, {3, 1, 1}},
        {64, {1, 1, 0, 0, 0, 0, 1}},
        {81, {2, 1, 0, 0, 1}},
        {125, {2, 3, 0, 1}},
    };
    return tbl;
}

std::mutex registry_mutex;
std::map<std::string, FieldPtr>& registry() {
    static std::map<std::string, FieldPtr> r;
    return r;
}

std::string spec_key(std::uint32_t p, std::uint32_t m, const std::vector<std::uint32_t>& mod,
                     std::uint32_t prim) {
    std::ostringstream os;
    os << p << ':' << m << ':';
    for (auto c : mod) os << c << ',';
    os << ':' << prim;
    return os.str();
}

}  // namespace

std::uint32_t FieldSpec::mul_slow(std::uint32_t a, std::uint32_t b) const {
    if (m_ == 1) return static_cast<std::uint32_t>(std::uint64_t(a) * b % p_);
    auto da = unpack(a, p_, m_);
    auto db = unpack(b, p_, m_);
    std::vector<std::uint32_t> prod(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i)
        for (std::uint32_t j = 0; j < m_; ++j)
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + std::uint64_t(da[i]) * db[j]) % p_);
    for (std::size_t i = prod.size(); i-- > m_;) {
        std::uint32_t c = prod[i];
        if (c == 0) continue;
        for (std::uint32_t j = 0; j <= m_; ++j)
            prod[i - m_ + j] = static_cast<std::uint32_t>(
                (prod[i - m_ + j] + std::uint64_t(p_ - c) * modulus_[j]) % p_);
        prod[i] = 0;
    }
    prod.resize(m_);
    return static_cast<std::uint32_t>(pack(prod, p_));
}

std::uint32_t FieldSpec::add(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) return (a + b) % p_;
    std::uint32_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        r += (a % p_ + b % p_) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

std::uint32_t FieldSpec::neg(std::uint32_t a) const {
    if (p_ == 2) return a;
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    std::uint32_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint32_t d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

std::uint32_t FieldSpec::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FieldSpec::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) return exp_[(std::uint64_t(log_[a]) + log_[b]) % (q_ - 1)];
    return mul_slow(a, b);
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    if (!log_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    // extended power fallback: a^(q-2)
    std::uint32_t r = 1, base = a;
    std::uint64_t e = q_ - 2;
    while (e) {
        if (e & 1) r = mul_slow(r, base);
        base = mul_slow(base, base);
        e >>= 1;
    }
    return r;
}

std::uint64_t FieldSpec::log(std::uint32_t a) const {
    if (a == 0) throw DivisionByZero("log of zero");
    if (!log_.empty()) return log_[a];
    // generic discrete log by scan (only for q > 2^16, not used in practice)
    std::uint32_t x = 1;
    for (std::uint64_t e = 0; e < q_ - 1; ++e) {
        if (x == a) return e;
        x = mul_slow(x, primitive_);
    }
    throw Error("log: element not generated by primitive");
}

std::uint32_t FieldSpec::exp(std::uint64_t e) const {
    e %= (q_ - 1);
    if (!exp_.empty()) return exp_[e];
    std::uint32_t r = 1, base = primitive_;
    while (e) {
        if (e & 1) r = mul_slow(r, base);
        base = mul_slow(base, base);
        e >>= 1;
    }
    return r;
}

void FieldSpec::init_tables() {
    if (q_ > (1u << 16)) return;
    log_.assign(q_, 0);
    exp_.assign(q_ - 1, 0);
    std::uint32_t x = 1;
    for (std::uint64_t e = 0; e < q_ - 1; ++e) {
        exp_[e] = x;
        log_[x] = static_cast<std::uint32_t>(e);
        x = mul_slow(x, primitive_);
    }
    if (x != 1) throw InvalidArgument("primitive element does not have order q-1");
}

FieldPtr FieldSpec::make(std::uint64_t q) {
    if (q < 2) throw InvalidArgument("field order must be a prime power >= 2");
    std::uint64_t p = 0, n = q;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = n;  // q itself prime
    std::uint32_t m = 0;
    while (n > 1) {
        if (n % p != 0) throw InvalidArgument("field order is not a prime power");
        n /= p;
        ++m;
    }
    return make(static_cast<std::uint32_t>(p), m, {});
}

FieldPtr FieldSpec::make(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus,
                         std::vector<std::uint32_t> primitive) {
    if (!is_prime(p)) throw InvalidArgument("characteristic must be prime");
    if (m < 1) throw InvalidArgument("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > (1ull << 31)) throw InvalidArgument("field order too large");
    }

    if (m == 1) {
        modulus.clear();
    } else if (modulus.empty()) {
        auto it = builtin_moduli().find(q);
        if (it != builtin_moduli().end()) {
            modulus = it->second;
        } else {
            // deterministic fallback: smallest packed irreducible with x primitive
            for (std::uint64_t t = 0;; ++t) {
                if (t >= q) throw Error("no primitive modulus found");
                auto cand = unpack(t, p, m);
                cand.push_back(1);
                if (!is_irreducible(cand, p)) continue;
                FieldSpec probe;
                probe.p_ = p;
                probe.m_ = m;
                probe.q_ = q;
                probe.modulus_ = cand;
                std::uint32_t x = probe.mul_slow(1, p);  // the element "x"
                bool prim = true;
                for (auto f : prime_factors(q - 1)) {
                    std::uint32_t r = 1, base = static_cast<std::uint32_t>(p);
                    std::uint64_t e = (q - 1) / f;
                    while (e) {
                        if (e & 1) r = probe.mul_slow(r, base);
                        base = probe.mul_slow(base, base);
                        e >>= 1;
                    }
                    if (r == 1) {
                        prim = false;
                        break;
                    }
                }
                (void)x;
                if (prim) {
                    modulus = cand;
                    break;
                }
            }
        }
    } else {
        for (auto& c : modulus) c %= p;
        if (modulus.size() != m + 1 || modulus.back() != 1)
            throw InvalidArgument("modulus must be monic of degree m");
        if (!is_irreducible(modulus, p)) throw InvalidArgument("modulus is reducible");
    }

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p_ = p;
    spec->m_ = m;
    spec->q_ = q;
    spec->modulus_ = modulus;

    std::uint32_t prim_packed;
    if (!primitive.empty()) {
        for (auto& c : primitive) c %= p;
        if (primitive.size() > m) throw InvalidArgument("primitive coefficients too long");
        primitive.resize(m, 0);
        prim_packed = static_cast<std::uint32_t>(pack(primitive, p));
    } else if (q == 2) {
        prim_packed = 1;  // trivial multiplicative group
    } else {
        // smallest generator under the packed-value order
        prim_packed = 0;
        for (std::uint32_t cand = 2; cand < q; ++cand) {
            FieldSpec& probe = *spec;
            bool gen = true;
            for (auto f : prime_factors(q - 1)) {
                std::uint32_t r = 1, base = cand;
                std::uint64_t e = (q - 1) / f;
                while (e) {
                    if (e & 1) r = probe.mul_slow(r, base);
                    base = probe.mul_slow(base, base);
                    e >>= 1;
                }
                if (r == 1) {
                    gen = false;
                    break;
                }
            }
            if (gen) {
                prim_packed = cand;
                break;
            }
        }
        if (prim_packed == 0) throw Error("no generator found");
    }
    spec->primitive_ = prim_packed;

    // order check: exactly q-1
    if (prim_packed == 0) throw InvalidArgument("primitive element is zero");
    for (auto f : prime_factors(q - 1)) {
        std::uint32_t r = 1, base = prim_packed;
        std::uint64_t e = (q - 1) / f;
        while (e) {
            if (e & 1) r = spec->mul_slow(r, base);
            base = spec->mul_slow(base, base);
            e >>= 1;
        }
        if (r == 1) throw InvalidArgument("primitive element has order < q-1");
    }

    spec->init_tables();

    std::lock_guard<std::mutex> lock(registry_mutex);
    auto key = spec_key(p, m, spec->modulus_, spec->primitive_);
    auto it = registry().find(key);
    if (it != registry().end()) return it->second;
    FieldPtr out = spec;
    registry()[key] = out;
    return out;
}

FieldElement FieldSpec::from_packed(std::uint64_t v) const {
    if (m_ == 1) return {this, static_cast<std::uint32_t>(v % p_)};
    if (v >= q_) throw InvalidArgument("packed value out of range");
    return {this, static_cast<std::uint32_t>(v)};
}

FieldElement FieldSpec::from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (c.size() > m_) throw InvalidArgument("coefficient vector too long");
    std::vector<std::uint32_t> d(c);
    for (auto& x : d) x %= p_;
    d.resize(m_, 0);
    return {this, static_cast<std::uint32_t>(pack(d, p_))};
}

FieldElement FieldSpec::from_index(std::uint64_t idx) const {
    if (idx == 0) return zero();
    if (idx >= q_) throw InvalidArgument("element index out of range");
    return {this, exp(idx - 1)};
}

FieldElement FieldSpec::from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return {this, static_cast<std::uint32_t>(r)};
}

const FieldSpec* FieldElement::require_same(const FieldElement& o) const {
    if (spec_ == nullptr || o.spec_ == nullptr) throw FieldMismatch("uninitialized field element");
    if (spec_ != o.spec_) throw FieldMismatch("elements belong to different fields");
    return spec_;
}

std::vector<std::uint32_t> FieldElement::coeffs() const {
    if (!spec_) throw FieldMismatch("uninitialized field element");
    std::vector<std::uint32_t> d(spec_->m());
    std::uint32_t v = val_;
    for (std::uint32_t i = 0; i < spec_->m(); ++i) {
        d[i] = v % spec_->p();
        v /= spec_->p();
    }
    return d;
}

std::uint64_t FieldElement::index() const {
    if (!spec_) throw FieldMismatch("uninitialized field element");
    if (val_ == 0) return 0;
    return spec_->log(val_) + 1;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    auto* s = require_same(o);
    return {s, s->add(val_, o.val_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    auto* s = require_same(o);
    return {s, s->sub(val_, o.val_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    auto* s = require_same(o);
    return {s, s->mul(val_, o.val_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
    auto* s = require_same(o);
    if (o.val_ == 0) throw DivisionByZero("division by zero");
    return {s, s->mul(val_, s->inv(o.val_))};
}
FieldElement FieldElement::operator-() const {
    if (!spec_) throw FieldMismatch("uninitialized field element");
    return {spec_, spec_->neg(val_)};
}
FieldElement FieldElement::inv() const {
    if (!spec_) throw FieldMismatch("uninitialized field element");
    if (val_ == 0) throw DivisionByZero("inverse of zero");
    return {spec_, spec_->inv(val_)};
}

FieldElement FieldElement::pow(long long e) const {
    if (!spec_) throw FieldMismatch("uninitialized field element");
    if (val_ == 0) {
        if (e == 0) return {spec_, 1};
        if (e < 0) throw DivisionByZero("negative power of zero");
        return {spec_, 0};
    }
    const long long order = static_cast<long long>(spec_->q() - 1);
    long long r = e % order;
    if (r < 0) r += order;
    return {spec_, spec_->exp(spec_->log(val_) * static_cast<std::uint64_t>(r))};
}

std::vector<FieldElement> enumerate_field(const FieldPtr& spec) {
    std::vector<FieldElement> out;
    out.reserve(spec->q());
    out.push_back(spec->zero());
    for (std::uint64_t e = 0; e + 1 < spec->q(); ++e) out.push_back(FieldElement(spec.get(), spec->exp(e)));
    return out;
}

std::vector<FieldElement> nth_roots_of_unity(const FieldPtr& spec, std::uint64_t n) {
    if (n == 0 || (spec->q() - 1) % n != 0)
        throw InvalidArgument("n must divide q-1");
    std::vector<FieldElement> out;
    out.reserve(n);
    const std::uint64_t step = (spec->q() - 1) / n;
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(FieldElement(spec.get(), spec->exp(step * i)));
    return out;
}

}  // namespace lrc
