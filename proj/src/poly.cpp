#include "lrc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lrc {

MultiPoly::MultiPoly(FieldPtr field, std::uint32_t nvars)
    : field_(std::move(field)), nvars_(nvars) {}

MultiPoly MultiPoly::constant(const FieldPtr& field, std::uint32_t nvars, const FieldElement& c) {
    MultiPoly f(field, nvars);
    f.add_term(Monomial{std::vector<std::uint32_t>(nvars, 0)}, c);
    return f;
}

MultiPoly MultiPoly::monomial(const FieldPtr& field, Monomial mono, const FieldElement& c) {
    if (c.spec() != field.get()) throw FieldMismatch("coefficient from a different field");
    MultiPoly f(field, static_cast<std::uint32_t>(mono.e.size()));
    f.add_term(mono, c);
    return f;
}

MultiPoly MultiPoly::var_power(const FieldPtr& field, std::uint32_t nvars, std::uint32_t var,
                               std::uint32_t e) {
    if (var >= nvars) throw DimensionMismatch("variable index out of range");
    Monomial mono{std::vector<std::uint32_t>(nvars, 0)};
    mono.e[var] = e;
    return monomial(field, mono, field->one());
}

void MultiPoly::add_term(const Monomial& mono, const FieldElement& c) {
    if (mono.e.size() != nvars_) throw DimensionMismatch("monomial length != nvars");
    if (c.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::uint64_t MultiPoly::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.total_degree());
    return d;
}

std::uint32_t MultiPoly::degree_in(std::uint32_t var) const {
    std::uint32_t d = 0;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.e.at(var));
    return d;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw DimensionMismatch("nvars mismatch");
    MultiPoly r = *this;
    for (const auto& [mono, c] : o.terms_) r.add_term(mono, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw DimensionMismatch("nvars mismatch");
    MultiPoly r = *this;
    for (const auto& [mono, c] : o.terms_) r.add_term(mono, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw DimensionMismatch("nvars mismatch");
    MultiPoly r(field_ ? field_ : o.field_, nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m{ma.e};
            for (std::uint32_t i = 0; i < nvars_; ++i) m.e[i] += mb.e[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const FieldElement& c) const {
    MultiPoly r(field_, nvars_);
    for (const auto& [mono, coef] : terms_) r.add_term(mono, coef * c);
    return r;
}

FieldElement MultiPoly::evaluate(std::span<const FieldElement> point) const {
    if (point.size() != nvars_) throw DimensionMismatch("point length != nvars");
    FieldElement acc = field_->zero();
    for (const auto& [mono, c] : terms_) {
        FieldElement t = c;
        for (std::uint32_t i = 0; i < nvars_; ++i)
            if (mono.e[i] != 0) t *= point[i].pow(mono.e[i]);
        acc += t;
    }
    return acc;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.index();
        for (std::uint32_t i = 0; i < nvars_; ++i)
            if (mono.e[i] != 0) os << "*x" << (i + 1) << "^" << mono.e[i];
    }
    return os.str();
}

MultiPoly MultiPoly::parse(const FieldPtr& field, std::uint32_t nvars, const std::string& text) {
    MultiPoly f(field, nvars);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_uint = [&]() -> std::uint64_t {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw InvalidArgument("polynomial parse: expected number at position " +
                                  std::to_string(pos));
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + (text[pos++] - '0');
        return v;
    };
    skip_ws();
    if (pos >= text.size()) throw InvalidArgument("polynomial parse: empty input");
    while (true) {
        std::uint64_t cidx = read_uint();
        Monomial mono{std::vector<std::uint32_t>(nvars, 0)};
        skip_ws();
        while (pos < text.size() && text[pos] == '*') {
            ++pos;
            skip_ws();
            if (pos >= text.size() || text[pos] != 'x')
                throw InvalidArgument("polynomial parse: expected variable");
            ++pos;
            std::uint64_t var = read_uint();
            if (var < 1 || var > nvars) throw InvalidArgument("polynomial parse: bad variable index");
            std::uint64_t e = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                e = read_uint();
            }
            mono.e[var - 1] += static_cast<std::uint32_t>(e);
            skip_ws();
        }
        f.add_term(mono, field->from_index(cidx));
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '+') throw InvalidArgument("polynomial parse: expected '+'");
        ++pos;
    }
    return f;
}

namespace {
std::uint32_t reduce_exp(std::uint32_t e, std::uint32_t order) {
    if (e == 0) return 0;
    // representative in [1, order]; never 0, since x^order != 1 at x = 0
    std::uint32_t r = e % order;
    return r == 0 ? order : r;
}
}  // namespace

MultiPoly reduce_exponents(const MultiPoly& f) {
    const auto order = static_cast<std::uint32_t>(f.field()->q() - 1);
    return reduce_exponents(f, std::vector<std::uint32_t>(f.nvars(), order));
}

MultiPoly reduce_exponents(const MultiPoly& f, const std::vector<std::uint32_t>& axis_orders) {
    if (axis_orders.size() != f.nvars()) throw DimensionMismatch("one order per axis required");
    MultiPoly r(f.field(), f.nvars());
    for (const auto& [mono, c] : f.terms()) {
        Monomial m{mono.e};
        for (std::uint32_t i = 0; i < f.nvars(); ++i) m.e[i] = reduce_exp(m.e[i], axis_orders[i]);
        r.add_term(m, c);
    }
    return r;
}

UniPoly::UniPoly(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::from_roots(const FieldPtr& field, std::span<const FieldElement> roots) {
    UniPoly f(field, {field->one()});
    for (const auto& z : roots) {
        UniPoly lin(field, {-z, field->one()});
        f = f * lin;
    }
    return f;
}

FieldElement UniPoly::coeff(std::size_t i) const {
    if (i < coeffs_.size()) return coeffs_[i];
    return field_->zero();
}

FieldElement UniPoly::evaluate(const FieldElement& x) const {
    FieldElement acc = field_->zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    const FieldPtr& f = field_ ? field_ : o.field_;
    std::vector<FieldElement> c(std::max(coeffs_.size(), o.coeffs_.size()), f->zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return {f, std::move(c)};
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    const FieldPtr& f = field_ ? field_ : o.field_;
    std::vector<FieldElement> c(std::max(coeffs_.size(), o.coeffs_.size()), f->zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return {f, std::move(c)};
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    const FieldPtr& f = field_ ? field_ : o.field_;
    if (is_zero() || o.is_zero()) return UniPoly(f);
    std::vector<FieldElement> c(coeffs_.size() + o.coeffs_.size() - 1, f->zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return {f, std::move(c)};
}

UniPoly UniPoly::operator*(const FieldElement& c) const {
    std::vector<FieldElement> out;
    out.reserve(coeffs_.size());
    for (const auto& x : coeffs_) out.push_back(x * c);
    return {field_, std::move(out)};
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& den) const {
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    const FieldPtr& f = field_ ? field_ : den.field_;
    const long dd = den.degree();
    if (degree() < dd) return {UniPoly(f), *this};
    std::vector<FieldElement> rem = coeffs_;
    std::vector<FieldElement> quot(coeffs_.size() - dd, f->zero());
    FieldElement lead_inv = den.coeffs_.back().inv();
    for (long i = static_cast<long>(rem.size()) - 1; i >= dd; --i) {
        FieldElement c = rem[i] * lead_inv;
        if (!c.is_zero()) {
            quot[i - dd] = c;
            for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= c * den.coeffs_[j];
        }
    }
    rem.resize(static_cast<std::size_t>(dd), f->zero());
    return {UniPoly(f, std::move(quot)), UniPoly(f, std::move(rem))};
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly(field_);
    std::vector<FieldElement> c(coeffs_.size() - 1, field_->zero());
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        c[i - 1] = coeffs_[i] * field_->from_int(static_cast<long long>(i));
    return {field_, std::move(c)};
}

UniPoly lagrange_interpolate(std::span<const FieldElement> nodes,
                             std::span<const FieldElement> values) {
    if (nodes.empty() || nodes.size() != values.size())
        throw DimensionMismatch("interpolation needs equal, nonempty node/value lists");
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i] == nodes[j]) throw InvalidArgument("repeated interpolation node");
    FieldPtr field = nodes[0].spec()->handle();
    UniPoly acc(field);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        UniPoly basis(field, {field->one()});
        FieldElement denom = field->one();
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            basis = basis * UniPoly(field, {-nodes[j], field->one()});
            denom *= nodes[i] - nodes[j];
        }
        acc = acc + basis * (values[i] / denom);
    }
    return acc;
}

std::vector<FieldElement> elementary_symmetric(std::span<const FieldElement> roots) {
    if (roots.empty()) throw InvalidArgument("need at least one root");
    const FieldSpec* s = roots[0].spec();
    std::vector<FieldElement> sigma(roots.size() + 1, FieldElement(s, 0));
    sigma[0] = FieldElement(s, 1);
    std::size_t used = 0;
    for (const auto& z : roots) {
        ++used;
        for (std::size_t k = used; k >= 1; --k) sigma[k] += sigma[k - 1] * z;
    }
    return {sigma.begin() + 1, sigma.end()};
}

std::vector<FieldElement> power_sums(std::span<const FieldElement> roots, std::size_t upto) {
    if (upto < 1) throw InvalidArgument("upto must be >= 1");
    if (roots.empty()) throw InvalidArgument("need at least one root");
    const FieldSpec* raw = roots[0].spec();
    auto zero = FieldElement(raw, 0);
    std::vector<FieldElement> direct(upto, zero);
    for (std::size_t i = 1; i <= upto; ++i)
        for (const auto& z : roots) direct[i - 1] += z.pow(static_cast<long long>(i));
    // Newton-Girard: pi_i = (-1)^(i-1) i sigma_i - sum_{j=1}^{i-1} (-1)^j pi_{i-j} sigma_j
    auto sigma = elementary_symmetric(roots);
    auto sig = [&](std::size_t j) { return j <= sigma.size() ? sigma[j - 1] : zero; };
    std::vector<FieldElement> rec(upto, zero);
    for (std::size_t i = 1; i <= upto; ++i) {
        FieldElement sign = (i % 2 == 1) ? FieldElement(raw, 1) : -FieldElement(raw, 1);
        FieldElement acc = sign * sig(i) * raw->from_int(static_cast<long long>(i));
        for (std::size_t j = 1; j < i; ++j) {
            FieldElement sj = (j % 2 == 0) ? sig(j) : -sig(j);
            acc -= rec[i - j - 1] * sj;
        }
        rec[i - 1] = acc;
    }
    if (direct != rec) throw Error("power sums: direct and Newton-Girard results disagree");
    return direct;
}

PolyClass classify_p_polynomial(const UniPoly& f) {
    if (f.is_zero()) throw InvalidArgument("zero polynomial");
    const std::uint32_t p = f.field()->p();
    bool has_constant = !f.coeff(0).is_zero();
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i].is_zero()) continue;
        std::size_t e = i;
        while (e % p == 0) e /= p;
        if (e != 1) return PolyClass::neither;
    }
    return has_constant ? PolyClass::affine : PolyClass::linearized;
}

std::vector<FieldElement> univariate_roots(const UniPoly& f) {
    if (f.is_zero()) throw InvalidArgument("zero polynomial");
    std::vector<FieldElement> roots;
    UniPoly cur = f;
    for (const auto& x : enumerate_field(f.field())) {
        while (cur.degree() >= 1 && cur.evaluate(x).is_zero()) {
            roots.push_back(x);
            auto [q, r] = cur.divrem(UniPoly(f.field(), {-x, f.field()->one()}));
            cur = q;
        }
        if (cur.degree() < 1) break;
    }
    return roots;
}

}  // namespace lrc
