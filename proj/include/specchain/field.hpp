#ifndef SPECCHAIN_FIELD_HPP
#define SPECCHAIN_FIELD_HPP

/// Exact base-field towers: the rationals, prime fields GF(p), rational
/// function fields F(t), and simple algebraic extensions F[z]/(m(z)).
/// Elements are kept in canonical form so that equality is representation
/// equality.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "specchain/common.hpp"

namespace specchain {

enum class FieldKind { rationals, prime_field, rational_function, extension };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class FieldElement {
public:
    FieldElement() = default;

    const FieldPtr& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    FieldElement inverse() const;

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    /// Expression-grammar rendering; composite values are parenthesized by
    /// the caller where needed.
    std::string str() const;

    /// True if str() needs no parentheses when embedded in a product.
    bool is_atomic() const;

private:
    friend class Field;

    FieldPtr field_;
    mpq_class rat_;                       // rationals
    std::int64_t res_ = 0;                // prime_field, least residue
    std::vector<FieldElement> num_;       // rational_function numerator / extension representative
    std::vector<FieldElement> den_;       // rational_function denominator (monic)

    void require_same_field(const FieldElement& o) const;
};

/// Immutable field descriptor. Construct through the static factories; share
/// via FieldPtr. Structural equality (two towers built independently but
/// identically are the same field).
class Field : public std::enable_shared_from_this<Field> {
public:
    static FieldPtr rationals();
    static FieldPtr prime_field(std::int64_t p);
    static FieldPtr rational_function(FieldPtr base, std::string parameter);
    /// min_poly: coefficients over `base`, low to high, degree >= 1. It is
    /// normalized to monic form. Irreducibility is the caller's assertion;
    /// a repeated-factor check (gcd with the derivative, when the derivative
    /// is nonzero) runs here.
    static FieldPtr extension(FieldPtr base, std::string variable,
                              std::vector<FieldElement> min_poly,
                              bool irreducible_asserted = true);

    FieldKind kind() const { return kind_; }
    std::int64_t characteristic() const;
    const FieldPtr& base() const { return base_; }
    const std::string& symbol() const { return symbol_; }
    const std::vector<FieldElement>& min_poly() const { return min_poly_; }
    bool irreducible_asserted() const { return irreducible_asserted_; }
    std::int64_t prime_modulus() const { return p_; }

    bool equals(const Field& o) const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement integer(const mpz_class& n) const;
    FieldElement integer(long n) const { return integer(mpz_class(n)); }
    FieldElement rational(const mpq_class& q) const;

    /// Generator of a rational-function or extension field (t resp. z).
    FieldElement generator() const;

    /// Resolves a symbol anywhere in the tower (extension variables and
    /// function-field parameters), embedded up into this field.
    std::optional<FieldElement> symbol_element(const std::string& name) const;

    /// Builds an element from base-field coefficients (low to high) of the
    /// generator; extension fields reduce modulo the minimal polynomial.
    FieldElement from_coefficients(std::vector<FieldElement> coeffs) const;

    /// Small random element, for randomized property checks.
    FieldElement random_element(std::mt19937_64& rng) const;

    std::string str() const;

private:
    Field() = default;

    FieldKind kind_ = FieldKind::rationals;
    std::int64_t p_ = 0;
    FieldPtr base_;
    std::string symbol_;
    std::vector<FieldElement> min_poly_;
    bool irreducible_asserted_ = false;

    FieldElement make() const;

    friend class FieldElement;
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a && b && (a == b || a->equals(*b));
}

// ---------------------------------------------------------------------------
// Univariate polynomial helpers over an arbitrary exact field. Coefficient
// vectors run low to high and are kept trimmed (no trailing zeros); the zero
// polynomial is the empty vector.

namespace uv {

using Poly = std::vector<FieldElement>;

inline void trim(Poly& p);
inline bool is_zero(const Poly& p) { return p.empty(); }
inline int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }
inline Poly constant(const FieldElement& c);
inline Poly add(const Poly& a, const Poly& b, const FieldPtr& f);
inline Poly sub(const Poly& a, const Poly& b, const FieldPtr& f);
inline Poly mul(const Poly& a, const Poly& b, const FieldPtr& f);
inline Poly scale(const Poly& a, const FieldElement& c);
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, const FieldPtr& f);
inline Poly make_monic(const Poly& a);
inline Poly gcd_monic(Poly a, Poly b, const FieldPtr& f);
inline Poly derivative(const Poly& a, const FieldPtr& f);
inline bool equal(const Poly& a, const Poly& b);
inline std::string str(const Poly& p, const std::string& symbol);

} // namespace uv

// ---------------------------------------------------------------------------
// Field implementation

inline FieldPtr Field::rationals() {
    static FieldPtr q = [] {
        auto f = std::shared_ptr<Field>(new Field());
        f->kind_ = FieldKind::rationals;
        return FieldPtr(f);
    }();
    return q;
}

inline FieldPtr Field::prime_field(std::int64_t p) {
    if (p < 2 || p > (std::int64_t(1) << 31))
        throw Error("prime field characteristic out of range: " + std::to_string(p));
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw Error("prime field characteristic is not prime: " + std::to_string(p));
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::prime_field;
    f->p_ = p;
    return f;
}

inline FieldPtr Field::rational_function(FieldPtr base, std::string parameter) {
    if (!base) throw Error("rational function field requires a base field");
    if (parameter.empty()) throw Error("rational function field requires a parameter name");
    if (base->symbol_element(parameter))
        throw Error("parameter name already used in field tower: " + parameter);
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::rational_function;
    f->base_ = std::move(base);
    f->symbol_ = std::move(parameter);
    return f;
}

inline FieldPtr Field::extension(FieldPtr base, std::string variable,
                                 std::vector<FieldElement> min_poly,
                                 bool irreducible_asserted) {
    if (!base) throw Error("extension field requires a base field");
    if (base->symbol_element(variable))
        throw Error("extension variable already used in field tower: " + variable);
    uv::trim(min_poly);
    if (uv::deg(min_poly) < 1)
        throw Error("minimal polynomial must have degree >= 1");
    min_poly = uv::make_monic(min_poly);
    // Repeated-factor sanity check; inconclusive when the derivative
    // vanishes (inseparable minimal polynomials in characteristic p).
    uv::Poly d = uv::derivative(min_poly, base);
    if (!uv::is_zero(d)) {
        uv::Poly g = uv::gcd_monic(min_poly, d, base);
        if (uv::deg(g) > 0)
            throw Error("minimal polynomial has a repeated factor");
    }
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::extension;
    f->base_ = std::move(base);
    f->symbol_ = std::move(variable);
    f->min_poly_ = std::move(min_poly);
    f->irreducible_asserted_ = irreducible_asserted;
    return f;
}

inline std::int64_t Field::characteristic() const {
    switch (kind_) {
        case FieldKind::rationals: return 0;
        case FieldKind::prime_field: return p_;
        default: return base_->characteristic();
    }
}

inline bool Field::equals(const Field& o) const {
    if (this == &o) return true;
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case FieldKind::rationals: return true;
        case FieldKind::prime_field: return p_ == o.p_;
        case FieldKind::rational_function:
            return symbol_ == o.symbol_ && base_->equals(*o.base_);
        case FieldKind::extension: {
            if (symbol_ != o.symbol_ || !base_->equals(*o.base_)) return false;
            if (min_poly_.size() != o.min_poly_.size()) return false;
            for (std::size_t i = 0; i < min_poly_.size(); ++i)
                if (min_poly_[i] != o.min_poly_[i]) return false;
            return true;
        }
    }
    return false;
}

inline FieldElement Field::make() const {
    FieldElement e;
    e.field_ = shared_from_this();
    if (kind_ == FieldKind::rational_function)
        e.den_ = {base_->one()};
    return e;
}

inline FieldElement Field::zero() const { return make(); }

inline FieldElement Field::one() const {
    FieldElement e = make();
    switch (kind_) {
        case FieldKind::rationals: e.rat_ = 1; break;
        case FieldKind::prime_field: e.res_ = 1; break;
        case FieldKind::rational_function: e.num_ = {base_->one()}; break;
        case FieldKind::extension: e.num_ = {base_->one()}; break;
    }
    return e;
}

inline FieldElement Field::integer(const mpz_class& n) const {
    FieldElement e = make();
    switch (kind_) {
        case FieldKind::rationals:
            e.rat_ = n;
            break;
        case FieldKind::prime_field: {
            mpz_class r = n % p_;
            if (r < 0) r += p_;
            e.res_ = r.get_si();
            break;
        }
        case FieldKind::rational_function:
        case FieldKind::extension: {
            FieldElement c = base_->integer(n);
            if (!c.is_zero()) e.num_ = {c};
            break;
        }
    }
    return e;
}

inline FieldElement Field::rational(const mpq_class& q) const {
    if (kind_ == FieldKind::rationals) {
        FieldElement e = make();
        e.rat_ = q;
        e.rat_.canonicalize();
        return e;
    }
    FieldElement n = integer(q.get_num());
    FieldElement d = integer(q.get_den());
    return n / d;
}

inline FieldElement Field::generator() const {
    if (kind_ != FieldKind::rational_function && kind_ != FieldKind::extension)
        throw Error("field has no generator symbol");
    FieldElement e = make();
    e.num_ = {base_->zero(), base_->one()};
    if (kind_ == FieldKind::extension && uv::deg(min_poly_) == 1) {
        // z reduces to -c0 when m(z) = z + c0.
        e.num_ = {-min_poly_[0]};
        uv::trim(e.num_);
    }
    return e;
}

inline std::optional<FieldElement> Field::symbol_element(const std::string& name) const {
    if ((kind_ == FieldKind::rational_function || kind_ == FieldKind::extension) &&
        symbol_ == name)
        return generator();
    if (base_) {
        auto inner = base_->symbol_element(name);
        if (inner) return from_coefficients({*inner});
    }
    return std::nullopt;
}

inline FieldElement Field::from_coefficients(std::vector<FieldElement> coeffs) const {
    if (kind_ != FieldKind::rational_function && kind_ != FieldKind::extension)
        throw Error("from_coefficients requires a function or extension field");
    for (const auto& c : coeffs)
        if (!same_field(c.field(), base_))
            throw Error("coefficient from wrong base field");
    FieldElement e = make();
    uv::trim(coeffs);
    if (kind_ == FieldKind::extension && uv::deg(coeffs) >= uv::deg(min_poly_))
        coeffs = uv::divmod(coeffs, min_poly_, base_).second;
    e.num_ = std::move(coeffs);
    return e;
}

inline FieldElement Field::random_element(std::mt19937_64& rng) const {
    auto small = [&rng](int lo, int hi) {
        return static_cast<long>(lo + rng() % static_cast<unsigned long>(hi - lo + 1));
    };
    switch (kind_) {
        case FieldKind::rationals: {
            long n = small(-9, 9), d = small(1, 9);
            return rational(mpq_class(n, d));
        }
        case FieldKind::prime_field:
            return integer(small(0, static_cast<int>(std::min<std::int64_t>(p_ - 1, 20))));
        case FieldKind::rational_function: {
            std::vector<FieldElement> num, den;
            int dn = static_cast<int>(rng() % 3), dd = static_cast<int>(rng() % 2);
            for (int i = 0; i <= dn; ++i) num.push_back(base_->random_element(rng));
            for (int i = 0; i < dd; ++i) den.push_back(base_->random_element(rng));
            den.push_back(base_->one());  // monic denominator, never zero
            FieldElement e = from_coefficients(std::move(num));
            FieldElement d = make();
            d.num_ = den;
            return e / d;
        }
        case FieldKind::extension: {
            std::vector<FieldElement> c;
            for (int i = 0; i < uv::deg(min_poly_); ++i)
                c.push_back(base_->random_element(rng));
            return from_coefficients(std::move(c));
        }
    }
    return zero();
}

inline std::string Field::str() const {
    switch (kind_) {
        case FieldKind::rationals: return "QQ";
        case FieldKind::prime_field: return "GF(" + std::to_string(p_) + ")";
        case FieldKind::rational_function: return base_->str() + "(" + symbol_ + ")";
        case FieldKind::extension:
            return base_->str() + "[" + symbol_ + "]/(" + uv::str(min_poly_, symbol_) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// FieldElement implementation

inline void FieldElement::require_same_field(const FieldElement& o) const {
    if (!same_field(field_, o.field_))
        throw Error("field descriptor mismatch");
}

inline bool FieldElement::is_zero() const {
    switch (field_->kind()) {
        case FieldKind::rationals: return rat_ == 0;
        case FieldKind::prime_field: return res_ == 0;
        default: return num_.empty();
    }
}

inline bool FieldElement::is_one() const {
    switch (field_->kind()) {
        case FieldKind::rationals: return rat_ == 1;
        case FieldKind::prime_field: return res_ == 1;
        case FieldKind::rational_function:
            return num_.size() == 1 && num_[0].is_one() && den_.size() == 1 && den_[0].is_one();
        case FieldKind::extension:
            return num_.size() == 1 && num_[0].is_one();
    }
    return false;
}

inline bool operator==(const FieldElement& a, const FieldElement& b) {
    if (!a.field_ || !b.field_) return !a.field_ && !b.field_;
    if (!same_field(a.field_, b.field_)) return false;
    switch (a.field_->kind()) {
        case FieldKind::rationals: return a.rat_ == b.rat_;
        case FieldKind::prime_field: return a.res_ == b.res_;
        case FieldKind::rational_function:
            return uv::equal(a.num_, b.num_) && uv::equal(a.den_, b.den_);
        case FieldKind::extension:
            return uv::equal(a.num_, b.num_);
    }
    return false;
}

inline FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    switch (field_->kind()) {
        case FieldKind::rationals: r.rat_ = -rat_; break;
        case FieldKind::prime_field: r.res_ = res_ == 0 ? 0 : field_->p_ - res_; break;
        case FieldKind::rational_function:
        case FieldKind::extension:
            for (auto& c : r.num_) c = -c;
            break;
    }
    return r;
}

inline FieldElement& FieldElement::operator+=(const FieldElement& o) {
    require_same_field(o);
    switch (field_->kind()) {
        case FieldKind::rationals: rat_ += o.rat_; break;
        case FieldKind::prime_field: res_ = (res_ + o.res_) % field_->p_; break;
        case FieldKind::rational_function: {
            const FieldPtr& b = field_->base();
            // a/b + c/d = (ad + cb) / bd, then reduce.
            uv::Poly n = uv::add(uv::mul(num_, o.den_, b), uv::mul(o.num_, den_, b), b);
            uv::Poly d = uv::mul(den_, o.den_, b);
            uv::Poly g = uv::gcd_monic(n, d, b);
            if (uv::deg(g) > 0) {
                n = uv::divmod(n, g, b).first;
                d = uv::divmod(d, g, b).first;
            }
            if (uv::is_zero(n)) {
                num_.clear();
                den_ = {b->one()};
            } else {
                FieldElement lc = d.back();
                num_ = uv::scale(n, lc.inverse());
                den_ = uv::make_monic(d);
            }
            break;
        }
        case FieldKind::extension: {
            num_ = uv::add(num_, o.num_, field_->base());
            break;
        }
    }
    return *this;
}

inline FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

inline FieldElement& FieldElement::operator*=(const FieldElement& o) {
    require_same_field(o);
    switch (field_->kind()) {
        case FieldKind::rationals: rat_ *= o.rat_; break;
        case FieldKind::prime_field: {
            unsigned __int128 prod =
                static_cast<unsigned __int128>(res_) * static_cast<unsigned __int128>(o.res_);
            res_ = static_cast<std::int64_t>(prod % static_cast<unsigned __int128>(field_->p_));
            break;
        }
        case FieldKind::rational_function: {
            const FieldPtr& b = field_->base();
            uv::Poly n = uv::mul(num_, o.num_, b);
            uv::Poly d = uv::mul(den_, o.den_, b);
            uv::Poly g = uv::gcd_monic(n, d, b);
            if (uv::deg(g) > 0) {
                n = uv::divmod(n, g, b).first;
                d = uv::divmod(d, g, b).first;
            }
            if (uv::is_zero(n)) {
                num_.clear();
                den_ = {b->one()};
            } else {
                FieldElement lc = d.back();
                num_ = uv::scale(n, lc.inverse());
                den_ = uv::make_monic(d);
            }
            break;
        }
        case FieldKind::extension: {
            const FieldPtr& b = field_->base();
            uv::Poly prod = uv::mul(num_, o.num_, b);
            num_ = uv::divmod(prod, field_->min_poly(), b).second;
            break;
        }
    }
    return *this;
}

inline FieldElement FieldElement::inverse() const {
    if (is_zero()) throw Error("zero divisor in field");
    FieldElement r = *this;
    switch (field_->kind()) {
        case FieldKind::rationals:
            r.rat_ = 1 / rat_;
            break;
        case FieldKind::prime_field: {
            // Extended Euclid on (res, p).
            std::int64_t a = res_, m = field_->p_;
            std::int64_t x0 = 1, x1 = 0, r0 = a, r1 = m;
            while (r1 != 0) {
                std::int64_t q = r0 / r1;
                std::int64_t t = r0 - q * r1; r0 = r1; r1 = t;
                t = x0 - q * x1; x0 = x1; x1 = t;
            }
            x0 %= m;
            if (x0 < 0) x0 += m;
            r.res_ = x0;
            break;
        }
        case FieldKind::rational_function: {
            FieldElement lc = num_.back();
            r.num_ = uv::scale(den_, lc.inverse());
            r.den_ = uv::make_monic(num_);
            break;
        }
        case FieldKind::extension: {
            // Extended Euclid against the minimal polynomial.
            const FieldPtr& b = field_->base();
            uv::Poly r0 = field_->min_poly(), r1 = num_;
            uv::Poly s0, s1 = {b->one()};
            while (!uv::is_zero(r1)) {
                auto [q, rem] = uv::divmod(r0, r1, b);
                uv::Poly s2 = uv::sub(s0, uv::mul(q, s1, b), b);
                r0 = std::move(r1); r1 = std::move(rem);
                s0 = std::move(s1); s1 = std::move(s2);
            }
            if (uv::deg(r0) != 0)
                throw Error("zero divisor in field");
            r.num_ = uv::scale(s0, r0[0].inverse());
            break;
        }
    }
    return r;
}

inline FieldElement& FieldElement::operator/=(const FieldElement& o) {
    return *this *= o.inverse();
}

inline bool FieldElement::is_atomic() const {
    // Rational literals print as "a" or "a/b", both safe in coefficient
    // position of a product (left-associative '*' and '/').
    if (field_->kind() == FieldKind::rationals || field_->kind() == FieldKind::prime_field)
        return true;
    std::string s = str();
    if (s.empty()) return false;
    for (std::size_t i = (s[0] == '-' ? 1 : 0); i < s.size(); ++i) {
        char c = s[i];
        if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^' || c == '(' || c == ' ')
            return false;
    }
    return s != "-";
}

inline std::string FieldElement::str() const {
    switch (field_->kind()) {
        case FieldKind::rationals: return rat_.get_str();
        case FieldKind::prime_field: return std::to_string(res_);
        case FieldKind::extension: return uv::str(num_, field_->symbol());
        case FieldKind::rational_function: {
            std::string n = uv::str(num_, field_->symbol());
            if (den_.size() == 1 && den_[0].is_one()) return n;
            std::string d = uv::str(den_, field_->symbol());
            bool simple = n.find_first_of("+-*/^( ") == std::string::npos;
            return (simple ? n : "(" + n + ")") + "/(" + d + ")";
        }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// uv implementation

namespace uv {

inline void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline Poly constant(const FieldElement& c) {
    if (c.is_zero()) return {};
    return {c};
}

inline Poly add(const Poly& a, const Poly& b, const FieldPtr&) {
    Poly r = a;
    if (r.size() < b.size()) r.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i < a.size()) r[i] = a[i] + b[i];
        else r[i] = b[i];
    }
    trim(r);
    return r;
}

inline Poly sub(const Poly& a, const Poly& b, const FieldPtr& f) {
    Poly nb = b;
    for (auto& c : nb) c = -c;
    return add(a, nb, f);
}

inline Poly mul(const Poly& a, const Poly& b, const FieldPtr& f) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, f->zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline Poly scale(const Poly& a, const FieldElement& c) {
    if (c.is_zero()) return {};
    Poly r = a;
    for (auto& x : r) x = x * c;
    return r;
}

inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, const FieldPtr& f) {
    if (is_zero(b)) throw Error("univariate division by zero");
    Poly rem = a, quot;
    FieldElement lcinv = b.back().inverse();
    int db = deg(b);
    if (deg(rem) >= db) quot.assign(rem.size() - b.size() + 1, f->zero());
    while (deg(rem) >= db) {
        int shift = deg(rem) - db;
        FieldElement c = rem.back() * lcinv;
        quot[shift] = c;
        for (int i = 0; i <= db; ++i)
            rem[shift + i] = rem[shift + i] - c * b[i];
        trim(rem);
    }
    trim(quot);
    return {std::move(quot), std::move(rem)};
}

inline Poly make_monic(const Poly& a) {
    if (is_zero(a)) return a;
    if (a.back().is_one()) return a;
    return scale(a, a.back().inverse());
}

inline Poly gcd_monic(Poly a, Poly b, const FieldPtr& f) {
    while (!is_zero(b)) {
        Poly r = divmod(a, b, f).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

inline Poly derivative(const Poly& a, const FieldPtr& f) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1, f->zero());
    for (std::size_t i = 1; i < a.size(); ++i)
        r[i - 1] = a[i] * f->integer(static_cast<long>(i));
    trim(r);
    return r;
}

inline bool equal(const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

inline std::string str(const Poly& p, const std::string& symbol) {
    if (is_zero(p)) return "0";
    std::string out;
    for (int i = deg(p); i >= 0; --i) {
        const FieldElement& c = p[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool atomic = c.is_atomic();
        bool negative = atomic && cs.size() > 1 && cs[0] == '-';
        std::string mag = negative ? cs.substr(1) : cs;
        if (!out.empty())
            out += negative ? " - " : " + ";
        else if (negative)
            out += "-";
        std::string mono;
        if (i >= 2) mono = symbol + "^" + std::to_string(i);
        else if (i == 1) mono = symbol;
        if (mono.empty()) {
            out += atomic ? mag : "(" + cs + ")";
        } else if (c.is_one() || (negative && mag == "1")) {
            out += mono;
        } else {
            out += (atomic ? mag : "(" + cs + ")") + "*" + mono;
        }
    }
    return out;
}

} // namespace uv

} // namespace specchain

#endif
