#ifndef SPECCHAIN_POLYNOMIAL_HPP
#define SPECCHAIN_POLYNOMIAL_HPP

/// Multivariate polynomials over an exact field, with the monomial orders
/// used by the Groebner engine: lex, graded reverse lex, and two-block
/// elimination orders. Terms are stored sorted (descending, graded reverse
/// lex) with nonzero coefficients, so equal polynomials have equal
/// representations.

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "specchain/common.hpp"
#include "specchain/field.hpp"

namespace specchain {

// ---------------------------------------------------------------------------
// Monomials

/// Exponent vector; the owning ring fixes the length.
struct Monomial {
    std::vector<int> e;

    int degree() const {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }
    bool is_unit() const {
        for (int x : e)
            if (x != 0) return false;
        return true;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a.e == b.e); }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
    return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

/// b / a; requires mono_divides(a, b).
inline Monomial mono_quotient(const Monomial& b, const Monomial& a) {
    Monomial r = b;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] -= a.e[i];
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Monomial orders

enum class OrderKind { lex, grevlex, block };

class MonomialOrder {
public:
    static MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }
    static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex); }
    /// Two-block order: the first `front_size` variables form the front
    /// block, compared first; any front-positive monomial beats any
    /// front-free one, which is what elimination needs.
    static MonomialOrder block(int front_size, OrderKind front = OrderKind::grevlex,
                               OrderKind back = OrderKind::grevlex) {
        MonomialOrder o(OrderKind::block);
        o.front_size_ = front_size;
        o.front_kind_ = front;
        o.back_kind_ = back;
        return o;
    }

    OrderKind kind() const { return kind_; }
    int front_size() const { return front_size_; }

    /// Positive when a > b, zero when equal, negative when a < b.
    int cmp(const Monomial& a, const Monomial& b) const {
        if (kind_ != OrderKind::block)
            return cmp_range(a, b, 0, a.e.size(), kind_);
        std::size_t k = static_cast<std::size_t>(front_size_);
        int c = cmp_range(a, b, 0, k, front_kind_);
        if (c != 0) return c;
        return cmp_range(a, b, k, a.e.size(), back_kind_);
    }
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

    std::string str() const {
        auto kind_name = [](OrderKind k) {
            return k == OrderKind::lex ? std::string("lex") : std::string("grevlex");
        };
        switch (kind_) {
            case OrderKind::lex: return std::string("lex");
            case OrderKind::grevlex: return std::string("grevlex");
            case OrderKind::block:
                return "block(" + std::to_string(front_size_) + "," +
                       kind_name(back_kind_) + "," + kind_name(front_kind_) + ")";
        }
        return std::string("?");
    }

private:
    explicit MonomialOrder(OrderKind k) : kind_(k) {}

    static int cmp_range(const Monomial& a, const Monomial& b, std::size_t lo,
                         std::size_t hi, OrderKind kind) {
        if (kind == OrderKind::lex) {
            for (std::size_t i = lo; i < hi; ++i)
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
            return 0;
        }
        // Graded reverse lex: degree first, then the last differing
        // exponent decides, smaller exponent winning.
        int da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a.e[i];
            db += b.e[i];
        }
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = hi; i-- > lo;)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        return 0;
    }

    OrderKind kind_;
    int front_size_ = 0;
    OrderKind front_kind_ = OrderKind::grevlex;
    OrderKind back_kind_ = OrderKind::grevlex;
};

// ---------------------------------------------------------------------------
// Rings and polynomials

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

struct Term {
    Monomial mono;
    FieldElement coeff;
};

class Polynomial;

class PolyRing : public std::enable_shared_from_this<PolyRing> {
public:
    static RingPtr make(FieldPtr field, std::vector<std::string> vars);

    const FieldPtr& field() const { return field_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        return -1;
    }

    bool equals(const PolyRing& o) const {
        return vars_ == o.vars_ && field_->equals(*o.field_);
    }

    Polynomial zero() const;
    Polynomial one() const;
    Polynomial constant(FieldElement c) const;
    Polynomial constant_int(long n) const;
    Polynomial var(int i) const;
    Polynomial var(const std::string& name) const;
    Polynomial monomial(Monomial m, FieldElement c) const;

    std::string str() const {
        std::string s = field_->str() + "[";
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (i) s += ",";
            s += vars_[i];
        }
        return s + "]";
    }

private:
    PolyRing() = default;
    FieldPtr field_;
    std::vector<std::string> vars_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a && b && (a == b || a->equals(*b));
}

/// Terms sorted descending under the ring-wide canonical order (graded
/// reverse lex); no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit());
    }
    std::size_t size() const { return terms_.size(); }

    int total_degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    /// Largest term under the given order (linear scan; storage order is
    /// canonical, not the working order).
    const Term& leading_term(const MonomialOrder& ord) const {
        if (terms_.empty()) throw Error("leading term of zero polynomial");
        std::size_t best = 0;
        for (std::size_t i = 1; i < terms_.size(); ++i)
            if (ord.greater(terms_[i].mono, terms_[best].mono)) best = i;
        return terms_[best];
    }

    /// Coefficient of a monomial (zero when absent).
    FieldElement coefficient(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.mono == m) return t.coeff;
        return ring_->field()->zero();
    }
    FieldElement constant_coefficient() const {
        Monomial unit;
        unit.e.assign(ring_->nvars(), 0);
        return coefficient(unit);
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
                return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial scaled(const FieldElement& c) const {
        if (c.is_zero()) return ring_->zero();
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coeff = t.coeff * c;
        return r;
    }

    /// Multiplication by a single term, preserving sortedness directly.
    Polynomial times_term(const Monomial& m, const FieldElement& c) const {
        if (c.is_zero()) return ring_->zero();
        Polynomial r = *this;
        for (auto& t : r.terms_) {
            t.mono = mono_mul(t.mono, m);
            t.coeff = t.coeff * c;
        }
        return r;
    }

    Polynomial pow(int n) const {
        if (n < 0) throw Error("negative polynomial power");
        Polynomial acc = ring_->one();
        Polynomial base = *this;
        while (n > 0) {
            if (n & 1) acc = acc * base;
            base = n > 1 ? base * base : base;
            n >>= 1;
        }
        return acc;
    }

    /// Monic under the given order (unit leading coefficient).
    Polynomial monic(const MonomialOrder& ord) const {
        if (is_zero()) return *this;
        return scaled(leading_term(ord).coeff.inverse());
    }

    std::string str() const;

    /// Builds from arbitrary terms: merges duplicates, drops zeros, sorts.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> ts);

private:
    friend class PolyRing;
    RingPtr ring_;
    std::vector<Term> terms_;
};

inline RingPtr PolyRing::make(FieldPtr field, std::vector<std::string> vars) {
    if (!field) throw Error("polynomial ring requires a coefficient field");
    for (std::size_t i = 0; i < vars.size(); ++i) {
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw Error("duplicate ring variable: " + vars[i]);
        if (field->symbol_element(vars[i]))
            throw Error("ring variable shadows a field symbol: " + vars[i]);
    }
    auto r = std::shared_ptr<PolyRing>(new PolyRing());
    r->field_ = std::move(field);
    r->vars_ = std::move(vars);
    return r;
}

inline Polynomial PolyRing::zero() const {
    Polynomial p;
    p.ring_ = shared_from_this();
    return p;
}

inline Polynomial PolyRing::constant(FieldElement c) const {
    if (!same_field(c.field(), field_)) throw Error("constant from wrong field");
    Polynomial p = zero();
    if (!c.is_zero()) {
        Monomial m;
        m.e.assign(nvars(), 0);
        p.terms_.push_back({std::move(m), std::move(c)});
    }
    return p;
}

inline Polynomial PolyRing::one() const { return constant(field_->one()); }
inline Polynomial PolyRing::constant_int(long n) const { return constant(field_->integer(n)); }

inline Polynomial PolyRing::var(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= nvars())
        throw Error("ring variable index out of range");
    Monomial m;
    m.e.assign(nvars(), 0);
    m.e[static_cast<std::size_t>(i)] = 1;
    return monomial(std::move(m), field_->one());
}

inline Polynomial PolyRing::var(const std::string& name) const {
    int i = var_index(name);
    if (i < 0) throw Error("unknown ring variable: " + name);
    return var(i);
}

inline Polynomial PolyRing::monomial(Monomial m, FieldElement c) const {
    Polynomial p = zero();
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

inline Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> ts) {
    MonomialOrder canon = MonomialOrder::grevlex();
    std::sort(ts.begin(), ts.end(), [&canon](const Term& a, const Term& b) {
        return canon.greater(a.mono, b.mono);
    });
    Polynomial p;
    p.ring_ = std::move(ring);
    for (auto& t : ts) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    }
    return p;
}

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) throw Error("polynomial ring mismatch");
    MonomialOrder canon = MonomialOrder::grevlex();
    Polynomial r;
    r.ring_ = a.ring_;
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        int c;
        if (i >= a.terms_.size()) c = -1;
        else if (j >= b.terms_.size()) c = 1;
        else c = canon.cmp(a.terms_[i].mono, b.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            FieldElement s = a.terms_[i].coeff + b.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    return r;
}

inline Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) throw Error("polynomial ring mismatch");
    std::vector<Term> ts;
    ts.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            ts.push_back({mono_mul(ta.mono, tb.mono), ta.coeff * tb.coeff});
    return Polynomial::from_terms(a.ring_, std::move(ts));
}

inline std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < t.mono.e.size(); ++i) {
            int e = t.mono.e[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->vars()[i];
            if (e > 1) mono += "^" + std::to_string(e);
        }
        const FieldElement& c = t.coeff;
        std::string cs = c.str();
        bool atomic = c.is_atomic();
        bool negative = atomic && cs.size() > 1 && cs[0] == '-';
        std::string mag = negative ? cs.substr(1) : cs;
        if (!out.empty())
            out += negative ? " - " : " + ";
        else if (negative)
            out += "-";
        if (mono.empty())
            out += atomic ? mag : "(" + cs + ")";
        else if (c.is_one() || (negative && mag == "1"))
            out += mono;
        else
            out += (atomic ? mag : "(" + cs + ")") + "*" + mono;
    }
    return out;
}

/// Formal partial derivative.
inline Polynomial derivative(const Polynomial& p, int var) {
    const RingPtr& ring = p.ring();
    if (var < 0 || static_cast<std::size_t>(var) >= ring->nvars())
        throw Error("derivative variable index out of range");
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
        int e = t.mono.e[static_cast<std::size_t>(var)];
        if (e == 0) continue;
        Term d = t;
        d.coeff = d.coeff * ring->field()->integer(e);
        d.mono.e[static_cast<std::size_t>(var)] -= 1;
        ts.push_back(std::move(d));
    }
    return Polynomial::from_terms(ring, std::move(ts));
}

/// Renames/injects variables: where[i] is the target index of source
/// variable i, or -1 when the variable must not occur.
inline Polynomial map_variables(const Polynomial& p, const RingPtr& target,
                                const std::vector<int>& where) {
    const RingPtr& src = p.ring();
    if (where.size() != src->nvars()) throw Error("variable map has wrong length");
    if (!src->field()->equals(*target->field()))
        throw Error("variable map requires matching coefficient fields");
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
        Monomial m;
        m.e.assign(target->nvars(), 0);
        for (std::size_t i = 0; i < where.size(); ++i) {
            int e = t.mono.e[i];
            if (e == 0) continue;
            if (where[i] < 0)
                throw Error("variable not present in target ring: " + src->vars()[i]);
            m.e[static_cast<std::size_t>(where[i])] += e;
        }
        ts.push_back({std::move(m), t.coeff});
    }
    return Polynomial::from_terms(target, std::move(ts));
}

/// Substitutes polynomials for variables: args[i] replaces variable i; all
/// args must live in the same target ring.
inline Polynomial substitute(const Polynomial& p, const RingPtr& target,
                             const std::vector<Polynomial>& args) {
    if (args.size() != p.ring()->nvars()) throw Error("substitution has wrong arity");
    Polynomial acc = target->zero();
    for (const auto& t : p.terms()) {
        Polynomial term = target->constant(t.coeff);
        for (std::size_t i = 0; i < args.size(); ++i)
            if (t.mono.e[i] > 0) term = term * args[i].pow(t.mono.e[i]);
        acc = acc + term;
    }
    return acc;
}

} // namespace specchain

#endif
