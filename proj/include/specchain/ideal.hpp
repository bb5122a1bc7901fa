#ifndef SPECCHAIN_IDEAL_HPP
#define SPECCHAIN_IDEAL_HPP

/// Ideal algebra: sums, products, powers, elimination, intersection,
/// quotient, saturation, membership, equality, radical membership, and the
/// localized-equality test used by the tensor-product fibre arguments.
/// Handles are immutable and share a per-handle cache of reduced bases,
/// keyed by monomial order.

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "specchain/common.hpp"
#include "specchain/gb.hpp"
#include "specchain/parser.hpp"
#include "specchain/polynomial.hpp"

namespace specchain {

class IdealHandle {
public:
    IdealHandle() = default;
    IdealHandle(RingPtr ring, std::vector<Polynomial> gens)
        : ring_(std::move(ring)), gens_(std::move(gens)), cache_(new Cache) {
        for (const auto& g : gens_)
            if (!same_ring(g.ring(), ring_)) throw Error("ideal generator from wrong ring");
    }

    static IdealHandle parse(const RingPtr& ring, const std::vector<std::string>& texts) {
        std::vector<Polynomial> gens;
        for (const auto& t : texts) gens.push_back(parse_polynomial(ring, t));
        return IdealHandle(ring, std::move(gens));
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool valid() const { return ring_ != nullptr; }

    /// Reduced basis under the given order; cached.
    const GroebnerBasis& groebner(const MonomialOrder& ord = MonomialOrder::grevlex()) const {
        return cached(ord, false);
    }
    /// Reduced basis with cofactor rows over the handle's generators.
    const GroebnerBasis& tracked_groebner(
        const MonomialOrder& ord = MonomialOrder::grevlex()) const {
        return cached(ord, true);
    }

    bool contains(const Polynomial& f) const {
        return nf(f, groebner()).is_zero();
    }
    bool is_zero_ideal() const { return groebner().polys.empty(); }
    bool is_proper() const {
        const auto& polys = groebner().polys;
        return !(polys.size() == 1 && polys[0].is_constant());
    }

private:
    struct Cache {
        std::mutex mu;
        std::map<std::string, std::shared_ptr<const GroebnerBasis>> bases;
    };

    const GroebnerBasis& cached(const MonomialOrder& ord, bool tracked) const {
        if (!ring_) throw Error("operation on an empty ideal handle");
        std::string key = ord.str() + (tracked ? "#tracked" : "");
        {
            std::lock_guard<std::mutex> lock(cache_->mu);
            auto it = cache_->bases.find(key);
            if (it != cache_->bases.end()) return *it->second;
        }
        GBOptions opts;
        opts.track_cofactors = tracked;
        auto gb = std::make_shared<GroebnerBasis>(buchberger(ring_, gens_, ord, opts));
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto [it, inserted] = cache_->bases.emplace(key, std::move(gb));
        return *it->second;
    }

    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

inline void require_same_context(const IdealHandle& a, const IdealHandle& b) {
    if (!a.valid() || !b.valid() || !same_ring(a.ring(), b.ring()))
        throw Error("ideal context mismatch");
}

// ---------------------------------------------------------------------------
// Arithmetic

inline IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b) {
    require_same_context(a, b);
    std::vector<Polynomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return IdealHandle(a.ring(), std::move(gens));
}

inline IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b) {
    require_same_context(a, b);
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) {
            Polynomial p = f * g;
            if (!p.is_zero()) gens.push_back(std::move(p));
        }
    return IdealHandle(a.ring(), std::move(gens));
}

inline IdealHandle ideal_power(const IdealHandle& a, int e) {
    if (e < 1) throw Error("ideal power requires exponent >= 1");
    IdealHandle acc = a;
    for (int i = 1; i < e; ++i) acc = ideal_product(acc, a);
    return acc;
}

// ---------------------------------------------------------------------------
// Elimination and friends

namespace idealdetail {

/// Fresh symbol that collides with nothing in the ring or its field tower.
inline std::string fresh_symbol(const RingPtr& ring, const std::string& stem) {
    std::string name = stem;
    int n = 0;
    while (ring->var_index(name) >= 0 || ring->field()->symbol_element(name))
        name = stem + std::to_string(n++);
    return name;
}

} // namespace idealdetail

/// I ∩ k[kept vars]: block-order basis, keep the front-free elements,
/// re-express in the smaller ring.
inline IdealHandle eliminate(const IdealHandle& I, const std::vector<std::string>& remove) {
    const RingPtr& ring = I.ring();
    std::vector<bool> removed(ring->nvars(), false);
    for (const auto& name : remove) {
        int idx = ring->var_index(name);
        if (idx < 0) throw Error("eliminate: unknown variable " + name);
        removed[static_cast<std::size_t>(idx)] = true;
    }
    std::vector<std::string> front, back;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        (removed[i] ? front : back).push_back(ring->vars()[i]);

    RingPtr perm = PolyRing::make(ring->field(), [&] {
        std::vector<std::string> vs = front;
        vs.insert(vs.end(), back.begin(), back.end());
        return vs;
    }());
    std::vector<int> to_perm(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        to_perm[i] = perm->var_index(ring->vars()[i]);

    std::vector<Polynomial> moved;
    for (const auto& g : I.gens()) moved.push_back(map_variables(g, perm, to_perm));
    MonomialOrder blk = MonomialOrder::block(static_cast<int>(front.size()));
    GroebnerBasis gb = buchberger(perm, moved, blk);

    RingPtr sub = PolyRing::make(ring->field(), back);
    std::vector<int> to_sub(perm->nvars());
    for (std::size_t i = 0; i < perm->nvars(); ++i)
        to_sub[i] = sub->var_index(perm->vars()[i]);

    std::vector<Polynomial> kept;
    for (const auto& g : gb.polys) {
        bool front_free = true;
        for (std::size_t i = 0; i < front.size() && front_free; ++i)
            if (g.leading_term(blk).mono.e[i] != 0) front_free = false;
        if (front_free) kept.push_back(map_variables(g, sub, to_sub));
    }
    return IdealHandle(sub, std::move(kept));
}

/// Maps an ideal along a variable injection into another ring.
inline IdealHandle map_ideal(const IdealHandle& I, const RingPtr& target,
                             const std::vector<int>& where) {
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(map_variables(g, target, where));
    return IdealHandle(target, std::move(gens));
}

inline IdealHandle intersect(const IdealHandle& a, const IdealHandle& b) {
    require_same_context(a, b);
    const RingPtr& ring = a.ring();
    std::string t = idealdetail::fresh_symbol(ring, "t_aux");
    std::vector<std::string> vars = {t};
    vars.insert(vars.end(), ring->vars().begin(), ring->vars().end());
    RingPtr ext = PolyRing::make(ring->field(), vars);
    std::vector<int> up(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        up[i] = static_cast<int>(i) + 1;

    Polynomial tv = ext->var(0);
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens()) gens.push_back(tv * map_variables(f, ext, up));
    for (const auto& g : b.gens())
        gens.push_back((ext->one() - tv) * map_variables(g, ext, up));
    IdealHandle mixed(ext, std::move(gens));
    IdealHandle elim = eliminate(mixed, {t});

    // eliminate() returns the ideal in a ring with the original variables.
    std::vector<int> back(elim.ring()->nvars());
    for (std::size_t i = 0; i < elim.ring()->nvars(); ++i)
        back[i] = ring->var_index(elim.ring()->vars()[i]);
    return map_ideal(elim, ring, back);
}

/// (I : f) for one polynomial: generators of I ∩ (f), divided by f.
inline IdealHandle quotient_single(const IdealHandle& I, const Polynomial& f) {
    const RingPtr& ring = I.ring();
    if (f.is_zero()) {
        // (I : 0) is the whole ring.
        return IdealHandle(ring, {ring->one()});
    }
    IdealHandle inter = intersect(I, IdealHandle(ring, {f}));
    std::vector<Polynomial> gens;
    for (const auto& g : inter.gens()) {
        NormalFormResult d = normal_form(g, {f}, MonomialOrder::grevlex());
        if (!d.remainder.is_zero())
            throw Error("internal: intersection element not divisible");
        if (!d.quotients[0].is_zero()) gens.push_back(d.quotients[0]);
    }
    return IdealHandle(ring, std::move(gens));
}

inline bool ideal_equal(const IdealHandle& a, const IdealHandle& b) {
    require_same_context(a, b);
    return a.groebner().polys == b.groebner().polys; // reduced bases are canonical
}

inline IdealHandle quotient(const IdealHandle& I, const IdealHandle& J) {
    require_same_context(I, J);
    bool first = true;
    IdealHandle acc;
    for (const auto& f : J.gens()) {
        if (f.is_zero()) continue;
        IdealHandle q = quotient_single(I, f);
        acc = first ? q : intersect(acc, q);
        first = false;
    }
    if (first) return IdealHandle(I.ring(), {I.ring()->one()}); // J = (0)
    return acc;
}

inline IdealHandle saturation(const IdealHandle& I, const IdealHandle& J) {
    IdealHandle prev = I;
    for (int iter = 0; iter < 1000; ++iter) {
        IdealHandle next = quotient(prev, J);
        if (ideal_equal(next, prev)) return prev;
        prev = next;
    }
    throw Error("saturation did not stabilize");
}

inline bool radical_membership(const Polynomial& f, const IdealHandle& I) {
    const RingPtr& ring = I.ring();
    if (!same_ring(f.ring(), ring)) throw Error("ideal context mismatch");
    std::string t = idealdetail::fresh_symbol(ring, "t_aux");
    std::vector<std::string> vars = {t};
    vars.insert(vars.end(), ring->vars().begin(), ring->vars().end());
    RingPtr ext = PolyRing::make(ring->field(), vars);
    std::vector<int> up(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        up[i] = static_cast<int>(i) + 1;
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(map_variables(g, ext, up));
    gens.push_back(ext->one() - ext->var(0) * map_variables(f, ext, up));
    return !IdealHandle(ext, std::move(gens)).is_proper();
}

// ---------------------------------------------------------------------------
// Asserted primes

/// A proper ideal asserted prime by the caller, with a seeded randomized
/// product check: products of nonmembers must stay nonmembers. An optional
/// flag additionally asserts that the ambient quotient is equidimensional,
/// which the chain-dimension computations require.
class PrimeSpec {
public:
    PrimeSpec() = default;

    static PrimeSpec assert_prime(IdealHandle I, bool equidimensional = false,
                                  unsigned seed = 12345, int samples = 32) {
        if (!I.valid()) throw Error("prime assertion on empty handle");
        if (!I.is_proper()) throw Error("prime assertion on improper ideal");
        PrimeSpec p;
        p.ideal_ = std::move(I);
        p.equidim_ = equidimensional;
        p.sanity_check(seed, samples);
        return p;
    }

    const IdealHandle& ideal() const { return ideal_; }
    bool valid() const { return ideal_.valid(); }
    bool equidimensional_asserted() const { return equidim_; }

private:
    void sanity_check(unsigned seed, int samples) const {
        std::mt19937_64 rng(seed);
        const RingPtr& ring = ideal_.ring();
        const GroebnerBasis& gb = ideal_.groebner();
        auto random_poly = [&]() {
            std::vector<Term> ts;
            int nt = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < nt; ++i) {
                Monomial m;
                m.e.assign(ring->nvars(), 0);
                int budget = static_cast<int>(rng() % 3);
                for (int d = 0; d < budget && ring->nvars() > 0; ++d)
                    m.e[rng() % ring->nvars()] += 1;
                ts.push_back({std::move(m), ring->field()->random_element(rng)});
            }
            return Polynomial::from_terms(ring, std::move(ts));
        };
        for (int s = 0; s < samples; ++s) {
            Polynomial f = nf(random_poly(), gb);
            Polynomial g = nf(random_poly(), gb);
            if (f.is_zero() || g.is_zero()) continue;
            if (nf(f * g, gb).is_zero())
                throw Error("prime assertion failed: zero divisors modulo ideal");
        }
    }

    IdealHandle ideal_;
    bool equidim_ = false;
};

/// Whether Q and P define the same ideal after localizing at P, assuming
/// Q ⊆ P: true iff (Q : P) is not contained in P, i.e. some element outside
/// P annihilates P/Q.
inline bool localization_equal_at(const IdealHandle& Q, const PrimeSpec& P) {
    require_same_context(Q, P.ideal());
    for (const auto& g : Q.gens())
        if (!P.ideal().contains(g)) throw Error("containment violated");
    IdealHandle colon = quotient(Q, P.ideal());
    for (const auto& g : colon.gens())
        if (!P.ideal().contains(g)) return true;
    return false;
}

} // namespace specchain

#endif
