#ifndef SPECCHAIN_GB_HPP
#define SPECCHAIN_GB_HPP

/// Groebner engine: multivariate division with quotients, Buchberger
/// completion with the coprime and chain criteria, reduced bases, optional
/// cofactor tracking (membership certificates), module bases under a
/// position-over-term order, and syzygy generation.
///
/// One generic core works on free-module elements; ring polynomials are the
/// arity-one case. Position 0 is the greatest position, which gives the
/// elimination property used for syzygies: module basis elements with zero
/// first coordinate generate exactly the relations among the inputs.

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "specchain/common.hpp"
#include "specchain/polynomial.hpp"

namespace specchain {

/// Process-wide default S-pair budget; the command-line --max-steps flag
/// adjusts it once at startup.
inline long& default_gb_budget() {
    static long budget = 100000;
    return budget;
}

struct GBOptions {
    long max_steps = default_gb_budget(); // S-pair reductions before BudgetError
    bool track_cofactors = false;         // express basis elements in the input generators
};

/// Reduced basis plus provenance. When cofactors are tracked,
/// polys[i] = sum_j cofactors[i][j] * (input generator j).
struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order = MonomialOrder::grevlex();
    std::vector<Polynomial> polys;
    bool reduced = true;
    std::vector<std::vector<Polynomial>> cofactors;
    std::size_t ngens = 0; // input generator count (cofactor row length)
    long steps = 0;
};

struct NormalFormResult {
    Polynomial remainder;
    std::vector<Polynomial> quotients; // aligned with the basis
};

/// Free-module element; fixed arity per computation.
struct ModuleVector {
    std::vector<Polynomial> coords;

    bool is_zero() const {
        for (const auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }
};

namespace gbdetail {

struct MTerm {
    int pos;
    Monomial mono;
    FieldElement coeff;
};

/// Position-over-term: lower position beats higher, then the ambient order.
inline int mcmp(const MTerm& a, const MTerm& b, const MonomialOrder& ord) {
    if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
    return ord.cmp(a.mono, b.mono);
}

struct Elem {
    std::vector<MTerm> t;             // sorted descending, no zero coefficients
    std::vector<Polynomial> cof;      // optional cofactor row
};

/// f + c * x^m * g; both inputs sorted, result sorted.
inline std::vector<MTerm> axpy(const std::vector<MTerm>& f, const FieldElement& c,
                               const Monomial& m, const std::vector<MTerm>& g,
                               const MonomialOrder& ord) {
    std::vector<MTerm> r;
    r.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
        int cv;
        MTerm gj;
        if (j < g.size()) gj = MTerm{g[j].pos, mono_mul(g[j].mono, m), g[j].coeff * c};
        if (i >= f.size()) cv = -1;
        else if (j >= g.size()) cv = 1;
        else cv = mcmp(f[i], gj, ord);
        if (cv > 0) {
            r.push_back(f[i++]);
        } else if (cv < 0) {
            r.push_back(std::move(gj));
            ++j;
        } else {
            FieldElement s = f[i].coeff + gj.coeff;
            if (!s.is_zero()) r.push_back(MTerm{f[i].pos, f[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    return r;
}

inline std::vector<MTerm> scale(std::vector<MTerm> f, const FieldElement& c) {
    for (auto& t : f) t.coeff = t.coeff * c;
    return f;
}

struct EngineNF {
    std::vector<MTerm> rem;
    // quot[k] lists (monomial, coefficient) multiples of basis element k.
    std::vector<std::vector<std::pair<Monomial, FieldElement>>> quot;
};

/// Full multivariate division: every remainder term is irreducible by every
/// basis leading term.
inline EngineNF engine_nf(std::vector<MTerm> work, const std::vector<Elem>& basis,
                          const MonomialOrder& ord, bool want_quot) {
    EngineNF out;
    if (want_quot) out.quot.resize(basis.size());
    while (!work.empty()) {
        const MTerm& lt = work.front();
        bool reduced_step = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].t.empty()) continue;
            const MTerm& blt = basis[k].t.front();
            if (blt.pos != lt.pos || !mono_divides(blt.mono, lt.mono)) continue;
            Monomial qm = mono_quotient(lt.mono, blt.mono);
            FieldElement qc = lt.coeff / blt.coeff;
            if (want_quot) out.quot[k].push_back({qm, qc});
            work = axpy(work, -qc, qm, basis[k].t, ord);
            reduced_step = true;
            break;
        }
        if (!reduced_step) {
            out.rem.push_back(work.front());
            work.erase(work.begin());
        }
    }
    return out;
}

inline std::vector<Polynomial> combine_cofactors(
    const std::vector<Elem>& basis,
    const std::vector<std::vector<std::pair<Monomial, FieldElement>>>& quot,
    const RingPtr& ring, std::size_t ngens) {
    std::vector<Polynomial> acc(ngens, ring->zero());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (quot[k].empty()) continue;
        std::vector<Term> multT;
        for (const auto& [m, c] : quot[k]) multT.push_back({m, c});
        Polynomial mult = Polynomial::from_terms(ring, std::move(multT));
        for (std::size_t j = 0; j < ngens; ++j)
            if (!basis[k].cof[j].is_zero()) acc[j] = acc[j] + mult * basis[k].cof[j];
    }
    return acc;
}

struct Pair {
    int i, j;
    Monomial lcm;
    int deg;
};

/// Buchberger completion followed by inter-reduction. The coprime-product
/// criterion is sound only in the ring case (arity one); the chain criterion
/// is applied in both cases.
inline std::vector<Elem> engine_buchberger(std::vector<Elem> basis, const MonomialOrder& ord,
                                           const GBOptions& opts, bool ring_case,
                                           long* steps_out) {
    long steps = 0;
    bool track = !basis.empty() && !basis[0].cof.empty();

    std::vector<Pair> pending;
    std::set<std::pair<int, int>> pending_set;
    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            if (basis[i].t.empty() || basis[j].t.empty()) continue;
            if (basis[i].t.front().pos != basis[j].t.front().pos) continue;
            Monomial l = mono_lcm(basis[i].t.front().mono, basis[j].t.front().mono);
            pending.push_back({i, j, l, l.degree()});
            pending_set.insert({i, j});
        }
        std::stable_sort(pending.begin(), pending.end(), [](const Pair& a, const Pair& b) {
            if (a.deg != b.deg) return a.deg < b.deg;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        });
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

    while (!pending.empty()) {
        Pair p = pending.front();
        pending.erase(pending.begin());
        pending_set.erase({p.i, p.j});

        const Elem& fi = basis[static_cast<std::size_t>(p.i)];
        const Elem& fj = basis[static_cast<std::size_t>(p.j)];
        const MTerm& li = fi.t.front();
        const MTerm& lj = fj.t.front();

        if (ring_case && mono_coprime(li.mono, lj.mono)) continue;

        // Chain criterion: a third element whose leading term divides the
        // pair lcm, with both side pairs already handled.
        bool chained = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !chained; ++k) {
            if (k == p.i || k == p.j || basis[static_cast<std::size_t>(k)].t.empty()) continue;
            const MTerm& lk = basis[static_cast<std::size_t>(k)].t.front();
            if (lk.pos != li.pos || !mono_divides(lk.mono, p.lcm)) continue;
            auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (!pending_set.count(key(p.i, k)) && !pending_set.count(key(p.j, k)))
                chained = true;
        }
        if (chained) continue;

        if (++steps > opts.max_steps)
            throw BudgetError("groebner step budget exceeded");

        // S-vector: cancel the shared leading term.
        Monomial mi = mono_quotient(p.lcm, li.mono);
        Monomial mj = mono_quotient(p.lcm, lj.mono);
        FieldElement ca = li.coeff.inverse();
        FieldElement cb = lj.coeff.inverse();
        std::vector<MTerm> left;
        left.reserve(fi.t.size());
        for (const auto& t : fi.t)
            left.push_back({t.pos, mono_mul(t.mono, mi), t.coeff * ca});
        std::vector<MTerm> s = axpy(left, -cb, mj, fj.t, ord);
        EngineNF red = engine_nf(std::move(s), basis, ord, track);
        if (red.rem.empty()) continue;

        Elem ne;
        ne.t = std::move(red.rem);
        if (track) {
            const RingPtr& ring = fi.cof[0].ring();
            std::size_t ngens = fi.cof.size();
            // S-vector cofactors minus reduction cofactors.
            std::vector<Polynomial> c(ngens, ring->zero());
            Polynomial mi_poly = ring->monomial(mi, li.coeff.inverse());
            Polynomial mj_poly = ring->monomial(mj, lj.coeff.inverse());
            for (std::size_t g = 0; g < ngens; ++g)
                c[g] = mi_poly * fi.cof[g] - mj_poly * fj.cof[g];
            std::vector<Polynomial> used = combine_cofactors(basis, red.quot, ring, ngens);
            for (std::size_t g = 0; g < ngens; ++g) c[g] = c[g] - used[g];
            ne.cof = std::move(c);
        }
        basis.push_back(std::move(ne));
        push_pairs(static_cast<int>(basis.size()) - 1);
    }

    // Minimal basis: drop elements whose leading term another divides.
    std::vector<bool> alive(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!alive[i]) continue;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !alive[j]) continue;
            const MTerm& li = basis[i].t.front();
            const MTerm& lj = basis[j].t.front();
            if (lj.pos == li.pos && mono_divides(lj.mono, li.mono) &&
                (!(li.mono == lj.mono) || j < i)) {
                alive[i] = false;
                break;
            }
        }
    }
    std::vector<Elem> kept;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (alive[i]) kept.push_back(std::move(basis[i]));

    // Full tail reduction against the other survivors, then monic form.
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<Elem> others;
        std::vector<std::size_t> omap;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) {
                others.push_back(kept[j]);
                omap.push_back(j);
            }
        EngineNF red = engine_nf(kept[i].t, others, ord, track);
        Elem ne;
        ne.t = std::move(red.rem);
        if (track) {
            const RingPtr& ring = kept[i].cof[0].ring();
            std::size_t ngens = kept[i].cof.size();
            std::vector<Polynomial> used = combine_cofactors(others, red.quot, ring, ngens);
            ne.cof.resize(ngens);
            for (std::size_t g = 0; g < ngens; ++g)
                ne.cof[g] = kept[i].cof[g] - used[g];
        }
        FieldElement lc = ne.t.front().coeff;
        if (!lc.is_one()) {
            FieldElement inv = lc.inverse();
            ne.t = scale(std::move(ne.t), inv);
            if (track)
                for (auto& c : ne.cof) c = c.scaled(inv);
        }
        kept[i] = std::move(ne);
    }

    std::stable_sort(kept.begin(), kept.end(), [&ord](const Elem& a, const Elem& b) {
        return mcmp(a.t.front(), b.t.front(), ord) > 0;
    });
    if (steps_out) *steps_out = steps;
    return kept;
}

// Conversions between public and engine representations.

inline std::vector<MTerm> to_mterms(const Polynomial& p, int pos, const MonomialOrder& ord) {
    std::vector<MTerm> r;
    for (const auto& t : p.terms()) r.push_back({pos, t.mono, t.coeff});
    std::sort(r.begin(), r.end(),
              [&ord](const MTerm& a, const MTerm& b) { return mcmp(a, b, ord) > 0; });
    return r;
}

inline std::vector<MTerm> to_mterms(const ModuleVector& v, const MonomialOrder& ord) {
    std::vector<MTerm> r;
    for (std::size_t p = 0; p < v.coords.size(); ++p)
        for (const auto& t : v.coords[p].terms())
            r.push_back({static_cast<int>(p), t.mono, t.coeff});
    std::sort(r.begin(), r.end(),
              [&ord](const MTerm& a, const MTerm& b) { return mcmp(a, b, ord) > 0; });
    return r;
}

inline Polynomial pos_to_poly(const std::vector<MTerm>& ts, int pos, const RingPtr& ring) {
    std::vector<Term> out;
    for (const auto& t : ts)
        if (t.pos == pos) out.push_back({t.mono, t.coeff});
    return Polynomial::from_terms(ring, std::move(out));
}

inline ModuleVector to_module_vector(const std::vector<MTerm>& ts, std::size_t arity,
                                     const RingPtr& ring) {
    ModuleVector v;
    for (std::size_t p = 0; p < arity; ++p)
        v.coords.push_back(pos_to_poly(ts, static_cast<int>(p), ring));
    return v;
}

} // namespace gbdetail

// ---------------------------------------------------------------------------
// Ring-level API

inline GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                const MonomialOrder& ord, const GBOptions& opts = {}) {
    using namespace gbdetail;
    std::vector<Elem> elems;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        if (!same_ring(gens[g].ring(), ring)) throw Error("generator from wrong ring");
        if (gens[g].is_zero()) continue;
        Elem e;
        e.t = to_mterms(gens[g], 0, ord);
        if (opts.track_cofactors) {
            e.cof.assign(gens.size(), ring->zero());
            e.cof[g] = ring->one();
        }
        elems.push_back(std::move(e));
    }
    GroebnerBasis out;
    out.ring = ring;
    out.order = ord;
    out.ngens = gens.size();
    if (elems.empty()) return out;
    std::vector<Elem> res = engine_buchberger(std::move(elems), ord, opts, true, &out.steps);
    for (auto& e : res) {
        out.polys.push_back(pos_to_poly(e.t, 0, ring));
        if (opts.track_cofactors) out.cofactors.push_back(std::move(e.cof));
    }
    return out;
}

inline NormalFormResult normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                                    const MonomialOrder& ord) {
    using namespace gbdetail;
    if (!f.ring()) throw Error("normal form of detached polynomial");
    std::vector<Elem> elems;
    for (const auto& g : basis) {
        if (!same_ring(g.ring(), f.ring())) throw Error("basis element from wrong ring");
        Elem e;
        e.t = to_mterms(g, 0, ord);
        elems.push_back(std::move(e));
    }
    EngineNF r = engine_nf(to_mterms(f, 0, ord), elems, ord, true);
    NormalFormResult out;
    out.remainder = pos_to_poly(r.rem, 0, f.ring());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        std::vector<Term> ts;
        for (const auto& [m, c] : r.quot[k]) ts.push_back({m, c});
        out.quotients.push_back(Polynomial::from_terms(f.ring(), std::move(ts)));
    }
    return out;
}

inline NormalFormResult normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    return normal_form(f, gb.polys, gb.order);
}

inline Polynomial nf(const Polynomial& f, const GroebnerBasis& gb) {
    return normal_form(f, gb.polys, gb.order).remainder;
}

/// Brute-force self-certification: every S-polynomial reduces to zero.
/// Independent of the completion criteria by construction.
inline bool is_groebner(const std::vector<Polynomial>& basis, const MonomialOrder& ord) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const Term& li = basis[i].leading_term(ord);
            const Term& lj = basis[j].leading_term(ord);
            Monomial l = mono_lcm(li.mono, lj.mono);
            Polynomial s =
                basis[i].times_term(mono_quotient(l, li.mono), li.coeff.inverse()) -
                basis[j].times_term(mono_quotient(l, lj.mono), lj.coeff.inverse());
            if (!normal_form(s, basis, ord).remainder.is_zero()) return false;
        }
    }
    return true;
}

/// If f lies in the ideal of the tracked basis, returns coefficients on the
/// original generators with f = sum c_j gen_j.
inline std::optional<std::vector<Polynomial>> membership_certificate(const Polynomial& f,
                                                                     const GroebnerBasis& gb) {
    if (gb.cofactors.size() != gb.polys.size())
        throw Error("membership certificate requires a cofactor-tracked basis");
    NormalFormResult r = normal_form(f, gb);
    if (!r.remainder.is_zero()) return std::nullopt;
    std::vector<Polynomial> cert(gb.ngens, gb.ring->zero());
    std::size_t ngens = gb.ngens;
    for (std::size_t i = 0; i < gb.polys.size(); ++i)
        for (std::size_t j = 0; j < ngens; ++j)
            if (!r.quotients[i].is_zero() && !gb.cofactors[i][j].is_zero())
                cert[j] = cert[j] + r.quotients[i] * gb.cofactors[i][j];
    return cert;
}

// ---------------------------------------------------------------------------
// Module-level API (position-over-term order, position 0 greatest)

inline void check_module_vectors(const std::vector<ModuleVector>& vs) {
    if (vs.empty()) return;
    std::size_t arity = vs[0].coords.size();
    for (const auto& v : vs) {
        if (v.coords.size() != arity) throw Error("module vector arity mismatch");
        for (const auto& c : v.coords)
            if (!same_ring(c.ring(), vs[0].coords[0].ring()))
                throw Error("module vector from wrong ring");
    }
}

inline std::vector<ModuleVector> module_buchberger(const std::vector<ModuleVector>& vectors,
                                                   const MonomialOrder& ord,
                                                   const GBOptions& opts = {}) {
    using namespace gbdetail;
    check_module_vectors(vectors);
    if (vectors.empty()) return {};
    std::size_t arity = vectors[0].coords.size();
    const RingPtr& ring = vectors[0].coords[0].ring();
    std::vector<Elem> elems;
    for (const auto& v : vectors) {
        if (v.is_zero()) continue;
        Elem e;
        e.t = to_mterms(v, ord);
        elems.push_back(std::move(e));
    }
    if (elems.empty()) return {};
    std::vector<Elem> res = engine_buchberger(std::move(elems), ord, opts, false, nullptr);
    std::vector<ModuleVector> out;
    for (const auto& e : res) out.push_back(to_module_vector(e.t, arity, ring));
    return out;
}

inline ModuleVector module_normal_form(const ModuleVector& v,
                                       const std::vector<ModuleVector>& basis,
                                       const MonomialOrder& ord) {
    using namespace gbdetail;
    std::vector<ModuleVector> all = basis;
    all.push_back(v);
    check_module_vectors(all);
    const RingPtr& ring = v.coords.at(0).ring();
    std::vector<Elem> elems;
    for (const auto& b : basis) {
        Elem e;
        e.t = to_mterms(b, ord);
        if (!e.t.empty()) elems.push_back(std::move(e));
    }
    EngineNF r = engine_nf(to_mterms(v, ord), elems, ord, false);
    return to_module_vector(r.rem, v.coords.size(), ring);
}

/// Generating set of {(a_1..a_m) : sum a_i gens_i = 0}. Augment each
/// generator with a unit vector, complete to a module basis, and keep the
/// elements whose leading coordinate vanished: the position-over-term order
/// makes that an elimination.
inline std::vector<ModuleVector> syzygies(const RingPtr& ring,
                                          const std::vector<Polynomial>& gens,
                                          const MonomialOrder& ord, const GBOptions& opts = {}) {
    using namespace gbdetail;
    std::size_t m = gens.size();
    std::vector<ModuleVector> aug;
    for (std::size_t i = 0; i < m; ++i) {
        if (!same_ring(gens[i].ring(), ring)) throw Error("generator from wrong ring");
        ModuleVector v;
        v.coords.assign(m + 1, ring->zero());
        v.coords[0] = gens[i];
        v.coords[i + 1] = ring->one();
        aug.push_back(std::move(v));
    }
    std::vector<ModuleVector> basis = module_buchberger(aug, ord, opts);
    std::vector<ModuleVector> out;
    for (const auto& b : basis) {
        if (!b.coords[0].is_zero()) continue;
        ModuleVector s;
        s.coords.assign(b.coords.begin() + 1, b.coords.end());
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace specchain

#endif
