#ifndef SPECCHAIN_ALGEBRA_HPP
#define SPECCHAIN_ALGEBRA_HPP

/// Finitely presented algebras A = k[X]/I with provenance (base, tensor,
/// polynomial extension, quotient), prime transport between factors and the
/// ambient ring, residue-field arithmetic at a prime, ranks over the residue
/// field, minimal polynomials, separability checks, and explicit fibre
/// presentations over maximal contracted primes.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "specchain/common.hpp"
#include "specchain/ideal.hpp"

namespace specchain {

enum class AlgebraKind { base, tensor, poly_ext, quotient };

/// k[X]/I with a provenance record. Copies share structure.
class PresentedAlgebra {
public:
    PresentedAlgebra() = default;

    static PresentedAlgebra present(FieldPtr k, std::vector<std::string> vars,
                                    const std::vector<std::string>& relation_texts) {
        RingPtr ring = PolyRing::make(std::move(k), std::move(vars));
        std::vector<Polynomial> rels;
        for (const auto& t : relation_texts) rels.push_back(parse_polynomial(ring, t));
        return present(ring, std::move(rels));
    }

    static PresentedAlgebra present(RingPtr ring, std::vector<Polynomial> relations) {
        PresentedAlgebra a;
        a.ring_ = ring;
        a.relations_ = IdealHandle(ring, std::move(relations));
        if (!a.relations_.is_proper()) throw Error("presents the zero ring");
        return a;
    }

    const RingPtr& ring() const { return ring_; }
    const IdealHandle& relations() const { return relations_; }
    AlgebraKind kind() const { return kind_; }
    bool valid() const { return ring_ != nullptr; }

    /// Whether every minimal prime of the relation ideal has the same
    /// dimension, as far as this presentation can tell: zero and principal
    /// ideals qualify outright (principal ideals have all components of
    /// height one), tensor products and polynomial extensions inherit from
    /// their factors, and anything else needs the explicit assertion.
    bool relations_equidimensional() const {
        if (equidim_asserted_) return true;
        if (relations_.is_zero_ideal()) return true;
        if (relations_.groebner().polys.size() == 1) return true;
        switch (kind_) {
            case AlgebraKind::tensor:
                return left_->relations_equidimensional() &&
                       right_->relations_equidimensional();
            case AlgebraKind::poly_ext:
                return left_->relations_equidimensional();
            default:
                return false;
        }
    }

    PresentedAlgebra with_equidimensional_relations() const {
        PresentedAlgebra copy = *this;
        copy.equidim_asserted_ = true;
        return copy;
    }

    /// Tensor-only: the factors and their variable embeddings (factor var
    /// index -> ambient var index).
    const PresentedAlgebra& left_factor() const { return *require(left_, "left factor"); }
    const PresentedAlgebra& right_factor() const { return *require(right_, "right factor"); }
    const std::vector<int>& left_map() const { return left_map_; }
    const std::vector<int>& right_map() const { return right_map_; }
    /// Tensor-only: right-factor renames applied on collision (old -> new).
    const std::vector<std::pair<std::string, std::string>>& rename_map() const {
        return renames_;
    }

    /// Extension/quotient-only: the algebra this one was built from.
    const PresentedAlgebra& parent() const { return *require(left_, "parent"); }
    const std::vector<std::string>& new_vars() const { return new_vars_; }

    friend PresentedAlgebra tensor(const PresentedAlgebra& A, const PresentedAlgebra& B);
    friend PresentedAlgebra poly_extension(const PresentedAlgebra& R,
                                           const std::vector<std::string>& new_vars);
    friend PresentedAlgebra quotient_algebra(const PresentedAlgebra& C, const IdealHandle& J);

private:
    static const PresentedAlgebra* require(const std::shared_ptr<const PresentedAlgebra>& p,
                                           const char* what) {
        if (!p) throw Error(std::string("algebra has no ") + what);
        return p.get();
    }

    RingPtr ring_;
    IdealHandle relations_;
    AlgebraKind kind_ = AlgebraKind::base;
    bool equidim_asserted_ = false;
    std::shared_ptr<const PresentedAlgebra> left_, right_;
    std::vector<int> left_map_, right_map_;
    std::vector<std::pair<std::string, std::string>> renames_;
    std::vector<std::string> new_vars_;
};

/// A ⊗ B over the shared base field. Variables are concatenated; colliding
/// right-factor names get "_r" appended (repeatedly if needed).
inline PresentedAlgebra tensor(const PresentedAlgebra& A, const PresentedAlgebra& B) {
    if (!A.valid() || !B.valid()) throw Error("tensor of invalid algebra");
    if (!A.ring()->field()->equals(*B.ring()->field()))
        throw Error("tensor requires matching base fields");

    std::vector<std::string> vars = A.ring()->vars();
    std::vector<std::pair<std::string, std::string>> renames;
    auto taken = [&vars](const std::string& n) {
        for (const auto& v : vars)
            if (v == n) return true;
        return false;
    };
    for (const auto& v : B.ring()->vars()) {
        std::string name = v;
        while (taken(name)) name += "_r";
        if (name != v) renames.push_back({v, name});
        vars.push_back(name);
    }

    RingPtr ring = PolyRing::make(A.ring()->field(), vars);
    std::vector<int> lmap(A.ring()->nvars()), rmap(B.ring()->nvars());
    for (std::size_t i = 0; i < A.ring()->nvars(); ++i) lmap[i] = static_cast<int>(i);
    for (std::size_t i = 0; i < B.ring()->nvars(); ++i)
        rmap[i] = static_cast<int>(A.ring()->nvars() + i);

    std::vector<Polynomial> rels;
    for (const auto& g : A.relations().gens()) rels.push_back(map_variables(g, ring, lmap));
    for (const auto& g : B.relations().gens()) rels.push_back(map_variables(g, ring, rmap));

    PresentedAlgebra c;
    c.ring_ = ring;
    c.relations_ = IdealHandle(ring, std::move(rels));
    if (!c.relations_.is_proper()) throw Error("presents the zero ring");
    c.kind_ = AlgebraKind::tensor;
    c.left_ = std::make_shared<PresentedAlgebra>(A);
    c.right_ = std::make_shared<PresentedAlgebra>(B);
    c.left_map_ = std::move(lmap);
    c.right_map_ = std::move(rmap);
    c.renames_ = std::move(renames);
    return c;
}

/// R[new_vars]: same relations in an enlarged ring.
inline PresentedAlgebra poly_extension(const PresentedAlgebra& R,
                                       const std::vector<std::string>& new_vars) {
    if (!R.valid()) throw Error("extension of invalid algebra");
    std::vector<std::string> vars = R.ring()->vars();
    for (const auto& v : new_vars) {
        if (R.ring()->var_index(v) >= 0)
            throw Error("extension variable collides with existing: " + v);
        vars.push_back(v);
    }
    RingPtr ring = PolyRing::make(R.ring()->field(), vars);
    std::vector<int> emb(R.ring()->nvars());
    for (std::size_t i = 0; i < R.ring()->nvars(); ++i) emb[i] = static_cast<int>(i);
    std::vector<Polynomial> rels;
    for (const auto& g : R.relations().gens()) rels.push_back(map_variables(g, ring, emb));

    PresentedAlgebra c;
    c.ring_ = ring;
    c.relations_ = IdealHandle(ring, std::move(rels));
    c.kind_ = AlgebraKind::poly_ext;
    c.left_ = std::make_shared<PresentedAlgebra>(R);
    c.left_map_ = std::move(emb);
    c.new_vars_ = new_vars;
    return c;
}

/// C/J: relations enlarged by J (same ambient ring).
inline PresentedAlgebra quotient_algebra(const PresentedAlgebra& C, const IdealHandle& J) {
    require_same_context(C.relations(), J);
    PresentedAlgebra q;
    q.ring_ = C.ring();
    q.relations_ = ideal_sum(C.relations(), J);
    if (!q.relations_.is_proper()) throw Error("presents the zero ring");
    q.kind_ = AlgebraKind::quotient;
    q.left_ = std::make_shared<PresentedAlgebra>(C);
    return q;
}

// ---------------------------------------------------------------------------
// Prime transport

enum class ContractionTarget { left_factor, right_factor, base };

/// Lifts an ideal of a tensor factor (or extension parent) into the ambient
/// ring of C.
inline IdealHandle extend_ideal(const PresentedAlgebra& C, const IdealHandle& I,
                                ContractionTarget from) {
    const std::vector<int>* where = nullptr;
    const PresentedAlgebra* factor = nullptr;
    switch (from) {
        case ContractionTarget::left_factor:
            factor = &C.left_factor();
            where = &C.left_map();
            break;
        case ContractionTarget::right_factor:
            factor = &C.right_factor();
            where = &C.right_map();
            break;
        case ContractionTarget::base:
            factor = &C.parent();
            where = &C.left_map();
            break;
    }
    if (!same_ring(I.ring(), factor->ring()))
        throw Error("ideal does not live in the expected factor");
    return map_ideal(I, C.ring(), *where);
}

/// P ∩ (factor): eliminate the complementary variables, land in the factor's
/// own ring. The contraction of a prime is prime, so the assertion carries.
inline PrimeSpec contract_prime(const PresentedAlgebra& C, const PrimeSpec& P,
                                ContractionTarget target) {
    if (!same_ring(P.ideal().ring(), C.ring()))
        throw Error("prime does not live in the ambient ring");
    for (const auto& g : C.relations().gens())
        if (!P.ideal().contains(g)) throw Error("prime does not contain relation ideal");

    const PresentedAlgebra* factor = nullptr;
    const std::vector<int>* keep_map = nullptr;
    switch (target) {
        case ContractionTarget::left_factor:
            if (C.kind() != AlgebraKind::tensor)
                throw Error("contraction target invalid for this algebra");
            factor = &C.left_factor();
            keep_map = &C.left_map();
            break;
        case ContractionTarget::right_factor:
            if (C.kind() != AlgebraKind::tensor)
                throw Error("contraction target invalid for this algebra");
            factor = &C.right_factor();
            keep_map = &C.right_map();
            break;
        case ContractionTarget::base:
            if (C.kind() != AlgebraKind::poly_ext)
                throw Error("contraction target invalid for this algebra");
            factor = &C.parent();
            keep_map = &C.left_map();
            break;
    }

    std::vector<bool> kept(C.ring()->nvars(), false);
    for (int idx : *keep_map) kept[static_cast<std::size_t>(idx)] = true;
    std::vector<std::string> remove;
    for (std::size_t i = 0; i < C.ring()->nvars(); ++i)
        if (!kept[i]) remove.push_back(C.ring()->vars()[i]);

    IdealHandle elim = eliminate(P.ideal(), remove);
    // The eliminated ring has the ambient names for the kept variables, in
    // ambient order = factor order; rename back to the factor's own names.
    std::vector<int> back(elim.ring()->nvars());
    for (std::size_t i = 0; i < elim.ring()->nvars(); ++i)
        back[i] = static_cast<int>(i);
    IdealHandle contracted = map_ideal(elim, factor->ring(), back);
    return PrimeSpec::assert_prime(contracted, P.equidimensional_asserted());
}

// ---------------------------------------------------------------------------
// Residue-field arithmetic at a prime

/// Arithmetic in the residue field κ(P) carried out in the ambient ring:
/// zero tests are normal forms against P, inverses come from cofactor
/// certificates of 1 ∈ P + (f) (maximal P).
class ResidueContext {
public:
    ResidueContext() = default;
    explicit ResidueContext(PrimeSpec P) : prime_(std::move(P)), cache_(new Cache) {}

    const PrimeSpec& prime() const { return prime_; }
    const RingPtr& ring() const { return prime_.ideal().ring(); }
    const GroebnerBasis& basis() const { return prime_.ideal().groebner(); }

    Polynomial reduce(const Polynomial& f) const { return nf(f, basis()); }
    bool zero(const Polynomial& f) const { return reduce(f).is_zero(); }

    Polynomial inverse(const Polynomial& f) const {
        Polynomial red = reduce(f);
        if (red.is_zero()) throw Error("not invertible in residue field");
        std::string key = red.str();
        {
            std::lock_guard<std::mutex> lock(cache_->mu);
            auto it = cache_->inv.find(key);
            if (it != cache_->inv.end()) return it->second;
        }
        std::vector<Polynomial> gens = prime_.ideal().gens();
        gens.push_back(red);
        GBOptions opts;
        opts.track_cofactors = true;
        GroebnerBasis gb = buchberger(ring(), gens, MonomialOrder::grevlex(), opts);
        auto cert = membership_certificate(ring()->one(), gb);
        if (!cert) throw Error("not invertible in residue field");
        Polynomial inv = nf((*cert).back(), basis());
        std::lock_guard<std::mutex> lock(cache_->mu);
        cache_->inv.emplace(key, inv);
        return inv;
    }

private:
    struct Cache {
        std::mutex mu;
        std::map<std::string, Polynomial> inv;
    };
    PrimeSpec prime_;
    std::shared_ptr<Cache> cache_;
};

inline bool residue_zero_test(const ResidueContext& ctx, const Polynomial& f) {
    return ctx.zero(f);
}
inline Polynomial residue_inverse(const ResidueContext& ctx, const Polynomial& f) {
    return ctx.inverse(f);
}

// ---------------------------------------------------------------------------
// Zero-dimensional ideals: standard monomial bases

/// True iff k[X]/I is a finite-dimensional k-space: every variable has a
/// pure power among the leading terms.
inline bool is_zero_dimensional(const GroebnerBasis& gb) {
    std::size_t n = gb.ring->nvars();
    for (std::size_t v = 0; v < n; ++v) {
        bool found = n == 0;
        for (const auto& g : gb.polys) {
            const Monomial& lt = g.leading_term(gb.order).mono;
            bool pure = lt.e[v] > 0;
            for (std::size_t w = 0; w < n && pure; ++w)
                if (w != v && lt.e[w] != 0) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

/// Monomials outside the leading-term ideal; a k-basis of k[X]/I when I is
/// zero-dimensional. Deterministic order: graded reverse lex ascending.
inline std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
    if (!gb.polys.empty() && gb.polys[0].is_constant()) return {};
    if (!is_zero_dimensional(gb))
        throw Error("standard monomial basis requires a zero-dimensional ideal");
    std::size_t n = gb.ring->nvars();
    std::vector<int> bound(n, 1);
    for (std::size_t v = 0; v < n; ++v)
        for (const auto& g : gb.polys) {
            const Monomial& lt = g.leading_term(gb.order).mono;
            bool pure = lt.e[v] > 0;
            for (std::size_t w = 0; w < n && pure; ++w)
                if (w != v && lt.e[w] != 0) pure = false;
            if (pure) bound[v] = lt.e[v];
        }
    std::vector<Monomial> out;
    Monomial cur;
    cur.e.assign(n, 0);
    auto divisible_by_lt = [&gb](const Monomial& m) {
        for (const auto& g : gb.polys)
            if (mono_divides(g.leading_term(gb.order).mono, m)) return true;
        return false;
    };
    // Enumerate the bounding box, keep monomials outside LT(I).
    while (true) {
        if (!divisible_by_lt(cur)) out.push_back(cur);
        std::size_t v = 0;
        while (v < n) {
            if (++cur.e[v] < bound[v] + 1) break;
            cur.e[v] = 0;
            ++v;
        }
        if (v == n) break;
    }
    MonomialOrder canon = MonomialOrder::grevlex();
    std::sort(out.begin(), out.end(),
              [&canon](const Monomial& a, const Monomial& b) { return canon.less(a, b); });
    return out;
}

/// [κ(P):k] for maximal P: the number of standard monomials of P.
inline std::size_t residue_field_degree(const ResidueContext& ctx) {
    if (!is_zero_dimensional(ctx.basis()))
        throw Error("residue field not finite over k");
    return standard_monomials(ctx.basis()).size();
}

// ---------------------------------------------------------------------------
// Rank over κ(P)

/// Rank of a matrix of ambient polynomials over the residue field at P.
/// Fraction-free Gaussian elimination: cross-multiplied row updates reduced
/// modulo P, pivots chosen as the first nonzero entry in row-major scan.
/// Multiplying a row by a nonzero residue never changes the rank, so this
/// agrees with classical elimination while staying inside the ambient ring
/// (non-maximal primes have no representable inverses).
inline std::size_t kappa_rank(const ResidueContext& ctx,
                              std::vector<std::vector<Polynomial>> M) {
    for (auto& row : M)
        for (auto& e : row) e = ctx.reduce(e);
    std::size_t rows = M.size();
    std::size_t cols = rows ? M[0].size() : 0;
    for (const auto& row : M)
        if (row.size() != cols) throw Error("ragged matrix");

    std::size_t rank = 0, r0 = 0;
    while (r0 < rows) {
        std::size_t pr = rows, pc = cols;
        for (std::size_t r = r0; r < rows && pr == rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (!M[r][c].is_zero()) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr == rows) break;
        std::swap(M[r0], M[pr]);
        const Polynomial piv = M[r0][pc];
        for (std::size_t r = r0 + 1; r < rows; ++r) {
            if (M[r][pc].is_zero()) continue;
            Polynomial fac = M[r][pc];
            for (std::size_t c = 0; c < cols; ++c)
                M[r][c] = ctx.reduce(piv * M[r][c] - fac * M[r0][c]);
        }
        ++rank;
        ++r0;
    }
    return rank;
}

// ---------------------------------------------------------------------------
// Field-element embeddings and partial substitution

/// Embeds an element of a lower tower level into an extension of it.
inline FieldElement embed_to_field(const FieldElement& c, const FieldPtr& K) {
    if (same_field(c.field(), K)) return c;
    if (K->base()) {
        FieldElement inner = embed_to_field(c, K->base());
        return K->from_coefficients({inner});
    }
    throw Error("element does not embed in target field");
}

/// Substitutes field values for a subset of variables; remaining variables
/// map to target-ring variables via `where` (value entries use -1 there).
inline Polynomial substitute_partial(const Polynomial& p, const RingPtr& target,
                                     const std::vector<int>& where,
                                     const std::vector<std::optional<FieldElement>>& values) {
    const RingPtr& src = p.ring();
    if (where.size() != src->nvars() || values.size() != src->nvars())
        throw Error("substitution map has wrong length");
    Polynomial acc = target->zero();
    for (const auto& t : p.terms()) {
        FieldElement coeff = embed_to_field(t.coeff, target->field());
        Monomial m;
        m.e.assign(target->nvars(), 0);
        for (std::size_t i = 0; i < src->nvars(); ++i) {
            int e = t.mono.e[i];
            if (e == 0) continue;
            if (values[i]) {
                FieldElement v = *values[i];
                for (int rep = 0; rep < e; ++rep) coeff = coeff * v;
            } else if (where[i] >= 0) {
                m.e[static_cast<std::size_t>(where[i])] += e;
            } else {
                throw Error("variable neither mapped nor valued: " + src->vars()[i]);
            }
        }
        acc = acc + target->monomial(std::move(m), std::move(coeff));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Minimal polynomials and separability

/// Monic generator of the kernel of k[T] -> k[X]/P, T ↦ elem, by eliminating
/// X from P + (T − elem).
inline Polynomial minimal_polynomial(const ResidueContext& ctx, const Polynomial& elem,
                                     const std::string& var_name = "T") {
    const RingPtr& ring = ctx.ring();
    std::string tname = var_name;
    if (ring->var_index(tname) >= 0 || ring->field()->symbol_element(tname))
        tname = idealdetail::fresh_symbol(ring, var_name + "_m");
    std::vector<std::string> vars = ring->vars();
    vars.push_back(tname);
    RingPtr ext = PolyRing::make(ring->field(), vars);
    std::vector<int> up(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i) up[i] = static_cast<int>(i);
    std::vector<Polynomial> gens;
    for (const auto& g : ctx.prime().ideal().gens()) gens.push_back(map_variables(g, ext, up));
    gens.push_back(ext->var(tname) - map_variables(elem, ext, up));
    IdealHandle lifted(ext, std::move(gens));
    IdealHandle ker = eliminate(lifted, ring->vars());
    if (ker.is_zero_ideal()) throw Error("not algebraic");
    const auto& polys = ker.groebner().polys;
    if (polys.size() != 1) throw Error("internal: univariate kernel not principal");
    RingPtr tring = PolyRing::make(ring->field(), {var_name});
    return map_variables(polys[0], tring, {0});
}

namespace algdetail {

/// Coefficient vector (low to high) of a univariate polynomial.
inline uv::Poly to_univariate(const Polynomial& p) {
    if (p.ring()->nvars() != 1) throw Error("not univariate");
    uv::Poly out;
    out.assign(static_cast<std::size_t>(std::max(p.total_degree() + 1, 0)),
               p.ring()->field()->zero());
    for (const auto& t : p.terms()) out[static_cast<std::size_t>(t.mono.e[0])] = t.coeff;
    uv::trim(out);
    return out;
}

inline bool separable_minimal_polynomial(const Polynomial& m) {
    const FieldPtr& f = m.ring()->field();
    uv::Poly u = to_univariate(m);
    uv::Poly d = uv::derivative(u, f);
    if (uv::is_zero(d)) return false;
    return uv::deg(uv::gcd_monic(u, d, f)) == 0;
}

} // namespace algdetail

/// κ(P) separable over k, for maximal P: every ambient variable's residue
/// has a separable minimal polynomial. Sound because an extension generated
/// by separable elements is separable.
inline bool is_separable_extension(const ResidueContext& ctx) {
    if (!is_zero_dimensional(ctx.basis()))
        throw Error("residue field not finite over k");
    if (ctx.ring()->field()->characteristic() == 0) return true;
    for (std::size_t v = 0; v < ctx.ring()->nvars(); ++v) {
        Polynomial m = minimal_polynomial(ctx, ctx.ring()->var(static_cast<int>(v)));
        if (!algdetail::separable_minimal_polynomial(m)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Explicit residue fields and fibre presentations

/// κ(P) presented as a field tower, with the images of the ambient
/// variables. Only for maximal P; built by back-substitution through a lex
/// basis, adjoining one simple extension per unresolved algebraic variable.
struct ResidueFieldData {
    FieldPtr field;                    // κ(P) as an extension tower over k
    std::vector<FieldElement> images;  // ambient variable images in κ(P)
};

inline ResidueFieldData present_residue_field(const PrimeSpec& P) {
    const RingPtr& ring = P.ideal().ring();
    const FieldPtr& k = ring->field();
    const GroebnerBasis& gb = P.ideal().groebner(MonomialOrder::lex());
    if (!is_zero_dimensional(P.ideal().groebner()))
        throw Error("residue field not finite over k");

    std::size_t n = ring->nvars();
    ResidueFieldData out;
    out.field = k;
    out.images.assign(n, FieldElement());
    std::vector<bool> resolved(n, false);
    int ext_count = 0;

    // Variables from last to first: under lex, trailing variables appear in
    // basis elements free of the leading ones.
    for (std::size_t vi = n; vi-- > 0;) {
        // Collect basis elements supported on {vi, resolved tail}.
        std::vector<uv::Poly> constraints;
        for (const auto& g : gb.polys) {
            bool ok = true;
            for (std::size_t w = 0; w < n && ok; ++w)
                if (w != vi && !resolved[w]) {
                    for (const auto& t : g.terms())
                        if (t.mono.e[w] != 0) {
                            ok = false;
                            break;
                        }
                }
            if (!ok) continue;
            // Partial-substitute tail images; leaves a univariate in vi.
            uv::Poly u;
            for (const auto& t : g.terms()) {
                FieldElement c = embed_to_field(t.coeff, out.field);
                for (std::size_t w = 0; w < n; ++w) {
                    if (t.mono.e[w] == 0 || w == vi) continue;
                    for (int rep = 0; rep < t.mono.e[w]; ++rep) c = c * out.images[w];
                }
                std::size_t e = static_cast<std::size_t>(t.mono.e[vi]);
                if (u.size() <= e) u.resize(e + 1, out.field->zero());
                u[e] += c;
            }
            uv::trim(u);
            if (!uv::is_zero(u)) constraints.push_back(std::move(u));
        }
        uv::Poly m;
        for (const auto& c : constraints)
            m = uv::is_zero(m) ? c : uv::gcd_monic(m, c, out.field);
        if (uv::is_zero(m)) throw Error("residue field not finite over k");
        m = uv::make_monic(m);
        if (uv::deg(m) == 0) throw Error("internal: inconsistent residue constraints");
        if (uv::deg(m) == 1) {
            FieldElement val = -m[0];
            out.images[vi] = val;
        } else {
            std::string zname = "z" + std::to_string(ext_count++) + "_" + ring->vars()[vi];
            FieldPtr bigger = Field::extension(out.field, zname, m, true);
            // Lift previously resolved images into the bigger field.
            for (std::size_t w = 0; w < n; ++w)
                if (resolved[w]) out.images[w] = embed_to_field(out.images[w], bigger);
            out.field = bigger;
            out.images[vi] = bigger->generator();
        }
        resolved[vi] = true;
    }
    return out;
}

/// The fibre algebra κ_A(p) ⊗_k B for maximal p in A's ambient: B's
/// presentation with scalars extended to κ_A(p).
struct FibrePresentation {
    PresentedAlgebra algebra;       // over κ_A(p), variables = B's variables
    ResidueFieldData residue;       // κ_A(p) and A-variable images
};

inline FibrePresentation fibre_algebra(const PrimeSpec& p, const PresentedAlgebra& B) {
    ResidueFieldData rf = present_residue_field(p);
    RingPtr fring = PolyRing::make(rf.field, B.ring()->vars());
    std::vector<int> ident(B.ring()->nvars());
    for (std::size_t i = 0; i < B.ring()->nvars(); ++i) ident[i] = static_cast<int>(i);
    std::vector<std::optional<FieldElement>> novals(B.ring()->nvars(), std::nullopt);
    std::vector<Polynomial> rels;
    for (const auto& g : B.relations().gens())
        rels.push_back(substitute_partial(g, fring, ident, novals));
    FibrePresentation out;
    out.algebra = PresentedAlgebra::present(fring, std::move(rels));
    out.residue = std::move(rf);
    return out;
}

/// Pushes an ideal of the tensor ambient into the fibre ring over the left
/// contraction: left variables take their residue images, right variables
/// map across (by position through the tensor's right map).
inline IdealHandle push_to_fibre(const PresentedAlgebra& tensor_alg,
                                 const FibrePresentation& fibre, const IdealHandle& Q) {
    const RingPtr& amb = tensor_alg.ring();
    if (!same_ring(Q.ring(), amb)) throw Error("ideal does not live in the ambient ring");
    const RingPtr& fring = fibre.algebra.ring();
    std::vector<int> where(amb->nvars(), -1);
    std::vector<std::optional<FieldElement>> values(amb->nvars(), std::nullopt);
    const auto& lmap = tensor_alg.left_map();
    for (std::size_t i = 0; i < lmap.size(); ++i)
        values[static_cast<std::size_t>(lmap[i])] = fibre.residue.images[i];
    const auto& rmap = tensor_alg.right_map();
    for (std::size_t i = 0; i < rmap.size(); ++i)
        where[static_cast<std::size_t>(rmap[i])] = static_cast<int>(i);
    std::vector<Polynomial> gens;
    for (const auto& g : Q.gens())
        gens.push_back(substitute_partial(g, fring, where, values));
    return IdealHandle(fring, std::move(gens));
}

// ---------------------------------------------------------------------------
// Multiplicative sets for the localized-regularity checks

struct MultiplicativeSetDescriptor {
    enum class Kind { nagata, serre, explicit_primes };
    Kind kind = Kind::nagata;
    std::vector<PrimeSpec> avoided; // explicit_primes only

    static MultiplicativeSetDescriptor nagata() { return {Kind::nagata, {}}; }
    static MultiplicativeSetDescriptor serre() { return {Kind::serre, {}}; }
    static MultiplicativeSetDescriptor explicit_list(std::vector<PrimeSpec> ps) {
        return {Kind::explicit_primes, std::move(ps)};
    }
};

} // namespace specchain

#endif
