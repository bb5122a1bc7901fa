#ifndef SPECCHAIN_THEOREMS_HPP
#define SPECCHAIN_THEOREMS_HPP

/// Verifiers: each evaluates both sides of one identity or inequality
/// relating embedding dimension, codimension, the mu invariant, and
/// dimension across localization maps, tensor products, polynomial
/// extensions, and scalar field extensions. Hypothesis failures never
/// abort: both sides are still computed and the verdict is labeled
/// "hypothesis-not-met" instead. A "refuted" verdict on an instance whose
/// hypotheses all pass signals a kernel bug, never a expected outcome.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specchain/localinv.hpp"

namespace specchain {

struct HypothesisCheck {
    std::string name;
    bool passed = false;
};

struct VerdictReport {
    std::string theorem;    // verifier tag, e.g. "prop_n1"
    std::string instance;   // human-readable instance description
    long lhs = 0;
    std::vector<std::pair<std::string, long>> rhs_components;
    long rhs_total = 0;
    std::vector<HypothesisCheck> hypotheses;  // preconditions; failure -> hypothesis-not-met
    std::vector<HypothesisCheck> checks;      // companion identities; failure -> refuted
    std::string verdict;    // "confirmed" | "refuted" | "hypothesis-not-met"

    bool hypotheses_pass() const {
        for (const auto& h : hypotheses)
            if (!h.passed) return false;
        return true;
    }
    bool checks_pass() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

namespace thmdetail {

inline std::string prime_str(const PrimeSpec& P) {
    std::string s;
    for (const auto& g : P.ideal().gens()) {
        if (!s.empty()) s += ", ";
        s += g.str();
    }
    return "(" + s + ")";
}

inline void finalize(VerdictReport& r) {
    r.rhs_total = 0;
    for (const auto& c : r.rhs_components) r.rhs_total += c.second;
    if (!r.hypotheses_pass())
        r.verdict = "hypothesis-not-met";
    else if (r.lhs == r.rhs_total && r.checks_pass())
        r.verdict = "confirmed";
    else
        r.verdict = "refuted";
}

/// ht(P/J) computed as dim(k[X]/J) - dim(k[X]/P). Valid whenever k[X]/J is
/// equidimensional and catenary; every J built here is one of p[X], p(x)B,
/// p(x)B + A(x)q, or K(x)p, whose quotients are polynomial rings or tensor
/// products over residue domains, all equidimensional.
inline int relative_height(const IdealHandle& J, const PrimeSpec& P) {
    for (const auto& g : J.gens())
        if (!P.ideal().contains(g)) throw Error("containment violated");
    return krull_dim(J) - krull_dim(P.ideal());
}

} // namespace thmdetail

// ---------------------------------------------------------------------------
// Local maps

/// A local homomorphism A_p -> C_P realized by a canonical embedding of A
/// into C (tensor factor, extension base) or by the identity.
struct LocalMapDescriptor {
    PresentedAlgebra source;  // A
    PrimeSpec source_prime;   // p, in A's ambient
    PresentedAlgebra target;  // C
    PrimeSpec target_prime;   // P, in C's ambient
    bool identity_map = false;
    ContractionTarget embedding = ContractionTarget::left_factor;
    bool flat_canonical = false;  // localization maps of free constructions
};

inline LocalMapDescriptor identity_local_map(const PresentedAlgebra& A, const PrimeSpec& P) {
    LocalMapDescriptor m;
    m.source = A;
    m.source_prime = P;
    m.target = A;
    m.target_prime = P;
    m.identity_map = true;
    m.flat_canonical = true;
    return m;
}

/// The canonical inclusion of a factor into a tensor product or of the base
/// into a polynomial extension; these are free, hence flat.
inline LocalMapDescriptor canonical_map(const PresentedAlgebra& C, const PrimeSpec& P,
                                        ContractionTarget embedding) {
    LocalMapDescriptor m;
    m.target = C;
    m.target_prime = P;
    m.embedding = embedding;
    m.source_prime = contract_prime(C, P, embedding);
    switch (embedding) {
        case ContractionTarget::left_factor: m.source = C.left_factor(); break;
        case ContractionTarget::right_factor: m.source = C.right_factor(); break;
        case ContractionTarget::base: m.source = C.parent(); break;
    }
    m.flat_canonical = true;
    return m;
}

namespace thmdetail {

inline IdealHandle transported(const LocalMapDescriptor& map, const IdealHandle& I) {
    if (map.identity_map) return I;
    return extend_ideal(map.target, I, map.embedding);
}

} // namespace thmdetail

// ---------------------------------------------------------------------------
// Fibre rings at a prime

/// The fibre of C over the contraction p of P to one side, localized at the
/// image of P: kappa(p) (x) (other factor), over the explicit residue field.
struct FibreAtPrime {
    PrimeSpec contracted;      // p, in the factor's ambient
    ResidueFieldData residue;  // kappa(p) with variable images
    PresentedAlgebra algebra;  // fibre ring over kappa(p)
    PrimeSpec image;           // image of P in the fibre ambient
};

/// Requires the contracted prime maximal ("residue field not finite over k"
/// otherwise); side = base serves polynomial extensions.
inline FibreAtPrime fibre_over(const PresentedAlgebra& C, const PrimeSpec& P,
                               ContractionTarget side) {
    FibreAtPrime out;
    out.contracted = contract_prime(C, P, side);
    out.residue = present_residue_field(out.contracted);

    const PresentedAlgebra* kept = nullptr;  // factor surviving into the fibre
    const std::vector<int>* resolved = nullptr;
    const std::vector<int>* kept_map = nullptr;
    std::vector<int> ext_map;
    std::vector<std::string> vars;
    switch (side) {
        case ContractionTarget::left_factor:
            kept = &C.right_factor();
            resolved = &C.left_map();
            kept_map = &C.right_map();
            vars = kept->ring()->vars();
            break;
        case ContractionTarget::right_factor:
            kept = &C.left_factor();
            resolved = &C.right_map();
            kept_map = &C.left_map();
            vars = kept->ring()->vars();
            break;
        case ContractionTarget::base: {
            resolved = &C.left_map();
            vars = C.new_vars();
            std::size_t base_n = C.parent().ring()->nvars();
            for (std::size_t j = 0; j < vars.size(); ++j)
                ext_map.push_back(static_cast<int>(base_n + j));
            kept_map = &ext_map;
            break;
        }
    }

    RingPtr fring = PolyRing::make(out.residue.field, vars);
    std::vector<Polynomial> rels;
    if (kept) {
        std::vector<int> ident(kept->ring()->nvars());
        for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = static_cast<int>(i);
        std::vector<std::optional<FieldElement>> none(kept->ring()->nvars(), std::nullopt);
        for (const auto& g : kept->relations().gens())
            rels.push_back(substitute_partial(g, fring, ident, none));
    }
    out.algebra = PresentedAlgebra::present(fring, std::move(rels));

    std::size_t n = C.ring()->nvars();
    std::vector<std::optional<FieldElement>> values(n, std::nullopt);
    std::vector<int> where(n, -1);
    for (std::size_t i = 0; i < resolved->size(); ++i)
        values[static_cast<std::size_t>((*resolved)[i])] = out.residue.images[i];
    for (std::size_t j = 0; j < kept_map->size(); ++j)
        where[static_cast<std::size_t>((*kept_map)[j])] = static_cast<int>(j);
    std::vector<Polynomial> igens;
    for (const auto& g : P.ideal().gens())
        igens.push_back(substitute_partial(g, fring, where, values));
    out.image = PrimeSpec::assert_prime(IdealHandle(fring, std::move(igens)));
    return out;
}

// ---------------------------------------------------------------------------
// Additivity of edim across a local map (quotient form)

/// edim(C_P) = mu_relative(C, P, I~) + edim((C/I~C)_P), the exact-sequence
/// identity for the conormal space.
inline VerdictReport verify_prop_n1(const LocalMapDescriptor& map, const IdealHandle& I,
                                    std::string instance = "") {
    VerdictReport r;
    r.theorem = "prop_n1";
    r.instance = instance.empty() ? "at " + thmdetail::prime_str(map.target_prime)
                                  : std::move(instance);
    r.hypotheses.push_back({"ideal-proper", I.is_proper()});

    IdealHandle ext = thmdetail::transported(map, I);
    for (const auto& g : ext.gens())
        if (!map.target_prime.ideal().contains(g)) throw Error("containment violated");

    r.lhs = edim_local(map.target, map.target_prime);
    std::size_t mu = mu_relative(map.target, map.target_prime, ext);
    r.rhs_components.push_back({"mu_relative", static_cast<long>(mu)});
    PresentedAlgebra quot = ext.is_zero_ideal()
                                ? map.target
                                : quotient_algebra(map.target, ext);
    long edim_quot = edim_local(quot, map.target_prime);
    r.rhs_components.push_back({"edim_quotient", edim_quot});

    // Companion upper bound: edim(C_P) <= edim(A_p) - edim((A/I)_p) +
    // edim((C/IC)_P), since the relative mu is at most mu of I in the source.
    long edim_src = edim_local(map.source, map.source_prime);
    PresentedAlgebra src_quot = I.is_zero_ideal()
                                    ? map.source
                                    : quotient_algebra(map.source, I);
    long edim_src_quot = edim_local(src_quot, map.source_prime);
    r.checks.push_back(
        {"upper-bound", r.lhs <= edim_src - edim_src_quot + edim_quot});
    thmdetail::finalize(r);
    return r;
}

// ---------------------------------------------------------------------------
// Going-down corollaries: codimension bookkeeping across a flat local map

/// cdim(C_P) = (mu_P(pC_p) - dim(A_p)) + cdim(fibre), plus the companion
/// balance identity, the regularity biconditional, and the subadditivity
/// inequality, all under flatness-by-construction (flat maps satisfy
/// going-down).
inline VerdictReport verify_gd_corollaries(const LocalMapDescriptor& map,
                                           std::string instance = "") {
    VerdictReport r;
    r.theorem = "gd_corollaries";
    r.instance = instance.empty() ? "at " + thmdetail::prime_str(map.target_prime)
                                  : std::move(instance);
    r.hypotheses.push_back({"flat-canonical-map", map.flat_canonical});
    bool p_maximal = is_zero_dimensional(map.source_prime.ideal().groebner());
    r.hypotheses.push_back({"contracted-prime-maximal", p_maximal});
    // Without a maximal contraction the fibre ring is not presentable, so
    // only then do we skip the value computation; a failed flatness flag
    // still gets its numbers reported under the failed hypothesis.
    if (!p_maximal) {
        thmdetail::finalize(r);
        return r;
    }

    const PresentedAlgebra& C = map.target;
    const PrimeSpec& P = map.target_prime;
    IdealHandle p_ext = thmdetail::transported(map, map.source_prime.ideal());
    std::size_t mu = mu_relative(C, P, p_ext);
    int dim_a = local_dim(map.source, map.source_prime);
    // The fibre of the identity map is the residue field itself.
    int cdim_fibre = 0;
    if (!map.identity_map) {
        FibreAtPrime fib = fibre_over(C, P, map.embedding);
        cdim_fibre = cdim_local(fib.algebra, fib.image);
    }

    r.lhs = cdim_local(C, P);
    r.rhs_components.push_back({"mu_minus_dim", static_cast<long>(mu) - dim_a});
    r.rhs_components.push_back({"cdim_fibre", cdim_fibre});

    int cdim_a = cdim_local(map.source, map.source_prime);
    int edim_a = edim_local(map.source, map.source_prime);
    r.checks.push_back({"cdim-balance",
                        r.lhs + (edim_a - static_cast<long>(mu)) == cdim_a + cdim_fibre});
    bool left = r.lhs == 0 && static_cast<long>(mu) == edim_a;
    bool right = cdim_a == 0 && cdim_fibre == 0;
    r.checks.push_back({"regularity-biconditional", left == right});
    r.checks.push_back({"cdim-subadditive", r.lhs <= cdim_a + cdim_fibre});
    if (cdim_fibre == 0)
        r.checks.push_back({"regular-fibre-descent", r.lhs <= cdim_a});
    thmdetail::finalize(r);
    return r;
}

// ---------------------------------------------------------------------------
// Special chain identities for Krull dimension

enum class ChainKind { polynomial, tensor_fibre, tensor_extended };

/// polynomial:      dim(R[X]_P)  = dim(R_p) + ht(P/p[X])
/// tensor_fibre:    dim(A(x)B)_P = dim(A_p) + ht(P/(p(x)B))
/// tensor_extended: dim(A(x)B)_P = dim(A_p) + dim(B_q) + ht(P/(p(x)B + A(x)q))
inline VerdictReport verify_special_chain_dim(ChainKind kind, const PresentedAlgebra& C,
                                              const PrimeSpec& P, std::string instance = "") {
    VerdictReport r;
    r.theorem = kind == ChainKind::polynomial     ? "chain_dim_polynomial"
                : kind == ChainKind::tensor_fibre ? "chain_dim_tensor_fibre"
                                                  : "chain_dim_tensor_extended";
    r.instance = instance.empty() ? "at " + thmdetail::prime_str(P) : std::move(instance);

    bool gate = C.relations_equidimensional();
    if (kind == ChainKind::polynomial) {
        PrimeSpec p = contract_prime(C, P, ContractionTarget::base);
        gate = gate && C.parent().relations_equidimensional();
        r.hypotheses.push_back({"dimension-formula-applicable", gate});
        if (!gate) {
            thmdetail::finalize(r);
            return r;
        }
        r.lhs = local_dim(C, P);
        r.rhs_components.push_back({"dim_source", local_dim(C.parent(), p)});
        IdealHandle J = extend_ideal(C, p.ideal(), ContractionTarget::base);
        r.rhs_components.push_back({"height_term", thmdetail::relative_height(J, P)});
    } else {
        PrimeSpec p = contract_prime(C, P, ContractionTarget::left_factor);
        gate = gate && C.left_factor().relations_equidimensional() &&
               C.right_factor().relations_equidimensional();
        r.hypotheses.push_back({"dimension-formula-applicable", gate});
        if (!gate) {
            thmdetail::finalize(r);
            return r;
        }
        r.lhs = local_dim(C, P);
        r.rhs_components.push_back({"dim_left", local_dim(C.left_factor(), p)});
        IdealHandle J = ideal_sum(
            extend_ideal(C, p.ideal(), ContractionTarget::left_factor), C.relations());
        if (kind == ChainKind::tensor_extended) {
            PrimeSpec q = contract_prime(C, P, ContractionTarget::right_factor);
            r.rhs_components.push_back({"dim_right", local_dim(C.right_factor(), q)});
            J = ideal_sum(J, extend_ideal(C, q.ideal(), ContractionTarget::right_factor));
        }
        r.rhs_components.push_back({"height_term", thmdetail::relative_height(J, P)});
    }
    thmdetail::finalize(r);
    return r;
}

// ---------------------------------------------------------------------------
// Polynomial extensions: edim and cdim transfer

/// edim(R[X]_P) = edim(R_p) + ht(P/p[X]); when p is maximal the fibre form
/// edim(R_p) + edim(kappa(p)[X] at the image) is computed as well and must
/// agree, the fibre being regular.
inline VerdictReport verify_thm_p1(const PresentedAlgebra& R,
                                   const std::vector<std::string>& new_vars,
                                   const PrimeSpec& P, std::string instance = "") {
    PresentedAlgebra C = poly_extension(R, new_vars);
    VerdictReport r;
    r.theorem = "thm_p1";
    r.instance = instance.empty() ? "at " + thmdetail::prime_str(P) : std::move(instance);
    PrimeSpec p = contract_prime(C, P, ContractionTarget::base);

    r.lhs = edim_local(C, P);
    int edim_src = edim_local(R, p);
    r.rhs_components.push_back({"edim_source", edim_src});
    IdealHandle J = extend_ideal(C, p.ideal(), ContractionTarget::base);
    r.rhs_components.push_back({"height_term", thmdetail::relative_height(J, P)});

    if (is_zero_dimensional(p.ideal().groebner())) {
        FibreAtPrime fib = fibre_over(C, P, ContractionTarget::base);
        long fibre_form = edim_src + edim_local(fib.algebra, fib.image);
        r.checks.push_back({"fibre-form-agrees", fibre_form == r.lhs});
    }
    thmdetail::finalize(r);
    return r;
}

/// cdim(R[X]_P) = cdim(R_p).
inline VerdictReport verify_cor_p2(const PresentedAlgebra& R,
                                   const std::vector<std::string>& new_vars,
                                   const PrimeSpec& P, std::string instance = "") {
    PresentedAlgebra C = poly_extension(R, new_vars);
    VerdictReport r;
    r.theorem = "cor_p2";
    r.instance = instance.empty() ? "at " + thmdetail::prime_str(P) : std::move(instance);
    PrimeSpec p = contract_prime(C, P, ContractionTarget::base);
    bool gate = C.relations_equidimensional() && R.relations_equidimensional();
    r.hypotheses.push_back({"dimension-formula-applicable", gate});
    if (gate) {
        r.lhs = cdim_local(C, P);
        r.rhs_components.push_back({"cdim_source", cdim_local(R, p)});
    }
    thmdetail::finalize(r);
    return r;
}

/// Localized regularity of S^{-1}R[X] for content-unit (nagata) or monic
/// (serre) multiplicative sets, sampled at the listed primes of R: at each
/// sampled p the induced localization has cdim equal to cdim(R_p). The
/// conclusion is explicitly about the sampled primes only.
inline VerdictReport check_localized_regularity(const PresentedAlgebra& R,
                                                const std::vector<std::string>& new_vars,
                                                const MultiplicativeSetDescriptor& S,
                                                const std::vector<PrimeSpec>& primes,
                                                std::string instance = "") {
    PresentedAlgebra C = poly_extension(R, new_vars);
    VerdictReport r;
    r.theorem = "localized_regularity";
    r.instance = (instance.empty() ? std::string("sampled localization")
                                   : std::move(instance)) +
                 " [sampled primes only]";
    switch (S.kind) {
        case MultiplicativeSetDescriptor::Kind::nagata:
            // Extended primes have all coefficients in p, so they contain no
            // content-unit polynomial: avoidance is automatic.
            r.hypotheses.push_back({"avoidance-content-unit", true});
            break;
        case MultiplicativeSetDescriptor::Kind::serre:
            // No monic polynomial has every coefficient in p.
            r.hypotheses.push_back({"avoidance-monic", true});
            break;
        case MultiplicativeSetDescriptor::Kind::explicit_primes:
            for (const auto& p : primes) {
                IdealHandle ext = extend_ideal(C, p.ideal(), ContractionTarget::base);
                bool avoided = false;
                for (const auto& q : S.avoided) {
                    bool inside = true;
                    for (const auto& g : ext.gens())
                        if (!q.ideal().contains(g)) {
                            inside = false;
                            break;
                        }
                    if (inside) {
                        avoided = true;
                        break;
                    }
                }
                if (!avoided) throw Error("avoidance violated");
            }
            r.hypotheses.push_back({"avoidance-explicit", true});
            break;
    }

    for (const auto& p : primes) {
        IdealHandle ext = extend_ideal(C, p.ideal(), ContractionTarget::base);
        PrimeSpec P = PrimeSpec::assert_prime(ext, p.equidimensional_asserted());
        int cd_src = cdim_local(R, p);
        int cd_ext = cdim_local(C, P);
        r.lhs += cd_src;
        r.rhs_components.push_back({"cdim@" + thmdetail::prime_str(p), cd_ext});
        r.checks.push_back({"matches@" + thmdetail::prime_str(p), cd_src == cd_ext});
    }
    thmdetail::finalize(r);
    return r;
}

// ---------------------------------------------------------------------------
// Tensor products: the fibre form of edim additivity

/// (a) edim(A(x)B)_P = mu_P(pA_p) + edim(fibre at the image of P);
/// (b) cdim(A(x)B)_P + (edim(A_p) - mu_P(pA_p)) = cdim(A_p) + cdim(fibre);
/// (c) ((A(x)B)_P regular and mu_P(pA_p) = edim(A_p)) iff (A_p regular and
///     the fibre is regular).
inline VerdictReport verify_prop_f1(const PresentedAlgebra& A, const PresentedAlgebra& B,
                                    const PrimeSpec& P, std::string instance = "") {
    PresentedAlgebra C = tensor(A, B);
    VerdictReport r;
    r.theorem = "prop_f1";
    r.instance = instance.empty() ? "at " + thmdetail::prime_str(P) : std::move(instance);
    PrimeSpec p = contract_prime(C, P, ContractionTarget::left_factor);
    bool p_maximal = is_zero_dimensional(p.ideal().groebner());
    r.hypotheses.push_back({"contracted-prime-maximal", p_maximal});
    if (!p_maximal) {
        thmdetail::finalize(r);
        return r;
    }

    IdealHandle p_ext = extend_ideal(C, p.ideal(), ContractionTarget::left_factor);
    std::size_t mu = mu_relative(C, P, p_ext);
    FibreAtPrime fib = fibre_over(C, P, ContractionTarget::left_factor);
    int edim_fib = edim_local(fib.algebra, fib.image);

    r.lhs = edim_local(C, P);
    r.rhs_components.push_back({"mu_p", static_cast<long>(mu)});
    r.rhs_components.push_back({"edim_fibre", edim_fib});

    int edim_a = edim_local(A, p);
    int cdim_a = cdim_local(A, p);
    int cdim_c = cdim_local(C, P);
    int cdim_fib = cdim_local(fib.algebra, fib.image);
    r.checks.push_back({"cdim-balance",
                        cdim_c + (edim_a - static_cast<long>(mu)) == cdim_a + cdim_fib});
    bool left = cdim_c == 0 && static_cast<long>(mu) == edim_a;
    bool right = cdim_a == 0 && cdim_fib == 0;
    r.checks.push_back({"regularity-biconditional", left == right});
    thmdetail::finalize(r);
    return r;
}

/// Under the local fibre-sum hypothesis P_P = (p(x)B + A(x)q)_P:
/// (a) mu_P(pA_p) = edim(A_p) and mu_P(qB_q) = edim(B_q);
/// (b) edim(A(x)B)_P = edim(A_p) + edim(B_q).
inline VerdictReport verify_lemma_s11(const PresentedAlgebra& A, const PresentedAlgebra& B,
                                      const PrimeSpec& P, std::string instance = "") {
    PresentedAlgebra C = tensor(A, B);
    VerdictReport r;
    r.theorem = "lemma_s11";
    r.instance = instance.empty() ? "at " + thmdetail::prime_str(P) : std::move(instance);
    PrimeSpec p = contract_prime(C, P, ContractionTarget::left_factor);
    PrimeSpec q = contract_prime(C, P, ContractionTarget::right_factor);
    IdealHandle p_ext = extend_ideal(C, p.ideal(), ContractionTarget::left_factor);
    IdealHandle q_ext = extend_ideal(C, q.ideal(), ContractionTarget::right_factor);
    IdealHandle fibre_sum = ideal_sum(ideal_sum(p_ext, q_ext), C.relations());
    r.hypotheses.push_back({"local-fibre-sum", localization_equal_at(fibre_sum, P)});

    r.lhs = edim_local(C, P);
    int edim_a = edim_local(A, p);
    int edim_b = edim_local(B, q);
    r.rhs_components.push_back({"edim_left", edim_a});
    r.rhs_components.push_back({"edim_right", edim_b});
    if (r.hypotheses_pass()) {
        std::size_t mu_p = mu_relative(C, P, p_ext);
        std::size_t mu_q = mu_relative(C, P, q_ext);
        r.checks.push_back({"mu-left-is-edim", static_cast<long>(mu_p) == edim_a});
        r.checks.push_back({"mu-right-is-edim", static_cast<long>(mu_q) == edim_b});
    }
    thmdetail::finalize(r);
    return r;
}

// ---------------------------------------------------------------------------
// Scalar extension by a simple field extension K = k[z]/(m)

/// K presented by one variable and its minimal polynomial over k.
struct SimpleExtension {
    std::string var;
    std::string min_poly;  // parsed in k[var]
};

inline PresentedAlgebra extension_algebra(const FieldPtr& k, const SimpleExtension& K) {
    return PresentedAlgebra::present(k, {K.var}, {K.min_poly});
}

/// K (x) A as a k-algebra: ambient k[z, X_A].
inline PresentedAlgebra extension_tensor(const SimpleExtension& K, const PresentedAlgebra& A) {
    return tensor(extension_algebra(A.ring()->field(), K), A);
}

namespace thmdetail {

inline bool separable_simple_extension(const FieldPtr& k, const SimpleExtension& K) {
    RingPtr r = PolyRing::make(k, {K.var});
    Polynomial m = parse_polynomial(r, K.min_poly);
    return algdetail::separable_minimal_polynomial(m);
}

} // namespace thmdetail

/// edim(K(x)A)_P = edim(A_p) + ht(P/(K(x)p)) for separable K; the fibre
/// form and, when the height term vanishes, the algebraic specialization
/// edim(K(x)A)_P = edim(A_p) are reported alongside. The inseparable
/// counterexample keeps its computed defect under a failed hypothesis.
inline VerdictReport verify_thm_s1(const SimpleExtension& K, const PresentedAlgebra& A,
                                   const PrimeSpec& P, std::string instance = "") {
    PresentedAlgebra C = extension_tensor(K, A);
    VerdictReport r;
    r.theorem = "thm_s1";
    r.instance = instance.empty() ? "at " + thmdetail::prime_str(P) : std::move(instance);
    bool separable = thmdetail::separable_simple_extension(A.ring()->field(), K);
    r.hypotheses.push_back({"separable-extension", separable});

    PrimeSpec p = contract_prime(C, P, ContractionTarget::right_factor);
    r.lhs = edim_local(C, P);
    int edim_src = edim_local(A, p);
    r.rhs_components.push_back({"edim_source", edim_src});
    IdealHandle J = ideal_sum(extend_ideal(C, p.ideal(), ContractionTarget::right_factor),
                              C.relations());
    int ht_term = thmdetail::relative_height(J, P);
    r.rhs_components.push_back({"height_term", ht_term});

    if (separable && is_zero_dimensional(p.ideal().groebner())) {
        FibreAtPrime fib = fibre_over(C, P, ContractionTarget::right_factor);
        long fibre_form = edim_src + edim_local(fib.algebra, fib.image);
        r.checks.push_back({"fibre-form-agrees", fibre_form == r.lhs});
    }
    if (separable && ht_term == 0)
        r.checks.push_back({"algebraic-specialization", r.lhs == edim_src});
    thmdetail::finalize(r);
    return r;
}

/// cdim(K(x)A)_P = cdim(A_p) for separable K; the inseparable instance
/// reports its defect under the failed hypothesis.
inline VerdictReport verify_cor_s2(const SimpleExtension& K, const PresentedAlgebra& A,
                                   const PrimeSpec& P, std::string instance = "") {
    PresentedAlgebra C = extension_tensor(K, A);
    VerdictReport r;
    r.theorem = "cor_s2";
    r.instance = instance.empty() ? "at " + thmdetail::prime_str(P) : std::move(instance);
    bool separable = thmdetail::separable_simple_extension(A.ring()->field(), K);
    r.hypotheses.push_back({"separable-extension", separable});
    PrimeSpec p = contract_prime(C, P, ContractionTarget::right_factor);
    r.lhs = cdim_local(C, P);
    r.rhs_components.push_back({"cdim_source", cdim_local(A, p)});
    thmdetail::finalize(r);
    return r;
}

// ---------------------------------------------------------------------------
// Tensor products with a residually separable factor

/// edim(A(x)B)_P = edim(A_p) + edim(B_q) + ht(P/(p(x)B + A(x)q)), under
/// separability of kappa_B(q) over k. For maximal q the separability check
/// runs mechanically; otherwise the caller's assertion is recorded, or the
/// verdict is hypothesis-not-met.
inline VerdictReport verify_thm_r1(const PresentedAlgebra& A, const PresentedAlgebra& B,
                                   const PrimeSpec& P, bool separability_asserted = false,
                                   std::string instance = "") {
    PresentedAlgebra C = tensor(A, B);
    VerdictReport r;
    r.theorem = "thm_r1";
    r.instance = instance.empty() ? "at " + thmdetail::prime_str(P) : std::move(instance);
    PrimeSpec p = contract_prime(C, P, ContractionTarget::left_factor);
    PrimeSpec q = contract_prime(C, P, ContractionTarget::right_factor);

    bool q_maximal = is_zero_dimensional(q.ideal().groebner());
    if (q_maximal)
        r.hypotheses.push_back(
            {"residue-separable", is_separable_extension(ResidueContext(q))});
    else if (separability_asserted)
        r.hypotheses.push_back({"residue-separable (asserted)", true});
    else
        r.hypotheses.push_back({"residue-separable", false});

    r.lhs = edim_local(C, P);
    r.rhs_components.push_back({"edim_left", edim_local(A, p)});
    r.rhs_components.push_back({"edim_right", edim_local(B, q)});
    IdealHandle J = ideal_sum(
        ideal_sum(extend_ideal(C, p.ideal(), ContractionTarget::left_factor),
                  extend_ideal(C, q.ideal(), ContractionTarget::right_factor)),
        C.relations());
    r.rhs_components.push_back({"height_term", thmdetail::relative_height(J, P)});
    thmdetail::finalize(r);
    return r;
}

/// Hypothesis profiles for the codimension-additivity corollaries: check
/// separability of kappa_B(q) mechanically, accept the caller's residual
/// separability assertion, or accept an algebraically-closed-base
/// assertion (which makes every residue extension separable).
enum class R2Profile { check_separability, residually_separable, algebraically_closed };

/// cdim(A(x)B)_P = cdim(A_p) + cdim(B_q) under the selected gate.
inline VerdictReport verify_cor_r2(const PresentedAlgebra& A, const PresentedAlgebra& B,
                                   const PrimeSpec& P,
                                   R2Profile profile = R2Profile::check_separability,
                                   std::string instance = "") {
    PresentedAlgebra C = tensor(A, B);
    VerdictReport r;
    r.theorem = "cor_r2";
    r.instance = instance.empty() ? "at " + thmdetail::prime_str(P) : std::move(instance);
    PrimeSpec p = contract_prime(C, P, ContractionTarget::left_factor);
    PrimeSpec q = contract_prime(C, P, ContractionTarget::right_factor);

    switch (profile) {
        case R2Profile::check_separability: {
            bool q_maximal = is_zero_dimensional(q.ideal().groebner());
            r.hypotheses.push_back(
                {"residue-separable",
                 q_maximal && is_separable_extension(ResidueContext(q))});
            break;
        }
        case R2Profile::residually_separable:
            r.hypotheses.push_back({"residually-separable (asserted)", true});
            break;
        case R2Profile::algebraically_closed:
            r.hypotheses.push_back({"algebraically-closed-base (asserted)", true});
            break;
    }

    r.lhs = cdim_local(C, P);
    r.rhs_components.push_back({"cdim_left", cdim_local(A, p)});
    r.rhs_components.push_back({"cdim_right", cdim_local(B, q)});
    thmdetail::finalize(r);
    return r;
}

// ---------------------------------------------------------------------------
// The monotonic inequality chain

/// edim(A(x)B)_P <= edim(A_p) + edim(fibre) <= edim(A_p) + edim(B_q) +
/// edim(inner fibre kappa_A(p) (x) kappa_B(q) at the image). Requires
/// maximal p for the fibres.
inline VerdictReport verify_edim_inequalities(const PresentedAlgebra& A,
                                              const PresentedAlgebra& B, const PrimeSpec& P,
                                              std::string instance = "") {
    PresentedAlgebra C = tensor(A, B);
    VerdictReport r;
    r.theorem = "edim_inequalities";
    r.instance = instance.empty() ? "at " + thmdetail::prime_str(P) : std::move(instance);
    PrimeSpec p = contract_prime(C, P, ContractionTarget::left_factor);
    PrimeSpec q = contract_prime(C, P, ContractionTarget::right_factor);
    bool p_maximal = is_zero_dimensional(p.ideal().groebner());
    r.hypotheses.push_back({"contracted-prime-maximal", p_maximal});
    if (!p_maximal) {
        thmdetail::finalize(r);
        return r;
    }

    long t1 = edim_local(C, P);
    FibreAtPrime fib = fibre_over(C, P, ContractionTarget::left_factor);
    long t2 = edim_local(A, p) + edim_local(fib.algebra, fib.image);

    // Inner fibre: quotient the fibre ring by the image of q.
    std::vector<int> ident(B.ring()->nvars());
    for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = static_cast<int>(i);
    std::vector<std::optional<FieldElement>> none(B.ring()->nvars(), std::nullopt);
    std::vector<Polynomial> qgens;
    for (const auto& g : q.ideal().gens())
        qgens.push_back(substitute_partial(g, fib.algebra.ring(), ident, none));
    PresentedAlgebra inner = PresentedAlgebra::present(fib.algebra.ring(), qgens);
    long t3 = edim_local(A, p) + edim_local(B, q) + edim_local(inner, fib.image);

    r.lhs = t1;
    r.rhs_components.push_back({"edim_left", edim_local(A, p)});
    r.rhs_components.push_back({"edim_right", edim_local(B, q)});
    r.rhs_components.push_back({"edim_inner_fibre", edim_local(inner, fib.image)});
    r.checks.push_back({"first-inequality", t1 <= t2});
    r.checks.push_back({"second-inequality", t2 <= t3});
    // Equality with the upper bound is not asserted; the verdict rests on
    // the inequality checks alone.
    r.rhs_total = t3;
    if (!r.hypotheses_pass())
        r.verdict = "hypothesis-not-met";
    else
        r.verdict = r.checks_pass() ? "confirmed" : "refuted";
    return r;
}

} // namespace specchain

#endif
