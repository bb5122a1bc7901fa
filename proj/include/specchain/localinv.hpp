#ifndef SPECCHAIN_LOCALINV_HPP
#define SPECCHAIN_LOCALINV_HPP

/// Local invariants of a finitely presented algebra at a prime: Krull
/// dimension, height, localized dimension, the minimal-generator invariant
/// mu of an ideal inside P/P^2, embedding dimension, and codimension.

#include <map>
#include <string>
#include <vector>

#include "specchain/algebra.hpp"

namespace specchain {

/// dim k[X]/I: the maximum size of a variable subset meeting no leading
/// term of I (grevlex), a standard combinatorial reading of the dimension.
inline int krull_dim(const IdealHandle& I) {
    if (!I.valid()) throw Error("dimension of an empty handle");
    if (!I.is_proper()) throw Error("dimension of the zero ring");
    const GroebnerBasis& gb = I.groebner();
    std::size_t n = I.ring()->nvars();
    if (n > 24) throw Error("too many variables for dimension search");
    std::vector<unsigned> supports;
    for (const auto& g : gb.polys) {
        const Monomial& lt = g.leading_term(gb.order).mono;
        unsigned mask = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (lt.e[v] > 0) mask |= 1u << v;
        supports.push_back(mask);
    }
    int best = 0;
    for (unsigned sub = 0; sub < (1u << n); ++sub) {
        int size = __builtin_popcount(sub);
        if (size <= best) continue;
        bool independent = true;
        for (unsigned m : supports)
            if ((m & ~sub) == 0) {
                independent = false;
                break;
            }
        if (independent) best = size;
    }
    return best;
}

/// ht(P) = n - dim(k[X]/P); polynomial rings over fields are catenary with
/// equidimensional prime quotients, so the complement formula is exact.
inline int height(const PrimeSpec& P) {
    if (!P.valid()) throw Error("height of an empty prime");
    return static_cast<int>(P.ideal().ring()->nvars()) - krull_dim(P.ideal());
}

/// dim(A_P) = dim(k[X]/I_A) - dim(k[X]/P). Sound when every minimal prime
/// of I_A has the same dimension, which holds for prime or equidimensional
/// relation ideals; principal relation ideals are automatically
/// equidimensional (every minimal prime has height one).
inline int local_dim(const PresentedAlgebra& A, const PrimeSpec& P) {
    if (!same_ring(A.ring(), P.ideal().ring()))
        throw Error("prime does not live in the ambient ring");
    for (const auto& g : A.relations().gens())
        if (!P.ideal().contains(g)) throw Error("containment violated");
    if (!A.relations_equidimensional())
        throw Error("dimension formula requires equidimensional relations");
    return krull_dim(A.relations()) - krull_dim(P.ideal());
}

enum class MuPath { automatic, fast, syzygy };

struct MuResult {
    std::size_t value = 0;
    MuPath path_used = MuPath::fast;
};

namespace localdetail {

/// Rank over the coefficient field of a list of coordinate vectors.
inline std::size_t field_rank(std::vector<std::vector<FieldElement>> rows) {
    std::size_t rank = 0;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0, r0 = 0; c < cols && r0 < rows.size(); ++c) {
        std::size_t pr = rows.size();
        for (std::size_t r = r0; r < rows.size(); ++r)
            if (!rows[r][c].is_zero()) {
                pr = r;
                break;
            }
        if (pr == rows.size()) continue;
        std::swap(rows[r0], rows[pr]);
        FieldElement inv = rows[r0][c].inverse();
        for (std::size_t r = r0 + 1; r < rows.size(); ++r) {
            if (rows[r][c].is_zero()) continue;
            FieldElement f = rows[r][c] * inv;
            for (std::size_t cc = c; cc < cols; ++cc)
                rows[r][cc] -= f * rows[r0][cc];
        }
        ++rank;
        ++r0;
    }
    return rank;
}

/// mu over a maximal prime: dim_k((I+P^2)/P^2) / [kappa(P):k]. Multiplying
/// a generator of I by anything in P lands in P^2, so the image is spanned
/// over k by q_i * s with s running over the standard monomials of P.
inline std::size_t mu_fast(const IdealHandle& I, const PrimeSpec& P) {
    const RingPtr& ring = I.ring();
    std::vector<Monomial> basis_p = standard_monomials(P.ideal().groebner());
    IdealHandle p2 = ideal_power(P.ideal(), 2);
    const GroebnerBasis& gb2 = p2.groebner();
    std::vector<Monomial> basis_p2 = standard_monomials(gb2);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < basis_p2.size(); ++i) index[basis_p2[i].e] = i;

    std::vector<std::vector<FieldElement>> rows;
    for (const auto& q : I.gens())
        for (const auto& s : basis_p) {
            Polynomial v = nf(q * ring->monomial(s, ring->field()->one()), gb2);
            std::vector<FieldElement> row(basis_p2.size(), ring->field()->zero());
            for (const auto& t : v.terms()) {
                auto it = index.find(t.mono.e);
                if (it == index.end()) throw Error("internal: residue outside basis");
                row[it->second] = t.coeff;
            }
            rows.push_back(std::move(row));
        }
    std::size_t rk = field_rank(std::move(rows));
    std::size_t deg = basis_p.size();
    if (deg == 0 || rk % deg != 0) throw Error("internal: rank not divisible by degree");
    return rk / deg;
}

/// mu over any prime: (I+P^2)/P^2 is presented by the syzygies of the
/// concatenated generators (q | g of P^2) projected to the q-coordinates;
/// its generic rank over kappa(P) is m - rank of that projection, and
/// localization at P is exact, so this is the localized dimension.
inline std::size_t mu_syzygy(const IdealHandle& I, const PrimeSpec& P) {
    const RingPtr& ring = I.ring();
    std::vector<Polynomial> gens = I.gens();
    std::size_t m = gens.size();
    if (m == 0) return 0;
    IdealHandle p2 = ideal_power(P.ideal(), 2);
    for (const auto& g : p2.gens()) gens.push_back(g);
    std::vector<ModuleVector> syz = syzygies(ring, gens, MonomialOrder::grevlex());
    std::vector<std::vector<Polynomial>> rel;
    for (const auto& s : syz) {
        std::vector<Polynomial> row;
        for (std::size_t i = 0; i < m; ++i) row.push_back(s.coords[i]);
        rel.push_back(std::move(row));
    }
    if (rel.empty()) return m;
    return m - kappa_rank(ResidueContext(P), std::move(rel));
}

} // namespace localdetail

/// dim over kappa(P) of the image of I in (P/P^2) localized at P. The path
/// is chosen by maximality of P unless forced.
inline MuResult mu_image_rank_detail(const IdealHandle& I, const PrimeSpec& P,
                                     MuPath force = MuPath::automatic) {
    require_same_context(I, P.ideal());
    for (const auto& q : I.gens())
        if (!P.ideal().contains(q)) throw Error("containment violated");
    bool maximal = is_zero_dimensional(P.ideal().groebner());
    MuPath path = force;
    if (path == MuPath::automatic) path = maximal ? MuPath::fast : MuPath::syzygy;
    if (path == MuPath::fast && !maximal)
        throw Error("fast path requires a maximal prime");
    MuResult out;
    out.path_used = path;
    out.value = path == MuPath::fast ? localdetail::mu_fast(I, P)
                                     : localdetail::mu_syzygy(I, P);
    return out;
}

inline std::size_t mu_image_rank(const IdealHandle& I, const PrimeSpec& P,
                                 MuPath force = MuPath::automatic) {
    return mu_image_rank_detail(I, P, force).value;
}

/// edim(A_P) = ht(P) - mu(I_A, P): the ambient localization k[X]_P is
/// regular with embedding dimension ht(P), and passing to the quotient by
/// I_A removes exactly the image rank of I_A in P/P^2.
inline int edim_local(const PresentedAlgebra& A, const PrimeSpec& P,
                      MuPath force = MuPath::automatic) {
    if (!same_ring(A.ring(), P.ideal().ring()))
        throw Error("prime does not live in the ambient ring");
    return height(P) -
           static_cast<int>(mu_image_rank(A.relations(), P, force));
}

/// mu of the extension I*C inside P/P^2 of the quotient by C's relations:
/// quotienting P/P^2 by the image of the relations subtracts ranks.
inline std::size_t mu_relative(const PresentedAlgebra& C, const PrimeSpec& P,
                               const IdealHandle& I, MuPath force = MuPath::automatic) {
    require_same_context(I, C.relations());
    std::size_t with = mu_image_rank(ideal_sum(I, C.relations()), P, force);
    std::size_t base = mu_image_rank(C.relations(), P, force);
    return with - base;
}

inline int cdim_local(const PresentedAlgebra& A, const PrimeSpec& P) {
    return edim_local(A, P) - local_dim(A, P);
}

inline bool is_regular_local(const PresentedAlgebra& A, const PrimeSpec& P) {
    return cdim_local(A, P) == 0;
}

/// Everything at once, with the algorithm path recorded.
struct LocalReport {
    std::string prime;             // printable generator list
    int dim_ambient_quotient = 0;  // dim k[X]/I_A
    int height_p = 0;              // ht(P) in the ambient polynomial ring
    int dim_local = 0;             // dim(A_P)
    std::size_t mu = 0;            // mu(I_A, P)
    int edim = 0;
    int cdim = 0;
    std::string mu_path;           // "maximal-fast-path" | "general-syzygy-path"
};

inline LocalReport local_report(const PresentedAlgebra& A, const PrimeSpec& P) {
    LocalReport r;
    std::string ps;
    for (const auto& g : P.ideal().gens()) {
        if (!ps.empty()) ps += ", ";
        ps += g.str();
    }
    r.prime = "(" + ps + ")";
    r.dim_ambient_quotient = krull_dim(A.relations());
    r.height_p = height(P);
    r.dim_local = local_dim(A, P);
    MuResult mu = mu_image_rank_detail(A.relations(), P);
    r.mu = mu.value;
    r.mu_path = mu.path_used == MuPath::fast ? "maximal-fast-path" : "general-syzygy-path";
    r.edim = r.height_p - static_cast<int>(r.mu);
    r.cdim = r.edim - r.dim_local;
    if (r.cdim < 0) throw Error("internal: negative codimension");
    return r;
}

} // namespace specchain

#endif
