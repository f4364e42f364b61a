#pragma once

#include <vector>

#include "kuelshammer.hpp"

namespace kita {

/// Rank of the Cartan matrix with entries reduced into the base field.
inline std::size_t cartan_rank(const Algebra& A) {
    CartanMatrix C = cartan_matrix(A);
    const FieldSpec* f = A.field();
    Mat M(f, C.size(), C.size());
    for (std::size_t i = 0; i < C.size(); ++i)
        for (std::size_t j = 0; j < C.size(); ++j) M.at(i, j) = f->from_int(C[i][j]);
    return rref(M).rank;
}

/// Trace functionals on A/[A,A]: tau_i(a) is the ordinary trace of left
/// multiplication by a on the projective left module A e_i; the trace kills
/// commutators, so tau_i is well defined on the quotient. Their common kernel
/// is the degree-zero stable Hochschild space.
inline Subspace hh0_stable(const CommutatorQuotient& cq) {
    const Algebra& A = *cq.algebra;
    const FieldSpec* f = A.field();
    const std::size_t d = A.dim();
    const auto& idems = A.meta().vertex_idempotents;
    if (idems.empty())
        throw NoPresentation("stable Hochschild space requires a basic quiver presentation");
    const std::size_t m = cq.dim();
    Mat tau(f, idems.size(), m);
    for (std::size_t v = 0; v < idems.size(); ++v) {
        // basis of A e_v
        std::vector<Vec> rows;
        for (std::size_t k = 0; k < d; ++k) {
            Vec w = A.multiply(A.basis_element(k), A.basis_element(idems[v]));
            if (!vec_is_zero(w)) rows.push_back(std::move(w));
        }
        Subspace P = Subspace::from_vectors(f, rows, d);
        for (std::size_t r = 0; r < m; ++r) {
            const Vec rep = A.basis_element(cq.rep_coords[r]);
            FieldSpec::value_type tr = 0;
            for (std::size_t s = 0; s < P.dim(); ++s) {
                Vec w = A.multiply(rep, P.basis().row(s));
                // read off the coefficient of the s-th basis vector (P is in RREF)
                Vec red = w;
                for (std::size_t u = 0; u < P.dim(); ++u) {
                    auto c = red[P.pivots()[u]];
                    if (u == s) tr = f->add(tr, c);
                    if (c) vec_add_scaled(f, red, P.basis().row(u), f->neg(c));
                }
            }
            tau.at(v, r) = tr;
        }
    }
    return kernel(tau);
}

struct StableInvariants {
    long long cartan_rank_over_K = -1;
    long long dim_Z_pr = -1;
    long long dim_Z_st = -1;
    long long dim_HH0_st = -1;
    long long dim_commutator_quotient = -1;
};

/// Assembles the stable invariants; for symmetric split-basic algebras
/// dim Z^pr = rank_K C_A, and the defining identity
/// dim HH_0^st + rank_K C_A = dim A/[A,A] is enforced as a hard check.
inline StableInvariants stable_invariants(const CommutatorQuotient& cq, std::size_t dim_Z,
                                          bool symmetric) {
    const Algebra& A = *cq.algebra;
    StableInvariants s;
    s.dim_commutator_quotient = (long long)cq.dim();
    s.cartan_rank_over_K = (long long)cartan_rank(A);
    s.dim_HH0_st = (long long)hh0_stable(cq).dim();
    if (A.meta().split_basic && s.dim_HH0_st + s.cartan_rank_over_K != s.dim_commutator_quotient)
        throw Error("stable identity dim HH0_st + rank_K C = dim A/[A,A] fails on " +
                    A.meta().name);
    if (symmetric) {
        s.dim_Z_pr = s.cartan_rank_over_K;
        s.dim_Z_st = (long long)dim_Z - s.dim_Z_pr;
    }
    return s;
}

} // namespace kita
