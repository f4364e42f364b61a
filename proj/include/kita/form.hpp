#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "algebra.hpp"

namespace kita {

/// Bilinear form on an algebra, stored as the Gram matrix over its basis:
/// gram[i][j] = <b_i, b_j>.
struct BilinearForm {
    Mat gram;
};

struct FormPredicates {
    bool associative = false;
    bool symmetric = false;
    bool nondegenerate = false;
};

inline FormPredicates form_predicates(const BilinearForm& form, const Algebra& A) {
    const FieldSpec* f = A.field();
    const std::size_t d = A.dim();
    FormPredicates out;
    out.symmetric = (form.gram == form.gram.transpose());
    out.nondegenerate = form.gram.inverse().has_value();
    out.associative = true;
    for (std::size_t i = 0; i < d && out.associative; ++i)
        for (std::size_t j = 0; j < d && out.associative; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                FieldSpec::value_type lhs = 0, rhs = 0;
                for (const auto& e : A.basis_product(i, j))
                    lhs = f->add(lhs, f->mul(e.second, form.gram.at(e.first, k)));
                for (const auto& e : A.basis_product(j, k))
                    rhs = f->add(rhs, f->mul(e.second, form.gram.at(i, e.first)));
                if (lhs != rhs) {
                    out.associative = false;
                    break;
                }
            }
    return out;
}

/// Frobenius form from the socle functional: psi(b) = 1 for the stored socle
/// basis elements and 0 on the rest of the basis, <x,y> = psi(x*y). The
/// builder guarantees the basis contains a socle basis. Associativity is
/// automatic; nondegeneracy holds exactly for selfinjective algebras and is
/// verified here.
inline BilinearForm socle_form(const Algebra& A) {
    const FieldSpec* f = A.field();
    const std::size_t d = A.dim();
    if (A.meta().socle_basis.empty())
        throw SoclePathFailure("socle_form needs socle basis metadata from a presentation builder");
    std::vector<bool> in_socle(d, false);
    for (auto i : A.meta().socle_basis) in_socle[i] = true;
    Mat gram(f, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            FieldSpec::value_type acc = 0;
            for (const auto& e : A.basis_product(i, j))
                if (in_socle[e.first]) acc = f->add(acc, e.second);
            gram.at(i, j) = acc;
        }
    if (!gram.inverse())
        throw DegenerateForm("socle form is degenerate; the algebra is not selfinjective "
                             "or the basis is unsuitable");
    return {std::move(gram)};
}

/// The unique linear map nu with <a,b> = <b,nu(a)> for all a, b;
/// nu = gram^{-1} gram^T. Verified to be an algebra automorphism fixing the
/// unit. For a symmetric form this is the identity.
inline Mat nakayama(const BilinearForm& form, const Algebra& A) {
    const FieldSpec* f = A.field();
    const std::size_t d = A.dim();
    auto ginv = form.gram.inverse();
    if (!ginv) throw SingularGram("Nakayama automorphism needs a nondegenerate form");
    Mat nu = (*ginv) * form.gram.transpose();
    // multiplicativity on all basis pairs
    std::vector<Vec> images(d);
    for (std::size_t i = 0; i < d; ++i) images[i] = nu.apply(A.basis_element(i));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec lhs(d, 0);
            for (const auto& e : A.basis_product(i, j))
                vec_add_scaled(f, lhs, nu.apply(A.basis_element(e.first)), e.second);
            if (lhs != A.multiply(images[i], images[j]))
                throw NotMultiplicative("candidate Nakayama map is not an algebra homomorphism; "
                                        "the form is not associative");
        }
    if (nu.apply(A.unit()) != A.unit())
        throw NotMultiplicative("candidate Nakayama map does not fix the unit");
    return nu;
}

/// Twisted centre {a : b a = a nu(b) for all b}.
inline Subspace twisted_center(const Algebra& A, const Mat& nu) {
    const std::size_t d = A.dim();
    std::vector<Vec> nu_basis(d);
    for (std::size_t i = 0; i < d; ++i) nu_basis[i] = nu.apply(A.basis_element(i));
    return iterated_kernel(A.field(), d, d, [&](std::size_t i, const Vec& x) {
        Vec l = A.multiply(A.basis_element(i), x);
        Vec r = A.multiply(x, nu_basis[i]);
        for (std::size_t k = 0; k < d; ++k) l[k] = A.field()->sub(l[k], r[k]);
        return l;
    });
}

/// Search for a symmetric associative nondegenerate form.
///
/// Every associative form on A is <x,y> = phi(x*y) for a linear functional
/// phi, and it is symmetric exactly when phi kills [A,A]. The solution space
/// of admissible functionals is therefore the annihilator of the commutator
/// space; the search looks for a member whose Gram matrix is invertible.
/// When the solution space has at most 2^20 elements it is enumerated
/// exhaustively, so a negative answer is a certificate that no symmetric
/// form exists. Larger spaces get seeded random probing only, whose failure
/// is reported as inconclusive, never as a certificate.
struct SymmetricFormSearch {
    enum class Outcome { witness, not_symmetric, inconclusive };
    Outcome outcome = Outcome::inconclusive;
    BilinearForm form;       // valid when outcome == witness
    Vec functional;          // phi of the witness
    Mat solution_basis;      // rows span the admissible functionals
    std::size_t trials = 0;
};

inline SymmetricFormSearch find_symmetric_form(const Algebra& A, std::uint64_t seed = 0x5eedcafe) {
    const FieldSpec* f = A.field();
    const std::size_t d = A.dim();
    const std::uint64_t q = f->size();
    SymmetricFormSearch res;

    Subspace comm = commutator_space(A);
    Subspace space = (comm.dim() == 0) ? Subspace::full(f, d) : kernel(comm.basis());
    res.solution_basis = space.basis();
    const std::size_t m = space.dim();
    if (m == 0) {
        res.outcome = SymmetricFormSearch::Outcome::not_symmetric;
        return res;
    }

    auto gram_of = [&](const Vec& phi) {
        Mat g(f, d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                FieldSpec::value_type acc = 0;
                for (const auto& e : A.basis_product(i, j))
                    if (phi[e.first]) acc = f->add(acc, f->mul(e.second, phi[e.first]));
                g.at(i, j) = acc;
            }
        return g;
    };
    auto try_coeffs = [&](const Vec& t) -> bool {
        Vec phi(d, 0);
        for (std::size_t r = 0; r < m; ++r) vec_add_scaled(f, phi, space.basis().row(r), t[r]);
        if (vec_is_zero(phi)) return false;
        ++res.trials;
        Mat g = gram_of(phi);
        if (!g.inverse()) return false;
        res.outcome = SymmetricFormSearch::Outcome::witness;
        res.form = {std::move(g)};
        res.functional = std::move(phi);
        return true;
    };

    // quick probes: all-ones, unit vectors, then seeded pseudo-random tuples
    if (try_coeffs(Vec(m, 1))) return res;
    for (std::size_t r = 0; r < m; ++r)
        if (try_coeffs(vec_unit(m, r))) return res;
    std::mt19937_64 rng(seed);
    bool small = true;
    {
        long double total = 1;
        for (std::size_t r = 0; r < m; ++r) {
            total *= static_cast<long double>(q);
            if (total > (1 << 20)) {
                small = false;
                break;
            }
        }
    }
    const std::size_t random_budget = small ? 256 : 10000;
    for (std::size_t it = 0; it < random_budget; ++it) {
        Vec t(m);
        for (auto& x : t) x = FieldSpec::value_type(rng() % q);
        if (try_coeffs(t)) return res;
    }
    if (!small) {
        res.outcome = SymmetricFormSearch::Outcome::inconclusive;
        return res;
    }
    // exhaustive odometer over the solution space
    Vec t(m, 0);
    for (;;) {
        if (try_coeffs(t)) return res;
        std::size_t pos = 0;
        while (pos < m) {
            if (++t[pos] < q) break;
            t[pos] = 0;
            ++pos;
        }
        if (pos == m) break;
    }
    res.outcome = SymmetricFormSearch::Outcome::not_symmetric;
    return res;
}

} // namespace kita
