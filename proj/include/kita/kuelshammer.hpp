#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "form.hpp"

namespace kita {

/// A/[A,A] with a fixed complement: the coset representatives are the basis
/// elements at the non-pivot coordinates of the commutator subspace's RREF.
struct CommutatorQuotient {
    const Algebra* algebra = nullptr;
    Subspace commutator;
    std::vector<std::size_t> rep_coords;

    std::size_t dim() const { return rep_coords.size(); }

    Vec project(const Vec& x) const {
        Vec red = commutator.reduce(x);
        Vec out(rep_coords.size(), 0);
        for (std::size_t r = 0; r < rep_coords.size(); ++r) out[r] = red[rep_coords[r]];
        return out;
    }

    Vec lift(const Vec& qcoords) const {
        Vec x(commutator.ambient(), 0);
        for (std::size_t r = 0; r < rep_coords.size(); ++r) x[rep_coords[r]] = qcoords[r];
        return x;
    }
};

inline CommutatorQuotient commutator_quotient(const Algebra& A) {
    CommutatorQuotient cq;
    cq.algebra = &A;
    cq.commutator = commutator_space(A);
    std::vector<bool> is_pivot(A.dim(), false);
    for (auto p : cq.commutator.pivots()) is_pivot[p] = true;
    for (std::size_t i = 0; i < A.dim(); ++i)
        if (!is_pivot[i]) cq.rep_coords.push_back(i);
    return cq;
}

/// The p-power map on A/[A,A]: a + [A,A] -> a^p + [A,A]; Frobenius-semilinear
/// with twist 1. Well-definedness is a tested property, not an assumption.
inline SemilinearMap mu_map(const CommutatorQuotient& cq) {
    const Algebra& A = *cq.algebra;
    const FieldSpec* f = A.field();
    const std::size_t m = cq.dim();
    Mat M(f, m, m);
    for (std::size_t r = 0; r < m; ++r) {
        Vec img = cq.project(A.power(A.basis_element(cq.rep_coords[r]), f->p()));
        for (std::size_t i = 0; i < m; ++i) M.at(i, r) = img[i];
    }
    return {std::move(M), 1};
}

/// Ascending chain T_0 = [A,A] <= T_1 <= ... where T_n is the preimage of
/// ker(mu^n); stops at the first n with T_n = T_{n+1} (index <= dim A, hard
/// cap 16). spaces.back() is the stabilized TA.
struct TSpaces {
    std::vector<Subspace> spaces; // T_0 .. T_s with T_s stabilized
    std::size_t stabilization_index = 0;
};

inline TSpaces t_spaces(const CommutatorQuotient& cq, std::size_t cap = 16) {
    const Algebra& A = *cq.algebra;
    const FieldSpec* f = A.field();
    const std::size_t d = A.dim();
    SemilinearMap mu = mu_map(cq);
    TSpaces out;

    auto preimage = [&](const Subspace& K) {
        std::vector<Vec> rows;
        for (std::size_t r = 0; r < cq.commutator.dim(); ++r)
            rows.push_back(cq.commutator.basis().row(r));
        for (std::size_t r = 0; r < K.dim(); ++r) rows.push_back(cq.lift(K.basis().row(r)));
        return Subspace::from_vectors(f, rows, d);
    };

    out.spaces.push_back(cq.commutator); // T_0, kernel of mu^0 = id
    SemilinearMap mu_n = mu;
    for (std::size_t n = 1; n <= cap; ++n) {
        Subspace Tn = preimage(semilinear_kernel(mu_n));
        if (Tn == out.spaces.back()) {
            out.stabilization_index = n - 1;
            return out;
        }
        out.spaces.push_back(std::move(Tn));
        mu_n = semilinear_compose(mu_n, mu);
    }
    // ascent is strict until stabilization, so the cap is never the exit on
    // valid input; report the truncation honestly if it ever happens
    out.stabilization_index = cap;
    return out;
}

/// Adjoint zeta of mu with respect to the pairing Z(A) x A/[A,A] -> K induced
/// by restricting a symmetric associative nondegenerate form; twist -1.
/// Satisfies <z, mu(w)> = Frobenius(<zeta(z), w>).
inline SemilinearMap zeta_map(const CommutatorQuotient& cq, const BilinearForm& form,
                              const Subspace& Z) {
    const Algebra& A = *cq.algebra;
    const FieldSpec* f = A.field();
    const std::size_t m = cq.dim();
    if (Z.dim() != m)
        throw NotSymmetric("centre and commutator quotient dimensions differ; the form is not "
                           "symmetric nondegenerate");
    Mat pairing(f, Z.dim(), m);
    for (std::size_t a = 0; a < Z.dim(); ++a) {
        Vec zg = form.gram.transpose().apply(Z.basis().row(a)); // row vector z^T G
        for (std::size_t r = 0; r < m; ++r) pairing.at(a, r) = zg[cq.rep_coords[r]];
    }
    SemilinearMap mu = mu_map(cq);
    return semilinear_adjoint(mu, pairing);
}

/// The tower of Külshammer ideals T_n(A)^perp inside Z(A), computed along two
/// independent routes: orthogonal complements of the T_n under the form, and
/// images of the powers of zeta. Any disagreement is an internal error.
struct KuelshammerTower {
    TSpaces t;                        // T_n as subspaces of A
    std::vector<Subspace> perps;      // T_n^perp as subspaces of A, n = 0..stab
    Subspace center_space;
    Subspace reynolds;                // stabilized term
};

inline KuelshammerTower kuelshammer_ideals(const CommutatorQuotient& cq, const BilinearForm& form,
                                           const Subspace& Z, std::size_t cap = 16) {
    const Algebra& A = *cq.algebra;
    const FieldSpec* f = A.field();
    KuelshammerTower tower;
    tower.center_space = Z;
    tower.t = t_spaces(cq, cap);
    SemilinearMap zeta = zeta_map(cq, form, Z);

    SemilinearMap zeta_n{Mat::identity(f, Z.dim()), 0};
    for (std::size_t n = 0; n < tower.t.spaces.size(); ++n) {
        Subspace route_orth = subspace_intersect(orthogonal(tower.t.spaces[n], form.gram), Z);
        Subspace im = semilinear_image(zeta_n); // in Z-coordinates
        std::vector<Vec> rows;
        for (std::size_t r = 0; r < im.dim(); ++r) {
            Vec x(A.dim(), 0);
            const Vec c = im.basis().row(r);
            for (std::size_t a = 0; a < Z.dim(); ++a) vec_add_scaled(f, x, Z.basis().row(a), c[a]);
            rows.push_back(std::move(x));
        }
        Subspace route_zeta = Subspace::from_vectors(f, rows, A.dim());
        if (route_orth != route_zeta)
            throw RouteMismatch("T_" + std::to_string(n) +
                                "^perp differs between the orthogonal and zeta-image routes");
        tower.perps.push_back(std::move(route_orth));
        zeta_n = semilinear_compose(zeta_n, zeta);
    }
    tower.reynolds = tower.perps.back();
    return tower;
}

/// Reynolds ideal Z(A) ∩ soc(A).
inline Subspace reynolds_ideal(const Subspace& Z, const Subspace& soc) {
    return subspace_intersect(Z, soc);
}

/// Annihilator of a subspace S inside Z: {z in Z : z s = 0 for all s in S}.
/// For central z the left and right conditions agree.
inline Subspace annihilator_in(const Algebra& A, const Subspace& Z, const Subspace& S) {
    const FieldSpec* f = A.field();
    std::vector<Vec> rows;
    // solve within Z-coordinates
    Subspace cand = Subspace::full(f, Z.dim());
    for (std::size_t c = 0; c < S.dim() && cand.dim() > 0; ++c) {
        Mat K(f, A.dim(), cand.dim());
        for (std::size_t a = 0; a < cand.dim(); ++a) {
            Vec z(A.dim(), 0);
            const Vec cs = cand.basis().row(a);
            for (std::size_t r = 0; r < Z.dim(); ++r) vec_add_scaled(f, z, Z.basis().row(r), cs[r]);
            Vec img = A.multiply(z, S.basis().row(c));
            for (std::size_t i = 0; i < A.dim(); ++i) K.at(i, a) = img[i];
        }
        Subspace coeff = kernel(K);
        std::vector<Vec> next;
        for (std::size_t s = 0; s < coeff.dim(); ++s) {
            Vec t(cand.ambient(), 0);
            const Vec cs = coeff.basis().row(s);
            for (std::size_t a = 0; a < cand.dim(); ++a)
                vec_add_scaled(f, t, cand.basis().row(a), cs[a]);
            next.push_back(std::move(t));
        }
        cand = Subspace::from_vectors(f, next, cand.ambient());
    }
    for (std::size_t a = 0; a < cand.dim(); ++a) {
        Vec z(A.dim(), 0);
        const Vec cs = cand.basis().row(a);
        for (std::size_t r = 0; r < Z.dim(); ++r) vec_add_scaled(f, z, Z.basis().row(r), cs[r]);
        rows.push_back(std::move(z));
    }
    return Subspace::from_vectors(f, rows, A.dim());
}

/// Commutative quotient ring Z/I on canonical coset representatives.
/// Returns a zero-dimensional algebra when I = Z (degenerate quotient).
inline Algebra quotient_ring(const Algebra& A, const Subspace& Z, const Subspace& I,
                             const std::string& name = "") {
    const FieldSpec* f = A.field();
    const std::size_t d = A.dim();
    if (!Z.contains(I)) throw NotIdeal("quotient_ring: I is not contained in Z");
    if (!Z.contains(A.unit())) throw NotIdeal("quotient_ring: Z does not contain the unit");
    for (std::size_t a = 0; a < Z.dim(); ++a) {
        for (std::size_t b = 0; b < Z.dim(); ++b)
            if (!Z.contains(A.multiply(Z.basis().row(a), Z.basis().row(b))))
                throw NotIdeal("quotient_ring: Z is not closed under multiplication");
        for (std::size_t b = 0; b < I.dim(); ++b)
            if (!I.contains(A.multiply(Z.basis().row(a), I.basis().row(b))))
                throw NotIdeal("quotient_ring: I is not an ideal of Z");
    }
    // canonical complement: Z basis reduced modulo I
    std::vector<Vec> comp_rows;
    for (std::size_t a = 0; a < Z.dim(); ++a) {
        Vec r = I.reduce(Z.basis().row(a));
        if (!vec_is_zero(r)) comp_rows.push_back(std::move(r));
    }
    Subspace comp = Subspace::from_vectors(f, comp_rows, d);
    const std::size_t qd = comp.dim();
    if (qd != Z.dim() - I.dim()) throw NotIdeal("quotient_ring: complement dimension mismatch");
    if (qd == 0) {
        AlgebraMetadata meta;
        meta.kind = AlgebraMetadata::Kind::adhoc;
        meta.name = name.empty() ? "zero ring" : name;
        return Algebra(f, {}, {}, {}, std::move(meta), false);
    }

    auto to_coords = [&](const Vec& v) {
        Vec red = I.reduce(v);
        Vec y(qd, 0);
        for (std::size_t s = 0; s < qd; ++s) {
            y[s] = red[comp.pivots()[s]];
            if (y[s]) vec_add_scaled(f, red, comp.basis().row(s), f->neg(y[s]));
        }
        if (!vec_is_zero(red)) throw NotIdeal("quotient_ring: element escapes the complement");
        return y;
    };

    Algebra::ProductTable table(qd, std::vector<std::vector<Algebra::Entry>>(qd));
    for (std::size_t a = 0; a < qd; ++a)
        for (std::size_t b = 0; b < qd; ++b) {
            Vec prod = to_coords(A.multiply(comp.basis().row(a), comp.basis().row(b)));
            for (std::size_t k = 0; k < qd; ++k)
                if (prod[k]) table[a][b].push_back({std::uint32_t(k), prod[k]});
        }
    std::vector<std::string> labels;
    for (std::size_t s = 0; s < qd; ++s) labels.push_back("z" + std::to_string(s));
    AlgebraMetadata meta;
    meta.kind = AlgebraMetadata::Kind::adhoc;
    meta.name = name;
    Algebra Q(f, std::move(labels), std::move(table), to_coords(A.unit()), std::move(meta), true);
    if (!Q.is_commutative()) throw NotIdeal("quotient_ring: quotient is not commutative");
    return Q;
}

/// Ring-isomorphism invariants of a finite commutative algebra in
/// characteristic p. The p-power map is additive and semilinear, so the
/// dimensions of its kernel and image (also restricted to rad and rad^2) are
/// preserved by any ring isomorphism.
struct Fingerprint {
    std::vector<long long> values;
    std::vector<std::string> names;

    friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
        return a.values == b.values;
    }
    friend bool operator!=(const Fingerprint& a, const Fingerprint& b) { return !(a == b); }

    /// Index and name of the first differing component, if any.
    std::optional<std::pair<std::size_t, std::string>> first_difference(const Fingerprint& o) const {
        for (std::size_t i = 0; i < std::min(values.size(), o.values.size()); ++i)
            if (values[i] != o.values[i]) return std::make_pair(i, names[i]);
        if (values.size() != o.values.size())
            return std::make_pair(std::min(values.size(), o.values.size()), std::string("chain length"));
        return std::nullopt;
    }
};

inline Fingerprint ring_fingerprint(const Algebra& Q) {
    const FieldSpec* f = Q.field();
    const std::size_t d = Q.dim();
    Fingerprint fp;
    auto push = [&](const std::string& n, long long v) {
        fp.names.push_back(n);
        fp.values.push_back(v);
    };
    push("dim", (long long)d);
    if (d == 0) return fp;
    if (!Q.is_commutative()) throw BadInput("ring_fingerprint expects a commutative algebra");

    Subspace rad = radical(Q);
    std::vector<Subspace> rad_powers{rad};
    while (rad_powers.back().dim() > 0) {
        std::vector<Vec> rows;
        for (std::size_t a = 0; a < rad_powers.back().dim(); ++a)
            for (std::size_t b = 0; b < rad.dim(); ++b)
                rows.push_back(Q.multiply(rad_powers.back().basis().row(a), rad.basis().row(b)));
        rad_powers.push_back(Subspace::from_vectors(f, rows, d));
    }
    for (std::size_t i = 0; i < rad_powers.size(); ++i)
        push("dim rad^" + std::to_string(i + 1), (long long)rad_powers[i].dim());

    auto ppower_dims = [&](const Subspace& S, const std::string& tag) {
        Mat M(f, d, S.dim());
        for (std::size_t a = 0; a < S.dim(); ++a) {
            Vec img = Q.power(S.basis().row(a), f->p());
            for (std::size_t i = 0; i < d; ++i) M.at(i, a) = img[i];
        }
        auto r = rref(M);
        push("p-power kernel dim on " + tag, (long long)(S.dim() - r.rank));
        push("p-power image dim on " + tag, (long long)r.rank);
    };
    ppower_dims(Subspace::full(f, d), "Q");
    ppower_dims(rad, "rad");
    ppower_dims(rad_powers.size() > 1 ? rad_powers[1] : Subspace(f, d), "rad^2");

    long long idem = -1;
    long double total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= (long double)f->size();
    if (total <= 65536.0L) {
        idem = 0;
        const std::uint64_t q = f->size();
        Vec x(d, 0);
        for (;;) {
            if (Q.multiply(x, x) == x) ++idem;
            std::size_t pos = 0;
            while (pos < d) {
                if (++x[pos] < q) break;
                x[pos] = 0;
                ++pos;
            }
            if (pos == d) break;
        }
    }
    push("idempotent count", idem);
    return fp;
}

/// Exact isomorphism decision for small commutative local algebras by
/// backtracking over images of a minimal generating set.
struct IsoSearchResult {
    enum class Outcome { isomorphic, not_isomorphic, bound_exceeded };
    Outcome outcome = Outcome::not_isomorphic;
    Mat witness; // basis-to-basis matrix of the isomorphism when found
};

inline IsoSearchResult iso_search_local(const Algebra& Q1, const Algebra& Q2) {
    const FieldSpec* f = Q1.field();
    const std::size_t d = Q1.dim();
    IsoSearchResult out;
    if (Q2.field() != f) throw FieldMismatch("iso search over different fields");
    if (d != Q2.dim()) return out; // dimensions differ: not isomorphic
    if (d == 0) {
        out.outcome = IsoSearchResult::Outcome::isomorphic;
        out.witness = Mat(f, 0, 0);
        return out;
    }
    if (d > 8 || f->size() > 4)
        throw SearchBoundExceeded("iso search supports dim <= 8 over fields with <= 4 elements");
    if (!Q1.is_commutative() || !Q2.is_commutative())
        throw BadInput("iso search expects commutative algebras");

    Subspace rad1 = radical(Q1), rad2 = radical(Q2);
    if (rad1.dim() != rad2.dim()) return out;
    auto rad_sq = [&](const Algebra& Q, const Subspace& rad) {
        std::vector<Vec> rows;
        for (std::size_t a = 0; a < rad.dim(); ++a)
            for (std::size_t b = 0; b < rad.dim(); ++b)
                rows.push_back(Q.multiply(rad.basis().row(a), rad.basis().row(b)));
        return Subspace::from_vectors(Q.field(), rows, Q.dim());
    };
    Subspace sq1 = rad_sq(Q1, rad1), sq2 = rad_sq(Q2, rad2);
    if (sq1.dim() != sq2.dim()) return out;

    // minimal generators of Q1: lifts of a basis of rad/rad^2
    std::vector<Vec> gens;
    {
        Subspace seen = sq1;
        for (std::size_t a = 0; a < rad1.dim(); ++a) {
            Vec r = rad1.basis().row(a);
            if (!seen.contains(r)) {
                gens.push_back(r);
                seen = subspace_sum(seen, Subspace::from_vectors(f, {r}, d));
            }
        }
    }
    const std::size_t t = gens.size();

    // monomial basis of Q1 as products of generators (BFS by word length)
    std::vector<Vec> mono_elems{Q1.unit()};
    std::vector<std::vector<std::size_t>> mono_words{{}};
    {
        Subspace span = Subspace::from_vectors(f, {Q1.unit()}, d);
        std::size_t head = 0;
        while (span.dim() < d && head < mono_elems.size()) {
            for (std::size_t g = 0; g < t && span.dim() < d; ++g) {
                Vec prod = Q1.multiply(mono_elems[head], gens[g]);
                if (!span.contains(prod)) {
                    span = subspace_sum(span, Subspace::from_vectors(f, {prod}, d));
                    auto w = mono_words[head];
                    w.push_back(g);
                    mono_elems.push_back(prod);
                    mono_words.push_back(std::move(w));
                }
            }
            ++head;
        }
        if (span.dim() < d)
            throw SearchBoundExceeded("iso search: algebra is not generated by 1 and its radical "
                                      "(non-split residue field)");
    }
    Mat mono_mat = Mat::from_rows(f, mono_elems, d); // rows: monomials in Q1 coords
    auto mono_inv = mono_mat.transpose().inverse();
    if (!mono_inv) throw BadInput("iso search: monomial basis is degenerate");

    // candidate images: elements of rad2 \ rad2^2, with matching nilpotency index
    auto nil_index = [&](const Algebra& Q, const Vec& x) {
        Vec cur = x;
        std::size_t n = 1;
        while (!vec_is_zero(cur) && n <= Q.dim() + 1) {
            cur = Q.multiply(cur, x);
            ++n;
        }
        return n;
    };
    std::vector<Vec> level1;
    {
        const std::uint64_t q = f->size();
        Vec c(rad2.dim(), 0);
        for (;;) {
            Vec x(d, 0);
            for (std::size_t a = 0; a < rad2.dim(); ++a)
                vec_add_scaled(f, x, rad2.basis().row(a), c[a]);
            if (!vec_is_zero(x) && !sq2.contains(x)) level1.push_back(x);
            std::size_t pos = 0;
            while (pos < rad2.dim()) {
                if (++c[pos] < q) break;
                c[pos] = 0;
                ++pos;
            }
            if (pos == rad2.dim()) break;
        }
    }
    std::vector<std::vector<Vec>> candidates(t);
    for (std::size_t g = 0; g < t; ++g) {
        std::size_t want = nil_index(Q1, gens[g]);
        for (const auto& y : level1)
            if (nil_index(Q2, y) == want) candidates[g].push_back(y);
        if (candidates[g].empty()) return out; // no possible image
    }

    long long budget = 1000000;
    std::vector<Vec> images(t);
    std::vector<Vec> chosen_mod_sq; // for the independence prune

    std::function<bool(std::size_t)> assign = [&](std::size_t g) -> bool {
        if (g == t) {
            // build the linear map and verify it is a ring isomorphism
            std::vector<Vec> img_rows;
            for (std::size_t mI = 0; mI < mono_elems.size(); ++mI) {
                Vec y = Q2.unit();
                for (auto gi : mono_words[mI]) y = Q2.multiply(y, images[gi]);
                img_rows.push_back(std::move(y));
            }
            Mat img_mat = Mat::from_rows(f, img_rows, d);
            Mat phi = img_mat.transpose() * (*mono_inv); // std coords -> std coords
            if (!phi.inverse()) return false;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    Vec lhs = phi.apply(Q1.multiply(Q1.basis_element(i), Q1.basis_element(j)));
                    Vec rhs = Q2.multiply(phi.apply(Q1.basis_element(i)), phi.apply(Q1.basis_element(j)));
                    if (lhs != rhs) return false;
                }
            out.outcome = IsoSearchResult::Outcome::isomorphic;
            out.witness = phi;
            return true;
        }
        for (const auto& y : candidates[g]) {
            if (--budget < 0) throw SearchBoundExceeded("iso search budget exhausted");
            // images must stay independent modulo rad^2
            Subspace test = sq2;
            bool indep = true;
            for (const auto& prev : chosen_mod_sq)
                test = subspace_sum(test, Subspace::from_vectors(f, {prev}, d));
            if (test.contains(y)) indep = false;
            if (!indep) continue;
            images[g] = y;
            chosen_mod_sq.push_back(y);
            if (assign(g + 1)) return true;
            chosen_mod_sq.pop_back();
        }
        return false;
    };
    assign(0);
    return out;
}

} // namespace kita
