#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace kita {

/// Per-basis-element path data for algebras built from a quiver presentation.
struct PathInfo {
    int source = -1;
    int target = -1;
    std::vector<int> arrows; // arrow indices, composed left to right
    std::size_t length() const { return arrows.size(); }
};

struct AlgebraMetadata {
    enum class Kind { adhoc, quiver, group, trivial_extension };
    Kind kind = Kind::adhoc;
    std::string name;
    std::vector<std::size_t> vertex_idempotents; // basis indices of the trivial paths
    bool arrow_ideal_radical = false;            // admissible quiver quotient: rad = span of positive-length basis
    std::vector<std::size_t> socle_basis;        // basis indices spanning soc(A)
    std::vector<PathInfo> paths;                 // per basis element (quiver kind)
    bool split_basic = false;                    // all simples one-dimensional over the base field
    std::string cartan_convention = "C[i][j] = dim e_j*A*e_i";
};

/// Finite-dimensional unital associative algebra given by a labeled basis and
/// sparse structure constants. Associativity and the unit law are verified at
/// construction; invalid input is rejected.
class Algebra {
public:
    using value_type = FieldSpec::value_type;
    using Entry = std::pair<std::uint32_t, value_type>; // (basis index, coefficient)
    using ProductTable = std::vector<std::vector<std::vector<Entry>>>;

    Algebra() = default;

    Algebra(const FieldSpec* f, std::vector<std::string> labels, ProductTable table, Vec unit,
            AlgebraMetadata meta = {}, bool validate = true)
        : f_(f), dim_(labels.size()), labels_(std::move(labels)), table_(std::move(table)),
          unit_(std::move(unit)), meta_(std::move(meta)), cache_(std::make_shared<Cache>()) {
        if (validate) validate_structure();
    }

    /// From a sparse list of (i, j, k, c) meaning b_i b_j contains c b_k.
    static Algebra from_structure(const FieldSpec* f, std::size_t dim, std::vector<std::string> labels,
                                  const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, value_type>>& structure,
                                  Vec unit, AlgebraMetadata meta = {}, bool validate = true) {
        ProductTable table(dim, std::vector<std::vector<Entry>>(dim));
        for (const auto& [i, j, k, c] : structure) {
            if (i >= dim || j >= dim || k >= dim)
                throw InvalidAlgebra("structure constant index out of range");
            if (c == 0) continue;
            auto& cell = table[i][j];
            bool merged = false;
            for (auto& e : cell)
                if (e.first == k) {
                    e.second = f->add(e.second, c);
                    merged = true;
                    break;
                }
            if (!merged) cell.push_back({std::uint32_t(k), c});
        }
        for (auto& row : table)
            for (auto& cell : row) {
                std::sort(cell.begin(), cell.end(),
                          [](const Entry& a, const Entry& b) { return a.first < b.first; });
                cell.erase(std::remove_if(cell.begin(), cell.end(),
                                          [](const Entry& e) { return e.second == 0; }),
                           cell.end());
            }
        if (labels.empty())
            for (std::size_t i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i));
        return Algebra(f, std::move(labels), std::move(table), std::move(unit), std::move(meta), validate);
    }

    const FieldSpec* field() const { return f_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Vec& unit() const { return unit_; }
    const AlgebraMetadata& meta() const { return meta_; }
    AlgebraMetadata& meta() { return meta_; }
    const std::vector<Entry>& basis_product(std::size_t i, std::size_t j) const { return table_[i][j]; }
    const ProductTable& table() const { return table_; }

    Vec multiply(const Vec& a, const Vec& b) const {
        Vec r(dim_, 0);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (!b[j]) continue;
                auto c = f_->mul(a[i], b[j]);
                for (const auto& e : table_[i][j])
                    r[e.first] = f_->add(r[e.first], f_->mul(c, e.second));
            }
        }
        return r;
    }

    Vec power(const Vec& a, std::uint64_t n) const {
        Vec acc = unit_, base = a;
        while (n) {
            if (n & 1) acc = multiply(acc, base);
            base = multiply(base, base);
            n >>= 1;
        }
        return acc;
    }

    /// Matrix of x -> a*x on the basis.
    Mat left_matrix(const Vec& a) const {
        Mat m(f_, dim_, dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                for (const auto& e : table_[i][j])
                    m.at(e.first, j) = f_->add(m.at(e.first, j), f_->mul(a[i], e.second));
        }
        return m;
    }

    /// Matrix of x -> x*a on the basis.
    Mat right_matrix(const Vec& a) const {
        Mat m(f_, dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            if (!a[j]) continue;
            for (std::size_t i = 0; i < dim_; ++i)
                for (const auto& e : table_[i][j])
                    m.at(e.first, i) = f_->add(m.at(e.first, i), f_->mul(a[j], e.second));
        }
        return m;
    }

    /// Trace of left multiplication by a on the regular module.
    value_type regular_trace(const Vec& a) const {
        const Vec& t = trace_vector();
        return vec_dot(f_, a, t);
    }

    Vec basis_element(std::size_t i) const { return vec_unit(dim_, i); }

    bool is_commutative() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                if (table_[i][j] != table_[j][i]) return false;
        return true;
    }

private:
    struct Cache {
        std::mutex mx;
        Vec trace_vec;
        bool trace_done = false;
    };

    const Vec& trace_vector() const {
        std::lock_guard<std::mutex> lock(cache_->mx);
        if (!cache_->trace_done) {
            Vec t(dim_, 0);
            for (std::size_t m = 0; m < dim_; ++m) {
                value_type acc = 0;
                for (std::size_t j = 0; j < dim_; ++j)
                    for (const auto& e : table_[m][j])
                        if (e.first == j) acc = f_->add(acc, e.second);
                t[m] = acc;
            }
            cache_->trace_vec = std::move(t);
            cache_->trace_done = true;
        }
        return cache_->trace_vec;
    }

    void validate_structure() const {
        if (dim_ == 0) return; // zero ring, used for degenerate quotients
        if (table_.size() != dim_ || unit_.size() != dim_)
            throw InvalidAlgebra("structure table / unit size mismatch");
        for (const auto& row : table_)
            if (row.size() != dim_) throw InvalidAlgebra("structure table is not square");
        // unit law
        for (std::size_t i = 0; i < dim_; ++i) {
            if (multiply(unit_, basis_element(i)) != basis_element(i) ||
                multiply(basis_element(i), unit_) != basis_element(i))
                throw InvalidAlgebra("unit law fails on basis element " + std::to_string(i));
        }
        // associativity on all basis triples, sparse accumulation
        Vec scratch(dim_, 0);
        std::vector<std::uint32_t> touched;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k) {
                    for (const auto& e : table_[i][j])
                        for (const auto& g : table_[e.first][k]) {
                            if (!scratch[g.first]) touched.push_back(g.first);
                            scratch[g.first] = f_->add(scratch[g.first], f_->mul(e.second, g.second));
                        }
                    for (const auto& e : table_[j][k])
                        for (const auto& g : table_[i][e.first]) {
                            if (!scratch[g.first]) touched.push_back(g.first);
                            scratch[g.first] = f_->sub(scratch[g.first], f_->mul(e.second, g.second));
                        }
                    bool ok = true;
                    for (auto t : touched) {
                        if (scratch[t]) ok = false;
                        scratch[t] = 0;
                    }
                    touched.clear();
                    if (!ok)
                        throw InvalidAlgebra("associativity fails on basis triple (" + std::to_string(i) +
                                             "," + std::to_string(j) + "," + std::to_string(k) + ")");
                }
    }

    const FieldSpec* f_ = nullptr;
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    ProductTable table_;
    Vec unit_;
    AlgebraMetadata meta_;
    std::shared_ptr<Cache> cache_;
};

/// Span of all b_i b_j - b_j b_i.
inline Subspace commutator_space(const Algebra& A) {
    const std::size_t d = A.dim();
    std::vector<Vec> rows;
    rows.reserve(d * (d - 1) / 2);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Vec v(d, 0);
            for (const auto& e : A.basis_product(i, j)) v[e.first] = e.second;
            for (const auto& e : A.basis_product(j, i))
                v[e.first] = A.field()->sub(v[e.first], e.second);
            if (!vec_is_zero(v)) rows.push_back(std::move(v));
        }
    return Subspace::from_vectors(A.field(), rows, d);
}

/// Intersection of the kernels of a family of linear maps K^ambient -> K^m,
/// computed by shrinking a candidate subspace one constraint at a time.
template <class MapFn>
Subspace iterated_kernel(const FieldSpec* f, std::size_t ambient, std::size_t n_constraints,
                         MapFn&& apply_constraint) {
    Subspace cand = Subspace::full(f, ambient);
    for (std::size_t c = 0; c < n_constraints && cand.dim() > 0; ++c) {
        std::vector<Vec> images(cand.dim());
        std::size_t im_dim = 0;
        for (std::size_t a = 0; a < cand.dim(); ++a) {
            images[a] = apply_constraint(c, cand.basis().row(a));
            im_dim = std::max(im_dim, images[a].size());
        }
        Mat K(f, im_dim, cand.dim());
        for (std::size_t a = 0; a < cand.dim(); ++a)
            for (std::size_t r = 0; r < images[a].size(); ++r) K.at(r, a) = images[a][r];
        Subspace coeffs = kernel(K);
        if (coeffs.dim() == cand.dim()) continue; // constraint already satisfied
        std::vector<Vec> rows;
        for (std::size_t s = 0; s < coeffs.dim(); ++s) {
            Vec x(ambient, 0);
            const Vec cs = coeffs.basis().row(s);
            for (std::size_t a = 0; a < cand.dim(); ++a)
                vec_add_scaled(f, x, cand.basis().row(a), cs[a]);
            rows.push_back(std::move(x));
        }
        cand = Subspace::from_vectors(f, rows, ambient);
    }
    return cand;
}

/// Centre {z : z b_i = b_i z for all i}, as the common kernel of the
/// operators L_{b_i} - R_{b_i}.
inline Subspace center(const Algebra& A) {
    const std::size_t d = A.dim();
    return iterated_kernel(A.field(), d, d, [&](std::size_t i, const Vec& x) {
        Vec l = A.multiply(A.basis_element(i), x);
        Vec r = A.multiply(x, A.basis_element(i));
        for (std::size_t k = 0; k < d; ++k) l[k] = A.field()->sub(l[k], r[k]);
        return l;
    });
}

namespace detail {

/// Coefficients of det(lambda I - M), leading coefficient first
/// (Berkowitz, division free).
inline std::vector<FieldSpec::value_type> char_poly(const Mat& M) {
    const FieldSpec* f = M.field();
    const std::size_t n = M.rows();
    std::vector<FieldSpec::value_type> vect{1};
    if (n == 0) return vect;
    vect = {1, f->neg(M.at(0, 0))};
    for (std::size_t i = 1; i < n; ++i) {
        // Toeplitz column for the (i+1) x (i+1) leading block
        std::vector<FieldSpec::value_type> t{1, f->neg(M.at(i, i))};
        Vec v(i);
        for (std::size_t r = 0; r < i; ++r) v[r] = M.at(r, i);
        for (std::size_t k = 2; k <= i + 1; ++k) {
            FieldSpec::value_type dot = 0;
            for (std::size_t c = 0; c < i; ++c)
                if (M.at(i, c) && v[c]) dot = f->add(dot, f->mul(M.at(i, c), v[c]));
            t.push_back(f->neg(dot));
            if (k <= i) {
                Vec nv(i, 0);
                for (std::size_t r = 0; r < i; ++r) {
                    FieldSpec::value_type acc = 0;
                    for (std::size_t c = 0; c < i; ++c)
                        if (M.at(r, c) && v[c]) acc = f->add(acc, f->mul(M.at(r, c), v[c]));
                    nv[r] = acc;
                }
                v = std::move(nv);
            }
        }
        std::vector<FieldSpec::value_type> next(i + 2, 0);
        for (std::size_t j = 0; j < next.size(); ++j)
            for (std::size_t k = 0; k < t.size() && k <= j; ++k)
                if (j - k < vect.size() && t[k] && vect[j - k])
                    next[j] = f->add(next[j], f->mul(t[k], vect[j - k]));
        vect = std::move(next);
    }
    return vect;
}

/// Radical by the characteristic-p chain of semilinear characteristic-coefficient
/// forms: A_0 = A, A_{j+1} = {x in A_j : c_{p^j}(L(x y)) = 0 for all y in A_j},
/// where c_m is the degree-m characteristic coefficient of the regular
/// representation. After l+1 steps with p^l <= dim < p^{l+1} the chain reaches
/// the Jacobson radical. Intended for small unpresented algebras; quiver
/// quotients take the arrow-ideal fast path.
inline Subspace radical_chain(const Algebra& A) {
    const FieldSpec* f = A.field();
    const std::size_t d = A.dim();
    const std::uint64_t p = f->p();
    Subspace current = Subspace::full(f, d);
    unsigned l = 0;
    {
        std::uint64_t pw = p;
        while (pw <= d) {
            ++l;
            pw *= p;
        }
    }
    std::uint64_t pj = 1; // p^j
    for (unsigned j = 0; j <= l; ++j) {
        const std::size_t k = current.dim();
        if (k == 0) break;
        Mat F(f, k, k);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) {
                Vec prod = A.multiply(current.basis().row(a), current.basis().row(b));
                auto cp = char_poly(A.left_matrix(prod));
                F.at(a, b) = (pj < cp.size()) ? cp[pj] : 0;
            }
        // x = sum alpha_a x_a lies in the next term iff frob^j(alpha)^T F = 0
        auto ker = kernel(F.transpose());
        std::vector<Vec> rows;
        for (std::size_t r = 0; r < ker.dim(); ++r) {
            Vec beta = ker.basis().row(r);
            Vec alpha(k);
            for (std::size_t a = 0; a < k; ++a) alpha[a] = f->frobenius(beta[a], -long(j));
            Vec x(d, 0);
            for (std::size_t a = 0; a < k; ++a)
                vec_add_scaled(f, x, current.basis().row(a), alpha[a]);
            rows.push_back(std::move(x));
        }
        current = Subspace::from_vectors(f, rows, d);
        pj *= p;
    }
    return current;
}

} // namespace detail

/// Quotient of A by a two-sided ideal I; coset representatives are the
/// coordinates missed by the pivots of I.
inline Algebra quotient_by_ideal(const Algebra& A, const Subspace& I, bool validate = true,
                                 const std::string& name = "") {
    const FieldSpec* f = A.field();
    const std::size_t d = A.dim();
    std::vector<bool> is_pivot(d, false);
    for (auto p : I.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < d; ++i)
        if (!is_pivot[i]) reps.push_back(i);
    const std::size_t q = reps.size();
    std::vector<std::size_t> rep_pos(d, SIZE_MAX);
    for (std::size_t r = 0; r < q; ++r) rep_pos[reps[r]] = r;

    auto project = [&](const Vec& v) {
        Vec red = I.reduce(v);
        Vec out(q, 0);
        for (std::size_t i = 0; i < d; ++i)
            if (red[i]) out[rep_pos[i]] = red[i];
        return out;
    };

    Algebra::ProductTable table(q, std::vector<std::vector<Algebra::Entry>>(q));
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) {
            Vec prod = project(A.multiply(A.basis_element(reps[a]), A.basis_element(reps[b])));
            for (std::size_t k = 0; k < q; ++k)
                if (prod[k]) table[a][b].push_back({std::uint32_t(k), prod[k]});
        }
    std::vector<std::string> labels;
    for (auto r : reps) labels.push_back(A.labels()[r]);
    AlgebraMetadata meta;
    meta.kind = AlgebraMetadata::Kind::adhoc;
    meta.name = name.empty() ? A.meta().name + "/I" : name;
    return Algebra(f, std::move(labels), std::move(table), project(A.unit()), std::move(meta), validate);
}

/// Jacobson radical. Admissible quiver quotients use the arrow ideal; other
/// algebras run the characteristic-p chain, and the result is validated as a
/// nilpotent ideal with semisimple quotient.
inline Subspace radical(const Algebra& A) {
    const FieldSpec* f = A.field();
    const std::size_t d = A.dim();
    if (A.meta().arrow_ideal_radical) {
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < d; ++i)
            if (A.meta().paths[i].length() > 0) rows.push_back(vec_unit(d, i));
        return Subspace::from_vectors(f, rows, d);
    }
    Subspace rad = detail::radical_chain(A);
    // validation: two-sided ideal
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t r = 0; r < rad.dim(); ++r) {
            if (!rad.contains(A.multiply(A.basis_element(i), rad.basis().row(r))) ||
                !rad.contains(A.multiply(rad.basis().row(r), A.basis_element(i))))
                throw RadicalFailure("radical candidate is not a two-sided ideal");
        }
    // validation: nilpotent
    Subspace power = rad;
    for (std::size_t step = 0; step <= d && power.dim() > 0; ++step) {
        std::vector<Vec> rows;
        for (std::size_t a = 0; a < power.dim(); ++a)
            for (std::size_t b = 0; b < rad.dim(); ++b)
                rows.push_back(A.multiply(power.basis().row(a), rad.basis().row(b)));
        Subspace next = Subspace::from_vectors(f, rows, d);
        if (next.dim() == power.dim())
            throw RadicalFailure("radical candidate is not nilpotent");
        power = next;
    }
    // validation: semisimple quotient (its own chain must vanish)
    if (rad.dim() < d) {
        Algebra Q = quotient_by_ideal(A, rad, false);
        if (detail::radical_chain(Q).dim() != 0)
            throw RadicalFailure("quotient by radical candidate has nonzero radical");
    }
    return rad;
}

/// Two-sided annihilator of a subspace: {x : x s = 0 and s x = 0 for all s in S}.
inline Subspace annihilator_two_sided(const Algebra& A, const Subspace& S) {
    const std::size_t d = A.dim();
    return iterated_kernel(A.field(), d, 2 * S.dim(), [&](std::size_t c, const Vec& x) {
        const Vec s = S.basis().row(c / 2);
        return (c % 2 == 0) ? A.multiply(x, s) : A.multiply(s, x);
    });
}

/// Two-sided annihilator of the radical.
inline Subspace socle(const Algebra& A) {
    Subspace rad = radical(A);
    if (rad.dim() == 0) return Subspace::full(A.field(), A.dim());
    return annihilator_two_sided(A, rad);
}

using CartanMatrix = std::vector<std::vector<long long>>;

/// C[i][j] = dim e_j A e_i over the vertex idempotents of a basic presentation.
/// Only the rank over K is consumed downstream; the row/column convention is
/// recorded in the metadata.
inline CartanMatrix cartan_matrix(const Algebra& A) {
    const auto& idems = A.meta().vertex_idempotents;
    if (idems.empty())
        throw NoPresentation("Cartan matrix requires a basic quiver presentation");
    const std::size_t n = idems.size();
    const std::size_t d = A.dim();
    CartanMatrix C(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Vec> rows;
            for (std::size_t k = 0; k < d; ++k) {
                Vec v = A.multiply(A.basis_element(idems[j]),
                                   A.multiply(A.basis_element(k), A.basis_element(idems[i])));
                if (!vec_is_zero(v)) rows.push_back(std::move(v));
            }
            C[i][j] = static_cast<long long>(Subspace::from_vectors(A.field(), rows, d).dim());
        }
    return C;
}

} // namespace kita
