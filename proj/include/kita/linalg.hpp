#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "matrix.hpp"

namespace kita {

struct RrefResult {
    Mat m;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form, canonical (leading entries 1, pivot columns cleared).
inline RrefResult rref(Mat m) {
    const FieldSpec* f = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m.at(i, c)) { sel = i; break; }
        if (sel == rows) continue;
        if (sel != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
        auto invp = f->inv(m.at(r, c));
        if (invp != 1)
            for (std::size_t j = c; j < cols; ++j) m.at(r, j) = f->mul(m.at(r, j), invp);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            auto t = m.at(i, c);
            if (!t) continue;
            for (std::size_t j = c; j < cols; ++j)
                m.at(i, j) = f->sub(m.at(i, j), f->mul(t, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), r, std::move(pivots)};
}

inline std::optional<Mat> Mat::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Mat aug(f_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = 1;
    }
    auto res = rref(std::move(aug));
    if (res.rank != rows_) return std::nullopt;
    for (std::size_t i = 0; i < rows_; ++i)
        if (res.pivots[i] != i) return std::nullopt;
    Mat inv(f_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = res.m.at(i, cols_ + j);
    return inv;
}

/// A subspace of coordinate space, held as a canonical RREF basis.
/// Two subspaces are equal iff their bases are entrywise equal.
class Subspace {
public:
    Subspace() : ambient_(0) {}
    Subspace(const FieldSpec* f, std::size_t ambient)
        : ambient_(ambient), basis_(f, 0, ambient) {}

    static Subspace from_rows(Mat rows) {
        auto res = rref(std::move(rows));
        Subspace s;
        s.ambient_ = res.m.cols();
        s.pivots_ = res.pivots;
        Mat b(res.m.field(), res.rank, res.m.cols());
        for (std::size_t r = 0; r < res.rank; ++r)
            for (std::size_t c = 0; c < res.m.cols(); ++c) b.at(r, c) = res.m.at(r, c);
        s.basis_ = std::move(b);
        return s;
    }

    static Subspace from_vectors(const FieldSpec* f, const std::vector<Vec>& vs, std::size_t ambient) {
        return from_rows(Mat::from_rows(f, vs, ambient));
    }

    static Subspace full(const FieldSpec* f, std::size_t ambient) {
        return from_rows(Mat::identity(f, ambient));
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const FieldSpec* field() const { return basis_.field(); }

    /// Residual of v after eliminating along the basis; zero iff v is a member.
    Vec reduce(Vec v) const {
        const FieldSpec* f = basis_.field();
        for (std::size_t r = 0; r < basis_.rows(); ++r) {
            auto c = v[pivots_[r]];
            if (!c) continue;
            for (std::size_t j = 0; j < ambient_; ++j)
                if (basis_.at(r, j)) v[j] = f->sub(v[j], f->mul(c, basis_.at(r, j)));
        }
        return v;
    }

    bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw AmbientMismatch("subspace ambient dimensions differ");
        for (std::size_t r = 0; r < other.dim(); ++r)
            if (!contains(other.basis_.row(r))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    std::size_t ambient_;
    Mat basis_;
    std::vector<std::size_t> pivots_;
};

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw AmbientMismatch("sum of subspaces of different ambients");
    const FieldSpec* f = a.field() ? a.field() : b.field();
    Mat stacked(f, a.dim() + b.dim(), a.ambient());
    for (std::size_t r = 0; r < a.dim(); ++r) stacked.set_row(r, a.basis().row(r));
    for (std::size_t r = 0; r < b.dim(); ++r) stacked.set_row(a.dim() + r, b.basis().row(r));
    return Subspace::from_rows(std::move(stacked));
}

/// Zassenhaus: rows [B_a | B_a] and [B_b | 0]; echelon rows with zero left half
/// carry an intersection basis in the right half.
inline Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw AmbientMismatch("intersection of subspaces of different ambients");
    const std::size_t n = a.ambient();
    const FieldSpec* f = a.field() ? a.field() : b.field();
    Mat z(f, a.dim() + b.dim(), 2 * n);
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c) {
            z.at(r, c) = a.basis().at(r, c);
            z.at(r, n + c) = a.basis().at(r, c);
        }
    for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c) z.at(a.dim() + r, c) = b.basis().at(r, c);
    auto res = rref(std::move(z));
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < res.rank; ++r) {
        bool left_zero = true;
        for (std::size_t c = 0; c < n && left_zero; ++c)
            if (res.m.at(r, c)) left_zero = false;
        if (left_zero) {
            Vec v(n);
            for (std::size_t c = 0; c < n; ++c) v[c] = res.m.at(r, n + c);
            rows.push_back(std::move(v));
        }
    }
    return Subspace::from_vectors(f, rows, n);
}

inline std::size_t quotient_dim(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw AmbientMismatch("quotient of subspaces of different ambients");
    if (!a.contains(b)) throw NotASubspace("quotient_dim: second argument is not contained in the first");
    return a.dim() - b.dim();
}

/// Kernel {v : m v = 0}.
inline Subspace kernel(const Mat& m) {
    const FieldSpec* f = m.field();
    auto res = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : res.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Vec v(n, 0);
        v[c] = 1;
        for (std::size_t r = 0; r < res.rank; ++r)
            v[res.pivots[r]] = f->neg(res.m.at(r, c));
        basis.push_back(std::move(v));
    }
    return Subspace::from_vectors(f, basis, n);
}

/// Row space of a matrix.
inline Subspace image(const Mat& m) {
    return Subspace::from_rows(m.transpose());
}

/// Orthogonal space {w : w^T gram x = 0 for all x in v}.
/// The gram matrix may be degenerate; callers check dimensions if they care.
inline Subspace orthogonal(const Subspace& v, const Mat& gram) {
    const FieldSpec* f = gram.field();
    const std::size_t n = v.ambient();
    // constraint rows: x^T gram^T for each basis vector x
    Mat constraints = v.basis() * gram.transpose();
    if (v.dim() == 0) return Subspace::full(f, n);
    return kernel(constraints);
}

/// v -> matrix . (entrywise Frobenius^twist of v).
struct SemilinearMap {
    Mat matrix;
    long twist = 0;

    Vec apply(const Vec& v) const {
        return matrix.apply(vec_frobenius(matrix.field(), v, twist));
    }
};

/// Composition f(g(.)).
inline SemilinearMap semilinear_compose(const SemilinearMap& f, const SemilinearMap& g) {
    const FieldSpec* k = f.matrix.field();
    long e = long(k->e());
    return {f.matrix * g.matrix.frobenius(f.twist), (f.twist + g.twist) % e};
}

inline SemilinearMap semilinear_power(const SemilinearMap& f, unsigned n) {
    SemilinearMap acc{Mat::identity(f.matrix.field(), f.matrix.rows()), 0};
    for (unsigned i = 0; i < n; ++i) acc = semilinear_compose(acc, f);
    return acc;
}

/// Left adjoint of a semilinear map with respect to a nondegenerate pairing:
/// the unique zeta with twist -twist(f) satisfying, for all v, w,
///     <v, f(w)> = Frobenius^{twist(f)}( <zeta(v), w> )
/// where <v, w> = v^T gram w. With gram the identity and twist 0 this is the
/// classical transpose.
inline SemilinearMap semilinear_adjoint(const SemilinearMap& f, const Mat& gram) {
    const FieldSpec* k = f.matrix.field();
    auto ginv = gram.inverse();
    if (!ginv) throw SingularGram("adjoint requires an invertible gram/pairing matrix");
    Mat zt = (gram * f.matrix).frobenius(-f.twist) * (*ginv);
    long e = long(k->e());
    long t = (-f.twist) % e;
    return {zt.transpose(), t < 0 ? t + e : t};
}

/// Image of a semilinear map as a subspace (the twist permutes coordinates of
/// the domain bijectively, so the image equals the column space of the matrix).
inline Subspace semilinear_image(const SemilinearMap& f) {
    return image(f.matrix);
}

inline Subspace semilinear_kernel(const SemilinearMap& f) {
    // v in ker  <=>  frob^twist(v) in ker(matrix); inverse Frobenius is entrywise
    auto k = kernel(f.matrix);
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < k.dim(); ++r)
        rows.push_back(vec_frobenius(f.matrix.field(), k.basis().row(r), -f.twist));
    return Subspace::from_vectors(f.matrix.field(), rows, k.ambient());
}

} // namespace kita
