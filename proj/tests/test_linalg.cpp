#include <catch2/catch.hpp>

#include <random>

#include "kita/linalg.hpp"

using namespace kita;

namespace {

Mat from_ints(const FieldSpec* f, const std::vector<std::vector<int>>& rows) {
    Mat m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = f->from_int(rows[r][c]);
    return m;
}

Mat random_mat(const FieldSpec* f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Mat m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = FieldSpec::value_type(rng() % f->size());
    return m;
}

// all vectors of a subspace over a small field, by enumeration of coefficients
std::vector<Vec> enumerate(const Subspace& s) {
    const FieldSpec* f = s.field();
    std::vector<Vec> out;
    Vec coeff(s.dim(), 0);
    for (;;) {
        Vec v(s.ambient(), 0);
        for (std::size_t r = 0; r < s.dim(); ++r) vec_add_scaled(f, v, s.basis().row(r), coeff[r]);
        out.push_back(std::move(v));
        std::size_t pos = 0;
        while (pos < s.dim()) {
            if (++coeff[pos] < f->size()) break;
            coeff[pos] = 0;
            ++pos;
        }
        if (pos == s.dim()) break;
    }
    return out;
}

} // namespace

TEST_CASE("rref examples") {
    auto F2 = FieldSpec::get(2);
    auto id3 = Mat::identity(F2, 3);
    auto r = rref(id3);
    CHECK(r.m == id3);
    CHECK(r.rank == 3);
    auto z = Mat(F2, 2, 3);
    CHECK(rref(z).rank == 0);
    auto m = from_ints(F2, {{1, 1}, {1, 1}});
    auto rr = rref(m);
    CHECK(rr.rank == 1);
    CHECK(rr.m.row(0) == Vec{1, 1}); // hand row reduction
}

TEST_CASE("kernel examples") {
    auto F2 = FieldSpec::get(2);
    CHECK(kernel(Mat::identity(F2, 3)).dim() == 0);
    CHECK(kernel(Mat(F2, 4, 4)).dim() == 4); // zero map on dim 4
    auto k = kernel(from_ints(F2, {{1, 1}}));
    CHECK(k.dim() == 1);
    CHECK(k.contains(Vec{1, 1})); // solve directly
}

TEST_CASE("rank-nullity on random matrices") {
    std::mt19937_64 rng(42);
    for (auto [p, e] : {std::pair<std::uint64_t, unsigned>{2, 1}, {3, 1}, {2, 2}}) {
        auto F = FieldSpec::get(p, e);
        for (int it = 0; it < 20; ++it) {
            std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
            Mat m = random_mat(F, rows, cols, rng);
            CHECK(kernel(m).dim() + rref(m).rank == cols);
        }
    }
}

TEST_CASE("subspace operations") {
    auto F2 = FieldSpec::get(2);
    Subspace full = Subspace::full(F2, 2);
    Subspace v = Subspace::from_vectors(F2, {Vec{1, 0}}, 2);
    Subspace w = Subspace::from_vectors(F2, {Vec{1, 1}}, 2);
    CHECK(subspace_intersect(full, v) == v);
    CHECK(subspace_sum(v, v) == v); // idempotence
    // intersect(span{(1,0)}, span{(1,1)}) = 0: oracle enumerates all 4 vectors
    Subspace meet = subspace_intersect(v, w);
    std::size_t common = 0;
    for (const auto& x : enumerate(v))
        if (w.contains(x) && !vec_is_zero(x)) ++common;
    CHECK(common == 0);
    CHECK(meet.dim() == 0);
    CHECK(quotient_dim(full, v) == 1);
    CHECK_THROWS_AS(quotient_dim(v, w), NotASubspace);
    Subspace v3 = Subspace::from_vectors(F2, {Vec{1, 0, 0}}, 3);
    CHECK_THROWS_AS(subspace_sum(v, v3), AmbientMismatch);
}

TEST_CASE("sum and intersection against exhaustive enumeration over GF(2)^4") {
    auto F2 = FieldSpec::get(2);
    std::mt19937_64 rng(7);
    for (int it = 0; it < 10; ++it) {
        std::vector<Vec> ra, rb;
        for (int i = 0; i < 2; ++i) {
            Vec x(4), y(4);
            for (auto& t : x) t = rng() & 1;
            for (auto& t : y) t = rng() & 1;
            ra.push_back(x);
            rb.push_back(y);
        }
        Subspace a = Subspace::from_vectors(F2, ra, 4), b = Subspace::from_vectors(F2, rb, 4);
        Subspace meet = subspace_intersect(a, b);
        for (const auto& x : enumerate(a))
            CHECK(meet.contains(x) == (a.contains(x) && b.contains(x)));
        Subspace join = subspace_sum(a, b);
        CHECK(join.dim() == a.dim() + b.dim() - meet.dim());
    }
}

TEST_CASE("orthogonal spaces") {
    auto F2 = FieldSpec::get(2);
    Mat gram = Mat::identity(F2, 3);
    CHECK(orthogonal(Subspace(F2, 3), gram) == Subspace::full(F2, 3)); // 0^perp = all
    CHECK(orthogonal(Subspace::full(F2, 3), gram).dim() == 0);
    Subspace v = Subspace::from_vectors(F2, {Vec{1, 1, 0}}, 3);
    Subspace perp = orthogonal(v, gram);
    CHECK(perp.dim() == 2);
    CHECK(perp.contains(Vec{1, 1, 0}));
    CHECK(perp.contains(Vec{0, 0, 1}));
}

TEST_CASE("semilinear powers") {
    auto F4 = FieldSpec::get(2, 2);
    Mat m(F4, 2, 2);
    m.at(0, 0) = F4->parse("w");
    m.at(0, 1) = 1;
    m.at(1, 0) = F4->parse("1,1");
    SemilinearMap f{m, 1};
    // n = 0: identity with twist 0
    auto f0 = semilinear_power(f, 0);
    CHECK(f0.matrix == Mat::identity(F4, 2));
    CHECK(f0.twist == 0);
    // n = 2 over GF(4): matrix M . M^sigma, twist 2 = 0; oracle applies f twice
    auto f2 = semilinear_power(f, 2);
    CHECK(f2.twist == 0);
    for (std::uint32_t a = 0; a < 4; ++a)
        for (std::uint32_t b = 0; b < 4; ++b) {
            Vec v{a, b};
            CHECK(f2.apply(v) == f.apply(f.apply(v)));
        }
    // prime field: twist acts trivially, powers are matrix powers
    auto F3 = FieldSpec::get(3);
    Mat g(F3, 2, 2);
    g.at(0, 1) = 1;
    g.at(1, 0) = 2;
    SemilinearMap h{g, 1};
    CHECK(semilinear_power(h, 2).matrix == g * g);
}

TEST_CASE("semilinear adjoint") {
    auto F2 = FieldSpec::get(2);
    // identity map, any invertible gram -> identity
    Mat gram = from_ints(F2, {{0, 1}, {1, 0}});
    SemilinearMap idm{Mat::identity(F2, 2), 0};
    CHECK(semilinear_adjoint(idm, gram).matrix == Mat::identity(F2, 2));
    // gram = identity, twist 0 -> classical transpose
    Mat m = from_ints(F2, {{1, 1}, {0, 1}});
    CHECK(semilinear_adjoint({m, 0}, Mat::identity(F2, 2)).matrix == m.transpose());
    // defining identity, exhaustively over GF(2)^2 with twist 1
    Mat n = from_ints(F2, {{0, 0}, {1, 0}});
    SemilinearMap f{n, 1};
    auto zeta = semilinear_adjoint(f, gram);
    for (std::uint32_t a = 0; a < 4; ++a)
        for (std::uint32_t b = 0; b < 4; ++b) {
            Vec v{a & 1u, a >> 1}, w{b & 1u, b >> 1};
            auto lhs = vec_dot(F2, v, gram.apply(f.apply(w)));
            auto rhs = F2->frobenius(vec_dot(F2, zeta.apply(v), gram.apply(w)), 1);
            REQUIRE(lhs == rhs);
        }
    CHECK_THROWS_AS(semilinear_adjoint(f, Mat(F2, 2, 2)), SingularGram);
}

TEST_CASE("adjoint of adjoint returns the original for symmetric gram") {
    auto F4 = FieldSpec::get(2, 2);
    std::mt19937_64 rng(3);
    Mat gram(F4, 3, 3);
    // random symmetric invertible gram
    do {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i; j < 3; ++j) {
                auto v = FieldSpec::value_type(rng() % 4);
                gram.at(i, j) = v;
                gram.at(j, i) = v;
            }
    } while (!gram.inverse());
    Mat m = random_mat(F4, 3, 3, rng);
    SemilinearMap f{m, 1};
    auto back = semilinear_adjoint(semilinear_adjoint(f, gram), gram);
    CHECK(back.matrix == f.matrix);
    CHECK(back.twist == f.twist);
}

TEST_CASE("semilinear kernel dimension equals the matrix kernel dimension") {
    auto F4 = FieldSpec::get(2, 2);
    std::mt19937_64 rng(11);
    for (int it = 0; it < 10; ++it) {
        Mat m = random_mat(F4, 3, 3, rng);
        SemilinearMap f{m, 1};
        auto k = semilinear_kernel(f);
        CHECK(k.dim() == kernel(m).dim());
        for (std::size_t r = 0; r < k.dim(); ++r)
            CHECK(vec_is_zero(f.apply(k.basis().row(r))));
    }
}
