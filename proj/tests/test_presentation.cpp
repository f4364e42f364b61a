#include <catch2/catch.hpp>

#include "kita/families.hpp"
#include "kita/form.hpp"
#include "kita/presentation.hpp"

using namespace kita;

namespace {

// independent count of the type-L basis: the seven path families between
// vertices i and j listed for the deformed preprojective algebras
long long type_L_basis_count(long long n) {
    long long count = 0;
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            if (i < j) {
                count += 1;                                   // ascending chains
                for (long long l = j; l <= n - 2; ++l) ++count; // ascend, turn, descend to j
                for (long long l = j; l <= n - 2; ++l) ++count; // with one loop pass
            } else {
                count += 1;                                   // descending chains (trivial if i = j)
                for (long long l = i; l <= n - 2; ++l) ++count; // turnarounds from i
                for (long long l = i; l <= n - 2; ++l) ++count;
            }
            count += 1; // descend to 0, loop once, ascend
        }
    return count;
}

} // namespace

TEST_CASE("quotient algebra basics") {
    auto F2 = FieldSpec::get(2);
    // A_2 quiver, no relations: dim 3
    Quiver a2{2, {{"a", 0, 1}}};
    Algebra P = quotient_algebra(a2, {}, F2, 1, "A2");
    CHECK(P.dim() == 3);
    CHECK(P.meta().vertex_idempotents.size() == 2);
    // one loop with x^2 = 0 for several bounds
    Quiver loop{1, {{"x", 0, 0}}};
    for (std::size_t L : {2, 3, 5})
        CHECK(quotient_algebra(loop, {{{{1, {0, 0}}}}}, F2, L).dim() == 2);
}

TEST_CASE("quotient algebra rejects inadmissible or unbounded input") {
    auto F2 = FieldSpec::get(2);
    Quiver loop{1, {{"x", 0, 0}}};
    // degree-1 term
    CHECK_THROWS_AS(quotient_algebra(loop, {{{{1, {0}}}}}, F2, 4), NonAdmissible);
    // no relations on a loop: never bounded; escalation must give up
    CHECK_THROWS_AS(quotient_algebra(loop, {}, F2, 4, "", true), BoundTooSmall);
    // without escalation the failure names the offending path
    try {
        quotient_algebra(loop, {}, F2, 4);
        FAIL("expected BoundTooSmall");
    } catch (const BoundTooSmall& e) {
        CHECK(std::string(e.what()).find("x") != std::string::npos);
    }
}

TEST_CASE("type-L dimensions match the independent basis count") {
    auto F2 = FieldSpec::get(2);
    for (long long n = 2; n <= 5; ++n) {
        Quiver q;
        q.vertices = std::size_t(n);
        q.arrows.push_back({"eps", 0, 0});
        for (long long i = 0; i + 1 < n; ++i) {
            q.arrows.push_back({"a" + std::to_string(i), std::size_t(i), std::size_t(i + 1)});
            q.arrows.push_back({"A" + std::to_string(i), std::size_t(i + 1), std::size_t(i)});
        }
        auto a = [&](long long i) { return std::size_t(1 + 2 * i); };
        auto abar = [&](long long i) { return std::size_t(2 + 2 * i); };
        std::vector<Relation> rels;
        for (long long i = 1; i + 1 < n; ++i)
            rels.push_back({{1, {a(i), abar(i)}}, {1, {abar(i - 1), a(i - 1)}}});
        rels.push_back({{1, {abar(n - 2), a(n - 2)}}});
        rels.push_back({{1, detail::rep_path({0}, std::size_t(2 * n))}});
        rels.push_back({{1, {0, 0}}, {1, {a(0), abar(0)}}, {1, {0, 0, 0}}}); // p(X) = 1
        Algebra L = quotient_algebra(q, rels, F2, std::size_t(2 * n + 1), "L" + std::to_string(n));
        CHECK((long long)L.dim() == type_L_basis_count(n));
        // every relation re-evaluates to zero in the quotient
        for (const auto& rel : rels) {
            Vec acc(L.dim(), 0);
            for (const auto& term : rel) {
                Vec prod = L.unit();
                std::size_t v = q.arrows[term.arrows.front()].source;
                // locate e_v then multiply the arrows through
                prod = Vec(L.dim(), 0);
                for (auto idx : L.meta().vertex_idempotents)
                    if (L.meta().paths[idx].source == int(v)) prod[idx] = 1;
                for (auto arr : term.arrows) {
                    std::size_t arrow_basis = SIZE_MAX;
                    for (std::size_t b = 0; b < L.dim(); ++b)
                        if (L.meta().paths[b].length() == 1 && L.meta().paths[b].arrows[0] == int(arr))
                            arrow_basis = b;
                    REQUIRE(arrow_basis != SIZE_MAX);
                    prod = L.multiply(prod, L.basis_element(arrow_basis));
                }
                vec_add_scaled(F2, acc, prod, term.coeff);
            }
            CHECK(vec_is_zero(acc));
        }
    }
}

TEST_CASE("group algebra construction") {
    auto F2 = FieldSpec::get(2);
    Algebra triv = group_algebra(CayleyTable::cyclic(1), F2, "K");
    CHECK(triv.dim() == 1);
    Algebra C2 = group_algebra(CayleyTable::cyclic(2), F2, "F2C2");
    CHECK(C2.dim() == 2);
    CHECK(C2.multiply(C2.basis_element(1), C2.basis_element(1)) == C2.basis_element(0)); // x^2 = 1
    // commutator space of GF(2)S3 against the exhaustive span oracle
    auto s3 = CayleyTable::symmetric(3);
    Algebra KS3 = group_algebra(s3, F2, "F2S3");
    std::vector<Vec> brackets;
    for (std::size_t g = 0; g < 6; ++g)
        for (std::size_t h = 0; h < 6; ++h) {
            Vec v(6, 0);
            v[s3.mul(g, h)] = F2->add(v[s3.mul(g, h)], 1);
            v[s3.mul(h, g)] = F2->sub(v[s3.mul(h, g)], 1);
            brackets.push_back(std::move(v));
        }
    Subspace oracle = Subspace::from_vectors(F2, brackets, 6);
    CHECK(commutator_space(KS3) == oracle);
    CHECK(oracle.dim() == 3);
}

TEST_CASE("cayley table validation") {
    CayleyTable bad;
    bad.order = 2;
    bad.table = {{0, 1}, {1, 1}}; // not a Latin square
    CHECK_THROWS_AS(bad.validate(), BadCayleyTable);
    CayleyTable shifted;
    shifted.order = 2;
    shifted.table = {{1, 0}, {0, 1}}; // identity not at index 0
    CHECK_THROWS_AS(shifted.validate(), BadCayleyTable);
}

TEST_CASE("p-primary decomposition") {
    auto c6 = CayleyTable::cyclic(6);
    // g of order 6, p = 2: parts g^3 (order 2) and g^4 (order 3)
    auto [gp, gpp] = p_primary_decompose(c6, 1, 2);
    CHECK(gp == 3);
    CHECK(gpp == 4);
    CHECK(c6.mul(gp, gpp) == 1);
    // order prime to p: trivial p-part
    auto [hp, hpp] = p_primary_decompose(c6, 2, 2); // g^2 has order 3
    CHECK(hp == 0);
    CHECK(hpp == 2);
    // p-power order: trivial p'-part
    auto [kp, kpp] = p_primary_decompose(c6, 3, 2); // g^3 has order 2
    CHECK(kp == 3);
    CHECK(kpp == 0);
}

TEST_CASE("p-regular class counts for S3") {
    auto s3 = CayleyTable::symmetric(3);
    CHECK(p_regular_class_count(s3, 2) == 2);
    CHECK(p_regular_class_count(s3, 3) == 2);
    CHECK(p_regular_class_count(s3, 5) == 3); // p does not divide |G|: all classes
}

TEST_CASE("reynolds class sums") {
    auto F2 = FieldSpec::get(2);
    auto c2 = CayleyTable::cyclic(2);
    Subspace r2 = reynolds_class_sums(c2, F2);
    CHECK(r2.dim() == 1);
    CHECK(r2.contains(Vec{1, 1})); // 1 + x
    auto s3 = CayleyTable::symmetric(3);
    CHECK(reynolds_class_sums(s3, F2).dim() == 2);
    // p coprime to |G|: the class sums span the centre of KG
    auto F5 = FieldSpec::get(5);
    Algebra KS3 = group_algebra(s3, F5, "F5S3");
    CHECK(reynolds_class_sums(s3, F5) == center(KS3));
}

TEST_CASE("trivial extension") {
    auto F2 = FieldSpec::get(2);
    // T(K) is K[x]/x^2
    Algebra K = group_algebra(CayleyTable::cyclic(1), F2, "K");
    auto [TK, gramK] = trivial_extension(K);
    CHECK(TK.dim() == 2);
    Vec dual = TK.basis_element(0);
    CHECK(vec_is_zero(TK.multiply(dual, dual))); // square-zero dual
    // T(path algebra of A_2) is symmetric of dim 6
    Quiver a2{2, {{"a", 0, 1}}};
    Algebra P = quotient_algebra(a2, {}, F2, 2, "A2");
    auto [T, gram] = trivial_extension(P);
    CHECK(T.dim() == 6);
    auto preds = form_predicates(BilinearForm{gram}, T);
    CHECK(preds.associative);
    CHECK(preds.symmetric);
    CHECK(preds.nondegenerate);
    // unit is (0, 1_A)
    Vec unit(6, 0);
    for (std::size_t i = 0; i < 3; ++i) unit[3 + i] = P.unit()[i];
    CHECK(T.unit() == unit);
    // projection to the second component is an algebra homomorphism
    auto proj = [&](const Vec& v) { return Vec(v.begin() + 3, v.end()); };
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            Vec lhs = proj(T.multiply(T.basis_element(i), T.basis_element(j)));
            Vec rhs = P.multiply(proj(T.basis_element(i)), proj(T.basis_element(j)));
            REQUIRE(lhs == rhs);
        }
    // the dual part is an ideal with square zero
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(vec_is_zero(T.multiply(T.basis_element(i), T.basis_element(j))));
}

TEST_CASE("socle rearrangement helper") {
    auto F2 = FieldSpec::get(2);
    // local algebra whose socle line is 1-dimensional and coordinate-aligned
    Quiver loop{1, {{"x", 0, 0}}};
    Algebra A = quotient_algebra(loop, {{{{1, {0, 0, 0}}}}}, F2, 4, "kx3");
    REQUIRE(A.meta().socle_basis.size() == 1);
    CHECK(socle(A).contains(A.basis_element(A.meta().socle_basis[0])));
}
