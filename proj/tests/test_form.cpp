#include <catch2/catch.hpp>

#include "kita/families.hpp"
#include "kita/form.hpp"

using namespace kita;

namespace {

Algebra kx2(const FieldSpec* f) { return instantiate("kx", {{"m", "2"}}, f); }

std::size_t label_index(const Algebra& A, const std::string& lbl) {
    for (std::size_t i = 0; i < A.dim(); ++i)
        if (A.labels()[i] == lbl) return i;
    throw std::runtime_error("missing label " + lbl);
}

} // namespace

TEST_CASE("socle form of K[x]/x^2") {
    auto F2 = FieldSpec::get(2);
    Algebra A = kx2(F2);
    BilinearForm f = socle_form(A);
    // basis {1, x}: psi picks the coefficient of x in products
    Mat expect(F2, 2, 2);
    expect.at(0, 1) = 1;
    expect.at(1, 0) = 1;
    CHECK(f.gram == expect);
    auto preds = form_predicates(f, A);
    CHECK(preds.associative);
    CHECK(preds.symmetric);
    CHECK(preds.nondegenerate);
}

TEST_CASE("socle form of the quantum exterior algebra") {
    auto F4 = FieldSpec::get(2, 2);
    auto q = F4->parse("w");
    Algebra A = instantiate("Aq", {{"q", "w"}}, F4);
    BilinearForm f = socle_form(A);
    std::size_t X = label_index(A, "X"), Y = label_index(A, "Y");
    CHECK(f.gram.at(X, Y) == 1);
    CHECK(f.gram.at(Y, X) == F4->inv(q)); // YX = q^{-1} XY
    auto preds = form_predicates(f, A);
    CHECK(preds.associative);
    CHECK(preds.nondegenerate);
    CHECK_FALSE(preds.symmetric);
}

TEST_CASE("degenerate forms are detected") {
    auto F2 = FieldSpec::get(2);
    Algebra A = kx2(F2);
    BilinearForm zero{Mat(F2, 2, 2)};
    auto preds = form_predicates(zero, A);
    CHECK(preds.associative); // trivially
    CHECK_FALSE(preds.nondegenerate);
    // non-selfinjective: socle form must fail
    Algebra P = instantiate("PathAn", {{"n", "2"}}, F2);
    CHECK_THROWS_AS(socle_form(P), DegenerateForm);
}

TEST_CASE("nakayama automorphism") {
    auto F2 = FieldSpec::get(2);
    Algebra A = kx2(F2);
    CHECK(nakayama(socle_form(A), A) == Mat::identity(F2, 2)); // symmetric form: identity

    auto F4 = FieldSpec::get(2, 2);
    auto q = F4->parse("w");
    Algebra Aq = instantiate("Aq", {{"q", "w"}}, F4);
    Mat nu = nakayama(socle_form(Aq), Aq);
    std::size_t X = label_index(Aq, "X"), Y = label_index(Aq, "Y");
    Vec nuX = nu.apply(Aq.basis_element(X));
    Vec want(Aq.dim(), 0);
    want[X] = q;
    CHECK(nuX == want); // nu(X) = qX
    Vec nuY = nu.apply(Aq.basis_element(Y));
    Vec wantY(Aq.dim(), 0);
    wantY[Y] = F4->inv(q);
    CHECK(nuY == wantY); // nu(Y) = q^{-1}Y
    // defining identity <a,b> = <b, nu(a)> on all basis pairs
    const Mat& G = socle_form(Aq).gram;
    for (std::size_t i = 0; i < Aq.dim(); ++i)
        for (std::size_t j = 0; j < Aq.dim(); ++j) {
            auto lhs = G.at(i, j);
            auto rhs = vec_dot(F4, Aq.basis_element(j), G.apply(nu.apply(Aq.basis_element(i))));
            REQUIRE(lhs == rhs);
        }
}

TEST_CASE("twisted centre") {
    auto F4 = FieldSpec::get(2, 2);
    Algebra Aq = instantiate("Aq", {{"q", "w"}}, F4);
    // nu = id gives the ordinary centre, Z(A_q) = span{1, XY}
    Subspace Z = center(Aq);
    CHECK(twisted_center(Aq, Mat::identity(F4, 4)) == Z);
    CHECK(Z.dim() == 2);
    CHECK(Z.contains(Aq.unit()));
    CHECK(Z.contains(Aq.basis_element(label_index(Aq, "X*Y"))));
    Mat nu = nakayama(socle_form(Aq), Aq);
    Subspace znu = twisted_center(Aq, nu);
    CHECK(znu.dim() == 3);
    CHECK(znu.contains(Aq.basis_element(label_index(Aq, "X"))));
    CHECK(znu.contains(Aq.basis_element(label_index(Aq, "Y"))));
    CHECK(znu.contains(Aq.basis_element(label_index(Aq, "X*Y"))));
    // selfinjective: dim Z_nu = dim A/[A,A]
    CHECK(znu.dim() == Aq.dim() - commutator_space(Aq).dim());
}

TEST_CASE("find_symmetric_form outcomes") {
    auto F2 = FieldSpec::get(2);
    Algebra A = kx2(F2);
    auto res = find_symmetric_form(A);
    REQUIRE(res.outcome == SymmetricFormSearch::Outcome::witness);
    auto preds = form_predicates(res.form, A);
    CHECK((preds.associative && preds.symmetric && preds.nondegenerate));

    // the deformed type-L algebras are symmetric although their socle form is not
    Algebra L3 = instantiate("Ln", {{"n", "3"}, {"j", "1"}}, F2);
    auto resL = find_symmetric_form(L3);
    REQUIRE(resL.outcome == SymmetricFormSearch::Outcome::witness);
    auto predsL = form_predicates(resL.form, L3);
    CHECK((predsL.associative && predsL.symmetric && predsL.nondegenerate));
    auto sf = socle_form(L3);
    CHECK_FALSE(sf.gram == sf.gram.transpose());

    // quantum exterior with q != 1: exhaustive certificate
    auto F4 = FieldSpec::get(2, 2);
    Algebra Aq = instantiate("Aq", {{"q", "w"}}, F4);
    auto resq = find_symmetric_form(Aq);
    CHECK(resq.outcome == SymmetricFormSearch::Outcome::not_symmetric);
    CHECK(resq.solution_basis.rows() == 3); // functionals killing [A,A] = span{XY}
}

TEST_CASE("witness search is deterministic for a fixed seed") {
    auto F2 = FieldSpec::get(2);
    Algebra L3 = instantiate("Ln", {{"n", "3"}, {"j", "0"}}, F2);
    auto r1 = find_symmetric_form(L3, 123);
    auto r2 = find_symmetric_form(L3, 123);
    REQUIRE(r1.outcome == SymmetricFormSearch::Outcome::witness);
    CHECK(r1.functional == r2.functional);
    CHECK(r1.trials == r2.trials);
}
