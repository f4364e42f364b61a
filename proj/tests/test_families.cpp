#include <catch2/catch.hpp>

#include "kita/families.hpp"
#include "kita/form.hpp"
#include "kita/kuelshammer.hpp"

using namespace kita;

namespace {

// exhaustive word enumeration oracle for the dimension of the two-loop
// dihedral algebra with X^2 = Y^2 = 0 and (XY)^k = (YX)^k: alternating words
// in X, Y of length < 2k, plus the identified top word
long long dihedral_word_count(long long k) {
    long long count = 1; // empty word
    for (long long len = 1; len < 2 * k; ++len) count += 2;
    return count + 1; // the socle (XY)^k = (YX)^k
}

} // namespace

TEST_CASE("registry lists the families of the classification tables") {
    std::vector<std::string> expected{"D1A1", "D1A2", "SD1A1", "SD1A2", "Q1A1", "Q1A2",
                                      "D2B",  "SD2B1", "SD2B2", "Q2B1",  "D3K",  "SD3K",
                                      "Q3K",  "D3R",   "Q3A1",  "Ln",    "Aq"};
    for (const auto& name : expected) CHECK_NOTHROW(find_family(name));
    CHECK_THROWS_AS(find_family("NoSuchFamily"), UnknownFamily);
}

TEST_CASE("instance name grammar") {
    auto [name, params] = parse_instance_name("SD2B1[k=2,t=3,c=1]");
    CHECK(name == "SD2B1");
    CHECK(params.at("k") == "2");
    CHECK(params.at("t") == "3");
    CHECK(params.at("c") == "1");
    auto [bare, none] = parse_instance_name("Ln");
    CHECK(bare == "Ln");
    CHECK(none.empty());
    CHECK_THROWS_AS(parse_instance_name("X[k]"), BadInput);
}

TEST_CASE("dihedral local family dimensions against the word oracle") {
    auto F2 = FieldSpec::get(2);
    for (long long k = 1; k <= 4; ++k) {
        Algebra A = instantiate("D1A1", {{"k", std::to_string(k)}}, F2);
        CHECK((long long)A.dim() == 4 * k);
        CHECK((long long)A.dim() == dihedral_word_count(k));
    }
}

TEST_CASE("side conditions are enforced with the violated condition named") {
    auto F2 = FieldSpec::get(2);
    auto F3 = FieldSpec::get(3);
    try {
        instantiate("SD2B2", {{"k", "1"}, {"t", "2"}, {"c", "0"}}, F2);
        FAIL("expected ParamOutOfRange");
    } catch (const ParamOutOfRange& e) {
        CHECK(std::string(e.what()).find("k+t >= 4") != std::string::npos);
    }
    CHECK_THROWS_AS(instantiate("Ln", {{"n", "1"}}, F2), ParamOutOfRange);
    CHECK_THROWS_AS(instantiate("Ln", {{"n", "3"}, {"j", "3"}}, F2), ParamOutOfRange);
    CHECK_THROWS_AS(instantiate("Ln", {{"n", "3"}, {"j", "1"}}, F3), ParamOutOfRange);
    CHECK_THROWS_AS(instantiate("D1A2", {{"k", "2"}, {"d", "1"}}, F3), ParamOutOfRange);
    CHECK_THROWS_AS(instantiate("Aq", {{"q", "0"}}, F2), ParamOutOfRange);
    CHECK_THROWS_AS(instantiate("D1A1", {}, F2), ParamOutOfRange); // missing parameter
}

TEST_CASE("type-L commutator quotient facts") {
    auto F2 = FieldSpec::get(2);
    for (long long n = 2; n <= 4; ++n) {
        Algebra L = instantiate("Ln", {{"n", std::to_string(n)}, {"j", "0"}}, F2);
        auto comm = commutator_space(L);
        // dim A/[A,A] = 2n, generated by the vertices and the odd loop powers
        CHECK((long long)(L.dim() - comm.dim()) == 2 * n);
        std::size_t eps = SIZE_MAX;
        for (std::size_t i = 0; i < L.dim(); ++i)
            if (L.labels()[i] == "eps") eps = i;
        std::vector<Vec> gens;
        for (auto v : L.meta().vertex_idempotents) gens.push_back(L.basis_element(v));
        Vec epspow = L.basis_element(eps);
        Vec eps2 = L.multiply(epspow, epspow);
        for (long long t = 0; t < n; ++t) {
            gens.push_back(epspow); // eps^(2t+1)
            epspow = L.multiply(epspow, eps2);
        }
        // the generators project onto a spanning set of A/[A,A]
        auto cq = commutator_quotient(L);
        std::vector<Vec> proj;
        for (const auto& g : gens) proj.push_back(cq.project(g));
        CHECK(Subspace::from_vectors(F2, proj, cq.dim()).dim() == cq.dim());
        // the canonical central element and its powers
        Vec central(L.dim(), 0);
        vec_add_scaled(F2, central, eps2, 1);
        vec_add_scaled(F2, central, L.multiply(eps2, L.basis_element(eps)), 1); // eps^3 p(eps), p = 1
        for (long long i = 0; i + 1 < n; ++i) {
            std::size_t ai = SIZE_MAX, abari = SIZE_MAX;
            for (std::size_t b = 0; b < L.dim(); ++b) {
                if (L.labels()[b] == "a" + std::to_string(i)) ai = b;
                if (L.labels()[b] == "A" + std::to_string(i)) abari = b;
            }
            vec_add_scaled(F2, central, L.multiply(L.basis_element(abari), L.basis_element(ai)), 1);
        }
        Subspace Z = center(L);
        CHECK(Z.contains(central));
        // its powers up to n-1 are linearly independent
        std::vector<Vec> powers{L.unit()};
        Vec cur = L.unit();
        for (long long t = 1; t < n; ++t) {
            cur = L.multiply(cur, central);
            powers.push_back(cur);
        }
        CHECK(Subspace::from_vectors(F2, powers, L.dim()).dim() == std::size_t(n));
    }
}

TEST_CASE("symmetric flags are verified at instantiation") {
    auto F2 = FieldSpec::get(2);
    for (const char* inst : {"D1A1[k=2]", "SD1A1[k=2]", "Q1A1[k=2]", "D2B[k=1,s=2,c=0]",
                             "D3K[a=1,b=1,c=1]", "Ln[n=3,j=1]", "kx[m=4]"}) {
        auto [name, params] = parse_instance_name(inst);
        Algebra A = instantiate(name, params, F2);
        // symmetric families admit a symmetric associative nondegenerate form
        auto sf = socle_form(A);
        bool sym = sf.gram == sf.gram.transpose();
        if (!sym) {
            auto search = find_symmetric_form(A);
            REQUIRE(search.outcome == SymmetricFormSearch::Outcome::witness);
        }
        // and satisfy dim Z = dim A/[A,A]
        CHECK(center(A).dim() == A.dim() - commutator_space(A).dim());
    }
}

TEST_CASE("the A(lambda) alias at lambda = 1 is the commutative exterior algebra") {
    auto F2 = FieldSpec::get(2);
    Algebra A1 = instantiate("Alambda", {{"l", "1"}}, F2);
    CHECK(A1.dim() == 4);
    CHECK(A1.is_commutative());
    Algebra D = instantiate("D1A1", {{"k", "1"}}, F2);
    CHECK(ring_fingerprint(A1) == ring_fingerprint(D));
}

TEST_CASE("deformed and undeformed type-L instances differ") {
    auto F2 = FieldSpec::get(2);
    Algebra a = instantiate("Ln", {{"n", "3"}, {"j", "0"}}, F2);
    Algebra b = instantiate("Ln", {{"n", "3"}, {"j", "1"}}, F2);
    CHECK(a.dim() == b.dim());
}

TEST_CASE("registry families against group algebra ground truth") {
    // The Kuelshammer data of a group algebra is Morita invariant, so the
    // registry presentations must reproduce it exactly: F2 D8 = D1A1[2],
    // F2 Q8 = Q1A1[2], F2 A4 ~ D3K[1,1,1].
    auto F2 = FieldSpec::get(2);
    auto invariants = [&](const Algebra& A, const BilinearForm& f) {
        auto cq = commutator_quotient(A);
        Subspace Z = center(A);
        auto tower = kuelshammer_ideals(cq, f, Z);
        std::vector<long long> out{(long long)Z.dim(),
                                   (long long)(A.dim() - tower.t.spaces.back().dim())};
        for (std::size_t n = 0; n < tower.perps.size(); ++n) {
            out.push_back((long long)tower.perps[n].dim());
            auto fp = ring_fingerprint(quotient_ring(A, Z, tower.perps[n]));
            out.insert(out.end(), fp.values.begin(), fp.values.end());
        }
        return out;
    };
    auto group_form = [&](const Algebra& A) {
        Mat gram(F2, A.dim(), A.dim());
        for (std::size_t i = 0; i < A.dim(); ++i)
            for (std::size_t j = 0; j < A.dim(); ++j)
                for (const auto& e : A.basis_product(i, j))
                    if (A.unit()[e.first]) gram.at(i, j) = e.second;
        return BilinearForm{gram};
    };
    auto family_form = [&](const Algebra& A) {
        auto sf = socle_form(A);
        if (sf.gram == sf.gram.transpose()) return sf;
        auto search = find_symmetric_form(A);
        REQUIRE(search.outcome == SymmetricFormSearch::Outcome::witness);
        return search.form;
    };

    // dihedral group of order 8: r^4 = s^2 = 1, s r s = r^-1
    CayleyTable d8;
    d8.order = 8;
    d8.table.assign(8, std::vector<std::size_t>(8));
    for (int a1 = 0; a1 < 4; ++a1)
        for (int b1 = 0; b1 < 2; ++b1)
            for (int a2 = 0; a2 < 4; ++a2)
                for (int b2 = 0; b2 < 2; ++b2)
                    d8.table[a1 + 4 * b1][a2 + 4 * b2] =
                        ((a1 + (b1 ? -a2 : a2)) % 4 + 4) % 4 + 4 * ((b1 + b2) % 2);
    Algebra KD8 = group_algebra(d8, F2, "F2D8");
    Algebra D = instantiate("D1A1", {{"k", "2"}}, F2);
    CHECK(invariants(KD8, group_form(KD8)) == invariants(D, family_form(D)));

    // quaternion group: r^4 = 1, s^2 = r^2, s r s^-1 = r^-1
    CayleyTable q8;
    q8.order = 8;
    q8.table.assign(8, std::vector<std::size_t>(8));
    for (int a1 = 0; a1 < 4; ++a1)
        for (int b1 = 0; b1 < 2; ++b1)
            for (int a2 = 0; a2 < 4; ++a2)
                for (int b2 = 0; b2 < 2; ++b2)
                    q8.table[a1 + 4 * b1][a2 + 4 * b2] =
                        ((a1 + (b1 ? -a2 : a2) + 2 * (b1 & b2)) % 4 + 4) % 4 + 4 * ((b1 + b2) % 2);
    Algebra KQ8 = group_algebra(q8, F2, "F2Q8");
    Algebra Q = instantiate("Q1A1", {{"k", "2"}}, F2);
    CHECK(invariants(KQ8, group_form(KQ8)) == invariants(Q, family_form(Q)));

    // alternating group on 4 letters vs the three-simple dihedral family
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p{0, 1, 2, 3};
    do {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (p[i] > p[j]) ++inv;
        if (inv % 2 == 0) perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    CayleyTable a4;
    a4.order = perms.size();
    a4.table.assign(12, std::vector<std::size_t>(12));
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = 0; j < 12; ++j) {
            std::vector<std::size_t> q(4);
            for (int x = 0; x < 4; ++x) q[x] = perms[i][perms[j][x]];
            a4.table[i][j] =
                std::size_t(std::find(perms.begin(), perms.end(), q) - perms.begin());
        }
    Algebra KA4 = group_algebra(a4, F2, "F2A4");
    Algebra D3 = instantiate("D3K", {{"a", "1"}, {"b", "1"}, {"c", "1"}}, F2);
    CHECK(invariants(KA4, group_form(KA4)) == invariants(D3, family_form(D3)));
}

TEST_CASE("quaternion family with scalar parameters") {
    auto F2 = FieldSpec::get(2);
    Algebra Q = instantiate("Q2B1", {{"k", "1"}, {"s", "3"}, {"a", "1"}, {"c", "0"}}, F2);
    CHECK(Q.meta().vertex_idempotents.size() == 2);
    CHECK_THROWS_AS(instantiate("Q2B1", {{"k", "1"}, {"s", "3"}, {"a", "0"}, {"c", "0"}}, F2),
                    ParamOutOfRange);
}
