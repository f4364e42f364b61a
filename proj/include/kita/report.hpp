#pragma once

#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "io.hpp"
#include "stable.hpp"

namespace kita {

struct ReportOptions {
    std::size_t depth_cap = 16;       // tower levels are computed until stabilization
    std::uint64_t seed = 0x5eedcafe;  // seed of the symmetric-form probing phase
    bool fingerprints = true;
};

/// The canonical symmetric form of a group algebra: <g, h> = [gh = 1].
inline BilinearForm group_algebra_form(const Algebra& A) {
    Mat gram(A.field(), A.dim(), A.dim());
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            for (const auto& e : A.basis_product(i, j))
                if (A.unit()[e.first])
                    gram.at(i, j) = A.field()->add(gram.at(i, j), A.field()->mul(e.second, A.unit()[e.first]));
    return {gram};
}

/// The canonical form of a trivial extension over the (dual, regular) basis.
inline BilinearForm trivial_extension_form(const Algebra& A) {
    const std::size_t d = A.dim() / 2;
    Mat gram(A.field(), A.dim(), A.dim());
    for (std::size_t i = 0; i < d; ++i) {
        gram.at(i, d + i) = 1;
        gram.at(d + i, i) = 1;
    }
    return {gram};
}

struct FormChoice {
    std::optional<BilinearForm> associative;    // nondegenerate associative form, if any
    std::optional<BilinearForm> symmetric_form; // symmetric associative nondegenerate witness
    bool socle_form_symmetric = false;
    std::string source; // "socle" | "group" | "trivial_extension" | "witness" | "none"
    std::optional<SymmetricFormSearch> search;  // populated when a search ran
};

inline FormChoice choose_forms(const Algebra& A, std::uint64_t seed) {
    FormChoice out;
    switch (A.meta().kind) {
        case AlgebraMetadata::Kind::group: {
            out.symmetric_form = group_algebra_form(A);
            out.associative = out.symmetric_form;
            out.source = "group";
            return out;
        }
        case AlgebraMetadata::Kind::trivial_extension: {
            out.symmetric_form = trivial_extension_form(A);
            out.associative = out.symmetric_form;
            out.source = "trivial_extension";
            return out;
        }
        case AlgebraMetadata::Kind::quiver: {
            std::optional<BilinearForm> sf;
            try {
                sf = socle_form(A);
            } catch (const DegenerateForm&) {
                // not selfinjective: no nondegenerate associative form exists;
                // the tower is still computed and the perp data is transported
                // through the trivial extension
                out.source = "none";
                return out;
            }
            out.associative = sf;
            out.source = "socle";
            if (sf->gram == sf->gram.transpose()) {
                out.symmetric_form = sf;
                out.socle_form_symmetric = true;
            } else {
                auto search = find_symmetric_form(A, seed);
                out.search = search;
                if (search.outcome == SymmetricFormSearch::Outcome::witness) {
                    out.symmetric_form = search.form;
                    out.source = "witness";
                }
            }
            return out;
        }
        default: {
            auto search = find_symmetric_form(A, seed);
            out.search = search;
            if (search.outcome == SymmetricFormSearch::Outcome::witness) {
                out.symmetric_form = search.form;
                out.associative = search.form;
                out.source = "witness";
            } else {
                out.source = "none";
            }
            return out;
        }
    }
}

struct InvariantReport {
    std::string name;
    const FieldSpec* field = nullptr;
    std::size_t dim = 0, dim_Z = 0, dim_commutator = 0, dim_rad = 0, dim_soc = 0;
    std::size_t dim_commutator_quotient = 0;
    std::size_t dim_A_mod_TA = 0;
    FormPredicates form;
    std::string form_source;
    bool symmetric = false; // a symmetric associative nondegenerate form is available
    std::vector<std::size_t> tower_T;     // dim T_n, n = 0..stab
    std::vector<std::size_t> tower_perp;  // dim T_n^perp (symmetric case)
    std::size_t stabilization_index = 0;
    std::size_t reynolds_dim = 0;
    std::vector<Fingerprint> fingerprints; // of Z/T_n^perp for n = 1..stab
    std::optional<StableInvariants> stable;
    // non-symmetric route through the trivial extension
    std::vector<std::size_t> trivext_perp; // dim T_n(TA)^perp, n = 0..stab(TA)
};

inline InvariantReport build_report(const Algebra& A, const ReportOptions& opts = {}) {
    InvariantReport r;
    r.name = A.meta().name;
    r.field = A.field();
    r.dim = A.dim();
    auto cq = commutator_quotient(A);
    r.dim_commutator = cq.commutator.dim();
    r.dim_commutator_quotient = cq.dim();
    Subspace Z = center(A);
    r.dim_Z = Z.dim();
    Subspace rad_space = radical(A);
    r.dim_rad = rad_space.dim();
    Subspace soc_space = socle(A);
    r.dim_soc = soc_space.dim();
    r.reynolds_dim = reynolds_ideal(Z, soc_space).dim();

    FormChoice forms = choose_forms(A, opts.seed);
    r.form_source = forms.source;
    if (forms.associative) r.form = form_predicates(*forms.associative, A);
    r.symmetric = forms.symmetric_form.has_value();

    if (r.symmetric) {
        KuelshammerTower tower = kuelshammer_ideals(cq, *forms.symmetric_form, Z, opts.depth_cap);
        r.stabilization_index = tower.t.stabilization_index;
        for (const auto& t : tower.t.spaces) r.tower_T.push_back(t.dim());
        for (const auto& p : tower.perps) r.tower_perp.push_back(p.dim());
        r.dim_A_mod_TA = A.dim() - tower.t.spaces.back().dim();
        if (opts.fingerprints)
            for (std::size_t n = 1; n < tower.perps.size(); ++n)
                r.fingerprints.push_back(ring_fingerprint(
                    quotient_ring(A, Z, tower.perps[n], r.name + ": Z/T" + std::to_string(n) + "perp")));
    } else {
        TSpaces ts = t_spaces(cq, opts.depth_cap);
        r.stabilization_index = ts.stabilization_index;
        for (const auto& t : ts.spaces) r.tower_T.push_back(t.dim());
        r.dim_A_mod_TA = A.dim() - ts.spaces.back().dim();
        // transport through the symmetric trivial extension when affordable
        if (A.dim() <= 128) {
            auto [TA, gram] = trivial_extension(A);
            auto cqT = commutator_quotient(TA);
            Subspace ZT = center(TA);
            KuelshammerTower towerT = kuelshammer_ideals(cqT, BilinearForm{gram}, ZT, opts.depth_cap);
            for (const auto& p : towerT.perps) r.trivext_perp.push_back(p.dim());
            // T_n(TA)^perp = Ann(T_n A) x 0 for n >= 1: dim = dim A - dim T_n(A)
            for (std::size_t n = 1; n < towerT.perps.size() && n < ts.spaces.size(); ++n)
                if (towerT.perps[n].dim() != A.dim() - ts.spaces[n].dim())
                    throw RouteMismatch("trivial extension transport disagrees with Ann(T_n) at n=" +
                                        std::to_string(n));
        }
    }
    if (!A.meta().vertex_idempotents.empty())
        r.stable = stable_invariants(cq, Z.dim(), r.symmetric);
    return r;
}

inline ordered_json report_to_json(const InvariantReport& r) {
    ordered_json j;
    j["name"] = r.name;
    j["field"] = field_to_json(r.field);
    ordered_json dims;
    dims["A"] = r.dim;
    dims["Z"] = r.dim_Z;
    dims["commutator"] = r.dim_commutator;
    dims["rad"] = r.dim_rad;
    dims["soc"] = r.dim_soc;
    dims["commutator_quotient"] = r.dim_commutator_quotient;
    j["dims"] = dims;
    ordered_json form;
    form["associative"] = r.form.associative;
    form["symmetric"] = r.form.symmetric;
    form["nondegenerate"] = r.form.nondegenerate;
    form["source"] = r.form_source;
    j["form"] = form;
    j["symmetric_algebra"] = r.symmetric;
    ordered_json tower = ordered_json::array();
    for (std::size_t n = 0; n < r.tower_T.size(); ++n) {
        ordered_json e;
        e["n"] = n;
        e["dim_Tn"] = r.tower_T[n];
        e["dim_Tn_mod_commutator"] = r.tower_T[n] - r.dim_commutator;
        if (n < r.tower_perp.size()) e["dim_Tn_perp"] = r.tower_perp[n];
        tower.push_back(e);
    }
    j["tower"] = tower;
    j["stabilization_index"] = r.stabilization_index;
    j["dim_A_mod_TA"] = r.dim_A_mod_TA;
    j["reynolds_dim"] = r.reynolds_dim;
    ordered_json fps = ordered_json::array();
    for (std::size_t n = 0; n < r.fingerprints.size(); ++n) {
        ordered_json f;
        f["n"] = n + 1;
        f["components"] = r.fingerprints[n].values;
        f["names"] = r.fingerprints[n].names;
        fps.push_back(f);
    }
    j["quotient_fingerprints"] = fps;
    if (!r.trivext_perp.empty()) j["trivial_extension_perp_dims"] = r.trivext_perp;
    if (r.stable) {
        ordered_json s;
        s["cartan_rank"] = r.stable->cartan_rank_over_K;
        s["dim_Z_pr"] = r.stable->dim_Z_pr;
        s["dim_Z_st"] = r.stable->dim_Z_st;
        s["dim_HH0_st"] = r.stable->dim_HH0_st;
        s["dim_commutator_quotient"] = r.stable->dim_commutator_quotient;
        j["stable"] = s;
    } else {
        j["stable"] = nullptr;
    }
    return j;
}

/// Comparison verdict: every comparable invariant is checked in a fixed order;
/// the first disagreement names the distinguishing invariant. When everything
/// agrees the verdict carries the list of agreeing invariants, and for small
/// commutative local quotients an explicit isomorphism search on Z/T_1^perp
/// upgrades "not distinguished" with provenance.
inline ordered_json compare_algebras(const Algebra& A, const Algebra& B,
                                     const ReportOptions& opts = {}) {
    if (A.field() != B.field()) throw FieldMismatch("compared algebras live over different fields");
    ordered_json j;
    j["left"] = A.meta().name;
    j["right"] = B.meta().name;
    if (algebra_to_json(A) == algebra_to_json(B)) {
        j["verdict"] = "isomorphic";
        j["witness"] = "identity (identical canonical presentations)";
        return j;
    }
    InvariantReport ra = build_report(A, opts), rb = build_report(B, opts);
    std::vector<std::string> agreeing;
    auto differ = [&](const std::string& name, const ordered_json& va, const ordered_json& vb) {
        j["verdict"] = "distinguished";
        j["invariant"] = name;
        j["left_value"] = va;
        j["right_value"] = vb;
        return j;
    };
    auto check = [&](const std::string& name, const ordered_json& va,
                     const ordered_json& vb) -> bool {
        if (va != vb) return true;
        agreeing.push_back(name);
        return false;
    };
    if (check("dim A", ra.dim, rb.dim)) return differ("dim A", ra.dim, rb.dim);
    if (check("dim Z", ra.dim_Z, rb.dim_Z)) return differ("dim Z", ra.dim_Z, rb.dim_Z);
    if (check("dim [A,A]", ra.dim_commutator, rb.dim_commutator))
        return differ("dim [A,A]", ra.dim_commutator, rb.dim_commutator);
    if (check("dim rad", ra.dim_rad, rb.dim_rad)) return differ("dim rad", ra.dim_rad, rb.dim_rad);
    if (check("dim soc", ra.dim_soc, rb.dim_soc)) return differ("dim soc", ra.dim_soc, rb.dim_soc);
    if (check("dim A/TA", ra.dim_A_mod_TA, rb.dim_A_mod_TA))
        return differ("dim A/TA", ra.dim_A_mod_TA, rb.dim_A_mod_TA);
    if (check("reynolds_dim", ra.reynolds_dim, rb.reynolds_dim))
        return differ("reynolds_dim", ra.reynolds_dim, rb.reynolds_dim);
    if (check("tower T dims", ra.tower_T, rb.tower_T))
        return differ("tower T dims", ra.tower_T, rb.tower_T);
    if (check("tower T_perp dims", ra.tower_perp, rb.tower_perp))
        return differ("tower T_perp dims", ra.tower_perp, rb.tower_perp);
    for (std::size_t n = 0; n < std::min(ra.fingerprints.size(), rb.fingerprints.size()); ++n) {
        auto diff = ra.fingerprints[n].first_difference(rb.fingerprints[n]);
        if (diff)
            return differ("quotient fingerprint at n=" + std::to_string(n + 1) + ", component #" +
                              std::to_string(diff->first) + " (" + diff->second + ")",
                          ra.fingerprints[n].values, rb.fingerprints[n].values);
        agreeing.push_back("quotient fingerprint at n=" + std::to_string(n + 1));
    }
    auto stable_tuple = [](const std::optional<StableInvariants>& s) {
        ordered_json v;
        if (s) v = {s->cartan_rank_over_K, s->dim_Z_pr, s->dim_Z_st, s->dim_HH0_st,
                    s->dim_commutator_quotient};
        return v;
    };
    if (check("stable invariants", stable_tuple(ra.stable), stable_tuple(rb.stable)))
        return differ("stable invariants", stable_tuple(ra.stable), stable_tuple(rb.stable));
    if (check("trivial extension perp dims", ra.trivext_perp, rb.trivext_perp))
        return differ("trivial extension perp dims", ra.trivext_perp, rb.trivext_perp);

    j["verdict"] = "not-distinguished";
    j["agreeing"] = agreeing;
    // backstop: explicit isomorphism search on Z/T_1^perp
    if (ra.symmetric && rb.symmetric && !ra.fingerprints.empty()) {
        auto quot = [&](const Algebra& X) {
            auto cq = commutator_quotient(X);
            auto Z = center(X);
            auto forms = choose_forms(X, opts.seed);
            auto tower = kuelshammer_ideals(cq, *forms.symmetric_form, Z, opts.depth_cap);
            return quotient_ring(X, Z, tower.perps[std::min<std::size_t>(1, tower.perps.size() - 1)]);
        };
        try {
            auto res = iso_search_local(quot(A), quot(B));
            if (res.outcome == IsoSearchResult::Outcome::isomorphic)
                j["z_mod_t1perp"] = "proved isomorphic by explicit map";
            else if (res.outcome == IsoSearchResult::Outcome::not_isomorphic) {
                j["verdict"] = "distinguished";
                j["invariant"] = "Z/T_1^perp isomorphism class (backtracking search)";
            }
        } catch (const SearchBoundExceeded&) {
            j["z_mod_t1perp"] = "inconclusive (search bound exceeded)";
        }
    }
    return j;
}

/// One report per grid cell; cells violating side conditions are recorded as
/// errors and the sweep continues. Cells are independent and pure, so they
/// may be evaluated in parallel; the row order stays deterministic.
inline ordered_json sweep(const std::string& family,
                          const std::vector<std::map<std::string, std::string>>& grid,
                          const FieldSpec* f, const ReportOptions& opts = {}, unsigned jobs = 1) {
    std::vector<ordered_json> cells(grid.size());
    auto run_cell = [&](std::size_t i) {
        ordered_json row;
        row["params"] = grid[i];
        try {
            Algebra A = instantiate(family, grid[i], f);
            row["report"] = report_to_json(build_report(A, opts));
        } catch (const std::exception& e) {
            row["error"] = e.what();
        }
        cells[i] = std::move(row);
    };
    if (jobs <= 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) run_cell(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= grid.size()) return;
                    run_cell(i);
                }
            });
        for (auto& th : pool) th.join();
    }
    ordered_json rows = ordered_json::array();
    for (auto& c : cells) rows.push_back(std::move(c));
    ordered_json j;
    j["family"] = family;
    j["field"] = field_to_json(f);
    j["cells"] = rows;
    return j;
}

} // namespace kita
