#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "presentation.hpp"
#include "form.hpp"

namespace kita {

/// A named family of quiver algebras, instantiable by parameters into a
/// validated presentation with the right length bound and property flags.
struct FamilySpec {
    std::string name;
    std::string description;
    std::vector<std::string> params;       // parameter names, in display order
    bool symmetric = false;                // expected properties, verified at instantiation
    bool selfinjective = false;
    bool split_basic = true;
    bool char2_only = false;
    bool untested = false;                 // registry template without verified claims

    struct Build {
        Quiver quiver;
        std::vector<Relation> relations;
        std::size_t length_bound = 8;
        bool symmetric_expected;            // may depend on parameters (e.g. Aq)
    };
    std::function<Build(const std::map<std::string, std::string>&, const FieldSpec*)> build;
    std::function<long long(const std::map<std::string, std::string>&)> dim_formula; // optional
};

namespace detail {

inline long long family_int(const std::map<std::string, std::string>& vals, const std::string& key) {
    auto it = vals.find(key);
    if (it == vals.end()) throw ParamOutOfRange("missing parameter '" + key + "'");
    try {
        return std::stoll(it->second);
    } catch (...) {
        throw ParamOutOfRange("parameter '" + key + "' is not an integer");
    }
}

inline bool family_has(const std::map<std::string, std::string>& vals, const std::string& key) {
    return vals.count(key) > 0;
}

inline FieldSpec::value_type family_scalar(const std::map<std::string, std::string>& vals,
                                           const std::string& key, const FieldSpec* f) {
    auto it = vals.find(key);
    if (it == vals.end()) throw ParamOutOfRange("missing parameter '" + key + "'");
    return f->parse(it->second);
}

inline void family_require(bool cond, const std::string& condition) {
    if (!cond) throw ParamOutOfRange("violated side condition: " + condition);
}

// ---- relation building helpers -------------------------------------------

// arrows referenced by index; `rep(path, k)` repeats a closed walk k times
inline std::vector<std::size_t> rep_path(const std::vector<std::size_t>& p, std::size_t k) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), p.begin(), p.end());
    return out;
}

inline std::vector<std::size_t> cat(std::initializer_list<std::vector<std::size_t>> parts) {
    std::vector<std::size_t> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// the quiver with one vertex and two loops X, Y
inline Quiver two_loop_quiver() { return {1, {{"X", 0, 0}, {"Y", 0, 0}}}; }

// the two-vertex quiver with loops alpha (at 0), eta (at 1) and arrows
// beta: 0 -> 1, gamma: 1 -> 0
inline Quiver quiver_2B() {
    return {2, {{"al", 0, 0}, {"be", 0, 1}, {"ga", 1, 0}, {"et", 1, 1}}};
}

// three vertices, arrows be: 0->1, ga: 1->0, de: 1->2, et: 2->1, ka: 0->2, la: 2->0
inline Quiver quiver_3K() {
    return {3, {{"be", 0, 1}, {"ga", 1, 0}, {"de", 1, 2}, {"et", 2, 1}, {"ka", 0, 2}, {"la", 2, 0}}};
}

inline FieldSpec::value_type fneg(const FieldSpec* f, FieldSpec::value_type v) { return f->neg(v); }

} // namespace detail

/// Registry of the named families. Instances come from the quiver/relation
/// tables of the dihedral, semidihedral and quaternion classification, the
/// deformed preprojective algebras of type L, and a few small utility
/// presentations.
inline const std::vector<FamilySpec>& family_registry() {
    using detail::family_int;
    using detail::family_scalar;
    using detail::family_has;
    using detail::family_require;
    using detail::rep_path;
    using detail::cat;
    static const std::vector<FamilySpec> reg = [] {
        std::vector<FamilySpec> fams;

        // ---- one simple module -------------------------------------------
        {
            FamilySpec fs;
            fs.name = "D1A1";
            fs.description = "dihedral, one simple: X^2, Y^2, (XY)^k - (YX)^k";
            fs.params = {"k"};
            fs.symmetric = fs.selfinjective = true;
            fs.build = [](const std::map<std::string, std::string>& v, const FieldSpec* f) {
                long long k = family_int(v, "k");
                family_require(k >= 1, "k >= 1");
                FamilySpec::Build b{detail::two_loop_quiver(), {}, std::size_t(2 * k + 2), true};
                const std::size_t X = 0, Y = 1;
                b.relations.push_back({{1, {X, X}}});
                b.relations.push_back({{1, {Y, Y}}});
                b.relations.push_back({{1, rep_path({X, Y}, k)}, {f->neg(1), rep_path({Y, X}, k)}});
                return b;
            };
            fs.dim_formula = [](const std::map<std::string, std::string>& v) {
                return 4 * family_int(v, "k");
            };
            fams.push_back(fs);
        }
        {
            FamilySpec fs;
            fs.name = "D1A2";
            fs.description = "dihedral, one simple, deformed (char 2)";
            fs.params = {"k", "d"};
            fs.symmetric = fs.selfinjective = true;
            fs.char2_only = true;
            fs.build = [](const std::map<std::string, std::string>& v, const FieldSpec* f) {
                long long k = family_int(v, "k"), d = family_int(v, "d");
                family_require(k >= 2, "k >= 2");
                family_require(d == 0 || d == 1, "d in {0, 1}");
                FamilySpec::Build b{detail::two_loop_quiver(), {}, std::size_t(2 * k + 3), true};
                const std::size_t X = 0, Y = 1;
                auto xyk = rep_path({X, Y}, k);
                b.relations.push_back({{1, {X, X}}, {f->neg(1), xyk}});
                if (d)
                    b.relations.push_back({{1, {Y, Y}}, {f->neg(f->from_int(d)), xyk}});
                else
                    b.relations.push_back({{1, {Y, Y}}});
                b.relations.push_back({{1, xyk}, {f->neg(1), rep_path({Y, X}, k)}});
                b.relations.push_back({{1, cat({xyk, {X}})}});
                b.relations.push_back({{1, cat({rep_path({Y, X}, k), {Y}})}});
                return b;
            };
            fams.push_back(fs);
        }
        {
            FamilySpec fs;
            fs.name = "SD1A1";
            fs.description = "semidihedral, one simple";
            fs.params = {"k"};
            fs.symmetric = fs.selfinjective = true;
            fs.build = [](const std::map<std::string, std::string>& v, const FieldSpec* f) {
                long long k = family_int(v, "k");
                family_require(k >= 2, "k >= 2");
                FamilySpec::Build b{detail::two_loop_quiver(), {}, std::size_t(2 * k + 3), true};
                const std::size_t X = 0, Y = 1;
                b.relations.push_back({{1, rep_path({X, Y}, k)}, {f->neg(1), rep_path({Y, X}, k)}});
                b.relations.push_back({{1, cat({rep_path({X, Y}, k), {X}})}});
                b.relations.push_back({{1, {Y, Y}}});
                b.relations.push_back({{1, {X, X}}, {f->neg(1), cat({rep_path({Y, X}, k - 1), {Y}})}});
                return b;
            };
            fams.push_back(fs);
        }
        {
            FamilySpec fs;
            fs.name = "SD1A2";
            fs.description = "semidihedral, one simple, deformed (char 2)";
            fs.params = {"k", "c", "d"};
            fs.symmetric = fs.selfinjective = true;
            fs.char2_only = true;
            fs.build = [](const std::map<std::string, std::string>& v, const FieldSpec* f) {
                long long k = family_int(v, "k"), c = family_int(v, "c"), d = family_int(v, "d");
                family_require(k >= 2, "k >= 2");
                family_require(c != 0 || d != 0, "(c,d) != (0,0)");
                FamilySpec::Build b{detail::two_loop_quiver(), {}, std::size_t(2 * k + 3), true};
                const std::size_t X = 0, Y = 1;
                auto xyk = rep_path({X, Y}, k);
                b.relations.push_back({{1, xyk}, {f->neg(1), rep_path({Y, X}, k)}});
                b.relations.push_back({{1, cat({xyk, {X}})}});
                Relation r3{{1, {Y, Y}}};
                if (d) r3.push_back({f->neg(f->from_int(d)), xyk});
                b.relations.push_back(r3);
                Relation r4{{1, {X, X}}, {f->neg(1), cat({rep_path({Y, X}, k - 1), {Y}})}};
                if (c) r4.push_back({f->from_int(c), xyk});
                b.relations.push_back(r4);
                return b;
            };
            fams.push_back(fs);
        }
        {
            FamilySpec fs;
            fs.name = "Q1A1";
            fs.description = "quaternion, one simple";
            fs.params = {"k"};
            fs.symmetric = fs.selfinjective = true;
            fs.build = [](const std::map<std::string, std::string>& v, const FieldSpec* f) {
                long long k = family_int(v, "k");
                family_require(k >= 2, "k >= 2");
                FamilySpec::Build b{detail::two_loop_quiver(), {}, std::size_t(2 * k + 3), true};
                const std::size_t X = 0, Y = 1;
                b.relations.push_back({{1, rep_path({X, Y}, k)}, {f->neg(1), rep_path({Y, X}, k)}});
                b.relations.push_back({{1, cat({rep_path({X, Y}, k), {X}})}});
                b.relations.push_back({{1, {Y, Y}}, {f->neg(1), cat({rep_path({X, Y}, k - 1), {X}})}});
                b.relations.push_back({{1, {X, X}}, {f->neg(1), cat({rep_path({Y, X}, k - 1), {Y}})}});
                return b;
            };
            fams.push_back(fs);
        }
        {
            FamilySpec fs;
            fs.name = "Q1A2";
            fs.description = "quaternion, one simple, deformed (char 2)";
            fs.params = {"k", "c", "d"};
            fs.symmetric = fs.selfinjective = true;
            fs.char2_only = true;
            fs.build = [](const std::map<std::string, std::string>& v, const FieldSpec* f) {
                long long k = family_int(v, "k"), c = family_int(v, "c"), d = family_int(v, "d");
                family_require(k >= 2, "k >= 2");
                family_require(c != 0 || d != 0, "(c,d) != (0,0)");
                FamilySpec::Build b{detail::two_loop_quiver(), {}, std::size_t(2 * k + 3), true};
                const std::size_t X = 0, Y = 1;
                auto xyk = rep_path({X, Y}, k);
                Relation r1{{1, {X, X}}, {f->neg(1), cat({rep_path({Y, X}, k - 1), {Y}})}};
                if (c) r1.push_back({f->neg(f->from_int(c)), xyk});
                b.relations.push_back(r1);
                Relation r2{{1, {Y, Y}}, {f->neg(1), cat({rep_path({X, Y}, k - 1), {X}})}};
                if (d) r2.push_back({f->neg(f->from_int(d)), xyk});
                b.relations.push_back(r2);
                b.relations.push_back({{1, xyk}, {f->neg(1), rep_path({Y, X}, k)}});
                b.relations.push_back({{1, cat({xyk, {X}})}});
                b.relations.push_back({{1, cat({rep_path({Y, X}, k), {Y}})}});
                return b;
            };
            fams.push_back(fs);
        }

        // ---- two simple modules ------------------------------------------
        // arrows of quiver_2B: 0 = al (loop at 0), 1 = be (0->1), 2 = ga (1->0), 3 = et (loop at 1)
        {
            FamilySpec fs;
            fs.name = "D2B";
            fs.description = "dihedral, two simples: be*et, et*ga, ga*be, al^2 - c(al be ga)^k, ...";
            fs.params = {"k", "s", "c"};
            fs.symmetric = fs.selfinjective = true;
            fs.build = [](const std::map<std::string, std::string>& v, const FieldSpec* f) {
                long long k = family_int(v, "k"), s = family_int(v, "s"), c = family_int(v, "c");
                family_require(k >= 1 && s >= 1, "k >= 1, s >= 1");
                family_require(c == 0 || c == 1, "c in {0, 1}");
                FamilySpec::Build b{detail::quiver_2B(), {},
                                    std::size_t(std::max<long long>(3 * k, s) + 2), true};
                const std::size_t al = 0, be = 1, ga = 2, et = 3;
                b.relations.push_back({{1, {be, et}}});
                b.relations.push_back({{1, {et, ga}}});
                b.relations.push_back({{1, {ga, be}}});
                Relation ralpha{{1, {al, al}}};
                if (c) ralpha.push_back({f->neg(f->from_int(c)), rep_path({al, be, ga}, k)});
                b.relations.push_back(ralpha);
                b.relations.push_back({{1, rep_path({al, be, ga}, k)},
                                       {f->neg(1), rep_path({be, ga, al}, k)}});
                b.relations.push_back({{1, rep_path({et}, s)}, {f->neg(1), rep_path({ga, al, be}, k)}});
                return b;
            };
            fams.push_back(fs);
        }
        {
            FamilySpec fs;
            fs.name = "SD2B1";
            fs.description = "semidihedral, two simples, first type";
            fs.params = {"k", "t", "c"};
            fs.symmetric = fs.selfinjective = true;
            fs.build = [](const std::map<std::string, std::string>& v, const FieldSpec* f) {
                long long k = family_int(v, "k"), t = family_int(v, "t"), c = family_int(v, "c");
                family_require(k >= 1 && t >= 2, "k >= 1, t >= 2");
                family_require(c == 0 || c == 1, "c in {0, 1}");
                FamilySpec::Build b{detail::quiver_2B(), {},
                                    std::size_t(std::max<long long>(3 * k, t) + 2), true};
                const std::size_t al = 0, be = 1, ga = 2, et = 3;
                b.relations.push_back({{1, {ga, be}}});
                b.relations.push_back({{1, {et, ga}}});
                b.relations.push_back({{1, {be, et}}});
                Relation ralpha{{1, {al, al}},
                                {f->neg(1), cat({rep_path({be, ga, al}, k - 1), {be, ga}})}};
                if (c) ralpha.push_back({f->neg(f->from_int(c)), rep_path({al, be, ga}, k)});
                b.relations.push_back(ralpha);
                b.relations.push_back({{1, rep_path({et}, t)}, {f->neg(1), rep_path({ga, al, be}, k)}});
                b.relations.push_back({{1, rep_path({al, be, ga}, k)},
                                       {f->neg(1), rep_path({be, ga, al}, k)}});
                return b;
            };
            fams.push_back(fs);
        }
        {
            FamilySpec fs;
            fs.name = "SD2B2";
            fs.description = "semidihedral, two simples, second type";
            fs.params = {"k", "t", "c"};
            fs.symmetric = fs.selfinjective = true;
            fs.build = [](const std::map<std::string, std::string>& v, const FieldSpec* f) {
                long long k = family_int(v, "k"), t = family_int(v, "t"), c = family_int(v, "c");
                family_require(k >= 1 && t >= 2 && k + t >= 4, "k >= 1, t >= 2, k+t >= 4");
                family_require(c == 0 || c == 1, "c in {0, 1}");
                FamilySpec::Build b{detail::quiver_2B(), {},
                                    std::size_t(std::max<long long>(3 * k, t) + 3), true};
                const std::size_t al = 0, be = 1, ga = 2, et = 3;
                b.relations.push_back({{1, {be, et}},
                                       {f->neg(1), cat({rep_path({al, be, ga}, k - 1), {al, be}})}});
                b.relations.push_back({{1, {et, ga}},
                                       {f->neg(1), cat({rep_path({ga, al, be}, k - 1), {ga, al}})}});
                b.relations.push_back({{1, {ga, be}}, {f->neg(1), rep_path({et}, t - 1)}});
                Relation ralpha{{1, {al, al}}};
                if (c) ralpha.push_back({f->neg(f->from_int(c)), rep_path({al, be, ga}, k)});
                b.relations.push_back(ralpha);
                b.relations.push_back({{1, {be, et, et}}});
                b.relations.push_back({{1, {et, et, ga}}});
                return b;
            };
            fams.push_back(fs);
        }
        {
            FamilySpec fs;
            fs.name = "Q2B1";
            fs.description = "quaternion, two simples";
            fs.params = {"k", "s", "a", "c"};
            fs.symmetric = fs.selfinjective = true;
            fs.build = [](const std::map<std::string, std::string>& v, const FieldSpec* f) {
                long long k = family_int(v, "k"), s = family_int(v, "s");
                auto a = family_scalar(v, "a", f);
                auto c = family_scalar(v, "c", f);
                family_require(k >= 1 && s >= 3, "k >= 1, s >= 3");
                family_require(a != 0, "a != 0");
                FamilySpec::Build b{detail::quiver_2B(), {},
                                    std::size_t(std::max<long long>(3 * k, s) + 3), true};
                const std::size_t al = 0, be = 1, ga = 2, et = 3;
                b.relations.push_back({{1, {ga, be}}, {f->neg(1), rep_path({et}, s - 1)}});
                b.relations.push_back({{1, {be, et}},
                                       {f->neg(1), cat({rep_path({al, be, ga}, k - 1), {al, be}})}});
                b.relations.push_back({{1, {et, ga}},
                                       {f->neg(1), cat({rep_path({ga, al, be}, k - 1), {ga, al}})}});
                Relation ralpha{{1, {al, al}},
                                {f->neg(a), cat({rep_path({be, ga, al}, k - 1), {be, ga}})}};
                if (c) ralpha.push_back({f->neg(c), rep_path({be, ga, al}, k)});
                b.relations.push_back(ralpha);
                b.relations.push_back({{1, {al, al, be}}});
                b.relations.push_back({{1, {ga, al, al}}});
                return b;
            };
            fams.push_back(fs);
        }

        // ---- three simple modules ----------------------------------------
        // arrows of quiver_3K: 0 = be (0->1), 1 = ga (1->0), 2 = de (1->2),
        //                      3 = et (2->1), 4 = ka (0->2), 5 = la (2->0)
        {
            FamilySpec fs;
            fs.name = "D3K";
            fs.description = "dihedral, three simples";
            fs.params = {"a", "b", "c"};
            fs.symmetric = fs.selfinjective = true;
            fs.build = [](const std::map<std::string, std::string>& v, const FieldSpec* f) {
                long long a = family_int(v, "a"), b_ = family_int(v, "b"), c = family_int(v, "c");
                family_require(a >= b_ && b_ >= c && c >= 1, "a >= b >= c >= 1");
                FamilySpec::Build b{detail::quiver_3K(), {},
                                    std::size_t(2 * std::max({a, b_, c}) + 3), true};
                const std::size_t be = 0, ga = 1, de = 2, et = 3, ka = 4, la = 5;
                b.relations.push_back({{1, {be, de}}});
                b.relations.push_back({{1, {de, la}}});
                b.relations.push_back({{1, {la, be}}});
                b.relations.push_back({{1, {ga, ka}}});
                b.relations.push_back({{1, {ka, et}}});
                b.relations.push_back({{1, {et, ga}}});
                b.relations.push_back({{1, rep_path({be, ga}, a)}, {f->neg(1), rep_path({ka, la}, b_)}});
                b.relations.push_back({{1, rep_path({la, ka}, b_)}, {f->neg(1), rep_path({et, de}, c)}});
                b.relations.push_back({{1, rep_path({de, et}, c)}, {f->neg(1), rep_path({ga, be}, a)}});
                return b;
            };
            fams.push_back(fs);
        }
        {
            FamilySpec fs;
            fs.name = "SD3K";
            fs.description = "semidihedral, three simples";
            fs.params = {"a", "b", "c"};
            fs.symmetric = fs.selfinjective = true;
            fs.untested = true;
            fs.build = [](const std::map<std::string, std::string>& v, const FieldSpec* f) {
                long long a = family_int(v, "a"), b_ = family_int(v, "b"), c = family_int(v, "c");
                family_require(a >= b_ && b_ >= c && c >= 1 && a >= 2, "a >= b >= c >= 1, a >= 2");
                FamilySpec::Build b{detail::quiver_3K(), {},
                                    std::size_t(2 * std::max({a, b_, c}) + 4), true};
                const std::size_t be = 0, ga = 1, de = 2, et = 3, ka = 4, la = 5;
                b.relations.push_back({{1, {ka, et}}});
                b.relations.push_back({{1, {et, ga}}});
                b.relations.push_back({{1, {ga, ka}}});
                b.relations.push_back({{1, {de, la}}, {f->neg(1), cat({rep_path({ga, be}, a - 1), {ga}})}});
                b.relations.push_back({{1, {be, de}}, {f->neg(1), cat({rep_path({ka, la}, b_ - 1), {ka}})}});
                b.relations.push_back({{1, {la, be}}, {f->neg(1), cat({rep_path({et, de}, c - 1), {et}})}});
                return b;
            };
            fams.push_back(fs);
        }
        {
            FamilySpec fs;
            fs.name = "Q3K";
            fs.description = "quaternion, three simples";
            fs.params = {"a", "b", "c"};
            fs.symmetric = fs.selfinjective = true;
            fs.untested = true;
            fs.build = [](const std::map<std::string, std::string>& v, const FieldSpec* f) {
                long long a = family_int(v, "a"), b_ = family_int(v, "b"), c = family_int(v, "c");
                family_require(a >= b_ && b_ >= c && c >= 1 && b_ >= 2, "a >= b >= c >= 1, b >= 2");
                family_require(!(a == 2 && b_ == 2 && c == 1), "(a,b,c) != (2,2,1)");
                FamilySpec::Build b{detail::quiver_3K(), {},
                                    std::size_t(2 * std::max({a, b_, c}) + 4), true};
                const std::size_t be = 0, ga = 1, de = 2, et = 3, ka = 4, la = 5;
                b.relations.push_back({{1, {be, de}}, {f->neg(1), cat({rep_path({ka, la}, a - 1), {ka}})}});
                b.relations.push_back({{1, {et, ga}}, {f->neg(1), cat({rep_path({la, ka}, a - 1), {la}})}});
                b.relations.push_back({{1, {de, la}}, {f->neg(1), cat({rep_path({ga, be}, b_ - 1), {ga}})}});
                b.relations.push_back({{1, {ka, et}}, {f->neg(1), cat({rep_path({be, ga}, b_ - 1), {be}})}});
                b.relations.push_back({{1, {la, be}}, {f->neg(1), cat({rep_path({et, de}, c - 1), {et}})}});
                b.relations.push_back({{1, {ga, ka}}, {f->neg(1), cat({rep_path({de, et}, c - 1), {de}})}});
                b.relations.push_back({{1, {ga, be, de}}});
                b.relations.push_back({{1, {de, et, ga}}});
                b.relations.push_back({{1, {la, ka, et}}});
                return b;
            };
            fams.push_back(fs);
        }
        {
            FamilySpec fs;
            fs.name = "D3R";
            fs.description = "dihedral, three simples, type R";
            fs.params = {"k", "s", "t", "u"};
            fs.symmetric = fs.selfinjective = true;
            fs.untested = true;
            fs.build = [](const std::map<std::string, std::string>& v, const FieldSpec* f) {
                long long k = family_int(v, "k"), s = family_int(v, "s"), t = family_int(v, "t"),
                          u = family_int(v, "u");
                family_require(s >= t && t >= u && u >= k && k >= 1 && t >= 2,
                               "s >= t >= u >= k >= 1, t >= 2");
                Quiver q{3,
                         {{"al", 0, 0}, {"be", 0, 1}, {"rho", 1, 1}, {"de", 1, 2}, {"xi", 2, 2},
                          {"la", 2, 0}}};
                FamilySpec::Build b{q, {}, std::size_t(std::max<long long>(3 * k, std::max({s, t, u})) + 2), true};
                const std::size_t al = 0, be = 1, rho = 2, de = 3, xi = 4, la = 5;
                b.relations.push_back({{1, {al, be}}});
                b.relations.push_back({{1, {be, rho}}});
                b.relations.push_back({{1, {rho, de}}});
                b.relations.push_back({{1, {de, xi}}});
                b.relations.push_back({{1, {xi, la}}});
                b.relations.push_back({{1, {la, al}}});
                b.relations.push_back({{1, rep_path({al}, s)}, {f->neg(1), rep_path({be, de, la}, k)}});
                b.relations.push_back({{1, rep_path({rho}, t)}, {f->neg(1), rep_path({de, la, be}, k)}});
                b.relations.push_back({{1, rep_path({xi}, u)}, {f->neg(1), rep_path({la, be, de}, k)}});
                return b;
            };
            fams.push_back(fs);
        }
        {
            FamilySpec fs;
            fs.name = "Q3A1";
            fs.description = "quaternion, three simples, type A, k = s = 2";
            fs.params = {"d"};
            fs.symmetric = fs.selfinjective = true;
            fs.untested = true;
            fs.build = [](const std::map<std::string, std::string>& v, const FieldSpec* f) {
                auto d = family_scalar(v, "d", f);
                family_require(d != 0 && d != 1, "d not in {0, 1}");
                Quiver q{3, {{"be", 0, 1}, {"ga", 1, 0}, {"de", 1, 2}, {"et", 2, 1}}};
                FamilySpec::Build b{q, {}, 8, true};
                const std::size_t be = 0, ga = 1, de = 2, et = 3;
                b.relations.push_back({{1, {be, de, et}}, {f->neg(1), {be, ga, be}}});
                b.relations.push_back({{1, {de, et, ga}}, {f->neg(1), {ga, be, ga}}});
                b.relations.push_back({{1, {et, ga, be}}, {f->neg(d), {et, de, et}}});
                b.relations.push_back({{1, {ga, be, de}}, {f->neg(d), {de, et, de}}});
                b.relations.push_back({{1, {be, de, et, de}}});
                b.relations.push_back({{1, {et, ga, be, ga}}});
                return b;
            };
            fams.push_back(fs);
        }

        // ---- deformed preprojective type L --------------------------------
        {
            FamilySpec fs;
            fs.name = "Ln";
            fs.description =
                "deformed preprojective algebra of type L: loop eps at 0, arms a_i/abar_i; "
                "eps^2 + a0 abar0 + eps^3 p(eps) = 0 with p(X) = X^(2j) (omit j for p = 0)";
            fs.params = {"n", "j"};
            fs.symmetric = fs.selfinjective = true;
            fs.build = [](const std::map<std::string, std::string>& v, const FieldSpec* f) {
                long long n = family_int(v, "n");
                family_require(n >= 2, "n >= 2");
                bool deformed = family_has(v, "j");
                long long j = deformed ? family_int(v, "j") : 0;
                if (deformed) {
                    family_require(j >= 0 && j < n, "0 <= j < n");
                    family_require(f->p() == 2, "deformation X^(2j) requires characteristic 2");
                }
                Quiver q;
                q.vertices = std::size_t(n);
                q.arrows.push_back({"eps", 0, 0}); // arrow 0
                for (long long i = 0; i + 1 < n; ++i) {
                    q.arrows.push_back({"a" + std::to_string(i), std::size_t(i), std::size_t(i + 1)});
                    q.arrows.push_back({"A" + std::to_string(i), std::size_t(i + 1), std::size_t(i)});
                }
                auto a = [&](long long i) { return std::size_t(1 + 2 * i); };
                auto abar = [&](long long i) { return std::size_t(2 + 2 * i); };
                FamilySpec::Build b{q, {}, std::size_t(2 * n + 1), true};
                for (long long i = 1; i + 1 < n; ++i)
                    b.relations.push_back({{1, {a(i), abar(i)}}, {1, {abar(i - 1), a(i - 1)}}});
                b.relations.push_back({{1, {abar(n - 2), a(n - 2)}}});
                b.relations.push_back({{1, rep_path({0}, std::size_t(2 * n))}});
                Relation deform{{1, {0, 0}}, {1, {a(0), abar(0)}}};
                if (deformed) deform.push_back({1, rep_path({0}, std::size_t(3 + 2 * j))});
                b.relations.push_back(deform);
                return b;
            };
            fs.dim_formula = [](const std::map<std::string, std::string>& v) {
                long long n = family_int(v, "n");
                return n * (n + 1) * (2 * n + 1) / 3;
            };
            fams.push_back(fs);
        }

        // ---- small quantum / utility presentations ------------------------
        {
            FamilySpec fs;
            fs.name = "Aq";
            fs.description = "quantum exterior algebra K<X,Y>/(X^2, Y^2, XY - q YX)";
            fs.params = {"q"};
            fs.selfinjective = true; // symmetric exactly when q = 1
            fs.build = [](const std::map<std::string, std::string>& v, const FieldSpec* f) {
                auto q = family_scalar(v, "q", f);
                family_require(q != 0, "q != 0");
                FamilySpec::Build b{detail::two_loop_quiver(), {}, 3, q == 1};
                const std::size_t X = 0, Y = 1;
                b.relations.push_back({{1, {X, X}}});
                b.relations.push_back({{1, {Y, Y}}});
                b.relations.push_back({{1, {X, Y}}, {f->neg(q), {Y, X}}});
                return b;
            };
            fs.dim_formula = [](const std::map<std::string, std::string>&) { return 4ll; };
            fams.push_back(fs);
        }
        {
            FamilySpec fs;
            fs.name = "Alambda";
            fs.description = "domestic two-loop algebra A(lambda), alias of Aq";
            fs.params = {"l"};
            fs.selfinjective = true;
            fs.untested = true;
            fs.build = [](const std::map<std::string, std::string>& v, const FieldSpec* f) {
                auto l = family_scalar(v, "l", f);
                family_require(l != 0, "lambda != 0");
                FamilySpec::Build b{detail::two_loop_quiver(), {}, 3, l == 1};
                const std::size_t X = 0, Y = 1;
                b.relations.push_back({{1, {X, X}}});
                b.relations.push_back({{1, {Y, Y}}});
                b.relations.push_back({{1, {X, Y}}, {f->neg(l), {Y, X}}});
                return b;
            };
            fams.push_back(fs);
        }
        {
            FamilySpec fs;
            fs.name = "PreprojA";
            fs.description = "preprojective algebra of type A_n";
            fs.params = {"n"};
            fs.selfinjective = true;
            fs.untested = true;
            fs.build = [](const std::map<std::string, std::string>& v, const FieldSpec* f) {
                long long n = family_int(v, "n");
                family_require(n >= 2, "n >= 2");
                Quiver q;
                q.vertices = std::size_t(n);
                for (long long i = 0; i + 1 < n; ++i) {
                    q.arrows.push_back({"a" + std::to_string(i), std::size_t(i), std::size_t(i + 1)});
                    q.arrows.push_back({"A" + std::to_string(i), std::size_t(i + 1), std::size_t(i)});
                }
                auto a = [&](long long i) { return std::size_t(2 * i); };
                auto abar = [&](long long i) { return std::size_t(2 * i + 1); };
                FamilySpec::Build b{q, {}, std::size_t(n + 2), false};
                b.relations.push_back({{1, {a(0), abar(0)}}});
                b.relations.push_back({{1, {abar(n - 2), a(n - 2)}}});
                for (long long i = 1; i + 1 < n; ++i)
                    b.relations.push_back(
                        {{1, {abar(i - 1), a(i - 1)}}, {f->neg(1), {a(i), abar(i)}}});
                return b;
            };
            fams.push_back(fs);
        }
        {
            FamilySpec fs;
            fs.name = "PathAn";
            fs.description = "path algebra of the linear A_n quiver (no relations)";
            fs.params = {"n"};
            fs.build = [](const std::map<std::string, std::string>& v, const FieldSpec*) {
                long long n = family_int(v, "n");
                family_require(n >= 1, "n >= 1");
                Quiver q;
                q.vertices = std::size_t(n);
                for (long long i = 0; i + 1 < n; ++i)
                    q.arrows.push_back({"a" + std::to_string(i), std::size_t(i), std::size_t(i + 1)});
                return FamilySpec::Build{q, {}, std::size_t(std::max<long long>(1, n - 1)), false};
            };
            fs.dim_formula = [](const std::map<std::string, std::string>& v) {
                long long n = family_int(v, "n");
                return n * (n + 1) / 2;
            };
            fams.push_back(fs);
        }
        {
            FamilySpec fs;
            fs.name = "kx";
            fs.description = "truncated polynomial algebra K[x]/(x^m)";
            fs.params = {"m"};
            fs.symmetric = fs.selfinjective = true;
            fs.build = [](const std::map<std::string, std::string>& v, const FieldSpec*) {
                long long m = family_int(v, "m");
                family_require(m >= 2, "m >= 2");
                Quiver q{1, {{"x", 0, 0}}};
                FamilySpec::Build b{q, {}, std::size_t(m + 1), true};
                b.relations.push_back({{1, rep_path({0}, std::size_t(m))}});
                return b;
            };
            fs.dim_formula = [](const std::map<std::string, std::string>& v) {
                return family_int(v, "m");
            };
            fams.push_back(fs);
        }
        return fams;
    }();
    return reg;
}

inline const FamilySpec& find_family(const std::string& name) {
    for (const auto& f : family_registry())
        if (f.name == name) return f;
    throw UnknownFamily("no family named '" + name + "'");
}

/// "Name[k=2,s=3,c=0]" -> (Name, {{"k","2"},...}); a bare name has no params.
inline std::pair<std::string, std::map<std::string, std::string>>
parse_instance_name(const std::string& text) {
    auto lb = text.find('[');
    if (lb == std::string::npos) return {text, {}};
    if (text.back() != ']') throw BadInput("instance name must look like Name[k=v,...]");
    std::string name = text.substr(0, lb);
    std::string body = text.substr(lb + 1, text.size() - lb - 2);
    std::map<std::string, std::string> params;
    std::size_t pos = 0;
    while (pos < body.size()) {
        auto comma = body.find(',', pos);
        std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        auto eq = item.find('=');
        if (eq == std::string::npos) throw BadInput("instance parameter '" + item + "' lacks '='");
        params[item.substr(0, eq)] = item.substr(eq + 1);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return {name, params};
}

inline std::string instance_display_name(const std::string& family,
                                         const std::map<std::string, std::string>& params) {
    if (params.empty()) return family;
    std::string s = family + "[";
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first) s += ",";
        first = false;
        s += k + "=" + v;
    }
    return s + "]";
}

/// Instantiate a registry family. Expected-property flags are verified for
/// tested families: selfinjective instances must carry a nondegenerate socle
/// form, symmetric ones a symmetric associative nondegenerate witness.
inline Algebra instantiate(const std::string& family_name,
                           const std::map<std::string, std::string>& params, const FieldSpec* f) {
    const FamilySpec& fs = find_family(family_name);
    if (fs.char2_only && f->p() != 2)
        throw ParamOutOfRange("family " + fs.name + " requires characteristic 2");
    auto build = fs.build(params, f);
    std::string display = instance_display_name(family_name, params);
    Algebra A = quotient_algebra(build.quiver, build.relations, f, build.length_bound, display);
    A.meta().split_basic = fs.split_basic;
    if (fs.dim_formula) {
        long long expect = fs.dim_formula(params);
        if ((long long)A.dim() != expect)
            throw InvalidAlgebra(display + ": computed dimension " + std::to_string(A.dim()) +
                                 " differs from the formula value " + std::to_string(expect));
    }
    if (!fs.untested) {
        if (fs.selfinjective) socle_form(A); // throws DegenerateForm if not selfinjective
        if (build.symmetric_expected) {
            auto sf = socle_form(A);
            if (!(sf.gram == sf.gram.transpose())) {
                auto search = find_symmetric_form(A);
                if (search.outcome != SymmetricFormSearch::Outcome::witness)
                    throw InvalidAlgebra(display + ": expected a symmetric form witness");
            }
        }
    }
    return A;
}

} // namespace kita
