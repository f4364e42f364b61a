#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "families.hpp"

namespace kita {

using ordered_json = nlohmann::ordered_json;

inline ordered_json field_to_json(const FieldSpec* f) {
    ordered_json j;
    j["p"] = f->p();
    j["e"] = f->e();
    j["modulus"] = f->modulus();
    return j;
}

inline const FieldSpec* field_from_json(const ordered_json& j) {
    if (!j.contains("p")) throw BadInput("field spec needs 'p'");
    std::uint64_t p = j.at("p").get<std::uint64_t>();
    unsigned e = j.value("e", 1u);
    if (j.contains("modulus")) {
        std::vector<FieldSpec::value_type> mod = j.at("modulus").get<std::vector<FieldSpec::value_type>>();
        return FieldSpec::get(p, e, std::move(mod));
    }
    return FieldSpec::get(p, e);
}

/// --field "p=2,e=2,mod=1,1,1" (everything after mod= belongs to the modulus)
inline const FieldSpec* field_from_flag(const std::string& text) {
    std::uint64_t p = 0;
    unsigned e = 1;
    std::vector<FieldSpec::value_type> mod;
    std::string rest = text;
    while (!rest.empty()) {
        auto eq = rest.find('=');
        if (eq == std::string::npos) throw BadInput("bad --field syntax near '" + rest + "'");
        std::string key = rest.substr(0, eq);
        if (key == "mod") {
            std::string vals = rest.substr(eq + 1);
            std::size_t pos = 0;
            while (pos < vals.size()) {
                auto comma = vals.find(',', pos);
                mod.push_back(FieldSpec::value_type(
                    std::stoul(vals.substr(pos, comma == std::string::npos ? std::string::npos
                                                                           : comma - pos))));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            rest.clear();
        } else {
            auto comma = rest.find(',', eq);
            std::string val = rest.substr(eq + 1, comma == std::string::npos ? std::string::npos
                                                                             : comma - eq - 1);
            if (key == "p") p = std::stoull(val);
            else if (key == "e") e = unsigned(std::stoul(val));
            else throw BadInput("unknown --field key '" + key + "'");
            rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
        }
    }
    if (p == 0) throw BadInput("--field needs p=<prime>");
    if (!mod.empty()) return FieldSpec::get(p, e, std::move(mod));
    return FieldSpec::get(p, e);
}

inline ordered_json algebra_to_json(const Algebra& A) {
    const FieldSpec* f = A.field();
    ordered_json j;
    j["field"] = field_to_json(f);
    j["dim"] = A.dim();
    j["labels"] = A.labels();
    ordered_json unit = ordered_json::array();
    for (auto v : A.unit()) unit.push_back(f->to_string(v));
    j["unit"] = unit;
    ordered_json structure = ordered_json::array();
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t jdx = 0; jdx < A.dim(); ++jdx)
            for (const auto& e : A.basis_product(i, jdx))
                structure.push_back(
                    ordered_json::array({i, jdx, e.first, f->to_string(e.second)}));
    j["structure"] = structure;
    ordered_json meta;
    const auto& m = A.meta();
    switch (m.kind) {
        case AlgebraMetadata::Kind::quiver: meta["kind"] = "quiver"; break;
        case AlgebraMetadata::Kind::group: meta["kind"] = "group"; break;
        case AlgebraMetadata::Kind::trivial_extension: meta["kind"] = "trivial_extension"; break;
        default: meta["kind"] = "adhoc";
    }
    if (!m.name.empty()) meta["name"] = m.name;
    if (!m.vertex_idempotents.empty()) meta["vertex_idempotents"] = m.vertex_idempotents;
    meta["arrow_ideal_radical"] = m.arrow_ideal_radical;
    if (!m.socle_basis.empty()) meta["socle_basis"] = m.socle_basis;
    if (!m.paths.empty()) {
        ordered_json paths = ordered_json::array();
        for (const auto& pi : m.paths) {
            ordered_json pj;
            pj["source"] = pi.source;
            pj["target"] = pi.target;
            pj["arrows"] = pi.arrows;
            paths.push_back(pj);
        }
        meta["paths"] = paths;
    }
    meta["split_basic"] = m.split_basic;
    meta["cartan_convention"] = m.cartan_convention;
    j["metadata"] = meta;
    return j;
}

inline Algebra algebra_from_json(const ordered_json& j) {
    const FieldSpec* f = field_from_json(j.at("field"));
    std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    Vec unit(dim, 0);
    {
        const auto& ju = j.at("unit");
        if (ju.size() != dim) throw BadInput("unit vector length differs from dim");
        for (std::size_t i = 0; i < dim; ++i)
            unit[i] = ju[i].is_string() ? f->parse(ju[i].get<std::string>())
                                        : f->from_int(ju[i].get<long long>());
    }
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, FieldSpec::value_type>> structure;
    for (const auto& item : j.at("structure")) {
        if (item.size() != 4) throw BadInput("structure entries are [i, j, k, c]");
        FieldSpec::value_type c = item[3].is_string() ? f->parse(item[3].get<std::string>())
                                                      : f->from_int(item[3].get<long long>());
        structure.emplace_back(item[0].get<std::size_t>(), item[1].get<std::size_t>(),
                               item[2].get<std::size_t>(), c);
    }
    AlgebraMetadata meta;
    if (j.contains("metadata")) {
        const auto& m = j.at("metadata");
        std::string kind = m.value("kind", "adhoc");
        if (kind == "quiver") meta.kind = AlgebraMetadata::Kind::quiver;
        else if (kind == "group") meta.kind = AlgebraMetadata::Kind::group;
        else if (kind == "trivial_extension") meta.kind = AlgebraMetadata::Kind::trivial_extension;
        meta.name = m.value("name", "");
        if (m.contains("vertex_idempotents"))
            meta.vertex_idempotents = m.at("vertex_idempotents").get<std::vector<std::size_t>>();
        meta.arrow_ideal_radical = m.value("arrow_ideal_radical", false);
        if (m.contains("socle_basis"))
            meta.socle_basis = m.at("socle_basis").get<std::vector<std::size_t>>();
        if (m.contains("paths"))
            for (const auto& pj : m.at("paths")) {
                PathInfo pi;
                pi.source = pj.value("source", -1);
                pi.target = pj.value("target", -1);
                if (pj.contains("arrows")) pi.arrows = pj.at("arrows").get<std::vector<int>>();
                meta.paths.push_back(std::move(pi));
            }
        meta.split_basic = m.value("split_basic", false);
        meta.cartan_convention = m.value("cartan_convention", meta.cartan_convention);
    }
    return Algebra::from_structure(f, dim, std::move(labels), structure, std::move(unit),
                                   std::move(meta), true);
}

/// Quiver presentation: {"vertices": n, "arrows": [["a0", 0, 1], ...],
/// "relations": [[["c", ["a0","abar0"]], ...], ...], "length_bound": L}
inline Algebra quiver_algebra_from_json(const ordered_json& j, const FieldSpec* f,
                                        std::size_t bound_override = 0) {
    Quiver q;
    q.vertices = j.at("vertices").get<std::size_t>();
    for (const auto& aj : j.at("arrows")) {
        if (aj.size() != 3) throw BadInput("arrows are [label, source, target]");
        q.arrows.push_back({aj[0].get<std::string>(), aj[1].get<std::size_t>(),
                            aj[2].get<std::size_t>()});
    }
    std::vector<Relation> rels;
    if (j.contains("relations"))
        for (const auto& rj : j.at("relations")) {
            Relation rel;
            for (const auto& tj : rj) {
                if (tj.size() != 2) throw BadInput("relation terms are [coeff, [arrow labels]]");
                RelationTerm term;
                term.coeff = tj[0].is_string() ? f->parse(tj[0].get<std::string>())
                                               : f->from_int(tj[0].get<long long>());
                for (const auto& lbl : tj[1]) term.arrows.push_back(q.arrow_index(lbl.get<std::string>()));
                rel.push_back(std::move(term));
            }
            rels.push_back(std::move(rel));
        }
    std::size_t L = bound_override ? bound_override : j.value("length_bound", std::size_t(8));
    std::string name = j.value("name", "quiver algebra");
    return quotient_algebra(q, rels, f, L, name, /*auto_escalate=*/true);
}

inline CayleyTable cayley_from_json(const ordered_json& j) {
    CayleyTable ct;
    ct.order = j.at("order").get<std::size_t>();
    ct.table = j.at("table").get<std::vector<std::vector<std::size_t>>>();
    ct.validate();
    return ct;
}

/// Dispatch on the top-level keys: "structure" -> algebra, "arrows" -> quiver
/// presentation, "table" -> Cayley table.
inline Algebra algebra_from_any_json(const ordered_json& j, const FieldSpec* fallback_field,
                                     std::size_t bound_override = 0) {
    if (j.contains("structure")) return algebra_from_json(j);
    if (j.contains("arrows")) {
        const FieldSpec* f =
            j.contains("field") ? field_from_json(j.at("field")) : fallback_field;
        if (!f) throw BadInput("quiver input needs a field (--field or embedded)");
        return quiver_algebra_from_json(j, f, bound_override);
    }
    if (j.contains("table")) {
        const FieldSpec* f =
            j.contains("field") ? field_from_json(j.at("field")) : fallback_field;
        if (!f) throw BadInput("Cayley table input needs a field (--field or embedded)");
        return group_algebra(cayley_from_json(j), f, j.value("name", "group algebra"));
    }
    throw BadInput("unrecognized input document: expected 'structure', 'arrows' or 'table'");
}

} // namespace kita
