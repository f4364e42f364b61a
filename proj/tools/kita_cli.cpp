// kita — compute Kuelshammer ideal towers and Morita/derived/stable invariants
// of finite-dimensional algebras over finite fields.
//
// Subcommands: build | report | compare | sweep | selftest
// Exit codes: 0 ok, 1 usage, 2 validation, 3 resource/bound, 4 internal invariant violation.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "kita/io.hpp"
#include "kita/report.hpp"
#include "kita/selftest.hpp"

using namespace kita;

namespace {

struct InputSpec {
    std::string registry; // Name[k=v,...]
    std::string file;
    std::string inline_json;

    bool present() const { return !registry.empty() || !file.empty() || !inline_json.empty(); }
    int sources() const {
        return int(!registry.empty()) + int(!file.empty()) + int(!inline_json.empty());
    }
};

Algebra resolve_input(const InputSpec& in, const FieldSpec* field, std::size_t bound_override) {
    if (in.sources() != 1)
        throw BadInput("exactly one input source per algebra slot (registry name, --file or --inline)");
    if (!in.registry.empty()) {
        auto [name, params] = parse_instance_name(in.registry);
        if (!field) throw BadInput("registry instances need --field");
        return instantiate(name, params, field);
    }
    ordered_json j;
    if (!in.file.empty()) {
        std::ifstream is(in.file);
        if (!is) throw BadInput("cannot open '" + in.file + "'");
        is >> j;
    } else {
        j = ordered_json::parse(in.inline_json);
    }
    return algebra_from_any_json(j, field, bound_override);
}

void print_report_table(const ordered_json& j, std::ostream& os) {
    os << "algebra: " << j["name"].get<std::string>() << "  over GF(" << j["field"]["p"];
    if (j["field"]["e"].get<unsigned>() > 1) os << "^" << j["field"]["e"];
    os << ")\n";
    const auto& d = j["dims"];
    os << "  dim A = " << d["A"] << ", dim Z = " << d["Z"] << ", dim [A,A] = " << d["commutator"]
       << ", dim rad = " << d["rad"] << ", dim soc = " << d["soc"] << "\n";
    os << "  form: " << j["form"]["source"].get<std::string>()
       << (j["form"]["symmetric"].get<bool>() ? " (symmetric)" : " (not symmetric)") << "\n";
    os << "  tower:";
    for (const auto& e : j["tower"]) {
        os << "  T_" << e["n"] << "=" << e["dim_Tn"];
        if (e.contains("dim_Tn_perp")) os << " perp=" << e["dim_Tn_perp"];
    }
    os << "\n  dim A/TA = " << j["dim_A_mod_TA"] << ", Reynolds dim = " << j["reynolds_dim"]
       << "\n";
    if (!j["stable"].is_null()) {
        const auto& s = j["stable"];
        os << "  stable: rank_K C = " << s["cartan_rank"] << ", dim HH0_st = " << s["dim_HH0_st"];
        if (s["dim_Z_pr"].get<long long>() >= 0)
            os << ", dim Z^pr = " << s["dim_Z_pr"] << ", dim Z^st = " << s["dim_Z_st"];
        os << "\n";
    }
    for (const auto& fp : j["quotient_fingerprints"]) {
        os << "  Z/T_" << fp["n"] << "^perp fingerprint:";
        for (const auto& v : fp["components"]) os << " " << v;
        os << "\n";
    }
}

int classify_exception(const std::exception& e) {
    if (dynamic_cast<const RouteMismatch*>(&e)) return 4;
    if (dynamic_cast<const BoundTooSmall*>(&e)) return 3;
    if (dynamic_cast<const SearchBoundExceeded*>(&e)) return 3;
    if (dynamic_cast<const Error*>(&e)) return 2;
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kuelshammer ideal towers and derived/stable invariants of finite-dimensional "
                 "algebras over finite fields"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand arguments

    std::string field_flag;
    std::string out_mode = "json";
    std::size_t bound_override = 0;
    std::uint64_t seed = 0x5eedcafe;
    unsigned jobs = 1;
    std::size_t depth = 16;
    app.add_option("--field", field_flag, "field, e.g. p=2 or p=2,e=2,mod=1,1,1");
    app.add_option("--depth", depth, "tower level cap (default: run to stabilization, cap 16)");
    app.add_option("--out", out_mode, "output format: json | table")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--bound", bound_override, "override the path length bound for quiver input");
    app.add_option("--seed", seed, "seed for the symmetric-form probing phase");
    app.add_option("--jobs", jobs, "parallel jobs for sweep/selftest");

    InputSpec in_a, in_b;

    auto* build = app.add_subcommand("build", "construct and validate an algebra, print its JSON");
    build->add_option("input", in_a.registry, "registry instance, e.g. Ln[n=3,j=0]");
    build->add_option("--file", in_a.file, "JSON input file (algebra, quiver or Cayley table)");
    build->add_option("--inline", in_a.inline_json, "inline JSON input");

    auto* report = app.add_subcommand("report", "compute the invariant report of an algebra");
    report->add_option("input", in_a.registry, "registry instance, e.g. Ln[n=3,j=0]");
    report->add_option("--file", in_a.file, "JSON input file");
    report->add_option("--inline", in_a.inline_json, "inline JSON input");

    auto* compare = app.add_subcommand("compare", "compare the invariants of two algebras");
    compare->add_option("left", in_a.registry, "first registry instance");
    compare->add_option("right", in_b.registry, "second registry instance");
    compare->add_option("--file-left", in_a.file, "JSON file for the first algebra");
    compare->add_option("--file-right", in_b.file, "JSON file for the second algebra");

    std::string sweep_family;
    std::vector<std::string> grid_specs;
    auto* sweep_cmd = app.add_subcommand("sweep", "one report per cell of a parameter grid");
    sweep_cmd->add_option("family", sweep_family, "registry family name, e.g. Ln");
    sweep_cmd->add_option("--grid", grid_specs,
                          "parameter ranges, e.g. n=2..5 j=0..4 c=0|1 (repeatable)");

    std::string filter;
    auto* selftest_cmd = app.add_subcommand("selftest", "run the built-in acceptance suite");
    selftest_cmd->add_option("--filter", filter, "run only criteria whose id contains this text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const FieldSpec* field = field_flag.empty() ? nullptr : field_from_flag(field_flag);
        ReportOptions opts;
        opts.seed = seed;
        opts.depth_cap = depth;

        if (*build) {
            Algebra A = resolve_input(in_a, field, bound_override);
            std::cout << algebra_to_json(A).dump(2) << "\n";
            return 0;
        }
        if (*report) {
            Algebra A = resolve_input(in_a, field, bound_override);
            ordered_json j = report_to_json(build_report(A, opts));
            if (out_mode == "table")
                print_report_table(j, std::cout);
            else
                std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*compare) {
            Algebra A = resolve_input(in_a, field, bound_override);
            Algebra B = resolve_input(in_b, field, bound_override);
            ordered_json j = compare_algebras(A, B, opts);
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*sweep_cmd) {
            if (!field) throw BadInput("sweep needs --field");
            if (sweep_family.empty()) throw BadInput("sweep needs a family name");
            // expand the grid: each spec is key=a..b or key=v1|v2|... or key=v
            std::vector<std::pair<std::string, std::vector<std::string>>> axes;
            for (const auto& spec : grid_specs) {
                auto eq = spec.find('=');
                if (eq == std::string::npos) throw BadInput("grid spec '" + spec + "' lacks '='");
                std::string key = spec.substr(0, eq), val = spec.substr(eq + 1);
                std::vector<std::string> values;
                auto dots = val.find("..");
                if (dots != std::string::npos) {
                    long long lo = std::stoll(val.substr(0, dots));
                    long long hi = std::stoll(val.substr(dots + 2));
                    for (long long v = lo; v <= hi; ++v) values.push_back(std::to_string(v));
                } else {
                    std::size_t pos = 0;
                    while (pos <= val.size()) {
                        auto bar = val.find('|', pos);
                        values.push_back(val.substr(pos, bar == std::string::npos
                                                             ? std::string::npos
                                                             : bar - pos));
                        if (bar == std::string::npos) break;
                        pos = bar + 1;
                    }
                }
                axes.emplace_back(key, std::move(values));
            }
            std::vector<std::map<std::string, std::string>> grid{{}};
            for (const auto& [key, values] : axes) {
                std::vector<std::map<std::string, std::string>> next;
                for (const auto& cell : grid)
                    for (const auto& v : values) {
                        auto c = cell;
                        c[key] = v;
                        next.push_back(std::move(c));
                    }
                grid = std::move(next);
            }
            ordered_json j = sweep(sweep_family, grid, field, opts, jobs);
            if (out_mode == "table") {
                for (const auto& cell : j["cells"]) {
                    std::cout << instance_display_name(
                        sweep_family, cell["params"].get<std::map<std::string, std::string>>());
                    if (cell.contains("error"))
                        std::cout << "  ERROR " << cell["error"].get<std::string>() << "\n";
                    else {
                        const auto& rep = cell["report"];
                        std::cout << "  dim=" << rep["dims"]["A"] << " Z=" << rep["dims"]["Z"]
                                  << " towerT=";
                        for (const auto& e : rep["tower"]) std::cout << e["dim_Tn"] << " ";
                        std::cout << "\n";
                    }
                }
            } else {
                std::cout << j.dump(2) << "\n";
            }
            return 0;
        }
        if (*selftest_cmd) {
            SelftestOptions sopts;
            sopts.filter = filter;
            sopts.jobs = jobs;
            sopts.seed = seed;
            auto results = run_selftest(sopts);
            std::cout << format_results(results);
            for (const auto& r : results)
                if (!r.pass) return 2;
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify_exception(e);
    }
    return 1;
}
