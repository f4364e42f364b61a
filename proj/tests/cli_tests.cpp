#include <catch2/catch.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(KITA_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), int(buf.size()), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("report on a registry instance") {
    auto r = run("report \"Ln[n=3,j=0]\" --field p=2");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["dims"]["A"] == 28);
    CHECK(j["symmetric_algebra"] == true);
    REQUIRE(j["tower"].size() >= 2);
}

TEST_CASE("reports are byte-identical across runs") {
    auto r1 = run("report \"D2B[k=1,s=2,c=0]\" --field p=2");
    auto r2 = run("report \"D2B[k=1,s=2,c=0]\" --field p=2");
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
}

TEST_CASE("validation failures use exit code 2 and name the condition") {
    auto r = run("report \"Ln[n=3,j=7]\" --field p=2");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("0 <= j < n") != std::string::npos);
}

TEST_CASE("usage errors use exit code 1") {
    auto r = run("frobnicate");
    CHECK(r.exit_code == 1);
}

TEST_CASE("build emits canonical algebra JSON") {
    auto r = run("build \"kx[m=2]\" --field p=3");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["dim"] == 2);
    CHECK(j["field"]["p"] == 3);
}

TEST_CASE("compare from the command line") {
    auto r = run("compare \"Ln[n=3,j=0]\" \"Ln[n=3,j=2]\" --field p=2");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "distinguished");
}

TEST_CASE("sweep with ranges, table output, and per-cell errors") {
    auto r = run("sweep Ln --grid n=2..3 --grid j=0..2 --field p=2 --out table");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("ERROR") != std::string::npos);   // the j = 2, n = 2 cell
    CHECK(r.out.find("dim=28") != std::string::npos);  // L_3
}

TEST_CASE("file input") {
    const char* path = "cli_test_input.json";
    {
        std::ofstream os(path);
        os << R"({"vertices": 1, "arrows": [["x", 0, 0]],
                  "relations": [[["1", ["x","x"]]]], "length_bound": 3})";
    }
    auto r = run(std::string("report --file ") + path + " --field p=2 --out table");
    std::remove(path);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("dim A = 2") != std::string::npos);
}

TEST_CASE("non-selfinjective input reports through the trivial extension") {
    auto r = run("report --inline "
                 "'{\"vertices\":2,\"arrows\":[[\"a\",0,1]],\"relations\":[],\"length_bound\":1}'"
                 " --field p=2");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["symmetric_algebra"] == false);
    CHECK(j["dim_A_mod_TA"] == 2);
    // T_n(T(A))^perp dims: dim A - dim T_n(A) for n >= 1
    REQUIRE(j.contains("trivial_extension_perp_dims"));
    CHECK(j["trivial_extension_perp_dims"][1] == 2);
}

TEST_CASE("selftest filter runs a single criterion") {
    auto r = run("selftest --filter 03-brauer");
    CHECK(r.out.find("03-brauer-count") != std::string::npos);
    CHECK(r.out.find("01-ln-formula") == std::string::npos);
}
