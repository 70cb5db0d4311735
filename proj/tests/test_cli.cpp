// End-to-end checks of the command-line tool through a shell.
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "abarr/families.hpp"
#include "abarr/io.hpp"

using namespace abarr;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code;
    std::string output;  // stdout only
};

CliResult cli(const std::string& args) {
    std::string cmd = std::string(ABARR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

fs::path fixture_dir() {
    fs::path dir = fs::temp_directory_path() / "abarr_cli_tests";
    fs::create_directories(dir);
    return dir;
}

fs::path write_fixture(const std::string& name, const std::string& content) {
    fs::path p = fixture_dir() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

}  // namespace

TEST_CASE("ssolve on a poset document finds the chain through the first atom") {
    FinitePoset simplicial({"0", "1", "2", "3", "a", "b"},
                     {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 4}, {3, 4}, {3, 5}});
    auto path = write_fixture("simplicial_poset.json", io::poset_to_json(simplicial).dump(2));
    auto res = cli("ssolve " + path.string());
    CHECK(res.exit_code == 0);
    auto cert = io::certificate_from_json(nlohmann::json::parse(res.output));
    CHECK(!cert.strict);
    CHECK(cert.atom_sets == std::vector<std::vector<int>>({{1}, {1, 2, 3}}));
    CHECK(cert.a == std::vector<long>({1, 2}));
}

TEST_CASE("verify accepts the emitted certificate and rejects a tampered one") {
    Arrangement a;
    a.ambient = Ambient{2, 1, 1};
    IntRowVec v1(2), v2(2), v3(2);
    v1 << 1, 0;
    v2 << 0, 2;
    v3 << 1, 2;
    a.vectors = {v1, v2, v3};
    auto arr_path = write_fixture("split_arr.json", io::arrangement_to_json(a).dump(2));
    auto res = cli("ssolve " + arr_path.string());
    REQUIRE(res.exit_code == 0);
    auto cert_path = write_fixture("split_cert.json", res.output);
    CHECK(cli("verify " + cert_path.string() + " " + arr_path.string()).exit_code == 0);

    auto cert = io::certificate_from_json(nlohmann::json::parse(res.output));
    std::swap(cert.atom_sets[0][0], cert.atom_sets[1][2]);  // move an atom between blocks
    std::sort(cert.atom_sets[0].begin(), cert.atom_sets[0].end());
    auto bad_path = write_fixture("split_cert_bad.json", io::certificate_to_json(cert).dump(2));
    CHECK(cli("verify " + bad_path.string() + " " + arr_path.string()).exit_code == 1);
}

TEST_CASE("malformed input and hypothesis violations use exit code 2") {
    auto bad_json = write_fixture("broken.json", "{ not json");
    CHECK(cli("layers " + bad_json.string()).exit_code == 2);

    auto wrong_version = write_fixture("v2.json", "{\"format\": 2, \"vectors\": []}");
    CHECK(cli("layers " + wrong_version.string()).exit_code == 2);

    // redundant arrangement named as the violated precondition
    auto redundant = write_fixture(
        "redundant.json", "{\"format\":1,\"n\":2,\"d\":1,\"v\":0,\"vectors\":[[1,0],[2,0]]}");
    CHECK(cli("tower " + redundant.string()).exit_code == 2);

    // non-essential input refused by the tower
    auto thin = write_fixture("thin.json",
                              "{\"format\":1,\"n\":2,\"d\":1,\"v\":1,\"vectors\":[[1,0]]}");
    CHECK(cli("tower " + thin.string()).exit_code == 2);
    CHECK(cli("invariants " + thin.string()).exit_code == 2);
}

TEST_CASE("layers --dot emits a rank-layered Hasse diagram") {
    auto arr_path = write_fixture(
        "triple_arr.json", "{\"format\":1,\"n\":2,\"d\":1,\"v\":1,\"vectors\":[[1,0],[0,1],[1,2]]}");
    auto res = cli("layers " + arr_path.string() + " --dot");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("digraph hasse") != std::string::npos);
    CHECK(res.output.find("rank=same") != std::string::npos);
    CHECK(res.output.find("label=\"T\"") != std::string::npos);
}

TEST_CASE("invariants text output carries the pinned values") {
    auto arr_path = write_fixture(
        "sss_arr.json", "{\"format\":1,\"n\":2,\"d\":1,\"v\":1,\"vectors\":[[1,0],[0,2],[1,2]]}");
    auto res = cli("invariants " + arr_path.string() + " --jmax 3");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("chi = t^2 - 4t + 4") != std::string::npos);
    CHECK(res.output.find("chi factored = (t-2)(t-2)") != std::string::npos);
    CHECK(res.output.find("poincare = 9t^2 + 6t + 1") != std::string::npos);
    CHECK(res.output.find("lcs ranks (jmax=3) = [6,6,16]") != std::string::npos);

    auto js = cli("invariants " + arr_path.string() + " --jmax 3 --json");
    auto parsed = nlohmann::json::parse(js.output);
    CHECK(parsed.at("chi") == nlohmann::json::array({4, -4, 1}));
    CHECK(parsed.at("poincare") == nlohmann::json::array({1, 6, 9}));
    CHECK(parsed.at("lcs") == nlohmann::json::array({6, 6, 16}));
}

TEST_CASE("generators round-trip through their consumers") {
    auto gen = cli("gen graphic --n 3 --edges 1-2,2-3,1-3 --d 1 --v 1");
    REQUIRE(gen.exit_code == 0);
    auto arr_path = write_fixture("k3.json", gen.output);
    CHECK(cli("ssolve " + arr_path.string()).exit_code == 0);

    auto aff = cli("gen affine --preset triangle");
    REQUIRE(aff.exit_code == 0);
    auto aff_path = write_fixture("triangle.json", aff.output);
    auto solve = cli("ssolve " + aff_path.string());
    CHECK(solve.exit_code == 0);
    CHECK(solve.output.find("not supersolvable") != std::string::npos);

    auto dow = cli("gen dowling --n 2 --order 2 --s t");
    REQUIRE(dow.exit_code == 0);
    auto dow_path = write_fixture("dowling.json", dow.output);
    auto dsolve = cli("ssolve " + dow_path.string());
    CHECK(dsolve.exit_code == 0);
    auto cert = io::certificate_from_json(nlohmann::json::parse(dsolve.output));
    CHECK(cert.strict);

    // explicit group/action tables produce the same poset as the shorthand
    auto tables_path = write_fixture("c2_tables.json",
                                     io::group_to_json(cyclic_group(2, {"t"})).dump(2));
    auto via_tables = cli("gen dowling --n 2 --tables " + tables_path.string());
    REQUIRE(via_tables.exit_code == 0);
    CHECK(via_tables.output == dow.output);
}

TEST_CASE("layers respects the subset enumeration guard") {
    auto arr_path = write_fixture(
        "guard.json", "{\"format\":1,\"n\":2,\"d\":1,\"v\":1,\"vectors\":[[1,0],[0,1],[1,2]]}");
    CHECK(cli("layers " + arr_path.string() + " --max-vectors 2").exit_code == 2);
    CHECK(cli("layers " + arr_path.string() + " --max-vectors 3").exit_code == 0);
}

TEST_CASE("quotient-check reports the transfer and exits cleanly") {
    auto arr_path = write_fixture(
        "even.json", "{\"format\":1,\"n\":2,\"d\":1,\"v\":1,\"vectors\":[[2,0],[0,2],[1,1]]}");
    auto sub_path = write_fixture("sub.json", "{\"format\":1,\"rows\":[[1,1],[1,-1]]}");
    auto res = cli("quotient-check " + arr_path.string() + " " + sub_path.string());
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("equivalence holds: yes") != std::string::npos);
}
