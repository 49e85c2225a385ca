#include "test_support.hpp"

#include "cmlab/cli/run.hpp"

#include <cstdlib>
#include <fstream>

using namespace cmlab;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cmlab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json cli_json(std::vector<std::string> args) {
    args.push_back("--json");
    auto r = invoke(args);
    INFO(r.err);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

json fixture(const std::string& name) {
    std::ifstream f(std::string(CMLAB_FIXTURE_DIR) + "/" + name);
    REQUIRE(f.good());
    return json::parse(f);
}

using Blocks = std::vector<std::vector<std::string>>;

Blocks canon(Blocks v) {
    for (auto& b : v) std::sort(b.begin(), b.end());
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("families match the b2 table", "[cli]") {
    for (const auto& row : fixture("b2_families.json")) {
        std::string p = "a=" + row["a"].get<std::string>() + ",b=" + row["b"].get<std::string>();
        auto j = cli_json({"families", "--group", "b2", "--params", p});
        CHECK(canon(j["families"].get<Blocks>()) == canon(row["families"].get<Blocks>()));
        CHECK(j["parameters"]["C"]["A"] == row["a"]);
    }
    auto j = cli_json({"families", "--group", "b2", "--params", "a=1,b=1"});
    CHECK(j["families"].size() == 3);
}

TEST_CASE("omega table matches the fixture as polynomials", "[cli]") {
    auto expect = fixture("b2_omega.json");
    auto j = cli_json({"omega-table", "--group", "b2"});
    REQUIRE(j["rows"].size() == expect.size());
    for (const auto& row : j["rows"]) {
        const auto& e = expect.at(row["character"].get<std::string>());
        REQUIRE(row["omega"].size() == e.size());
        for (const auto& [k, v] : e.items()) {
            INFO(row["character"] << " " << k);
            CHECK(Poly::parse(row["omega"][k].get<std::string>()) == Poly::parse(v.get<std::string>()));
        }
    }
}

TEST_CASE("cells match the b2 table", "[cli]") {
    for (const auto& row : fixture("b2_cells.json")) {
        std::string p = "a=" + row["a"].get<std::string>() + ",b=" + row["b"].get<std::string>();
        auto j = cli_json({"cells", "--group", "b2", "--params", p});
        CHECK(j["sum_rules"]["status"] == "pass");
        std::set<std::pair<std::vector<std::string>, std::vector<std::string>>> got, want;
        for (size_t i = 0; i < j["cells"]["two_sided"].size(); ++i) {
            auto c = j["cells"]["two_sided"][i].get<std::vector<std::string>>();
            auto f = j["cells"]["two_sided_families"][i].get<std::vector<std::string>>();
            std::sort(c.begin(), c.end());
            std::sort(f.begin(), f.end());
            got.insert({c, f});
        }
        for (const auto& e : row["two_sided"]) {
            auto c = e["cell"].get<std::vector<std::string>>();
            auto f = e["family"].get<std::vector<std::string>>();
            std::sort(c.begin(), c.end());
            std::sort(f.begin(), f.end());
            want.insert({c, f});
        }
        CHECK(got == want);
        std::set<std::pair<std::vector<std::string>, std::map<std::string, int>>> gl, wl;
        for (const auto& e : j["cellular_characters"]) {
            auto c = e["cell"].get<std::vector<std::string>>();
            std::sort(c.begin(), c.end());
            gl.insert({c, e["character"].get<std::map<std::string, int>>()});
        }
        for (const auto& e : row["left"]) {
            auto c = e["cell"].get<std::vector<std::string>>();
            std::sort(c.begin(), c.end());
            wl.insert({c, e["character"].get<std::map<std::string, int>>()});
        }
        CHECK(gl == wl);
    }
    auto half = cli_json({"cells", "--group", "b2", "--params", "a=0,b=1"});
    CHECK(half["cells"] == "unsupported");
    auto c4 = invoke({"cells", "--group", "cyclic:4", "--params", "K=0,0,0,0"});
    CHECK(c4.code == 0);
    CHECK(c4.out.find("two-sided cell {1, s, s^2, s^3}, size 4") != std::string::npos);
}

TEST_CASE("verification subcommands", "[cli]") {
    auto rel = invoke({"verify", "relations", "--group", "b2"});
    CHECK(rel.code == 0);
    CHECK(rel.out.find("9/9 checks pass") != std::string::npos);
    auto j = cli_json({"verify", "center", "--group", "b2"});
    CHECK(j["status"] == "pass");
    CHECK(j["checks"].size() == 13);
    for (int d = 2; d <= 6; ++d) CHECK(invoke({"verify", "center", "--group", "cyclic:" + std::to_string(d)}).code == 0);
    auto m = cli_json({"verify", "minpoly", "--group", "b2"});
    CHECK(Poly::parse(m["polynomial"].get<std::string>()) == b2_euler_minpoly_explicit());
    CHECK(cli_json({"galois", "b2-certificate"})["status"] == "pass");
    auto h = cli_json({"hilbert", "--group", "b2", "--order", "6", "--check"});
    CHECK(h["status"] == "pass");
    CHECK(h["center"][2] == json::array({1, 1, "3"}));
    auto f = cli_json({"fake-degrees", "--group", "b2"});
    CHECK(f["rows"][4]["fake_degree"] == "t^3 + t");
}

TEST_CASE("parameters inline, from a file and in K-coordinates", "[cli]") {
    std::string path = "cli_test_params.txt";
    {
        std::ofstream f(path);
        f << "# equal parameters\na = 1\nb = 1\n";
    }
    CHECK(cli_json({"families", "--group", "b2", "--params", path})["families"] ==
          cli_json({"families", "--group", "b2", "--params", "a=1,b=1"})["families"]);
    std::remove(path.c_str());
    // K = (0, 1, -1) on cyclic:3 and the C values it converts to give the same output.
    auto k = cli_json({"families", "--group", "cyclic:3", "--params", "K=0,1,-1"});
    CHECK(k["parameters"]["input"] == "K");
    std::string c = "C1=" + k["parameters"]["C"]["C1"].get<std::string>() + ",C2=" + k["parameters"]["C"]["C2"].get<std::string>();
    auto viac = cli_json({"families", "--group", "cyclic:3", "--params", c});
    CHECK(viac["parameters"]["K"] == json::array({"0", "1", "-1"}));
    CHECK(viac["families"] == k["families"]);
    CHECK(k["families"].size() == 3);
}

TEST_CASE("exit codes and determinism", "[cli]") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"families", "--group", "b2"}).code == 2);
    CHECK(invoke({"families", "--group", "b2", "--params", "a=1"}).code == 2);
    CHECK(invoke({"families", "--group", "b2", "--params", "z=1,b=2"}).code == 2);
    CHECK(invoke({"families", "--group", "b7", "--params", "a=1,b=2"}).code == 2);
    CHECK(invoke({"verify", "relations", "--group", "cyclic:3"}).code == 2);
    CHECK(invoke({"hilbert", "--group", "b2", "--bogus"}).code == 2);
    CHECK(invoke({"geometry", "rank1", "--d", "2", "--point", "1,-1,1,1,3"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
    for (const auto& args : std::vector<std::vector<std::string>>{{"omega-table", "--group", "b2", "--json"},
                                                                   {"cells", "--group", "b2", "--params", "a=2,b=1", "--json"},
                                                                   {"group", "b2", "info", "--json"}}) {
        auto a = invoke(args), b = invoke(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("series order from the environment", "[cli]") {
    ::setenv("CMLAB_SERIES_ORDER", "3", 1);
    auto j = cli_json({"hilbert", "--group", "cyclic:2"});
    CHECK(j["order"] == 3);
    ::setenv("CMLAB_SERIES_ORDER", "zero", 1);
    CHECK(invoke({"hilbert", "--group", "cyclic:2"}).code == 2);
    ::unsetenv("CMLAB_SERIES_ORDER");
    CHECK(cli_json({"hilbert", "--group", "cyclic:2"})["order"] == 12);
    CHECK(cli_json({"hilbert", "--group", "cyclic:2", "--order", "5"})["order"] == 5);
}

TEST_CASE("geometry and Poisson subcommands", "[cli]") {
    auto j = cli_json({"geometry", "rank1", "--d", "2", "--point", "1,-1,1,5,3"});
    CHECK(j["singular"] == false);
    CHECK(j["ramified"] == false);
    CHECK(j["notes"][0].get<std::string>().find("factor d") != std::string::npos);
    auto s = cli_json({"geometry", "rank1", "--d", "2", "--point", "0,0,0,0,0", "--discriminant"});
    CHECK(s["singular"] == true);
    CHECK(s["ramified"] == true);
    CHECK(s["discriminant_is_square"] == false);
    auto p = cli_json({"poisson", "--group", "b2", "--lhs", "eu", "--rhs", "delta"});
    CHECK(p["bracket"] == "0");
    auto q = cli_json({"poisson", "--group", "b2", "--lhs", "eu", "--rhs", "eu'"});
    auto H = CherednikAlgebra::generic(build_group("b2"));
    CHECK(parse_pbw(H, q["bracket"].get<std::string>()) == named_center_generators(H).at("eu'").scaled(Poly(2)));
    CHECK(invoke({"poisson", "--group", "b2", "--lhs", "x", "--rhs", "X"}).code == 2);
}
