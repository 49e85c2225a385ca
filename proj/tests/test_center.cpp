#include "test_support.hpp"

#include "cmlab/center/center.hpp"

using namespace cmlab;

TEST_CASE("rank one center", "[center]") {
    for (int d = 2; d <= 6; ++d) {
        auto r = verify_rank1_center(d);
        for (const auto& c : r.checks) {
            INFO(c.relation << " " << c.residue.value_or(""));
            CHECK(c.ok);
        }
    }
    CHECK_THROWS_AS(verify_rank1_center(1), std::invalid_argument);
    // d = 2 by hand: eu^2 - 4 K_1^2 = X Y.
    auto g = build_group("cyclic:2");
    auto H = CherednikAlgebra::create(g, k_to_c(*g, generic_k(*g)).c);
    auto z = named_center_generators(H);
    CHECK(z.at("eu") * z.at("eu") - H->scalar(Poly::parse("4*K1^2")) == z.at("X") * z.at("Y"));
}

TEST_CASE("b2 center presentation", "[center]") {
    auto r = verify_b2_center();
    REQUIRE(r.checks.size() == 13);
    for (const auto& c : r.checks) {
        INFO(c.relation << " " << c.residue.value_or(""));
        CHECK(c.ok);
    }
    CHECK(report_json(r)["status"] == "pass");
    // A wrong relation is reported with its residue.
    auto H = CherednikAlgebra::generic(build_group("b2"));
    auto z = named_center_generators(H);
    auto bad = detail::zero_check("bad", "delta^2 = pi Pi", z.at("delta") * z.at("delta") - z.at("pi") * z.at("Pi"));
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.residue.has_value());
    CHECK(parse_pbw(H, *bad.residue) == z.at("eu") * z.at("eu") * H->scalar(Poly::parse("B^2")));
}

TEST_CASE("minimal polynomial of the Euler element", "[center]") {
    auto res = minpoly_euler(build_group("b2"));
    for (const auto& c : res.report.checks) {
        INFO(c.relation << " " << c.residue.value_or(""));
        CHECK(c.ok);
    }
    CHECK(res.polynomial == b2_euler_minpoly_explicit());
    CHECK(res.polynomial.degree_in("t") == 8);
    // c = 0 specialization is the minimal polynomial of eu_0.
    Poly at0 = res.polynomial.substitute(std::map<std::string, Poly>{{"A", Poly()}, {"B", Poly()}});
    CHECK(at0 == Poly::parse("t^8 - 2*sigma*Sigma*t^6 + (sigma^2*Sigma^2 + 2*(sigma^2*Pi + Sigma^2*pi - 8*pi*Pi))*t^4"
                             " - 2*sigma*Sigma*(sigma^2*Pi + Sigma^2*pi - 8*pi*Pi)*t^2 + (sigma^2*Pi - Sigma^2*pi)^2"));
    for (int d = 2; d <= 6; ++d) {
        auto r = minpoly_euler(build_group("cyclic:" + std::to_string(d)));
        CHECK(r.report.ok());
        Poly k0 = r.polynomial;
        for (int i = 0; i < d; ++i) k0 = k0.substitute(std::map<std::string, Poly>{{"K" + std::to_string(i), Poly()}});
        CHECK(k0 == Poly::parse("t^" + std::to_string(d) + " - X*Y"));
    }
}

TEST_CASE("characteristic polynomial is congruent to the central characters", "[center]") {
    for (std::string spec : {"b2", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:6"}) {
        auto r = charpoly_congruence(build_group(spec));
        INFO(spec);
        CHECK(r.ok());
    }
    auto r = charpoly_congruence(build_group("b2"));
    CHECK(r.product == Poly::parse("t^4*(t^2 - 4*(A + B)^2)*(t^2 - 4*(A - B)^2)"));
}
