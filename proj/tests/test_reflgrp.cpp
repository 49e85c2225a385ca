#include "test_support.hpp"

#include "cmlab/reflgrp/json.hpp"
#include "cmlab/reflgrp/params.hpp"

#include <random>

using namespace cmlab;

namespace {

std::vector<int> class_sizes(const ReflectionGroup& g) {
    std::vector<int> s;
    for (const auto& c : g.classes) s.push_back(static_cast<int>(c.size()));
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

TEST_CASE("b2 group structure", "[reflgrp]") {
    auto g = build_group("b2");
    CHECK(g->order() == 8);
    CHECK(g->names == std::vector<std::string>{"1", "s", "t", "st", "ts", "sts", "tst", "w0"});
    CHECK(g->on_v[g->index("w0")] == CMatrix::identity(2).scaled(Cyclotomic(-1)));
    CMatrix st(2, 2);
    st(0, 1) = Cyclotomic(1);
    st(1, 0) = Cyclotomic(-1);
    CHECK(g->on_v[g->index("st")] == st);
    CHECK(class_sizes(*g) == std::vector<int>{1, 1, 2, 2, 2});
    CHECK(g->reflections.size() == 4);
    REQUIRE(g->refl_classes.size() == 2);
    CHECK(g->refl_classes[0].param == "A");
    CHECK(g->refl_classes[0].members == std::vector<int>{g->index("s"), g->index("tst")});
    CHECK(g->refl_classes[1].param == "B");
    CHECK(g->refl_classes[1].members == std::vector<int>{g->index("t"), g->index("sts")});
    CHECK(g->orbits.size() == 2);
    CHECK(g->orbits[0].e == 2);
    CHECK(g->degrees == std::vector<int>{2, 4});
}

TEST_CASE("cyclic group structure", "[reflgrp]") {
    for (int d = 2; d <= 8; ++d) {
        auto g = build_group("cyclic:" + std::to_string(d));
        CHECK(g->order() == d);
        CHECK(g->reflections.size() == static_cast<size_t>(d - 1));
        CHECK(g->refl_classes.size() == static_cast<size_t>(d - 1));
        REQUIRE(g->orbits.size() == 1);
        CHECK(g->orbits[0].e == d);
        CHECK(g->degrees == std::vector<int>{d});
        CHECK(g->chars.size() == static_cast<size_t>(d));
    }
    CHECK_THROWS_AS(build_group("cyclic:1"), std::invalid_argument);
    CHECK_THROWS_AS(build_group("cyclic:x"), std::invalid_argument);
    CHECK_THROWS_AS(build_group("g4"), std::invalid_argument);
}

TEST_CASE("character tables are orthonormal", "[reflgrp]") {
    for (std::string spec : {"b2", "cyclic:2", "cyclic:3", "cyclic:5", "cyclic:6"}) {
        auto g = build_group(spec);
        int sumsq = 0;
        for (size_t i = 0; i < g->chars.size(); ++i) {
            sumsq += g->chars[i].degree() * g->chars[i].degree();
            for (size_t j = 0; j < g->chars.size(); ++j)
                CHECK(g->inner(g->chars[i], g->chars[j]) == Cyclotomic(i == j ? 1 : 0));
        }
        CHECK(sumsq == g->order());
    }
    auto g = build_group("b2");
    // Values on the classes of 1, w0, s, t, st.
    std::vector<std::string> reps{"1", "w0", "s", "t", "st"};
    std::map<std::string, std::vector<int>> table{{"1", {1, 1, 1, 1, 1}},
                                                  {"eps_s", {1, 1, -1, 1, -1}},
                                                  {"eps_t", {1, 1, 1, -1, -1}},
                                                  {"eps", {1, 1, -1, -1, 1}},
                                                  {"chi", {2, -2, 0, 0, 0}}};
    for (const auto& [name, vals] : table)
        for (size_t k = 0; k < reps.size(); ++k)
            CHECK(g->character(name).values[g->index(reps[k])] == Cyclotomic(vals[k]));
    // eps is the determinant.
    for (int w = 0; w < g->order(); ++w) CHECK(g->character("eps").values[w] == g->det[w]);
}

TEST_CASE("fake degrees", "[reflgrp]") {
    auto g = build_group("b2");
    CHECK(fake_degree(*g, g->character("1")) == Poly(1));
    CHECK(fake_degree(*g, g->character("eps_s")) == Poly::parse("t^2"));
    CHECK(fake_degree(*g, g->character("eps_t")) == Poly::parse("t^2"));
    CHECK(fake_degree(*g, g->character("eps")) == Poly::parse("t^4"));
    CHECK(fake_degree(*g, g->character("chi")) == Poly::parse("t + t^3"));
    for (int d = 2; d <= 6; ++d) {
        auto c = build_group("cyclic:" + std::to_string(d));
        for (int i = 0; i < d; ++i) CHECK(fake_degree(*c, c->chars[i]) == Poly::var("t", i));
    }
    // sum_chi chi(1) f_chi(t) = prod (1 + ... + t^{d_i - 1})
    Poly total;
    for (const auto& c : g->chars) total += fake_degree(*g, c).scaled(Cyclotomic(c.degree()));
    CHECK(total == Poly::parse("(1 + t)*(1 + t + t^2 + t^3)"));
}

TEST_CASE("C and K parameters convert both ways", "[reflgrp][property]") {
    auto b2 = build_group("b2");
    KParams k = c_to_k(*b2, CParams{{Poly::var("A"), Poly::var("B")}});
    // C_s = K_{s,1} - K_{s,0} with K_{s,0} + K_{s,1} = 0.
    CHECK(k.k[0][0] == Poly::parse("-1/2*A"));
    CHECK(k.k[0][1] == Poly::parse("1/2*A"));
    CHECK(k.k[1][0] == Poly::parse("-1/2*B"));
    CHECK(k.k[1][1] == Poly::parse("1/2*B"));
    auto c2 = build_group("cyclic:2");
    CHECK(k_to_c(*c2, generic_k(*c2)).c[0] == Poly::parse("2*K1"));

    std::mt19937 rng(31);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (int d = 2; d <= 6; ++d) {
        auto g = build_group("cyclic:" + std::to_string(d));
        // Generic round trip.
        KParams gk = generic_k(*g);
        KParams back = c_to_k(*g, k_to_c(*g, gk));
        CHECK(back.k == gk.k);
        for (int trial = 0; trial < 5; ++trial) {
            CParams c;
            for (int i = 1; i < d; ++i)
                c.c.push_back(Poly(Cyclotomic(dist(rng)) + Cyclotomic::zeta(d, 1).scaled(Rational(dist(rng)))));
            CHECK(k_to_c(*g, c_to_k(*g, c)).c == c.c);
        }
    }
    KParams bad = generic_k(*c2);
    bad.k[0][0] = Poly(1);
    CHECK_THROWS_AS(k_to_c(*c2, bad), std::invalid_argument);
}

TEST_CASE("group info json", "[reflgrp]") {
    auto j = group_info_json(*build_group("b2"));
    CHECK(j["order"] == 8);
    CHECK(j["degrees"] == nlohmann::ordered_json::array({2, 4}));
    CHECK(j["characters"][4]["fake_degree"] == "t^3 + t");
    CHECK(j.dump() == group_info_json(*build_group("b2")).dump());
}
