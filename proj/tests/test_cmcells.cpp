#include "test_support.hpp"

#include "cmlab/cmcells/cells.hpp"

#include <random>

using namespace cmlab;

namespace {

using Blocks = std::vector<std::vector<std::string>>;

Blocks canon(Blocks v) {
    for (auto& b : v) std::sort(b.begin(), b.end());
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Cyclotomic> ab(const Rational& a, const Rational& b) { return {Cyclotomic(a), Cyclotomic(b)}; }

Blocks tensor_blocks(const ReflectionGroup& g, const Blocks& v, const std::string& gamma) {
    Blocks out = v;
    for (auto& b : out)
        for (auto& n : b) n = tensor_character(g, n, gamma);
    return out;
}

// Representative points of each b2 stratum.
std::vector<std::pair<Rational, Rational>> b2_points() {
    return {{0, 0},   {0, 1}, {0, -3}, {1, 0},  {Rational(5, 2), 0}, {1, 1}, {-2, -2},
            {1, -1},  {-3, 3}, {2, 1}, {1, 2},  {-1, 3},             {Rational(1, 3), Rational(-7, 2)}};
}

}  // namespace

TEST_CASE("b2 families per stratum", "[cmcells]") {
    auto g = build_group("b2");
    // a, b -> families, as tabulated for b2.
    std::vector<std::tuple<int, int, Blocks>> table{
        {0, 0, {{"1", "eps_s", "eps_t", "eps", "chi"}}},
        {0, 1, {{"1", "eps_s"}, {"eps_t", "eps"}, {"chi"}}},
        {1, 0, {{"1", "eps_t"}, {"eps_s", "eps"}, {"chi"}}},
        {1, 1, {{"1"}, {"eps"}, {"eps_s", "eps_t", "chi"}}},
        {1, -1, {{"eps_s"}, {"eps_t"}, {"1", "eps", "chi"}}},
        {2, 1, {{"1"}, {"eps_s"}, {"eps_t"}, {"eps"}, {"chi"}}},
    };
    for (const auto& [a, b, fams] : table) {
        auto fp = cm_families(g, ab(a, b));
        CHECK(canon(fp.blocks) == canon(fams));
        for (size_t i = 0; i < fp.blocks.size(); ++i) CHECK(fp.signatures[i].size() == 4);
    }
    CHECK_THROWS_AS(cm_families(g, {Cyclotomic(1)}), std::invalid_argument);
}

TEST_CASE("rank one families", "[cmcells]") {
    auto g = build_group("cyclic:3");
    auto fp = cm_families(g, c_from_k(*g, {Cyclotomic(0), Cyclotomic(1), Cyclotomic(-1)}));
    CHECK(fp.blocks.size() == 3);
    for (int d = 2; d <= 6; ++d) {
        auto c = build_group("cyclic:" + std::to_string(d));
        auto zero = cm_families(c, std::vector<Cyclotomic>(d - 1, Cyclotomic(0)));
        REQUIRE(zero.blocks.size() == 1);
        CHECK(zero.blocks[0].size() == static_cast<size_t>(d));
    }
}

TEST_CASE("linear characters are alone in their generic family", "[cmcells]") {
    for (std::string spec : {"b2", "cyclic:3", "cyclic:5"}) {
        auto g = build_group(spec);
        const auto& table = generic_omega_table(g);
        for (size_t i = 0; i < g->chars.size(); ++i) {
            if (g->chars[i].degree() != 1) continue;
            for (size_t j = 0; j < g->chars.size(); ++j)
                if (j != i) CHECK(table[i] != table[j]);
        }
    }
}

TEST_CASE("b2 cells", "[cmcells]") {
    auto g = build_group("b2");
    auto gen = b2_cells(2, 1);
    CHECK(gen.two_sided.size() == 5);
    CHECK(gen.left.size() == 6);
    CHECK(canon(gen.two_sided) == canon({{"1"}, {"s"}, {"tst"}, {"w0"}, {"t", "st", "ts", "sts"}}));
    CHECK(canon(gen.left) == canon({{"1"}, {"s"}, {"tst"}, {"w0"}, {"t", "st"}, {"ts", "sts"}}));
    std::vector<std::string> labels;
    for (const auto& c : gen.cellular) {
        REQUIRE(c.size() == 1);
        CHECK(c[0].second == 1);
        labels.push_back(c[0].first);
    }
    std::sort(labels.begin(), labels.end());
    CHECK(labels == std::vector<std::string>{"1", "chi", "chi", "eps", "eps_s", "eps_t"});

    auto eq = b2_cells(1, 1);
    CHECK(canon(eq.two_sided) == canon({{"1"}, {"w0"}, {"s", "t", "st", "ts", "sts", "tst"}}));
    CHECK(canon(eq.left) == canon({{"1"}, {"w0"}, {"s", "ts", "sts"}, {"t", "st", "tst"}}));
    for (size_t i = 0; i < eq.left.size(); ++i) {
        if (eq.left[i] == std::vector<std::string>{"s", "ts", "sts"})
            CHECK(eq.cellular[i] == CellularCharacter{{"eps_s", 1}, {"chi", 1}});
        if (eq.left[i] == std::vector<std::string>{"t", "st", "tst"})
            CHECK(eq.cellular[i] == CellularCharacter{{"eps_t", 1}, {"chi", 1}});
    }
    // |Gamma| column of the generic and a = b rows.
    std::vector<size_t> sizes;
    for (const auto& c : eq.two_sided) sizes.push_back(c.size());
    CHECK(sizes == std::vector<size_t>{1, 1, 6});

    auto opp = b2_cells(1, -1);
    CHECK(canon(opp.families) == canon({{"eps_s"}, {"eps_t"}, {"1", "eps", "chi"}}));
    CHECK(canon(opp.families) == canon(tensor_blocks(*g, eq.families, "eps_t")));

    auto half = b2_cells(0, 1);
    CHECK_FALSE(half.supported);
    CHECK(half.two_sided.empty());
    CHECK(canon(half.families) == canon({{"1", "eps_s"}, {"eps_t", "eps"}, {"chi"}}));

    auto zero = b2_cells(0, 0);
    REQUIRE(zero.left.size() == 1);
    CHECK(zero.left[0].size() == 8);
    CHECK(zero.cellular[0] == CellularCharacter{{"1", 1}, {"eps_s", 1}, {"eps_t", 1}, {"eps", 1}, {"chi", 2}});

    auto j = cells_json(eq);
    CHECK(j["cells"]["two_sided"].size() == 3);
    CHECK(j["cellular_characters"][2]["character"]["chi"] == 1);
    CHECK(cells_json(half)["cells"] == "unsupported");
}

TEST_CASE("rank one cells are fibers of the K values", "[cmcells][property]") {
    std::mt19937 rng(59);
    std::uniform_int_distribution<int> v(-1, 1);
    for (int d = 3; d <= 6; ++d) {
        auto g = build_group("cyclic:" + std::to_string(d));
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Rational> k(d);
            Rational s(0);
            for (int i = 1; i < d; ++i) {
                k[i] = Rational(v(rng));
                s += k[i];
            }
            k[0] = -s;
            auto cd = rank1_cells(d, k);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    int ci = -1, cj = -1;
                    for (size_t c = 0; c < cd.two_sided.size(); ++c) {
                        const auto& cell = cd.two_sided[c];
                        if (std::find(cell.begin(), cell.end(), g->names[i]) != cell.end()) ci = static_cast<int>(c);
                        if (std::find(cell.begin(), cell.end(), g->names[j]) != cell.end()) cj = static_cast<int>(c);
                    }
                    REQUIRE(ci >= 0);
                    CHECK((ci == cj) == (k[i] == k[j]));
                }
            for (size_t c = 0; c < cd.left.size(); ++c) {
                // cellular character sum_{i in cell} eps^{-i}
                CellularCharacter expect;
                std::vector<int> idx;
                for (const auto& n : cd.left[c]) idx.push_back((d - g->index(n)) % d);
                std::sort(idx.begin(), idx.end());
                for (int i : idx) expect.push_back({g->chars[i].name, 1});
                CHECK(cd.cellular[c] == expect);
            }
            std::vector<Cyclotomic> kc;
            for (const auto& x : k) kc.push_back(Cyclotomic(x));
            auto fp = cm_families(g, c_from_k(*g, kc));
            auto rep = sum_rule_check(*g, cd, &fp);
            CHECK(rep.ok());
        }
    }
    CHECK_THROWS_AS(rank1_cells(3, {1, 1, 1}), std::invalid_argument);
    auto cd = rank1_cells(3, {Rational(-2), 1, 1});
    CHECK(canon(cd.left) == canon({{"1"}, {"s", "s^2"}}));
    CHECK(canon(rank1_cells(3, {0, 0, 0}).left) == canon({{"1", "s", "s^2"}}));
}

TEST_CASE("sum rules and family agreement over the b2 strata", "[cmcells][property]") {
    auto g = build_group("b2");
    for (const auto& [a, b] : b2_points()) {
        auto cd = b2_cells(a, b);
        auto fp = cm_families(g, ab(a, b));
        CHECK(canon(cd.families) == canon(fp.blocks));
        auto rep = sum_rule_check(*g, cd, &fp);
        CHECK(rep.ok());
        // The Euler element alone never separates more than the full center.
        auto eo = cm_families(g, ab(a, b), FamilyMode::EulerOnly);
        CHECK(eo.blocks.size() <= fp.blocks.size());
        // Tensoring with eps permutes the families.
        CHECK(canon(tensor_blocks(*g, fp.blocks, "eps")) == canon(fp.blocks));
    }
    // a = -b is the eps_t twist of a = b.
    for (const Rational& a : {Rational(1), Rational(-3), Rational(2, 7)}) {
        auto same = cm_families(g, ab(a, a)), opp = cm_families(g, ab(a, -a));
        CHECK(canon(opp.blocks) == canon(tensor_blocks(*g, same.blocks, "eps_t")));
    }
    CellData bad = b2_cells(1, 1);
    bad.cellular[2] = {{"eps_s", 1}};
    auto rep = sum_rule_check(*g, bad);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.left_cell_sizes);
    CHECK_FALSE(rep.multiplicities);
}

TEST_CASE("each family has one character of minimal b-invariant", "[cmcells][property]") {
    auto check = [](const ReflectionGroup& g, const Blocks& fams) {
        for (const auto& f : fams) {
            int best = 1 << 20, count = 0;
            std::string arg;
            for (const auto& n : f) {
                int b = b_invariant(g, g.character(n));
                if (b < best) {
                    best = b;
                    count = 1;
                    arg = n;
                } else if (b == best) {
                    ++count;
                }
            }
            CHECK(count == 1);
            CHECK(fake_degree(g, g.character(arg)).coefficient_in("t", best) == Poly(1));
        }
    };
    auto g = build_group("b2");
    for (const auto& [a, b] : b2_points()) check(*g, cm_families(g, ab(a, b)).blocks);
    std::mt19937 rng(61);
    std::uniform_int_distribution<int> v(-1, 1);
    for (int d = 2; d <= 6; ++d) {
        auto c = build_group("cyclic:" + std::to_string(d));
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Cyclotomic> k;
            for (int i = 1; i < d; ++i) k.push_back(Cyclotomic(v(rng)));
            check(*c, cm_families(c, c_from_k(*c, k)).blocks);
        }
    }
}
