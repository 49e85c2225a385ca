#pragma once

// Calogero-Moser cells with their families and cellular characters: rank one
// from the fibers of i -> k_i, b2 from the case analysis per stratum, plus
// the numerical sum rules tying them together.

#include "cmlab/cmcells/families.hpp"

namespace cmlab {

using CellularCharacter = std::vector<std::pair<std::string, int>>;  // character order, nonzero entries

struct CellData {
    std::string group;
    std::map<std::string, Cyclotomic> parameters;
    bool supported = true;
    std::string note;  // why cells are missing when !supported
    std::vector<std::vector<std::string>> families;
    std::vector<std::vector<std::string>> two_sided;
    std::vector<std::vector<std::string>> two_sided_family;  // family attached to each two-sided cell
    std::vector<std::vector<std::string>> left;
    std::vector<CellularCharacter> cellular;  // one per left cell
};

namespace detail {

inline CellularCharacter cellular(const ReflectionGroup& g, const std::map<std::string, int>& m) {
    CellularCharacter out;
    for (const auto& c : g.chars)
        if (auto it = m.find(c.name); it != m.end() && it->second) out.push_back({c.name, it->second});
    return out;
}

}  // namespace detail

/// Cells for cyclic:d at K = (k_0, ..., k_{d-1}) with sum 0. Left, right and
/// two-sided cells coincide: the fibers of i -> k_i on {s^i}.
inline CellData rank1_cells(int d, const std::vector<Rational>& k) {
    auto g = build_group("cyclic:" + std::to_string(d));
    if (static_cast<int>(k.size()) != d) throw std::invalid_argument("expected " + std::to_string(d) + " K values");
    Rational sum(0);
    for (const auto& v : k) sum += v;
    if (!sum.is_zero()) throw std::invalid_argument("K values must sum to zero");
    CellData cd;
    cd.group = g->spec;
    for (int i = 0; i < d; ++i) cd.parameters["K" + std::to_string(i)] = Cyclotomic(k[i]);
    std::vector<Rational> seen;
    std::vector<std::vector<int>> fibers;
    for (int i = 0; i < d; ++i) {
        auto it = std::find(seen.begin(), seen.end(), k[i]);
        if (it == seen.end()) {
            seen.push_back(k[i]);
            fibers.push_back({i});
        } else {
            fibers[it - seen.begin()].push_back(i);
        }
    }
    for (const auto& f : fibers) {
        std::vector<std::string> cell, fam;
        std::map<std::string, int> ch;
        for (int i : f) {
            cell.push_back(g->names[i]);
            const auto& name = g->chars[(d - i) % d].name;
            fam.push_back(name);
            ch[name] = 1;
        }
        std::sort(fam.begin(), fam.end(), [&](const auto& a, const auto& b) { return g->char_index(a) < g->char_index(b); });
        cd.two_sided.push_back(cell);
        cd.two_sided_family.push_back(fam);
        cd.left.push_back(cell);
        cd.cellular.push_back(detail::cellular(*g, ch));
    }
    cd.families = cd.two_sided_family;
    return cd;
}

/// Cells of b2 at c_s = a, c_t = b.
inline CellData b2_cells(const Rational& a, const Rational& b) {
    auto g = build_group("b2");
    CellData cd;
    cd.group = "b2";
    cd.parameters = {{"A", Cyclotomic(a)}, {"B", Cyclotomic(b)}};
    using F = std::vector<std::vector<std::string>>;
    bool az = a.is_zero(), bz = b.is_zero();
    if (az && bz) {
        cd.families = {{"1", "eps_s", "eps_t", "eps", "chi"}};
        cd.two_sided = {g->names};
        cd.two_sided_family = cd.families;
        cd.left = {g->names};
        cd.cellular = {detail::cellular(*g, {{"1", 1}, {"eps_s", 1}, {"eps_t", 1}, {"eps", 1}, {"chi", 2}})};
        return cd;
    }
    if (az || bz) {
        cd.families = az ? F{{"1", "eps_s"}, {"eps_t", "eps"}, {"chi"}} : F{{"1", "eps_t"}, {"eps_s", "eps"}, {"chi"}};
        cd.supported = false;
        cd.note = "cells are not determined when exactly one parameter vanishes";
        return cd;
    }
    if (a != b && a != -b) {
        cd.families = {{"1"}, {"eps_s"}, {"eps_t"}, {"eps"}, {"chi"}};
        cd.two_sided = {{"1"}, {"s"}, {"tst"}, {"w0"}, {"t", "st", "ts", "sts"}};
        cd.two_sided_family = {{"1"}, {"eps_s"}, {"eps_t"}, {"eps"}, {"chi"}};
        cd.left = {{"1"}, {"s"}, {"tst"}, {"w0"}, {"t", "st"}, {"ts", "sts"}};
        for (const char* c : {"1", "eps_s", "eps_t", "eps", "chi", "chi"}) cd.cellular.push_back(detail::cellular(*g, {{c, 1}}));
        return cd;
    }
    // a = b, and a = -b through the eps_t twist of the labels.
    cd.families = {{"1"}, {"eps"}, {"eps_s", "eps_t", "chi"}};
    cd.two_sided = {{"1"}, {"w0"}, {"s", "t", "st", "ts", "sts", "tst"}};
    cd.two_sided_family = cd.families;
    cd.left = {{"1"}, {"w0"}, {"s", "ts", "sts"}, {"t", "st", "tst"}};
    std::vector<std::map<std::string, int>> ch{{{"1", 1}}, {{"eps", 1}}, {{"eps_s", 1}, {"chi", 1}}, {{"eps_t", 1}, {"chi", 1}}};
    if (a == -b) {
        auto tw = [&](const std::string& n) { return tensor_character(*g, n, "eps_t"); };
        for (auto* fams : {&cd.families, &cd.two_sided_family}) {
            for (auto& f : *fams) {
                for (auto& n : f) n = tw(n);
                std::sort(f.begin(), f.end(), [&](const auto& x, const auto& y) { return g->char_index(x) < g->char_index(y); });
            }
        }
        for (auto& m : ch) {
            std::map<std::string, int> t;
            for (const auto& [n, v] : m) t[tw(n)] = v;
            m = t;
        }
    }
    for (const auto& m : ch) cd.cellular.push_back(detail::cellular(*g, m));
    return cd;
}

struct SumRuleReport {
    bool cell_sizes = true;        // |Gamma| = sum over its family of chi(1)^2
    bool left_cell_sizes = true;   // sum_chi mult * chi(1) = |C|
    bool multiplicities = true;    // sum over left cells of mult = chi(1)
    bool families_match = true;    // families of two-sided cells = the family partition
    std::vector<std::string> failures;
    bool ok() const { return cell_sizes && left_cell_sizes && multiplicities && families_match; }
};

inline SumRuleReport sum_rule_check(const ReflectionGroup& g, const CellData& cd, const FamilyPartition* fp = nullptr) {
    SumRuleReport r;
    if (!cd.supported) return r;
    auto dim = [&](const std::string& n) { return g.character(n).degree(); };
    for (size_t i = 0; i < cd.two_sided.size(); ++i) {
        int s = 0;
        for (const auto& n : cd.two_sided_family[i]) s += dim(n) * dim(n);
        if (s != static_cast<int>(cd.two_sided[i].size())) {
            r.cell_sizes = false;
            r.failures.push_back("two-sided cell " + std::to_string(i) + " has size " + std::to_string(cd.two_sided[i].size()) +
                                 " but its family gives " + std::to_string(s));
        }
    }
    std::map<std::string, int> total;
    for (size_t i = 0; i < cd.left.size(); ++i) {
        int s = 0;
        for (const auto& [n, m] : cd.cellular[i]) {
            s += m * dim(n);
            total[n] += m;
        }
        if (s != static_cast<int>(cd.left[i].size())) {
            r.left_cell_sizes = false;
            r.failures.push_back("left cell " + std::to_string(i) + " has size " + std::to_string(cd.left[i].size()) +
                                 " but its character has degree " + std::to_string(s));
        }
    }
    for (const auto& c : g.chars)
        if (total[c.name] != c.degree()) {
            r.multiplicities = false;
            r.failures.push_back("character " + c.name + " occurs " + std::to_string(total[c.name]) + " times in left cells");
        }
    if (fp) {
        auto canon = [&](std::vector<std::vector<std::string>> v) {
            for (auto& b : v) std::sort(b.begin(), b.end());
            std::sort(v.begin(), v.end());
            return v;
        };
        if (canon(fp->blocks) != canon(cd.two_sided_family) || canon(fp->blocks) != canon(cd.families)) {
            r.families_match = false;
            r.failures.push_back("families attached to cells differ from the central character partition");
        }
    }
    return r;
}

inline nlohmann::ordered_json cells_json(const CellData& cd) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json p;
    for (const auto& [k, v] : cd.parameters) p[k] = v.str();
    j["group"] = cd.group;
    j["parameters"] = p;
    j["families"] = cd.families;
    if (!cd.supported) {
        j["cells"] = "unsupported";
        j["note"] = cd.note;
        return j;
    }
    j["cells"] = {{"two_sided", cd.two_sided}, {"two_sided_families", cd.two_sided_family}, {"left", cd.left}};
    nlohmann::ordered_json cc = nlohmann::ordered_json::array();
    for (size_t i = 0; i < cd.left.size(); ++i) {
        nlohmann::ordered_json ch;
        for (const auto& [n, m] : cd.cellular[i]) ch[n] = m;
        cc.push_back({{"cell", cd.left[i]}, {"character", ch}});
    }
    j["cellular_characters"] = cc;
    return j;
}

inline nlohmann::ordered_json families_json(const FamilyPartition& fp) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json p;
    for (const auto& [k, v] : fp.parameters) p[k] = v.str();
    j["parameters"] = p;
    j["mode"] = fp.mode == FamilyMode::Full ? "full" : "euler-only";
    j["families"] = fp.blocks;
    return j;
}

}  // namespace cmlab
