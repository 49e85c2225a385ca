#pragma once

// Calogero-Moser families: characters grouped by their central characters on
// a generating set of the center, at a rational parameter point.

#include "cmlab/reflgrp/params.hpp"
#include "cmlab/verma/baby_verma.hpp"

#include <mutex>

namespace cmlab {

enum class FamilyMode {
    Full,       // Omega on generators of Z over P: exact
    EulerOnly,  // Omega(eu) alone: only a necessary condition
};

struct FamilyPartition {
    std::map<std::string, Cyclotomic> parameters;
    std::vector<std::vector<std::string>> blocks;
    std::vector<std::vector<Cyclotomic>> signatures;  // one per block
    FamilyMode mode = FamilyMode::Full;

    /// Index of the block containing a character.
    int block_of(const std::string& chi) const {
        for (size_t i = 0; i < blocks.size(); ++i)
            if (std::find(blocks[i].begin(), blocks[i].end(), chi) != blocks[i].end()) return static_cast<int>(i);
        return -1;
    }
};

/// Generators whose central characters separate blocks.
inline std::vector<std::string> center_generator_names(const ReflectionGroup& g, FamilyMode mode) {
    if (mode == FamilyMode::EulerOnly || g.is_cyclic()) return {"eu"};
    if (g.spec == "b2") return {"eu", "eu'", "eu''", "delta"};
    throw std::invalid_argument("no presentation of the center for " + g.spec);
}

/// Generic Omega table [character][generator], computed once per group.
inline const std::vector<std::vector<Poly>>& generic_omega_table(const std::shared_ptr<const ReflectionGroup>& g) {
    static std::mutex mu;
    static std::map<std::string, std::vector<std::vector<Poly>>> cache;
    std::lock_guard<std::mutex> lk(mu);
    if (auto it = cache.find(g->spec); it != cache.end()) return it->second;
    auto H = CherednikAlgebra::generic(g);
    auto named = named_center_generators(H);
    auto gens = center_generator_names(*g, FamilyMode::Full);
    std::vector<std::vector<Poly>> table;
    for (const auto& chi : g->chars) {
        BabyVerma M(H, chi);
        std::vector<Poly> row;
        for (const auto& n : gens) row.push_back(M.omega(named.at(n)));
        table.push_back(row);
    }
    return cache.emplace(g->spec, std::move(table)).first->second;
}

/// C-parameter values from K-coordinates for a cyclic group (K_0 implied when
/// only d - 1 values are given).
inline std::vector<Cyclotomic> c_from_k(const ReflectionGroup& g, std::vector<Cyclotomic> k) {
    if (!g.is_cyclic()) throw std::invalid_argument("K coordinates are implemented for cyclic groups");
    int d = g.cyclic_d();
    if (static_cast<int>(k.size()) == d - 1) {
        Cyclotomic s(0);
        for (const auto& v : k) s += v;
        k.insert(k.begin(), -s);
    }
    if (static_cast<int>(k.size()) != d) throw std::invalid_argument("expected " + std::to_string(d) + " K values");
    KParams kp;
    kp.k.emplace_back();
    for (const auto& v : k) kp.k[0].push_back(Poly(v));
    std::vector<Cyclotomic> c;
    for (const auto& p : k_to_c(g, kp).c) c.push_back(p.is_zero() ? Cyclotomic(0) : *p.as_constant());
    return c;
}

inline FamilyPartition cm_families(const std::shared_ptr<const ReflectionGroup>& g, const std::vector<Cyclotomic>& c,
                                   FamilyMode mode = FamilyMode::Full) {
    auto names = g->param_names();
    if (c.size() != names.size())
        throw std::invalid_argument("expected " + std::to_string(names.size()) + " parameter values");
    const auto& table = generic_omega_table(g);
    std::map<std::string, Poly> point;
    FamilyPartition fp;
    fp.mode = mode;
    for (size_t i = 0; i < names.size(); ++i) {
        point[names[i]] = Poly(c[i]);
        fp.parameters[names[i]] = c[i];
    }
    size_t ncols = mode == FamilyMode::EulerOnly ? 1 : table[0].size();
    for (size_t i = 0; i < g->chars.size(); ++i) {
        std::vector<Cyclotomic> sig;
        for (size_t j = 0; j < ncols; ++j) {
            Poly v = table[i][j].substitute(point);
            sig.push_back(v.is_zero() ? Cyclotomic(0) : *v.as_constant());
        }
        auto it = std::find(fp.signatures.begin(), fp.signatures.end(), sig);
        if (it == fp.signatures.end()) {
            fp.signatures.push_back(sig);
            fp.blocks.push_back({g->chars[i].name});
        } else {
            fp.blocks[it - fp.signatures.begin()].push_back(g->chars[i].name);
        }
    }
    return fp;
}

/// Name of the character chi * gamma, gamma linear.
inline std::string tensor_character(const ReflectionGroup& g, const std::string& chi, const std::string& gamma) {
    const auto& a = g.character(chi);
    const auto& b = g.character(gamma);
    if (b.degree() != 1) throw std::invalid_argument("tensoring needs a linear character");
    for (const auto& c : g.chars) {
        bool ok = true;
        for (int w = 0; w < g.order() && ok; ++w) ok = c.values[w] == a.values[w] * b.values[w];
        if (ok) return c.name;
    }
    throw std::logic_error("product character is not irreducible");
}

}  // namespace cmlab
