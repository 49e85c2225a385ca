#pragma once

// Parameters of the algebra in the two usual coordinate systems:
//   C-coordinates: one value per conjugacy class of reflections;
//   K-coordinates: K_{H,j}, j = 0..e_H-1, per hyperplane orbit, with sum_j K_{H,j} = 0.
// They are related by C_{s_H^i} = sum_j zeta_{e_H}^{i(j-1)} K_{H,j}.

#include "cmlab/reflgrp/group.hpp"

namespace cmlab {

struct CParams {
    std::vector<Poly> c;  // indexed like ReflectionGroup::refl_classes
};

struct KParams {
    std::vector<std::vector<Poly>> k;  // [orbit][j]
};

inline CParams k_to_c(const ReflectionGroup& g, const KParams& kp) {
    if (kp.k.size() != g.orbits.size()) throw std::invalid_argument("K-parameters: wrong number of hyperplane orbits");
    for (size_t o = 0; o < g.orbits.size(); ++o) {
        if (kp.k[o].size() != static_cast<size_t>(g.orbits[o].e))
            throw std::invalid_argument("K-parameters: wrong number of entries for an orbit");
        Poly s;
        for (const auto& v : kp.k[o]) s += v;
        if (!s.is_zero()) throw std::invalid_argument("K-parameters must sum to zero on each orbit");
    }
    CParams cp;
    for (const auto& rc : g.refl_classes) {
        const auto& ho = g.orbits[rc.orbit];
        Poly v;
        for (int j = 0; j < ho.e; ++j)
            v += kp.k[rc.orbit][j].scaled(Cyclotomic::zeta(ho.e, static_cast<long long>(rc.power) * (j - 1)));
        cp.c.push_back(v);
    }
    return cp;
}

inline KParams c_to_k(const ReflectionGroup& g, const CParams& cp) {
    if (cp.c.size() != g.refl_classes.size()) throw std::invalid_argument("C-parameters: wrong number of reflection classes");
    KParams kp;
    for (size_t o = 0; o < g.orbits.size(); ++o) {
        int e = g.orbits[o].e;
        // C_i for i = 1..e-1 (C_0 = 0).
        std::vector<Poly> ci(e);
        for (size_t r = 0; r < g.refl_classes.size(); ++r)
            if (g.refl_classes[r].orbit == static_cast<int>(o)) ci[g.refl_classes[r].power] = cp.c[r];
        std::vector<Poly> k(e);
        for (int j = 0; j < e; ++j) {
            Poly v;
            for (int i = 1; i < e; ++i) v += ci[i].scaled(Cyclotomic::zeta(e, -static_cast<long long>(i) * (j - 1)));
            k[j] = v.scaled(Cyclotomic(Rational(1, e)));
        }
        kp.k.push_back(k);
    }
    return kp;
}

/// K-coordinates as independent variables: K_{H,j} for j >= 1 are variables
/// and K_{H,0} = -sum_{j>=1} K_{H,j}.
inline KParams generic_k(const ReflectionGroup& g) {
    KParams kp;
    for (const auto& ho : g.orbits) {
        std::vector<Poly> k(ho.e);
        Poly s;
        for (int j = 1; j < ho.e; ++j) {
            k[j] = Poly::var(ho.k_name(j));
            s += k[j];
        }
        k[0] = -s;
        kp.k.push_back(k);
    }
    return kp;
}

/// Fake degree of chi: graded multiplicity of chi in the coinvariant algebra of
/// polynomial functions on V*, as a polynomial in t.
inline Poly fake_degree(const ReflectionGroup& g, const Character& chi) {
    int N = static_cast<int>(g.reflections.size());
    std::vector<Cyclotomic> acc(N + 1, Cyclotomic(0));
    for (int w = 0; w < g.order(); ++w) {
        auto s = detail::inverse_det_series(g.on_v[w], N);
        Cyclotomic cw = chi.values[g.inv[w]];
        for (int k = 0; k <= N; ++k) acc[k] += cw * s[k];
    }
    for (auto& c : acc) c = c.scaled(Rational(1, g.order()));
    // Multiply by prod (1 - t^{d_i}).
    for (int d : g.degrees)
        for (int k = N; k >= d; --k) acc[k] -= acc[k - d];
    int t = symbol("t");
    Poly f;
    for (int k = 0; k <= N; ++k) {
        if (!acc[k].is_rational()) throw std::logic_error("fake degree coefficient is not rational");
        const Rational& q = acc[k].rational_value();
        if (!q.is_integer() || q.sign() < 0) throw std::logic_error("fake degree coefficient is not a natural number");
        f += Poly::var(t, k).scaled(Cyclotomic(q));
    }
    return f;
}

/// b-invariant: valuation of the fake degree.
inline int b_invariant(const ReflectionGroup& g, const Character& chi) {
    Poly f = fake_degree(g, chi);
    int t = symbol("t");
    for (int k = 0; k <= f.degree_in(t); ++k)
        if (!f.coefficient_in(t, k).is_zero()) return k;
    throw std::logic_error("zero fake degree");
}

}  // namespace cmlab
