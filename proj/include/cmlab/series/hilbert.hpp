#pragma once

// Bigraded Hilbert series: t counts degree in the coordinates of V, u in those
// of V*. Truncation is by total degree.

#include "cmlab/cherednik/elements.hpp"
#include "cmlab/multipoly/series2.hpp"
#include "cmlab/reflgrp/params.hpp"

#include <json.hpp>

namespace cmlab {

using CSeries2 = BiSeries<Cyclotomic>;

namespace detail {

inline TruncSeries2 rational_part(const CSeries2& s) {
    return s.map<Rational>([](const Cyclotomic& c) {
        auto q = c.as_rational();
        if (!q) throw std::logic_error("series coefficient is not rational: " + c.str());
        return *q;
    });
}

// 1 / det(1 - z M) as a series in t (var = 0) or u (var = 1).
inline CSeries2 inverse_det(const CMatrix& m, int var, int N) {
    auto cp = m.charpoly();  // det(lambda - M) = sum cp[k] lambda^{n-k}
    CSeries2 s(N);
    for (size_t k = 0; k < cp.size() && static_cast<int>(k) <= N; ++k) s.at(var ? 0 : k, var ? k : 0) += cp[k];
    return s.inverse();
}

inline TruncSeries2 poly_to_series(const Poly& p, int N) {
    TruncSeries2 s(N);
    int t = symbol("t"), u = symbol("u");
    for (const auto& [m, c] : p.terms()) {
        int i = m[t], j = m[u];
        if (i + j <= N) s.at(i, j) += *c.as_rational();
    }
    return s;
}

// prod_i 1 / ((1 - t^{d_i})(1 - u^{d_i})) times 1 / (1 - tu)^k.
inline TruncSeries2 denominator_inverse(const ReflectionGroup& g, int k, int N) {
    TruncSeries2 one = TruncSeries2::constant(N, Rational(1)), acc = one;
    for (int d : g.degrees) {
        acc = acc * (one - TruncSeries2::monomial(N, d, 0)).inverse();
        acc = acc * (one - TruncSeries2::monomial(N, 0, d)).inverse();
    }
    for (int i = 0; i < k; ++i) acc = acc * (one - TruncSeries2::monomial(N, 1, 1)).inverse();
    return acc;
}

}  // namespace detail

/// (1/|W|) sum_w 1 / (det(1 - w t) det(1 - w^{-1} u)).
inline TruncSeries2 molien_bigraded(const ReflectionGroup& g, int N) {
    if (N < 1) throw std::invalid_argument("series order must be at least 1");
    CSeries2 acc(N);
    for (int w = 0; w < g.order(); ++w)
        acc = acc + detail::inverse_det(g.on_v[w], 0, N) * detail::inverse_det(g.on_v[g.inv[w]], 1, N);
    return detail::rational_part(acc.scaled(Cyclotomic(Rational(1, g.order()))));
}

/// sum_chi f_chi(t) f_chi(u), a polynomial in t and u.
inline Poly fantome_numerator(const ReflectionGroup& g) {
    Poly num;
    std::map<std::string, Poly> to_u{{"t", Poly::var("u")}};
    for (const auto& chi : g.chars) {
        Poly f = fake_degree(g, chi);
        num += f * f.substitute(to_u);
    }
    return num;
}

inline TruncSeries2 fantome_bigraded(const ReflectionGroup& g, int N) {
    if (N < 1) throw std::invalid_argument("series order must be at least 1");
    return detail::poly_to_series(fantome_numerator(g), N) * detail::denominator_inverse(g, 0, N);
}

struct CenterSeries {
    TruncSeries2 molien;   // Molien form with the parameter factor
    TruncSeries2 fantome;  // fake-degree form with the parameter factor
    TruncSeries2 basis;    // from the bidegrees of an explicit P-basis of Z
    std::vector<std::pair<std::string, std::pair<int, int>>> basis_bidegrees;
    bool agree() const { return molien == fantome && fantome == basis; }
};

/// A free P-basis of the center: 1, eu, ..., eu^{d-1} in rank one, and
/// 1, eu, eu^2, delta, delta eu, delta eu^2, eu', eu'' for b2.
inline std::vector<std::pair<std::string, PBWElement>> center_p_basis(const AlgebraPtr& H) {
    auto z = named_center_generators(H);
    const auto& g = H->group();
    std::vector<std::pair<std::string, PBWElement>> b;
    const PBWElement& eu = z.at("eu");
    if (g.is_cyclic()) {
        PBWElement p = H->one();
        for (int k = 0; k < g.cyclic_d(); ++k) {
            b.push_back({k == 0 ? "1" : k == 1 ? "eu" : "eu^" + std::to_string(k), p});
            p = p * eu;
        }
        return b;
    }
    if (g.spec != "b2") throw std::invalid_argument("no P-basis of the center for " + g.spec);
    const PBWElement& d = z.at("delta");
    b = {{"1", H->one()},         {"eu", eu},          {"eu^2", eu * eu},        {"delta", d},
         {"delta*eu", d * eu},    {"delta*eu^2", d * eu * eu}, {"eu'", z.at("eu'")}, {"eu''", z.at("eu''")}};
    return b;
}

inline CenterSeries hilbert_center(const std::shared_ptr<const ReflectionGroup>& g, int N) {
    if (N < 1) throw std::invalid_argument("series order must be at least 1");
    int k = static_cast<int>(g->refl_classes.size());
    CenterSeries cs;
    TruncSeries2 params = TruncSeries2::constant(N, Rational(1));
    for (int i = 0; i < k; ++i) params = params * (TruncSeries2::constant(N, Rational(1)) - TruncSeries2::monomial(N, 1, 1)).inverse();
    cs.molien = molien_bigraded(*g, N) * params;
    cs.fantome = fantome_bigraded(*g, N) * params;
    auto H = CherednikAlgebra::generic(g);
    TruncSeries2 num(N);
    for (const auto& [name, e] : center_p_basis(H)) {
        auto bd = e.bidegree();
        if (!bd) throw std::logic_error(name + " is not bihomogeneous");
        cs.basis_bidegrees.push_back({name, *bd});
        if (bd->first + bd->second <= N) num.at(bd->first, bd->second) += Rational(1);
    }
    cs.basis = num * detail::denominator_inverse(*g, k, N);
    return cs;
}

/// Coefficient table [[i, j, value], ...] of the nonzero coefficients.
inline nlohmann::ordered_json series_table_json(const TruncSeries2& s) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int d = 0; d <= s.order(); ++d)
        for (int i = d; i >= 0; --i) {
            const Rational& c = s.coeff(i, d - i);
            if (!c.is_zero()) rows.push_back({i, d - i, c.str()});
        }
    return rows;
}

/// Closed form of the invariant series as a string.
inline std::string molien_closed_form(const ReflectionGroup& g) {
    std::string den;
    for (const char* v : {"t", "u"})
        for (int d : g.degrees) den += "(1 - " + std::string(v) + "^" + std::to_string(d) + ")";
    return "(" + fantome_numerator(g).str() + ")/(" + den + ")";
}

}  // namespace cmlab
