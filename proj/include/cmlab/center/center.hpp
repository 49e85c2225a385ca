#pragma once

// Checks of the explicit presentations of the center inside the PBW engine,
// and minimal / characteristic polynomials of the Euler element.

#include "cmlab/reflgrp/params.hpp"
#include "cmlab/series/hilbert.hpp"
#include "cmlab/verma/baby_verma.hpp"

namespace cmlab {

struct RelationCheck {
    std::string relation;
    std::string statement;
    bool ok = false;
    std::optional<std::string> residue;
};

struct CenterReport {
    std::string group;
    std::vector<RelationCheck> checks;
    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok; });
    }
};

inline nlohmann::ordered_json report_json(const CenterReport& r) {
    nlohmann::ordered_json j;
    j["group"] = r.group;
    j["status"] = r.ok() ? "pass" : "fail";
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json e;
        e["relation"] = c.relation;
        e["statement"] = c.statement;
        e["status"] = c.ok ? "pass" : "fail";
        if (c.residue) e["residue"] = *c.residue;
        arr.push_back(e);
    }
    j["checks"] = arr;
    return j;
}

namespace detail {

inline RelationCheck zero_check(std::string name, std::string statement, const PBWElement& residue) {
    RelationCheck c{std::move(name), std::move(statement), residue.is_zero(), std::nullopt};
    if (!c.ok) c.residue = residue.str();
    return c;
}

/// Evaluates a polynomial in the P-variables (and parameters) inside H, with
/// sigma, pi, Sigma, Pi (b2) or X, Y (rank one) replaced by the named elements.
inline PBWElement embed(const Poly& p, const AlgebraPtr& H, const std::map<std::string, PBWElement>& named) {
    std::map<int, PBWElement> gens;
    for (const char* n : {"sigma", "pi", "Sigma", "Pi", "X", "Y"})
        if (auto it = named.find(n); it != named.end()) gens.emplace(symbol(n), it->second);
    PBWElement out = H->zero();
    for (const auto& [m, c] : p.terms()) {
        Poly scalar(c);
        PBWElement e = H->one();
        for (int v = 0; v < kMaxVars; ++v) {
            if (!m[v]) continue;
            if (auto it = gens.find(v); it != gens.end())
                e = e * it->second.pow(m[v]);
            else
                scalar *= Poly::var(v, m[v]);
        }
        out += e.scaled(scalar);
    }
    return out;
}

inline PBWElement horner(const Poly& f, const std::string& var, const PBWElement& x, const AlgebraPtr& H,
                         const std::map<std::string, PBWElement>& named) {
    int deg = f.degree_in(var);
    PBWElement acc = H->zero();
    for (int k = deg; k >= 0; --k) acc = acc * x + embed(f.coefficient_in(var, k), H, named);
    return acc;
}

}  // namespace detail

/// prod_{i=1}^{d} (eu - d K_i) = X Y with K-coordinates (K_d = K_0), and at K = 0.
inline CenterReport verify_rank1_center(int d) {
    if (d < 2 || d > 8) throw std::invalid_argument("rank one checks run for 2 <= d <= 8");
    auto g = build_group("cyclic:" + std::to_string(d));
    KParams k = generic_k(*g);
    auto H = CherednikAlgebra::create(g, k_to_c(*g, k).c);
    auto z = named_center_generators(H);
    CenterReport r;
    r.group = g->spec;
    PBWElement prod = H->one();
    for (int i = 1; i <= d; ++i) prod = prod * (z.at("eu") - H->scalar(k.k[0][i % d].scaled(Cyclotomic(d))));
    r.checks.push_back(detail::zero_check("rank1", "prod_i (eu - d K_i) = X Y", prod - z.at("X") * z.at("Y")));
    r.checks.push_back({"central", "eu, X, Y are central", is_central(z.at("eu")) && is_central(z.at("X")) && is_central(z.at("Y")), std::nullopt});
    auto H0 = CherednikAlgebra::create(g, std::vector<Poly>(g->refl_classes.size()));
    auto z0 = named_center_generators(H0);
    r.checks.push_back(detail::zero_check("rank1-c0", "eu^d = X Y at c = 0", z0.at("eu").pow(d) - z0.at("X") * z0.at("Y")));
    return r;
}

/// The b2 relations, as (name, statement, lhs - rhs).
inline std::vector<std::tuple<std::string, std::string, PBWElement>> b2_relations(const AlgebraPtr& H) {
    auto z = named_center_generators(H);
    const auto &eu = z.at("eu"), &e1 = z.at("eu'"), &e2 = z.at("eu''"), &d = z.at("delta");
    const auto &s = z.at("sigma"), &p = z.at("pi"), &S = z.at("Sigma"), &P = z.at("Pi");
    PBWElement A = H->scalar(H->params()[0]), B = H->scalar(H->params()[1]);
    PBWElement B2 = B * B;
    PBWElement F = d.scaled(Poly(4)) - eu * eu + s * S + (A * A - B2).scaled(Poly(4));
    return {
        {"Z1", "eu eu' = sigma Pi + Sigma delta", eu * e1 - (s * P + S * d)},
        {"Z2", "eu eu'' = Sigma pi + sigma delta", eu * e2 - (S * p + s * d)},
        {"Z3", "delta eu' = Pi eu'' + B^2 Sigma eu", d * e1 - (P * e2 + B2 * S * eu)},
        {"Z4", "delta eu'' = pi eu' + B^2 sigma eu", d * e2 - (p * e1 + B2 * s * eu)},
        {"Z5", "delta^2 = pi Pi + B^2 eu^2", d * d - (p * P + B2 * eu * eu)},
        {"Z6", "eu'^2 = Pi (4 delta - eu^2 + sigma Sigma + 4A^2 - 4B^2) + B^2 Sigma^2", e1 * e1 - (P * F + B2 * S * S)},
        {"Z7", "eu''^2 = pi (4 delta - eu^2 + sigma Sigma + 4A^2 - 4B^2) + B^2 sigma^2", e2 * e2 - (p * F + B2 * s * s)},
        {"Z8", "eu' eu'' = delta (4 delta - eu^2 + sigma Sigma + 4A^2 - 4B^2) - B^2 sigma Sigma", e1 * e2 - (d * F - B2 * s * S)},
        {"Z9", "eu (4 delta - eu^2 + sigma Sigma + 4A^2 - 4B^2) = sigma eu' + Sigma eu''", eu * F - (s * e1 + S * e2)},
    };
}

inline CenterReport verify_b2_center() {
    auto H = CherednikAlgebra::generic(build_group("b2"));
    auto z = named_center_generators(H);
    CenterReport r;
    r.group = "b2";
    for (const char* n : {"eu", "eu'", "eu''", "delta"})
        r.checks.push_back({std::string("central:") + n, std::string(n) + " commutes with x, y, X, Y, s, t", is_central(z.at(n)), std::nullopt});
    for (auto& [name, st, res] : b2_relations(H)) r.checks.push_back(detail::zero_check(name, st, res));
    return r;
}

/// The degree-8 minimal polynomial of eu over P for b2, in t.
inline Poly b2_euler_minpoly_explicit() {
    return Poly::parse(
        "t^8 - 2*(sigma*Sigma + 4*A^2 + 4*B^2)*t^6"
        " + (sigma^2*Sigma^2 + 2*(sigma^2*Pi + Sigma^2*pi - 8*pi*Pi) + 8*(A^2 + B^2)*sigma*Sigma + 16*(A^2 - B^2)^2)*t^4"
        " - 2*((sigma*Sigma + 4*A^2 - 4*B^2)*(sigma^2*Pi + Sigma^2*pi) - 8*sigma*Sigma*pi*Pi + 2*B^2*sigma^2*Sigma^2)*t^2"
        " + (sigma^2*Pi - Sigma^2*pi)^2");
}

/// Coordinates on the P-basis 1, eu, eu^2, delta, delta eu, delta eu^2, eu', eu''.
using ZVector = std::array<Poly, 8>;

/// Multiplication by eu on the P-basis of the b2 center, rewritten with
/// Z1, Z2 (eu eu', eu eu''), Z9 (eu^3) and Z3-Z5 (delta eu^3).
inline ZVector b2_times_eu(const ZVector& v) {
    auto P = [](const char* s) { return Poly::parse(s); };
    Poly c = P("sigma*Sigma + 4*A^2 - 4*B^2");
    // eu^3 = c eu + 4 delta eu - sigma eu' - Sigma eu''
    ZVector e3{Poly(), c, Poly(), Poly(), Poly(4), Poly(), -P("sigma"), -P("Sigma")};
    // delta eu^3 = c delta eu + 4 delta^2 eu - sigma delta eu' - Sigma delta eu''
    ZVector de3{};
    de3[4] += c;
    de3[1] += P("4*pi*Pi - 2*B^2*sigma*Sigma");
    for (size_t i = 0; i < 8; ++i) de3[i] += e3[i].scaled(Cyclotomic(4)) * P("B^2");
    de3[7] -= P("sigma*Pi");
    de3[6] -= P("Sigma*pi");
    ZVector out{};
    out[1] += v[0];
    out[2] += v[1];
    for (size_t i = 0; i < 8; ++i) out[i] += v[2] * e3[i] + v[5] * de3[i];
    out[4] += v[3];
    out[5] += v[4];
    out[0] += v[6] * P("sigma*Pi") + v[7] * P("Sigma*pi");
    out[3] += v[6] * P("Sigma") + v[7] * P("sigma");
    return out;
}

inline Matrix<Poly> b2_euler_matrix() {
    Matrix<Poly> m(8, 8);
    for (size_t j = 0; j < 8; ++j) {
        ZVector e{};
        e[j] = Poly(1);
        ZVector img = b2_times_eu(e);
        for (size_t i = 0; i < 8; ++i) m(i, j) = img[i];
    }
    return m;
}

/// det(t - M) from a Berkowitz coefficient list.
inline Poly charpoly_in_t(const Matrix<Poly>& m) {
    auto cp = m.charpoly();
    Poly out;
    size_t n = cp.size() - 1;
    for (size_t k = 0; k <= n; ++k) out += cp[k] * Poly::var("t", static_cast<int>(n - k));
    return out;
}

struct MinpolyResult {
    Poly polynomial;  // in t over P
    CenterReport report;
};

/// Rank one: prod (t - d K_i) - X Y. b2: char poly of eu on the P-basis,
/// checked against the explicit polynomial, the columns of the matrix against
/// PBW products, and F(eu) = 0 in H.
inline MinpolyResult minpoly_euler(const std::shared_ptr<const ReflectionGroup>& g) {
    MinpolyResult res;
    res.report.group = g->spec;
    if (g->is_cyclic()) {
        int d = g->cyclic_d();
        KParams k = generic_k(*g);
        Poly f(1);
        for (int i = 1; i <= d; ++i) f *= Poly::var("t") - k.k[0][i % d].scaled(Cyclotomic(d));
        res.polynomial = f - Poly::var("X") * Poly::var("Y");
        auto H = CherednikAlgebra::create(g, k_to_c(*g, k).c);
        auto z = named_center_generators(H);
        res.report.checks.push_back(
            detail::zero_check("F(eu)", "F_eu(eu) = 0", detail::horner(res.polynomial, "t", z.at("eu"), H, z)));
        return res;
    }
    if (g->spec != "b2") throw std::invalid_argument("no minimal polynomial of eu for " + g->spec);
    Matrix<Poly> m = b2_euler_matrix();
    res.polynomial = charpoly_in_t(m);
    Poly expect = b2_euler_minpoly_explicit();
    RelationCheck same{"charpoly", "char poly of eu on the P-basis = explicit degree-8 polynomial", res.polynomial == expect, std::nullopt};
    if (!same.ok) same.residue = (res.polynomial - expect).str();
    res.report.checks.push_back(same);
    auto H = CherednikAlgebra::generic(g);
    auto z = named_center_generators(H);
    auto basis = center_p_basis(H);
    for (size_t j = 0; j < 8; ++j) {
        PBWElement rhs = H->zero();
        for (size_t i = 0; i < 8; ++i) rhs += basis[i].second * detail::embed(m(i, j), H, z);
        res.report.checks.push_back(detail::zero_check("column:" + basis[j].first, "eu * " + basis[j].first + " rewritten on the P-basis",
                                                       z.at("eu") * basis[j].second - rhs));
    }
    // F has only even powers of t; evaluate in eu^2.
    Poly f = expect.substitute(std::map<std::string, Poly>{{"t", Poly::var("u")}});
    Poly half;
    for (int k = 0; k <= 4; ++k) half += f.coefficient_in("u", 2 * k) * Poly::var("u", k);
    PBWElement eu2 = z.at("eu") * z.at("eu");
    res.report.checks.push_back(detail::zero_check("F(eu)", "F_eu(eu) = 0", detail::horner(half, "u", eu2, H, z)));
    return res;
}

struct CongruenceResult {
    Poly charpoly_mod;  // char poly with the P-invariants set to zero
    Poly product;       // prod_chi (t - Omega_chi(eu))^{chi(1)^2}
    bool ok() const { return charpoly_mod == product; }
};

/// Char poly of eu modulo the positive-degree invariants against the central characters.
inline CongruenceResult charpoly_congruence(const std::shared_ptr<const ReflectionGroup>& g) {
    CongruenceResult r;
    Poly f = minpoly_euler(g).polynomial;
    std::map<std::string, Poly> zero;
    for (const char* n : g->is_cyclic() ? std::vector<const char*>{"X", "Y"} : std::vector<const char*>{"sigma", "pi", "Sigma", "Pi"})
        zero[n] = Poly();
    r.charpoly_mod = f.substitute(zero);
    AlgebraPtr H;
    if (g->is_cyclic())
        H = CherednikAlgebra::create(g, k_to_c(*g, generic_k(*g)).c);
    else
        H = CherednikAlgebra::generic(g);
    PBWElement eu = euler_element(H);
    r.product = Poly(1);
    for (const auto& chi : g->chars) {
        Poly om = BabyVerma(H, chi).omega(eu);
        r.product *= (Poly::var("t") - om).pow(chi.degree() * chi.degree());
    }
    return r;
}

}  // namespace cmlab
