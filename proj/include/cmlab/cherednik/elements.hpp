#pragma once

// Parsing, distinguished elements, character twists and the Poisson bracket.

#include "cmlab/cherednik/algebra.hpp"

namespace cmlab {

/// Parses infix PBW text such as "X*x - x*X - A*s - A*tst - 2*B*t".
/// Identifiers: coordinates of V and V*, group element names (plus the b2
/// aliases s', t', w, w'), "T", and parameter or other scalar variables.
/// Scalar names must be listed in `scalars` when it is non-empty.
inline PBWElement parse_pbw(const AlgebraPtr& alg, std::string_view text, const std::set<std::string>& scalars = {}) {
    const auto& g = alg->group();
    auto aliases = alg->group_aliases();
    ExprOps<PBWElement> ops;
    ops.ident = [&](const std::string& name) -> PBWElement {
        for (int i = 0; i < g.rank; ++i) {
            if (g.v_names[i] == name) return alg->v_gen(i);
            if (g.dual_names[i] == name) return alg->dual_gen(i);
        }
        if (auto it = aliases.find(name); it != aliases.end()) return alg->group_elem(it->second);
        if (auto e = Cyclotomic::zeta_atom_order(name)) return alg->scalar(Poly(Cyclotomic::zeta(*e)));
        if (name == "T") {
            if (!alg->with_T()) throw std::invalid_argument("T is not available in the algebra at T = 0");
            return alg->scalar(Poly::var("T"));
        }
        bool known = scalars.empty() ? true : scalars.count(name) > 0;
        for (const auto& p : g.param_names()) known = known || p == name;
        if (!known) throw std::invalid_argument("unknown identifier '" + name + "'");
        return alg->scalar(Poly::var(name));
    };
    ops.constant = [&](const Rational& q) { return alg->scalar(Poly(q)); };
    ops.as_rational = [](const PBWElement& e) -> std::optional<Rational> {
        if (e.is_zero()) return Rational(0);
        if (e.size() != 1) return std::nullopt;
        const auto& [k, c] = *e.terms().begin();
        if (!(k == PBWKey{})) return std::nullopt;
        return c.as_rational();
    };
    return ExprParser<PBWElement>(ops).parse(text);
}

/// eu = sum_i v_i xi_i + sum_s c_s s.
inline PBWElement euler_element(const AlgebraPtr& alg) {
    const auto& g = alg->group();
    PBWElement eu = alg->zero();
    for (int i = 0; i < g.rank; ++i) {
        PBWKey k;
        k.v[i] = 1;
        k.q[i] = 1;
        eu += alg->term(k, Poly(1));
    }
    for (int s : g.reflections) {
        PBWKey k;
        k.w = s;
        eu += alg->term(k, alg->param_of(s));
    }
    return eu;
}

/// Named central elements. b2: eu, eu', eu'', delta, sigma, pi, Sigma, Pi.
/// cyclic:d: eu, X = x^d, Y = y^d (x in V*, y in V).
inline std::map<std::string, PBWElement> named_center_generators(const AlgebraPtr& alg) {
    const auto& g = alg->group();
    std::map<std::string, PBWElement> m;
    m["eu"] = euler_element(alg);
    if (g.spec == "b2") {
        auto P = [&](const char* s) { return parse_pbw(alg, s); };
        // Parameters enter through the algebra's own values for A and B.
        PBWElement A = alg->scalar(alg->params()[0]), B = alg->scalar(alg->params()[1]);
        PBWElement s = P("s"), sp = P("tst"), t = P("t"), tp = P("sts"), w = P("st"), wp = P("ts"), w0 = P("w0");
        PBWElement x = P("x"), y = P("y"), X = P("X"), Y = P("Y");
        m["sigma"] = x * x + y * y;
        m["pi"] = x * x * y * y;
        m["Sigma"] = X * X + Y * Y;
        m["Pi"] = X * X * Y * Y;
        m["eu'"] = (x * Y + y * X) * X * Y - A * (s - sp) * X * Y + B * t * Y * Y + B * tp * X * X;
        m["eu''"] = x * y * (x * Y + y * X) - A * x * y * (s - sp) + B * y * y * t + B * x * x * tp;
        m["delta"] = x * y * X * Y + B * x * tp * X + B * y * t * Y + B * B * (alg->one() + w0) + A * B * (w + wp);
    } else if (g.is_cyclic()) {
        int d = g.cyclic_d();
        m["X"] = alg->dual_gen(0).pow(d);
        m["Y"] = alg->v_gen(0).pow(d);
    }
    return m;
}

/// Automorphism of the generic algebra attached to a linear character gamma:
/// V and V* are fixed, w -> gamma(w) w and C_s -> gamma(s)^{-1} C_s.
inline PBWElement twist(const PBWElement& z, const Character& gamma) {
    const auto& alg = z.algebra();
    const auto& g = alg->group();
    if (gamma.degree() != 1) throw std::invalid_argument("twist needs a linear character");
    if (!alg->has_generic_params()) throw std::invalid_argument("twist acts on the algebra with generic parameters");
    std::map<std::string, Poly> sub;
    for (const auto& rc : g.refl_classes)
        sub[rc.param] = Poly::var(rc.param).scaled(gamma.values[rc.members[0]].inverse());
    PBWElement r = alg->zero();
    for (const auto& [k, c] : z.terms()) detail::add_term(r.mutable_terms(), k, c.substitute(sub).scaled(gamma.values[k.w]));
    return r;
}

/// Same terms, read in another algebra with the same group (e.g. with T adjoined).
inline PBWElement transport(const PBWElement& z, const AlgebraPtr& target) {
    return PBWElement(target, z.terms());
}

/// {z1, z2}: commutator in the algebra with T adjoined, divided by T, at T = 0.
inline PBWElement poisson_bracket(const PBWElement& a, const PBWElement& b) {
    const auto& alg = a.algebra();
    if (alg->with_T()) throw std::invalid_argument("Poisson bracket is defined on the algebra at T = 0");
    AlgebraPtr ht = alg->with_T_variant(true);
    PBWElement c = ht->commutator(transport(a, ht), transport(b, ht));
    int T = symbol("T");
    PBWElement out = alg->zero();
    for (const auto& [k, coeff] : c.terms()) {
        std::vector<Poly::Term> kept;
        for (const auto& [m, v] : coeff.terms()) {
            if (m[T] == 0) throw std::domain_error("commutator is not divisible by T; inputs are not central at T = 0");
            if (m[T] == 1) {
                Monomial mm = m;
                mm.set(T, 0);
                kept.push_back({mm, v});
            }
        }
        detail::add_term(out.mutable_terms(), k, Poly::from_terms(kept));
    }
    return out;
}

/// True when z commutes with every generator of H (V, V* and W).
inline bool is_central(const PBWElement& z) {
    const auto& alg = z.algebra();
    const auto& g = alg->group();
    for (int i = 0; i < g.rank; ++i) {
        if (!alg->commutator(z, alg->v_gen(i)).is_zero()) return false;
        if (!alg->commutator(z, alg->dual_gen(i)).is_zero()) return false;
    }
    for (int w = 1; w < g.order(); ++w)
        if (!alg->commutator(z, alg->group_elem(w)).is_zero()) return false;
    return true;
}

/// Grading by deg_V* - deg_V (the eigenvalue of ad(eu) / T on a homogeneous term).
inline std::optional<int> z_degree(const PBWElement& z) {
    std::optional<int> d;
    for (const auto& [k, c] : z.terms()) {
        int here = static_cast<int>(detail::pmono_degree(k.q)) - static_cast<int>(detail::pmono_degree(k.v));
        if (d && *d != here) return std::nullopt;
        d = here;
    }
    return d;
}

}  // namespace cmlab
