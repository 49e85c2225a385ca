#pragma once

// Exact square roots of polynomials, by peeling lex-leading terms.

#include "cmlab/multipoly/poly.hpp"

#include <numeric>
#include <optional>

namespace cmlab {

inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q.sign() < 0) return std::nullopt;
    mpz_class n = q.numerator(), d = q.denominator();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(mpq_class(rn, rd));
}

/// Square root of c inside Q(zeta_m), where m is a multiple of c's conductor.
/// Decided for c of the form (rational) * (root of unity); other inputs throw
/// std::domain_error.
inline std::optional<Cyclotomic> cyclotomic_sqrt(const Cyclotomic& c, int m) {
    if (c.is_zero()) return Cyclotomic(0);
    if (c.is_rational() && m == 1) {
        auto r = rational_sqrt(c.rational_value());
        if (!r) return std::nullopt;
        return Cyclotomic(*r);
    }
    int mm = std::lcm(m, 2);
    for (int k = 0; k < mm; ++k) {
        Cyclotomic u = Cyclotomic::zeta(mm, k);
        Cyclotomic q = c * u.inverse();
        if (!q.is_rational() || q.rational_value().sign() < 0) continue;
        auto r = rational_sqrt(q.rational_value());
        if (!r) return std::nullopt;
        // u needs a square root among the roots of unity of Q(zeta_m).
        for (int j = 0; j < mm; ++j) {
            Cyclotomic w = Cyclotomic::zeta(mm, j);
            if (w * w == u && std::lcm(m, w.order()) == std::lcm(m, 1)) return w.scaled(*r);
        }
        return std::nullopt;
    }
    throw std::domain_error("square root of this cyclotomic coefficient is not supported");
}

/// g with g^2 = f, normalised so the leading coefficient is positive when it is
/// rational. Returns nullopt when f is not a square over the cyclotomic field
/// generated by its coefficients.
inline std::optional<Poly> poly_sqrt(const Poly& f) {
    if (f.is_zero()) return Poly();
    int m = 1;
    for (const auto& t : f.terms()) m = std::lcm(m, t.second.order());
    const auto& [lm, lc] = f.leading_term();
    Monomial half;
    for (int i = 0; i < kMaxVars; ++i) {
        if (lm[i] % 2) return std::nullopt;
        half.set(i, lm[i] / 2);
    }
    auto root = cyclotomic_sqrt(lc, m);
    if (!root) return std::nullopt;
    Poly lead = Poly::monomial(half, *root);
    Poly g = lead;
    Cyclotomic two_lc_inv = (root->scaled(Rational(2))).inverse();
    // r = f - g^2 is maintained incrementally.
    Poly r = f - lead * lead;
    std::vector<int> degs(kMaxVars, 0);
    for (int v = 0; v < kMaxVars; ++v) degs[v] = std::max(0, f.degree_in(v));
    int total = f.total_degree();
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.leading_term();
        if (!half.divides(rm)) return std::nullopt;
        Monomial nm = rm / half;
        if (!(nm < half)) return std::nullopt;
        for (int v = 0; v < kMaxVars; ++v)
            if (2 * static_cast<int>(nm[v]) > degs[v]) return std::nullopt;
        if (2 * static_cast<int>(nm.total_degree()) > total) return std::nullopt;
        Poly term = Poly::monomial(nm, rc * two_lc_inv);
        r = r - (g.scaled(Cyclotomic(2)) + term) * term;
        g += term;
    }
    return g;
}

}  // namespace cmlab
