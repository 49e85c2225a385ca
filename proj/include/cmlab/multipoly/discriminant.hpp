#pragma once

// Resultants via Sylvester determinants and discriminants built on them.

#include "cmlab/multipoly/matrix.hpp"
#include "cmlab/multipoly/poly.hpp"

namespace cmlab {

/// Coefficients of p as a polynomial in v, index = power.
inline std::vector<Poly> coefficients_in(const Poly& p, int v) {
    int d = p.degree_in(v);
    std::vector<Poly> c(d < 0 ? 0 : d + 1);
    for (int k = 0; k <= d; ++k) c[k] = p.coefficient_in(v, k);
    return c;
}

inline Matrix<Poly> sylvester_matrix(const Poly& f, const Poly& g, int v) {
    auto a = coefficients_in(f, v), b = coefficients_in(g, v);
    if (a.empty() || b.empty()) throw std::domain_error("resultant of a zero polynomial");
    size_t m = a.size() - 1, n = b.size() - 1;
    Matrix<Poly> s(m + n, m + n);
    for (size_t r = 0; r < n; ++r)
        for (size_t k = 0; k <= m; ++k) s(r, r + k) = a[m - k];
    for (size_t r = 0; r < m; ++r)
        for (size_t k = 0; k <= n; ++k) s(n + r, r + k) = b[n - k];
    return s;
}

/// Res_v(f, g) as the Sylvester determinant.
inline Poly resultant(const Poly& f, const Poly& g, int v) {
    int m = f.degree_in(v), n = g.degree_in(v);
    if (m < 0 || n < 0) throw std::domain_error("resultant of a zero polynomial");
    if (m == 0 && n == 0) return Poly(1);
    if (m == 0) return f.pow(n);
    if (n == 0) return g.pow(m);
    return sylvester_matrix(f, g, v).det();
}

/// disc_v(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f), d = deg_v f >= 1.
inline Poly discriminant(const Poly& f, int v) {
    int d = f.degree_in(v);
    if (d < 1) throw std::domain_error("discriminant needs positive degree");
    if (d == 1) return Poly(1);
    Poly r = resultant(f, f.derivative(v), v);
    Poly lc = f.coefficient_in(v, d);
    Poly q = r.exact_divide(lc);
    return ((d * (d - 1) / 2) % 2) ? -q : q;
}
inline Poly discriminant(const Poly& f, const std::string& var) { return discriminant(f, symbol(var)); }

}  // namespace cmlab
