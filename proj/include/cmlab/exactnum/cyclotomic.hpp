#pragma once

// Elements of the cyclotomic fields Q(zeta_e), zeta_e = exp(2*pi*i/e).
//
// An element is stored in the power basis 1, z, ..., z^(phi(e)-1) of the
// smallest field that contains it (its conductor, normalised so that e is not
// 2 mod 4). Binary operations lift both operands to Q(zeta_lcm) and the result
// is demoted again, so equal values always have equal representations.

#include "cmlab/exactnum/expr_parser.hpp"
#include "cmlab/exactnum/rational.hpp"

#include <boost/container/small_vector.hpp>

#include <array>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace cmlab {

namespace detail {

inline int normalize_order(int e) { return (e % 4 == 2) ? e / 2 : e; }

inline std::vector<int> prime_factors(int n) {
    std::vector<int> ps;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

inline int euler_phi(int n) {
    int r = n;
    for (int p : prime_factors(n)) r = r / p * (p - 1);
    return r;
}

// Integer polynomial helpers used only to build the tables below.
using IPoly = std::vector<long long>;

inline IPoly ipoly_divexact(IPoly num, const IPoly& den) {
    IPoly q(num.size() - den.size() + 1, 0);
    for (size_t i = q.size(); i-- > 0;) {
        long long c = num[i + den.size() - 1] / den.back();
        q[i] = c;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    return q;
}

inline IPoly cyclotomic_poly(int n) {
    // x^n - 1 = prod_{d | n} Phi_d
    IPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = ipoly_divexact(p, cyclotomic_poly(d));
    return p;
}

struct SubfieldProjection {
    int d = 1;
    // Embedding columns: image of z_d^k in the power basis of Q(z_m).
    std::vector<std::vector<Rational>> embed;  // [phi(m)][phi(d)]
    std::vector<size_t> pivot_rows;            // phi(d) rows forming an invertible block
    std::vector<std::vector<Rational>> inv;    // inverse of that block, [phi(d)][phi(d)]
};

struct CycloTables {
    int m = 1;
    int phi = 1;
    // powers[k] = z^k in the power basis, for 0 <= k < m.
    std::vector<std::vector<Rational>> powers;
    std::mutex mu;
    std::map<int, std::unique_ptr<SubfieldProjection>> proj;
};

inline std::vector<std::vector<Rational>> invert_matrix(std::vector<std::vector<Rational>> a) {
    size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) throw std::logic_error("singular matrix");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rational s = a[c][c].inverse();
        for (size_t j = 0; j < n; ++j) {
            a[c][j] *= s;
            inv[c][j] *= s;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            Rational f = a[r][c];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

constexpr int kMaxOrder = 1024;

inline CycloTables& tables(int m) {
    static std::array<std::atomic<CycloTables*>, kMaxOrder + 1> cache{};
    static std::mutex build_mu;
    if (m < 1 || m > kMaxOrder) throw std::out_of_range("cyclotomic order out of supported range");
    CycloTables* t = cache[m].load(std::memory_order_acquire);
    if (t) return *t;
    std::lock_guard<std::mutex> lk(build_mu);
    t = cache[m].load(std::memory_order_relaxed);
    if (t) return *t;
    auto* nt = new CycloTables;
    nt->m = m;
    IPoly phi_m = cyclotomic_poly(m);
    nt->phi = static_cast<int>(phi_m.size()) - 1;
    int ph = nt->phi;
    nt->powers.assign(m, std::vector<Rational>(ph, Rational(0)));
    // z^k for k < phi is the basis vector; larger k reduce by z^phi = -sum phi_m[i] z^i.
    std::vector<Rational> cur(ph, Rational(0));
    cur[0] = Rational(1);
    for (int k = 0; k < m; ++k) {
        nt->powers[k] = cur;
        std::vector<Rational> next(ph, Rational(0));
        for (int i = 0; i + 1 < ph; ++i) next[i + 1] = cur[i];
        if (!cur[ph - 1].is_zero())
            for (int i = 0; i < ph; ++i) next[i] -= cur[ph - 1] * Rational(phi_m[i]);
        cur = std::move(next);
    }
    cache[m].store(nt, std::memory_order_release);
    return *nt;
}

inline const SubfieldProjection& projection(int m, int d) {
    CycloTables& tm = tables(m);
    std::lock_guard<std::mutex> lk(tm.mu);
    auto it = tm.proj.find(d);
    if (it != tm.proj.end()) return *it->second;
    auto p = std::make_unique<SubfieldProjection>();
    p->d = d;
    int pd = tables(d).phi;
    p->embed.assign(tm.phi, std::vector<Rational>(pd, Rational(0)));
    for (int k = 0; k < pd; ++k) {
        const auto& col = tm.powers[(k * (m / d)) % m];
        for (int r = 0; r < tm.phi; ++r) p->embed[r][k] = col[r];
    }
    // Pick pivot rows greedily by elimination on a copy.
    std::vector<std::vector<Rational>> work = p->embed;
    std::vector<size_t> rows;
    std::vector<std::vector<Rational>> basis;  // reduced rows
    std::vector<size_t> lead;
    for (size_t r = 0; r < work.size() && rows.size() < static_cast<size_t>(pd); ++r) {
        std::vector<Rational> v = work[r];
        for (size_t b = 0; b < basis.size(); ++b)
            if (!v[lead[b]].is_zero()) {
                Rational f = v[lead[b]] / basis[b][lead[b]];
                for (int j = 0; j < pd; ++j) v[j] -= f * basis[b][j];
            }
        size_t l = 0;
        while (l < static_cast<size_t>(pd) && v[l].is_zero()) ++l;
        if (l == static_cast<size_t>(pd)) continue;
        rows.push_back(r);
        basis.push_back(v);
        lead.push_back(l);
    }
    p->pivot_rows = rows;
    std::vector<std::vector<Rational>> block;
    for (size_t r : rows) block.push_back(p->embed[r]);
    p->inv = invert_matrix(block);
    auto& ref = *p;
    tm.proj.emplace(d, std::move(p));
    return ref;
}

}  // namespace detail

class Cyclotomic {
public:
    using Coeffs = boost::container::small_vector<Rational, 2>;

    Cyclotomic() : order_(1), c_(1, Rational(0)) {}
    Cyclotomic(int v) : order_(1), c_(1, Rational(v)) {}
    Cyclotomic(long v) : order_(1), c_(1, Rational(v)) {}
    Cyclotomic(long long v) : order_(1), c_(1, Rational(v)) {}
    Cyclotomic(const Rational& q) : order_(1), c_(1, q) {}

    /// z_e^k as an element of its own conductor field.
    static Cyclotomic zeta(int e, long long k = 1) {
        if (e < 1) throw std::invalid_argument("root of unity order must be positive");
        long long kk = ((k % e) + e) % e;
        const auto& tb = detail::tables(e);
        Cyclotomic r;
        r.order_ = e;
        r.c_.assign(tb.powers[kk].begin(), tb.powers[kk].end());
        r.demote();
        return r;
    }

    /// Builds an element of Q(z_e) from power-basis coordinates (any length;
    /// entries beyond phi(e) are reduced).
    static Cyclotomic from_powers(int e, const std::vector<Rational>& coeffs) {
        Cyclotomic r = Cyclotomic(0);
        for (size_t k = 0; k < coeffs.size(); ++k)
            if (!coeffs[k].is_zero()) r += Cyclotomic(coeffs[k]) * zeta(e, static_cast<long long>(k));
        return r;
    }

    int order() const { return order_; }
    const Coeffs& coeffs() const { return c_; }
    bool is_rational() const { return order_ == 1; }
    bool is_zero() const { return order_ == 1 && c_[0].is_zero(); }
    bool is_one() const { return order_ == 1 && c_[0].is_one(); }
    std::optional<Rational> as_rational() const {
        if (order_ != 1) return std::nullopt;
        return c_[0];
    }
    const Rational& rational_value() const {
        if (order_ != 1) throw std::domain_error("cyclotomic number is not rational");
        return c_[0];
    }

    Cyclotomic operator-() const {
        Cyclotomic r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.order_ == 1 && b.order_ == 1) return Cyclotomic(a.c_[0] + b.c_[0]);
        int m = std::lcm(a.order_, b.order_);
        Coeffs x = a.lift(m), y = b.lift(m);
        for (size_t i = 0; i < x.size(); ++i) x[i] += y[i];
        return Cyclotomic(m, std::move(x));
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.order_ == 1 && b.order_ == 1) return Cyclotomic(a.c_[0] * b.c_[0]);
        if (a.order_ == 1) return b.scaled(a.c_[0]);
        if (b.order_ == 1) return a.scaled(b.c_[0]);
        int m = std::lcm(a.order_, b.order_);
        Coeffs x = a.lift(m), y = b.lift(m);
        const auto& tb = detail::tables(m);
        int ph = tb.phi;
        std::vector<Rational> conv(2 * ph - 1, Rational(0));
        for (int i = 0; i < ph; ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; j < ph; ++j)
                if (!y[j].is_zero()) conv[i + j] += x[i] * y[j];
        }
        Coeffs r(ph, Rational(0));
        for (int k = 0; k < 2 * ph - 1; ++k) {
            if (conv[k].is_zero()) continue;
            if (k < ph) {
                r[k] += conv[k];
                continue;
            }
            const auto& zk = tb.powers[k % m];
            for (int i = 0; i < ph; ++i)
                if (!zk[i].is_zero()) r[i] += conv[k] * zk[i];
        }
        return Cyclotomic(m, std::move(r));
    }
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

    Cyclotomic scaled(const Rational& q) const {
        if (q.is_zero()) return Cyclotomic(0);
        Cyclotomic r(*this);
        for (auto& x : r.c_) x *= q;
        return r;
    }

    /// Multiplicative inverse, by solving x*y = 1 in the power basis.
    Cyclotomic inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        if (order_ == 1) return Cyclotomic(c_[0].inverse());
        const auto& tb = detail::tables(order_);
        int ph = tb.phi;
        // Column j of the multiplication matrix is x * z^j.
        std::vector<std::vector<Rational>> a(ph, std::vector<Rational>(ph + 1, Rational(0)));
        for (int j = 0; j < ph; ++j) {
            Cyclotomic col = *this * zeta(order_, j);
            Coeffs v = col.lift(order_);
            for (int i = 0; i < ph; ++i) a[i][j] = v[i];
        }
        a[0][ph] = Rational(1);
        for (int c = 0; c < ph; ++c) {
            int p = c;
            while (p < ph && a[p][c].is_zero()) ++p;
            if (p == ph) throw std::logic_error("cyclotomic inverse: singular multiplication matrix");
            std::swap(a[p], a[c]);
            Rational s = a[c][c].inverse();
            for (int j = c; j <= ph; ++j) a[c][j] *= s;
            for (int r = 0; r < ph; ++r) {
                if (r == c || a[r][c].is_zero()) continue;
                Rational f = a[r][c];
                for (int j = c; j <= ph; ++j) a[r][j] -= f * a[c][j];
            }
        }
        Coeffs out(ph, Rational(0));
        for (int i = 0; i < ph; ++i) out[i] = a[i][ph];
        return Cyclotomic(order_, std::move(out));
    }

    Cyclotomic pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        Cyclotomic r(1), b(*this);
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    /// Galois automorphism z -> z^k (k coprime to the conductor).
    Cyclotomic galois(long long k) const {
        if (order_ == 1) return *this;
        if (std::gcd(static_cast<long long>(order_), ((k % order_) + order_) % order_) != 1)
            throw std::invalid_argument("Galois exponent must be coprime to the conductor");
        Cyclotomic r(0);
        for (size_t j = 0; j < c_.size(); ++j)
            if (!c_[j].is_zero()) r += zeta(order_, k * static_cast<long long>(j)).scaled(c_[j]);
        return r;
    }
    /// Complex conjugate.
    Cyclotomic conj() const { return galois(-1); }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// Canonical text, e.g. "3/2", "z3", "-z8^3 + 2*z8 - 1/2". Terms run from
    /// the highest power of z down.
    std::string str() const {
        if (order_ == 1) return c_[0].str();
        std::ostringstream os;
        bool first = true;
        for (size_t j = c_.size(); j-- > 0;) {
            const Rational& q = c_[j];
            if (q.is_zero()) continue;
            Rational mag = abs(q);
            if (first) {
                if (q.sign() < 0) os << "-";
            } else {
                os << (q.sign() < 0 ? " - " : " + ");
            }
            first = false;
            if (j == 0) {
                os << mag.str();
                continue;
            }
            if (!mag.is_one()) os << mag.str() << "*";
            os << "z" << order_;
            if (j > 1) os << "^" << j;
        }
        return os.str();
    }
    /// True when str() needs parentheses as a factor.
    bool is_compound() const {
        int nz = 0;
        for (const auto& q : c_) nz += !q.is_zero();
        return nz > 1;
    }

    /// Parses infix text over rationals and the atoms z<e> (e >= 1).
    static Cyclotomic parse(std::string_view s) {
        ExprOps<Cyclotomic> ops;
        ops.ident = [](const std::string& name) -> Cyclotomic {
            if (auto e = zeta_atom_order(name)) return zeta(*e);
            throw std::invalid_argument("unknown identifier '" + name + "' in cyclotomic literal");
        };
        ops.constant = [](const Rational& q) { return Cyclotomic(q); };
        ops.as_rational = [](const Cyclotomic& c) { return c.as_rational(); };
        return ExprParser<Cyclotomic>(ops).parse(s);
    }

    /// If name is "z<e>", returns e.
    static std::optional<int> zeta_atom_order(const std::string& name) {
        if (name.size() < 2 || name[0] != 'z') return std::nullopt;
        for (size_t i = 1; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
        if (name.size() > 5) return std::nullopt;
        int e = std::stoi(name.substr(1));
        if (e < 1 || e > detail::kMaxOrder) return std::nullopt;
        return e;
    }

    size_t hash() const {
        size_t h = std::hash<int>()(order_);
        for (const auto& q : c_) h = h * 1000003u ^ q.hash();
        return h;
    }

    friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

private:
    int order_;
    Coeffs c_;

    Cyclotomic(int m, Coeffs c) : order_(m), c_(std::move(c)) { demote(); }

    Coeffs lift(int m) const {
        if (m == order_) return c_;
        const auto& tm = detail::tables(m);
        Coeffs r(tm.phi, Rational(0));
        int step = m / order_;
        for (size_t k = 0; k < c_.size(); ++k) {
            if (c_[k].is_zero()) continue;
            const auto& zk = tm.powers[(static_cast<int>(k) * step) % m];
            for (int i = 0; i < tm.phi; ++i)
                if (!zk[i].is_zero()) r[i] += c_[k] * zk[i];
        }
        return r;
    }

    bool lies_in(int d) const {
        const auto& p = detail::projection(order_, d);
        size_t pd = p.inv.size();
        std::vector<Rational> y(pd, Rational(0));
        for (size_t i = 0; i < pd; ++i)
            for (size_t j = 0; j < pd; ++j) y[i] += p.inv[i][j] * c_[p.pivot_rows[j]];
        for (size_t r = 0; r < c_.size(); ++r) {
            Rational s(0);
            for (size_t k = 0; k < pd; ++k) s += p.embed[r][k] * y[k];
            if (s != c_[r]) return false;
        }
        return true;
    }

    Coeffs project(int d) const {
        const auto& p = detail::projection(order_, d);
        size_t pd = p.inv.size();
        Coeffs y(pd, Rational(0));
        for (size_t i = 0; i < pd; ++i)
            for (size_t j = 0; j < pd; ++j) y[i] += p.inv[i][j] * c_[p.pivot_rows[j]];
        return y;
    }

    void demote() {
        if (order_ == 1) return;
        bool rational = true;
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) {
                rational = false;
                break;
            }
        if (rational) {
            Rational v = c_[0];
            order_ = 1;
            c_.assign(1, v);
            return;
        }
        // Move to the normalised order first (Q(z_2m) = Q(z_m) for odd m).
        int target = detail::normalize_order(order_);
        if (target != order_) {
            c_ = project(target);
            order_ = target;
        }
        bool changed = true;
        while (changed && order_ > 1) {
            changed = false;
            for (int p : detail::prime_factors(order_)) {
                int d = detail::normalize_order(order_ / p);
                if (d == order_) continue;
                if (lies_in(d)) {
                    c_ = project(d);
                    order_ = d;
                    changed = true;
                    break;
                }
            }
        }
        if (order_ == 1) {
            Rational v = c_[0];
            c_.assign(1, v);
        }
    }
};

/// Primitive e-th root of unity exp(2*pi*i/e).
inline Cyclotomic primitive_root(int e) { return Cyclotomic::zeta(e, 1); }

}  // namespace cmlab

template <>
struct std::hash<cmlab::Cyclotomic> {
    size_t operator()(const cmlab::Cyclotomic& c) const { return c.hash(); }
};
