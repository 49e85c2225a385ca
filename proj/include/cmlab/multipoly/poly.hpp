#pragma once

// Sparse multivariate polynomials with cyclotomic coefficients.
//
// Terms are kept sorted by decreasing lex order of their exponent vectors,
// with no zero coefficients, so structural equality is value equality.

#include "cmlab/exactnum/cyclotomic.hpp"
#include "cmlab/exactnum/expr_parser.hpp"
#include "cmlab/multipoly/symbols.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cmlab {

struct Monomial {
    std::array<unsigned char, kMaxVars> e{};

    unsigned operator[](int v) const { return e[v]; }
    void set(int v, unsigned k) {
        if (k > 255) throw std::overflow_error("exponent exceeds 255");
        e[v] = static_cast<unsigned char>(k);
    }
    unsigned total_degree() const {
        unsigned d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool is_one() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            unsigned s = unsigned(a.e[i]) + b.e[i];
            if (s > 255) throw std::overflow_error("exponent exceeds 255");
            r.e[i] = static_cast<unsigned char>(s);
        }
        return r;
    }
    /// a / b, assuming b divides a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<unsigned char>(a.e[i] - b.e[i]);
        return r;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    /// Lex order, variable 0 most significant.
    friend bool operator<(const Monomial& a, const Monomial& b) { return std::memcmp(a.e.data(), b.e.data(), kMaxVars) < 0; }
    friend bool operator>(const Monomial& a, const Monomial& b) { return b < a; }

    size_t hash() const {
        size_t h = 1469598103934665603ull;
        for (auto x : e) h = (h ^ x) * 1099511628211ull;
        return h;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < kMaxVars; ++i) {
            if (!e[i]) continue;
            if (!s.empty()) s += "*";
            s += symbol_name(i);
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s.empty() ? "1" : s;
    }
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const { return m.hash(); }
};

class Poly {
public:
    using Term = std::pair<Monomial, Cyclotomic>;

    Poly() = default;
    Poly(int c) { if (c) terms_.push_back({Monomial{}, Cyclotomic(c)}); }
    Poly(long long c) { if (c) terms_.push_back({Monomial{}, Cyclotomic(c)}); }
    Poly(const Rational& c) { if (!c.is_zero()) terms_.push_back({Monomial{}, Cyclotomic(c)}); }
    Poly(const Cyclotomic& c) { if (!c.is_zero()) terms_.push_back({Monomial{}, c}); }

    static Poly var(int id, unsigned power = 1) {
        Poly p;
        Monomial m;
        m.set(id, power);
        p.terms_.push_back({m, Cyclotomic(1)});
        return p;
    }
    static Poly var(const std::string& name, unsigned power = 1) { return var(symbol(name), power); }
    static Poly monomial(const Monomial& m, const Cyclotomic& c = Cyclotomic(1)) {
        Poly p;
        if (!c.is_zero()) p.terms_.push_back({m, c});
        return p;
    }
    /// Builds from arbitrary (possibly repeated, unsorted) terms.
    static Poly from_terms(std::vector<Term> ts) {
        Poly p;
        p.terms_ = std::move(ts);
        p.normalize();
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
    Cyclotomic constant_term() const {
        if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
        return Cyclotomic(0);
    }
    /// Value when the polynomial is a constant.
    std::optional<Cyclotomic> as_constant() const {
        if (!is_constant()) return std::nullopt;
        return constant_term();
    }
    std::optional<Rational> as_rational() const {
        auto c = as_constant();
        if (!c) return std::nullopt;
        return c->as_rational();
    }
    bool is_one() const { return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second.is_one(); }

    /// Leading term in lex order.
    const Term& leading_term() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        return terms_.front();
    }

    int total_degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max<int>(d, static_cast<int>(t.first.total_degree()));
        return d;
    }
    int degree_in(int v) const {
        int d = -1;
        for (const auto& t : terms_) d = std::max<int>(d, static_cast<int>(t.first[v]));
        return d;
    }
    int degree_in(const std::string& name) const { return degree_in(symbol(name)); }

    std::set<int> variables() const {
        std::set<int> vs;
        for (const auto& t : terms_)
            for (int i = 0; i < kMaxVars; ++i)
                if (t.first[i]) vs.insert(i);
        return vs;
    }

    Cyclotomic coefficient(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& key) { return t.first > key; });
        if (it != terms_.end() && it->first == m) return it->second;
        return Cyclotomic(0);
    }

    /// Coefficient of v^k, as a polynomial in the remaining variables.
    Poly coefficient_in(int v, unsigned k) const {
        std::vector<Term> out;
        for (const auto& t : terms_)
            if (t.first[v] == k) {
                Monomial m = t.first;
                m.set(v, 0);
                out.push_back({m, t.second});
            }
        return from_terms(std::move(out));
    }
    Poly coefficient_in(const std::string& name, unsigned k) const { return coefficient_in(symbol(name), k); }

    /// Keeps the terms whose monomial satisfies pred.
    Poly filter(const std::function<bool(const Monomial&)>& pred) const {
        Poly p;
        for (const auto& t : terms_)
            if (pred(t.first)) p.terms_.push_back(t);
        return p;
    }

    Poly derivative(int v) const {
        std::vector<Term> out;
        for (const auto& t : terms_) {
            unsigned k = t.first[v];
            if (!k) continue;
            Monomial m = t.first;
            m.set(v, k - 1);
            out.push_back({m, t.second.scaled(Rational(static_cast<long long>(k)))});
        }
        return from_terms(std::move(out));
    }

    /// Simultaneous substitution of variables by polynomials.
    Poly substitute(const std::map<int, Poly>& sub) const {
        // Cache powers per substituted variable.
        std::map<int, std::vector<Poly>> powers;
        auto power_of = [&](int v, unsigned k) -> const Poly& {
            auto& vec = powers[v];
            if (vec.empty()) vec.push_back(Poly(1));
            while (vec.size() <= k) vec.push_back(vec.back() * sub.at(v));
            return vec[k];
        };
        std::unordered_map<Monomial, Cyclotomic, MonomialHash> acc;
        for (const auto& t : terms_) {
            Monomial rest = t.first;
            Poly factor(t.second);
            for (const auto& [v, _] : sub) {
                unsigned k = rest[v];
                if (!k) continue;
                rest.set(v, 0);
                factor = factor * power_of(v, k);
            }
            for (const auto& [m, c] : factor.terms_) {
                Monomial mm = m * rest;
                auto it = acc.find(mm);
                if (it == acc.end())
                    acc.emplace(mm, c);
                else
                    it->second += c;
            }
        }
        std::vector<Term> out;
        out.reserve(acc.size());
        for (auto& kv : acc)
            if (!kv.second.is_zero()) out.push_back({kv.first, std::move(kv.second)});
        return from_terms(std::move(out));
    }
    Poly substitute(const std::map<std::string, Poly>& sub) const {
        std::map<int, Poly> s;
        for (const auto& [k, v] : sub) s.emplace(symbol(k), v);
        return substitute(s);
    }

    /// Applies f to every coefficient.
    Poly map_coefficients(const std::function<Cyclotomic(const Cyclotomic&)>& f) const {
        std::vector<Term> out;
        for (const auto& t : terms_) out.push_back({t.first, f(t.second)});
        return from_terms(std::move(out));
    }

    Poly operator-() const {
        Poly p(*this);
        for (auto& t : p.terms_) t.second = -t.second;
        return p;
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        if (a.terms_.size() == 1 && a.terms_[0].first.is_one()) return b.scaled(a.terms_[0].second);
        if (b.terms_.size() == 1 && b.terms_[0].first.is_one()) return a.scaled(b.terms_[0].second);
        const Poly& s = a.terms_.size() <= b.terms_.size() ? a : b;
        const Poly& l = a.terms_.size() <= b.terms_.size() ? b : a;
        if (s.terms_.size() == 1) {
            // Monomial multiplication preserves the order.
            Poly p;
            p.terms_.reserve(l.terms_.size());
            for (const auto& t : l.terms_) p.terms_.push_back({t.first * s.terms_[0].first, t.second * s.terms_[0].second});
            return p;
        }
        std::unordered_map<Monomial, Cyclotomic, MonomialHash> acc;
        acc.reserve(s.terms_.size() * l.terms_.size());
        for (const auto& x : s.terms_)
            for (const auto& y : l.terms_) {
                Monomial m = x.first * y.first;
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(m, x.second * y.second);
                else
                    it->second += x.second * y.second;
            }
        std::vector<Term> out;
        out.reserve(acc.size());
        for (auto& kv : acc)
            if (!kv.second.is_zero()) out.push_back({kv.first, std::move(kv.second)});
        std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.first > y.first; });
        Poly p;
        p.terms_ = std::move(out);
        return p;
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Cyclotomic& c) const {
        if (c.is_zero()) return Poly();
        Poly p(*this);
        for (auto& t : p.terms_) t.second *= c;
        return p;
    }
    Poly times_monomial(const Monomial& m) const {
        Poly p(*this);
        for (auto& t : p.terms_) t.first = t.first * m;
        return p;
    }

    Poly pow(unsigned e) const {
        Poly r(1), b(*this);
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    /// Exact division. Throws std::domain_error if d does not divide *this.
    Poly exact_divide(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        if (auto c = d.as_constant()) return scaled(c->inverse());
        Poly q, r = *this;
        const auto& [lm, lc] = d.leading_term();
        Cyclotomic lci = lc.inverse();
        while (!r.is_zero()) {
            const auto& [rm, rc] = r.leading_term();
            if (!lm.divides(rm)) throw std::domain_error("polynomial division is not exact");
            Poly t = Poly::monomial(rm / lm, rc * lci);
            q += t;
            r -= t * d;
        }
        return q;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    size_t hash() const {
        size_t h = terms_.size();
        for (const auto& t : terms_) h = (h * 1000003u) ^ t.first.hash() ^ (t.second.hash() << 1);
        return h;
    }

    /// Canonical text: terms in decreasing lex order, e.g. "A^2 - 3/2*A*B + (z3 + 1)*C1".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            auto [neg, mag, compound] = coefficient_text(c);
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            first = false;
            if (m.is_one()) {
                os << (compound ? "(" + mag + ")" : mag);
                continue;
            }
            if (mag != "1") os << (compound ? "(" + mag + ")" : mag) << "*";
            os << m.str();
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

    /// Parses infix text. Identifiers z<e> denote roots of unity; every other
    /// identifier is a variable. If `allowed` is non-empty, other names are errors.
    static Poly parse(std::string_view text, const std::set<std::string>& allowed = {}) {
        ExprOps<Poly> ops;
        ops.ident = [&allowed](const std::string& name) -> Poly {
            if (auto e = Cyclotomic::zeta_atom_order(name)) return Poly(Cyclotomic::zeta(*e));
            if (!allowed.empty() && !allowed.count(name)) throw std::invalid_argument("unknown identifier '" + name + "'");
            return Poly::var(name);
        };
        ops.constant = [](const Rational& q) { return Poly(q); };
        ops.as_rational = [](const Poly& p) { return p.as_rational(); };
        return ExprParser<Poly>(ops).parse(text);
    }

private:
    std::vector<Term> terms_;

    static std::tuple<bool, std::string, bool> coefficient_text(const Cyclotomic& c) {
        if (!c.is_compound()) {
            // Single basis term: pull the sign out.
            bool neg = false;
            for (const auto& q : c.coeffs())
                if (!q.is_zero()) neg = q.sign() < 0;
            std::string s = (neg ? -c : c).str();
            return {neg, s, false};
        }
        bool neg = false;
        for (size_t j = c.coeffs().size(); j-- > 0;)
            if (!c.coeffs()[j].is_zero()) {
                neg = c.coeffs()[j].sign() < 0;
                break;
            }
        return {neg, (neg ? -c : c).str(), true};
    }

    void normalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.first > y.first; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().first == t.first)
                out.back().second += t.second;
            else
                out.push_back(std::move(t));
            if (out.back().second.is_zero()) out.pop_back();
        }
        terms_ = std::move(out);
    }

    static Poly merge(const Poly& a, const Poly& b, bool subtract) {
        Poly p;
        p.terms_.reserve(a.terms_.size() + b.terms_.size());
        size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first > b.terms_[j].first)) {
                p.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].first > a.terms_[i].first) {
                p.terms_.push_back({b.terms_[j].first, subtract ? -b.terms_[j].second : b.terms_[j].second});
                ++j;
            } else {
                Cyclotomic c = subtract ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
                if (!c.is_zero()) p.terms_.push_back({a.terms_[i].first, std::move(c)});
                ++i;
                ++j;
            }
        }
        return p;
    }
};

}  // namespace cmlab

template <>
struct std::hash<cmlab::Poly> {
    size_t operator()(const cmlab::Poly& p) const { return p.hash(); }
};
