#pragma once

// Rational Cherednik algebras H_{T,c}(W) with generic or specialised c.
//
// Elements are kept in PBW normal form: a monomial in the coordinates of V on
// the left, then a group element, then a monomial in the coordinates of V*:
//     sum  coeff * v^a . w . xi^b      (coeff a polynomial in T and the parameters)
// Defining relations, for v in V and xi in V*:
//     [v, xi] = T <v, xi> + sum_{s in Ref} c_s <s(v) - v, xi> s,
//     w v w^-1 = w(v),   w xi w^-1 = w(xi),   [v, v'] = [xi, xi'] = 0.

#include "cmlab/reflgrp/params.hpp"

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace cmlab {

constexpr int kMaxRank = 4;
using PMono = std::array<unsigned char, kMaxRank>;

struct PBWKey {
    PMono v{};  // exponents of the coordinates of V
    int w = 0;  // group element index
    PMono q{};  // exponents of the coordinates of V*
    auto operator<=>(const PBWKey&) const = default;
};

using TermMap = std::map<PBWKey, Poly>;

namespace detail {

inline unsigned pmono_degree(const PMono& m) {
    unsigned d = 0;
    for (auto e : m) d += e;
    return d;
}
inline PMono pmono_mul(const PMono& a, const PMono& b) {
    PMono r{};
    for (int i = 0; i < kMaxRank; ++i) {
        unsigned s = unsigned(a[i]) + b[i];
        if (s > 255) throw std::overflow_error("PBW exponent exceeds 255");
        r[i] = static_cast<unsigned char>(s);
    }
    return r;
}
inline bool pmono_is_one(const PMono& m) { return pmono_degree(m) == 0; }

inline void add_term(TermMap& acc, const PBWKey& k, const Poly& c) {
    if (c.is_zero()) return;
    auto it = acc.find(k);
    if (it == acc.end()) {
        acc.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
}

}  // namespace detail

class CherednikAlgebra;
using AlgebraPtr = std::shared_ptr<const CherednikAlgebra>;

class PBWElement {
public:
    PBWElement() = default;
    PBWElement(AlgebraPtr alg) : alg_(std::move(alg)) {}
    PBWElement(AlgebraPtr alg, TermMap t) : alg_(std::move(alg)), terms_(std::move(t)) {}

    const AlgebraPtr& algebra() const { return alg_; }
    const TermMap& terms() const { return terms_; }
    TermMap& mutable_terms() { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    PBWElement operator-() const {
        PBWElement r(*this);
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }
    friend PBWElement operator+(const PBWElement& a, const PBWElement& b) {
        PBWElement r(a.alg_ ? a.alg_ : b.alg_, a.terms_);
        for (const auto& [k, c] : b.terms_) detail::add_term(r.terms_, k, c);
        return r;
    }
    friend PBWElement operator-(const PBWElement& a, const PBWElement& b) { return a + (-b); }
    PBWElement scaled(const Poly& c) const {
        PBWElement r(alg_);
        if (c.is_zero()) return r;
        for (const auto& [k, v] : terms_) detail::add_term(r.terms_, k, v * c);
        return r;
    }
    friend PBWElement operator*(const Poly& c, const PBWElement& a) { return a.scaled(c); }
    inline friend PBWElement operator*(const PBWElement& a, const PBWElement& b);
    PBWElement& operator+=(const PBWElement& o) { return *this = *this + o; }
    PBWElement& operator-=(const PBWElement& o) { return *this = *this - o; }
    PBWElement& operator*=(const PBWElement& o) { return *this = *this * o; }

    PBWElement pow(unsigned e) const;

    friend bool operator==(const PBWElement& a, const PBWElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PBWElement& a, const PBWElement& b) { return !(a == b); }

    /// Applies f to every coefficient.
    PBWElement map_coefficients(const std::function<Poly(const Poly&)>& f) const {
        PBWElement r(alg_);
        for (const auto& [k, c] : terms_) detail::add_term(r.terms_, k, f(c));
        return r;
    }

    /// Bidegree (deg_V + deg c, deg_V* + deg c), parameters and T counting (1,1);
    /// nullopt if the element is zero or not bihomogeneous.
    std::optional<std::pair<int, int>> bidegree() const;

    std::string str() const;

private:
    AlgebraPtr alg_;
    TermMap terms_;
};

class CherednikAlgebra : public std::enable_shared_from_this<CherednikAlgebra> {
public:
    /// params: value of c on each reflection class, in ReflectionGroup::refl_classes order.
    static AlgebraPtr create(std::shared_ptr<const ReflectionGroup> g, std::vector<Poly> params, bool with_T = false) {
        if (params.size() != g->refl_classes.size())
            throw std::invalid_argument("parameter vector does not match the reflection classes");
        if (g->rank > kMaxRank) throw std::invalid_argument("rank too large");
        return AlgebraPtr(new CherednikAlgebra(std::move(g), std::move(params), with_T));
    }
    /// Parameters are the class variables (A, B for b2; C1.. for cyclic).
    static AlgebraPtr generic(std::shared_ptr<const ReflectionGroup> g, bool with_T = false) {
        auto p = g->generic_params();
        return create(std::move(g), p, with_T);
    }

    const ReflectionGroup& group() const { return *group_; }
    std::shared_ptr<const ReflectionGroup> group_ptr() const { return group_; }
    bool with_T() const { return with_T_; }
    const std::vector<Poly>& params() const { return params_; }
    const Poly& param_of(int reflection) const { return params_.at(group_->refl_class_of.at(reflection)); }
    bool has_generic_params() const { return params_ == group_->generic_params(); }

    /// Same group and parameters with T adjoined (or removed).
    AlgebraPtr with_T_variant(bool t) const {
        if (t == with_T_) return shared_from_this();
        std::lock_guard<std::mutex> lk(variant_mu_);
        if (!variant_) variant_ = create(group_, params_, t);
        return variant_;
    }

    PBWElement zero() const { return PBWElement(shared_from_this()); }
    PBWElement scalar(const Poly& c) const { return term(PBWKey{}, c); }
    PBWElement one() const { return scalar(Poly(1)); }
    PBWElement term(const PBWKey& k, const Poly& c) const {
        TermMap t;
        detail::add_term(t, k, c);
        return PBWElement(shared_from_this(), std::move(t));
    }
    PBWElement v_gen(int i) const {
        PBWKey k;
        k.v[i] = 1;
        return term(k, Poly(1));
    }
    PBWElement dual_gen(int i) const {
        PBWKey k;
        k.q[i] = 1;
        return term(k, Poly(1));
    }
    PBWElement group_elem(int w) const {
        PBWKey k;
        k.w = w;
        return term(k, Poly(1));
    }

    PBWElement multiply(const PBWElement& a, const PBWElement& b) const {
        TermMap acc;
        for (const auto& [ka, ca] : a.terms())
            for (const auto& [kb, cb] : b.terms()) multiply_keys_into(acc, ka, kb, ca * cb);
        return PBWElement(shared_from_this(), std::move(acc));
    }
    PBWElement commutator(const PBWElement& a, const PBWElement& b) const { return multiply(a, b) - multiply(b, a); }

    /// Action of w on a monomial in the coordinates of V (dual = false) or V*.
    const std::vector<std::pair<PMono, Cyclotomic>>& act(int w, const PMono& m, bool dual) const {
        std::lock_guard<std::mutex> lk(act_mu_);
        auto key = std::make_tuple(w, m, dual);
        auto it = act_cache_.find(key);
        if (it != act_cache_.end()) return it->second;
        std::map<PMono, Cyclotomic> acc;
        acc[PMono{}] = Cyclotomic(1);
        const CMatrix& M = dual ? group_->on_dual[w] : group_->on_v[w];
        int n = group_->rank;
        for (int i = 0; i < n; ++i)
            for (unsigned e = 0; e < m[i]; ++e) {
                std::map<PMono, Cyclotomic> next;
                for (const auto& [mono, c] : acc)
                    for (int r = 0; r < n; ++r) {
                        const Cyclotomic& mr = M(r, i);
                        if (mr.is_zero()) continue;
                        PMono nm = mono;
                        nm[r]++;
                        auto jt = next.find(nm);
                        if (jt == next.end())
                            next.emplace(nm, c * mr);
                        else
                            jt->second += c * mr;
                    }
                acc.clear();
                for (auto& [k, v] : next)
                    if (!v.is_zero()) acc.emplace(k, v);
            }
        std::vector<std::pair<PMono, Cyclotomic>> out(acc.begin(), acc.end());
        return act_cache_.emplace(key, std::move(out)).first->second;
    }

    /// Normal form of (xi^b)(v^p): the product of a V*-monomial and a V-monomial.
    const TermMap& straighten(const PMono& b, const PMono& p) const {
        {
            std::lock_guard<std::mutex> lk(memo_mu_);
            auto it = memo_.find({b, p});
            if (it != memo_.end()) return it->second;
        }
        TermMap result = compute_straighten(b, p);
        std::lock_guard<std::mutex> lk(memo_mu_);
        return memo_.emplace(std::make_pair(b, p), std::move(result)).first->second;
    }

    /// Generator names as used by the parser and printer.
    const std::vector<std::string>& v_names() const { return group_->v_names; }
    const std::vector<std::string>& dual_names() const { return group_->dual_names; }

    /// Element names accepted by the parser in addition to ReflectionGroup::names.
    std::map<std::string, int> group_aliases() const {
        std::map<std::string, int> m;
        for (int w = 0; w < group_->order(); ++w) m[group_->names[w]] = w;
        if (group_->spec == "b2") {
            m["s'"] = group_->index("tst");
            m["t'"] = group_->index("sts");
            m["w"] = group_->index("st");
            m["w'"] = group_->index("ts");
        }
        return m;
    }

private:
    std::shared_ptr<const ReflectionGroup> group_;
    std::vector<Poly> params_;
    bool with_T_;
    mutable std::mutex memo_mu_, act_mu_, variant_mu_;
    mutable std::map<std::pair<PMono, PMono>, TermMap> memo_;
    mutable std::map<std::tuple<int, PMono, bool>, std::vector<std::pair<PMono, Cyclotomic>>> act_cache_;
    mutable AlgebraPtr variant_;

    CherednikAlgebra(std::shared_ptr<const ReflectionGroup> g, std::vector<Poly> params, bool with_T)
        : group_(std::move(g)), params_(std::move(params)), with_T_(with_T) {}

    // (a u b)(p w q) = a u(a') (u w' w) w^-1(b') q  summed over (a' w' b') in straighten(b, p).
    void multiply_keys_into(TermMap& acc, const PBWKey& x, const PBWKey& y, const Poly& coeff) const {
        if (coeff.is_zero()) return;
        const TermMap& mid = straighten(x.q, y.v);
        for (const auto& [k, c] : mid) {
            Poly base = coeff * c;
            int g = group_->mult[group_->mult[x.w][k.w]][y.w];
            const auto& left = act(x.w, k.v, false);
            const auto& right = act(group_->inv[y.w], k.q, true);
            for (const auto& [lm, lc] : left)
                for (const auto& [rm, rc] : right) {
                    PBWKey r;
                    r.v = detail::pmono_mul(x.v, lm);
                    r.w = g;
                    r.q = detail::pmono_mul(rm, y.q);
                    detail::add_term(acc, r, base.scaled(lc * rc));
                }
        }
    }

    // [v^p, xi_j] as a sum of terms (V-monomial, group element), no V* part.
    TermMap commutator_with_dual(const PMono& p, int j) const {
        TermMap out;
        int n = group_->rank;
        CMatrix id = CMatrix::identity(n);
        PMono prefix{};
        // Expand v^p = v_0^{p0} v_1^{p1} ... factor by factor.
        for (int i = 0; i < n; ++i)
            for (unsigned e = 0; e < p[i]; ++e) {
                PMono suffix = p;
                for (int r = 0; r < i; ++r) suffix[r] = 0;
                suffix[i] = static_cast<unsigned char>(p[i] - e - 1);
                // T <v_i, xi_j> term.
                if (with_T_ && i == j) {
                    PBWKey k;
                    k.v = detail::pmono_mul(prefix, suffix);
                    detail::add_term(out, k, Poly::var("T"));
                }
                for (int s : group_->reflections) {
                    Cyclotomic pair = group_->on_v[s](j, i) - id(j, i);
                    if (pair.is_zero()) continue;
                    Poly c = param_of(s).scaled(pair);
                    if (c.is_zero()) continue;
                    for (const auto& [m, mc] : act(s, suffix, false)) {
                        PBWKey k;
                        k.v = detail::pmono_mul(prefix, m);
                        k.w = s;
                        detail::add_term(out, k, c.scaled(mc));
                    }
                }
                prefix[i]++;
            }
        return out;
    }

    TermMap compute_straighten(const PMono& b, const PMono& p) const {
        TermMap out;
        if (detail::pmono_is_one(b) || detail::pmono_is_one(p)) {
            PBWKey k;
            k.v = p;
            k.q = b;
            out.emplace(k, Poly(1));
            return out;
        }
        int j = 0;
        while (b[j] == 0) ++j;
        PMono rest = b;
        rest[j]--;
        // xi_j v^p = v^p xi_j - [v^p, xi_j]; then multiply by xi^rest on the left.
        for (const auto& [k, c] : straighten(rest, p)) {
            PBWKey kk = k;
            kk.q[j]++;
            detail::add_term(out, kk, c);
        }
        for (const auto& [ck, cc] : commutator_with_dual(p, j)) {
            // xi^rest * v^m * w = straighten(rest, m) * w
            for (const auto& [k, c] : straighten(rest, ck.v)) {
                int w = ck.w;
                for (const auto& [rm, rc] : act(group_->inv[w], k.q, true)) {
                    PBWKey kk;
                    kk.v = k.v;
                    kk.w = group_->mult[k.w][w];
                    kk.q = rm;
                    detail::add_term(out, kk, -(c * cc).scaled(rc));
                }
            }
        }
        return out;
    }
};

inline PBWElement operator*(const PBWElement& a, const PBWElement& b) {
    const AlgebraPtr& alg = a.algebra() ? a.algebra() : b.algebra();
    if (!alg) return PBWElement();
    return alg->multiply(a, b);
}

inline PBWElement PBWElement::pow(unsigned e) const {
    PBWElement r = alg_->one(), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

inline std::optional<std::pair<int, int>> PBWElement::bidegree() const {
    std::optional<std::pair<int, int>> bd;
    for (const auto& [k, c] : terms_) {
        int dv = static_cast<int>(detail::pmono_degree(k.v)), dq = static_cast<int>(detail::pmono_degree(k.q));
        for (const auto& [m, _] : c.terms()) {
            int dc = static_cast<int>(m.total_degree());
            std::pair<int, int> here{dv + dc, dq + dc};
            if (bd && *bd != here) return std::nullopt;
            bd = here;
        }
    }
    return bd;
}

inline std::string PBWElement::str() const {
    if (terms_.empty()) return "0";
    const ReflectionGroup& g = alg_->group();
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::vector<std::string> factors;
        for (int i = 0; i < g.rank; ++i)
            if (k.v[i]) factors.push_back(g.v_names[i] + (k.v[i] > 1 ? "^" + std::to_string(k.v[i]) : ""));
        if (k.w != 0) factors.push_back(g.names[k.w]);
        for (int i = 0; i < g.rank; ++i)
            if (k.q[i]) factors.push_back(g.dual_names[i] + (k.q[i] > 1 ? "^" + std::to_string(k.q[i]) : ""));
        std::string body;
        for (size_t f = 0; f < factors.size(); ++f) body += (f ? "*" : "") + factors[f];
        std::string cs = c.str();
        bool neg = false;
        if (c.size() == 1) {
            if (!cs.empty() && cs[0] == '-') {
                neg = true;
                cs = cs.substr(1);
            }
        } else {
            cs = "(" + cs + ")";
        }
        std::string piece;
        if (body.empty())
            piece = cs;
        else if (cs == "1")
            piece = body;
        else
            piece = cs + "*" + body;
        if (first)
            os << (neg ? "-" : "") << piece;
        else
            os << (neg ? " - " : " + ") << piece;
        first = false;
    }
    return os.str();
}

}  // namespace cmlab
