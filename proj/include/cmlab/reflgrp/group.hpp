#pragma once

// Finite complex reflection groups given by explicit matrices on V.
//
// Two families are built in: the cyclic groups mu_d acting on a line
// ("cyclic:d") and the dihedral group of order 8 ("b2"). Elements are
// indexed 0..|W|-1 with the identity at 0, and named by shortest words in the
// generators (the longest element of b2 is "w0", powers in mu_d are "s^k").

#include "cmlab/multipoly/matrix.hpp"
#include "cmlab/multipoly/poly.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cmlab {

using CMatrix = Matrix<Cyclotomic>;

struct Character {
    std::string name;
    std::vector<Cyclotomic> values;  // one per group element
    int degree() const { return static_cast<int>(values[0].rational_value().numerator().get_si()); }
};

/// A conjugacy class of reflections; carries one parameter C.
struct ReflectionClass {
    std::string param;          // parameter name, e.g. "A" or "C2"
    std::vector<int> members;   // element indices
    int orbit = 0;              // hyperplane orbit
    int power = 1;              // members are conjugates of s_H^power
};

/// A W-orbit of reflecting hyperplanes.
struct HyperplaneOrbit {
    std::string label;               // "s", "t", or "" for a single orbit
    int e = 2;                       // order of the pointwise stabiliser W_H
    std::vector<int> distinguished;  // s_H for each H in the orbit (det = zeta_e)
    std::string k_name(int j) const { return "K" + label + std::to_string(j); }
};

class ReflectionGroup {
public:
    std::string spec;
    int rank = 0;
    std::vector<std::string> names;
    std::vector<CMatrix> on_v;      // action on V
    std::vector<CMatrix> on_dual;   // contragredient action on V*
    std::vector<std::vector<int>> mult;
    std::vector<int> inv;
    std::vector<Cyclotomic> det;    // determinant on V
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;
    std::vector<int> reflections;
    std::vector<ReflectionClass> refl_classes;
    std::vector<int> refl_class_of;  // -1 for non-reflections
    std::vector<HyperplaneOrbit> orbits;
    std::vector<Character> chars;
    std::vector<int> degrees;
    std::vector<std::string> v_names;     // coordinates of V used as PBW generators
    std::vector<std::string> dual_names;  // coordinates of V*

    int order() const { return static_cast<int>(names.size()); }
    int identity() const { return 0; }

    int index(const std::string& name) const {
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw std::invalid_argument("unknown group element '" + name + "'");
        return static_cast<int>(it - names.begin());
    }
    std::optional<int> find_index(const std::string& name) const {
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) return std::nullopt;
        return static_cast<int>(it - names.begin());
    }
    int char_index(const std::string& name) const {
        for (size_t i = 0; i < chars.size(); ++i)
            if (chars[i].name == name) return static_cast<int>(i);
        throw std::invalid_argument("unknown character '" + name + "'");
    }
    const Character& character(const std::string& name) const { return chars[char_index(name)]; }

    bool is_cyclic() const { return spec.rfind("cyclic:", 0) == 0; }
    int cyclic_d() const { return is_cyclic() ? std::stoi(spec.substr(7)) : 0; }

    /// Parameter variables, one per reflection class, in class order.
    std::vector<std::string> param_names() const {
        std::vector<std::string> v;
        for (const auto& c : refl_classes) v.push_back(c.param);
        return v;
    }
    /// Generic parameter values: C_s = variable of its class.
    std::vector<Poly> generic_params() const {
        std::vector<Poly> v;
        for (const auto& c : refl_classes) v.push_back(Poly::var(c.param));
        return v;
    }

    /// <chi, psi> = (1/|W|) sum chi(w) conj(psi(w)).
    Cyclotomic inner(const Character& a, const Character& b) const {
        Cyclotomic s(0);
        for (int w = 0; w < order(); ++w) s += a.values[w] * b.values[w].conj();
        return s.scaled(Rational(1, order()));
    }
};

namespace detail {

inline std::vector<Cyclotomic> canonical_subspace(const CMatrix& basis_cols) {
    // Row-reduce the transpose so equal subspaces give equal matrices.
    CMatrix t = basis_cols.transpose();
    rref_in_place(t);
    std::vector<Cyclotomic> flat;
    for (size_t i = 0; i < t.rows(); ++i)
        for (size_t j = 0; j < t.cols(); ++j) flat.push_back(t(i, j));
    return flat;
}

inline CMatrix kernel_basis(const CMatrix& m) {
    auto ns = nullspace(m);
    CMatrix b(m.cols(), ns.size());
    for (size_t k = 0; k < ns.size(); ++k)
        for (size_t i = 0; i < m.cols(); ++i) b(i, k) = ns[k][i];
    return b;
}

inline size_t matrix_rank(const CMatrix& m) { return rank(m); }

struct GeneratorData {
    std::string spec;
    std::vector<std::string> gen_names;
    std::vector<CMatrix> gens;
    std::vector<std::string> v_names, dual_names;
};

inline std::shared_ptr<ReflectionGroup> close_group(const GeneratorData& gd) {
    auto g = std::make_shared<ReflectionGroup>();
    g->spec = gd.spec;
    g->rank = static_cast<int>(gd.gens[0].rows());
    g->v_names = gd.v_names;
    g->dual_names = gd.dual_names;
    std::vector<std::string> words{""};
    std::vector<CMatrix> mats{CMatrix::identity(g->rank)};
    // Breadth-first over words; first occurrence wins so names are shortest words.
    for (size_t head = 0; head < mats.size(); ++head)
        for (size_t k = 0; k < gd.gens.size(); ++k) {
            CMatrix m = mats[head] * gd.gens[k];
            if (std::find(mats.begin(), mats.end(), m) != mats.end()) continue;
            mats.push_back(m);
            words.push_back(words[head] + gd.gen_names[k]);
            if (mats.size() > 4096) throw std::runtime_error("group closure too large");
        }
    int n = static_cast<int>(mats.size());
    g->on_v = mats;
    g->names.resize(n);
    for (int i = 0; i < n; ++i) g->names[i] = words[i].empty() ? "1" : words[i];
    auto find = [&](const CMatrix& m) {
        auto it = std::find(mats.begin(), mats.end(), m);
        if (it == mats.end()) throw std::logic_error("group not closed");
        return static_cast<int>(it - mats.begin());
    };
    g->mult.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g->mult[a][b] = find(mats[a] * mats[b]);
    g->inv.resize(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g->mult[a][b] == 0) g->inv[a] = b;
    for (int a = 0; a < n; ++a) {
        g->on_dual.push_back(mats[g->inv[a]].transpose());
        g->det.push_back(mats[a].det());
    }
    // Conjugacy classes.
    g->class_of.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        if (g->class_of[a] >= 0) continue;
        int c = static_cast<int>(g->classes.size());
        g->classes.push_back({});
        for (int x = 0; x < n; ++x) {
            int conj = g->mult[g->mult[x][a]][g->inv[x]];
            if (g->class_of[conj] < 0) {
                g->class_of[conj] = c;
                g->classes[c].push_back(conj);
            }
        }
        std::sort(g->classes[c].begin(), g->classes[c].end());
    }
    // Reflections: rank(M - 1) = 1.
    CMatrix id = CMatrix::identity(g->rank);
    for (int a = 1; a < n; ++a)
        if (matrix_rank(mats[a] - id) == 1) g->reflections.push_back(a);
    return g;
}

inline void build_orbits(ReflectionGroup& g, const std::map<int, std::string>& class_params,
                         const std::map<int, std::string>& orbit_labels) {
    int n = g.order();
    CMatrix id = CMatrix::identity(g.rank);
    // Hyperplanes as canonical subspaces.
    std::vector<std::vector<Cyclotomic>> hyps;
    std::vector<CMatrix> hyp_basis;
    std::map<int, int> hyp_of;
    for (int s : g.reflections) {
        CMatrix kb = kernel_basis(g.on_v[s] - id);
        auto key = canonical_subspace(kb);
        auto it = std::find(hyps.begin(), hyps.end(), key);
        if (it == hyps.end()) {
            hyps.push_back(key);
            hyp_basis.push_back(kb);
            hyp_of[s] = static_cast<int>(hyps.size()) - 1;
        } else {
            hyp_of[s] = static_cast<int>(it - hyps.begin());
        }
    }
    // Orbits of hyperplanes under W.
    std::vector<int> orbit_of(hyps.size(), -1);
    std::vector<std::vector<int>> orbit_members;
    for (size_t h = 0; h < hyps.size(); ++h) {
        if (orbit_of[h] >= 0) continue;
        int o = static_cast<int>(orbit_members.size());
        orbit_members.push_back({});
        for (int w = 0; w < n; ++w) {
            auto key = canonical_subspace(g.on_v[w] * hyp_basis[h]);
            int idx = static_cast<int>(std::find(hyps.begin(), hyps.end(), key) - hyps.begin());
            if (orbit_of[idx] < 0) {
                orbit_of[idx] = o;
                orbit_members[o].push_back(idx);
            }
        }
    }
    // Distinguished reflections s_H (det = zeta_{e_H}) and e_H.
    std::vector<int> dist(hyps.size(), -1), e_of(hyps.size(), 1);
    for (int s : g.reflections) e_of[hyp_of[s]]++;
    for (int s : g.reflections) {
        int h = hyp_of[s];
        if (g.det[s] == primitive_root(e_of[h])) dist[h] = s;
    }
    // Map each reflection to (hyperplane, power).
    std::map<int, int> power_of;
    for (int s : g.reflections) {
        int h = hyp_of[s];
        int cur = dist[h];
        for (int i = 1; i < e_of[h]; ++i) {
            if (cur == s) power_of[s] = i;
            cur = g.mult[cur][dist[h]];
        }
    }
    g.orbits.clear();
    for (size_t o = 0; o < orbit_members.size(); ++o) {
        HyperplaneOrbit ho;
        int h0 = orbit_members[o][0];
        ho.e = e_of[h0];
        for (int h : orbit_members[o]) ho.distinguished.push_back(dist[h]);
        g.orbits.push_back(ho);
    }
    // Reflection classes.
    g.refl_class_of.assign(n, -1);
    for (int s : g.reflections) {
        if (g.refl_class_of[s] >= 0) continue;
        ReflectionClass rc;
        rc.members = g.classes[g.class_of[s]];
        rc.orbit = orbit_of[hyp_of[s]];
        rc.power = power_of[s];
        int idx = static_cast<int>(g.refl_classes.size());
        for (int m : rc.members) g.refl_class_of[m] = idx;
        g.refl_classes.push_back(rc);
    }
    for (size_t i = 0; i < g.refl_classes.size(); ++i) {
        auto& rc = g.refl_classes[i];
        int rep = rc.members[0];
        auto it = class_params.find(rep);
        rc.param = it != class_params.end() ? it->second : "C" + std::to_string(i + 1);
    }
    for (size_t o = 0; o < g.orbits.size(); ++o) {
        int rep = g.orbits[o].distinguished[0];
        auto it = orbit_labels.find(rep);
        g.orbits[o].label = it != orbit_labels.end() ? it->second : (g.orbits.size() == 1 ? "" : std::to_string(o));
    }
}

// Linear characters: homomorphisms W -> roots of unity, found by assigning
// images to the generators and checking multiplicativity.
inline std::vector<std::vector<Cyclotomic>> linear_characters(const ReflectionGroup& g, const std::vector<int>& gens,
                                                             int max_order) {
    int n = g.order();
    std::vector<std::vector<Cyclotomic>> out;
    std::vector<int> choice(gens.size(), 0);
    for (;;) {
        // Extend along a spanning tree from the identity.
        std::vector<std::optional<Cyclotomic>> val(n);
        val[0] = Cyclotomic(1);
        std::vector<int> queue{0};
        bool ok = true;
        for (size_t h = 0; h < queue.size(); ++h)
            for (size_t k = 0; k < gens.size(); ++k) {
                int w = g.mult[queue[h]][gens[k]];
                Cyclotomic v = *val[queue[h]] * Cyclotomic::zeta(max_order, choice[k]);
                if (!val[w]) {
                    val[w] = v;
                    queue.push_back(w);
                } else if (*val[w] != v) {
                    ok = false;
                }
            }
        if (ok)
            for (int a = 0; a < n && ok; ++a)
                for (int b = 0; b < n && ok; ++b)
                    if (*val[a] * *val[b] != *val[g.mult[a][b]]) ok = false;
        if (ok) {
            std::vector<Cyclotomic> v;
            for (auto& x : val) v.push_back(*x);
            out.push_back(v);
        }
        size_t k = 0;
        while (k < choice.size() && ++choice[k] == max_order) choice[k++] = 0;
        if (k == choice.size()) break;
    }
    return out;
}

inline std::vector<Cyclotomic> inverse_series(const std::vector<Cyclotomic>& p, int n) {
    std::vector<Cyclotomic> r(n + 1, Cyclotomic(0));
    Cyclotomic inv0 = p[0].inverse();
    for (int k = 0; k <= n; ++k) {
        Cyclotomic s = k == 0 ? Cyclotomic(1) : Cyclotomic(0);
        for (int j = 1; j <= k && j < static_cast<int>(p.size()); ++j) s -= p[j] * r[k - j];
        r[k] = s * inv0;
    }
    return r;
}

/// Coefficients of 1/det(1 - t*M) up to t^n.
inline std::vector<Cyclotomic> inverse_det_series(const CMatrix& m, int n) {
    auto cp = m.charpoly();  // det(tI - M) = sum cp[k] t^{r-k}; det(1 - tM) = sum cp[k] t^k
    return inverse_series(cp, n);
}

inline std::vector<int> degrees_from_molien(const ReflectionGroup& g) {
    int n = g.order();
    int bound = n + 1;
    std::vector<Cyclotomic> h(bound + 1, Cyclotomic(0));
    for (int w = 0; w < n; ++w) {
        auto s = inverse_det_series(g.on_v[w], bound);
        for (int k = 0; k <= bound; ++k) h[k] += s[k];
    }
    for (auto& c : h) c = c.scaled(Rational(1, n));
    std::vector<int> degs;
    // H(t) = prod 1/(1 - t^d); multiply by (1 - t^d) for each degree found.
    for (int guard = 0; guard < g.rank + 1; ++guard) {
        int k = 1;
        while (k <= bound && h[k].is_zero()) ++k;
        if (k > bound) break;
        int mult = static_cast<int>(h[k].rational_value().numerator().get_si());
        for (int r = 0; r < mult; ++r) {
            degs.push_back(k);
            for (int j = bound; j >= k; --j) h[j] -= h[j - k];
        }
    }
    std::sort(degs.begin(), degs.end());
    return degs;
}

}  // namespace detail

/// Builds "cyclic:d" (d >= 2) or "b2". Throws std::invalid_argument otherwise.
inline std::shared_ptr<const ReflectionGroup> build_group(const std::string& spec) {
    detail::GeneratorData gd;
    std::shared_ptr<ReflectionGroup> g;
    if (spec == "b2" || spec == "B2") {
        gd.spec = "b2";
        CMatrix s(2, 2), t(2, 2);
        s(0, 1) = Cyclotomic(1);
        s(1, 0) = Cyclotomic(1);
        t(0, 0) = Cyclotomic(-1);
        t(1, 1) = Cyclotomic(1);
        gd.gen_names = {"s", "t"};
        gd.gens = {s, t};
        gd.v_names = {"x", "y"};
        gd.dual_names = {"X", "Y"};
        g = detail::close_group(gd);
        for (auto& nm : g->names)
            if (nm.size() == 4) nm = "w0";
        detail::build_orbits(*g, {{g->index("s"), "A"}, {g->index("t"), "B"}},
                             {{g->index("s"), "s"}, {g->index("t"), "t"}});
        // Characters in the order 1, eps_s, eps_t, eps, chi.
        auto lin = detail::linear_characters(*g, {g->index("s"), g->index("t")}, 2);
        int is = g->index("s"), it = g->index("t");
        auto pick = [&](int vs, int vt) {
            for (auto& l : lin)
                if (l[is] == Cyclotomic(vs) && l[it] == Cyclotomic(vt)) return l;
            throw std::logic_error("missing linear character");
        };
        g->chars.push_back({"1", pick(1, 1)});
        g->chars.push_back({"eps_s", pick(-1, 1)});
        g->chars.push_back({"eps_t", pick(1, -1)});
        g->chars.push_back({"eps", pick(-1, -1)});
        Character chi{"chi", {}};
        for (int w = 0; w < g->order(); ++w) chi.values.push_back(g->on_v[w].trace());
        g->chars.push_back(chi);
    } else if (spec.rfind("cyclic:", 0) == 0) {
        int d = 0;
        try {
            size_t used = 0;
            d = std::stoi(spec.substr(7), &used);
            if (used != spec.size() - 7) d = 0;
        } catch (const std::exception&) {
            d = 0;
        }
        if (d < 2 || d > 64) throw std::invalid_argument("cyclic group order must be an integer in [2, 64]: " + spec);
        gd.spec = "cyclic:" + std::to_string(d);
        CMatrix s(1, 1);
        s(0, 0) = primitive_root(d);
        gd.gen_names = {"s"};
        gd.gens = {s};
        gd.v_names = {"y"};
        gd.dual_names = {"x"};
        g = detail::close_group(gd);
        for (int k = 2; k < d; ++k) g->names[k] = "s^" + std::to_string(k);
        std::map<int, std::string> params;
        for (int k = 1; k < d; ++k) params[k] = "C" + std::to_string(k);
        detail::build_orbits(*g, params, {});
        for (int i = 0; i < d; ++i) {
            Character c{i == 0 ? "1" : (i == 1 ? "eps" : "eps^" + std::to_string(i)), {}};
            for (int k = 0; k < d; ++k) c.values.push_back(Cyclotomic::zeta(d, static_cast<long long>(i) * k));
            g->chars.push_back(c);
        }
    } else {
        throw std::invalid_argument("unsupported group '" + spec + "' (expected cyclic:<d> or b2)");
    }
    g->degrees = detail::degrees_from_molien(*g);
    return g;
}

}  // namespace cmlab
