#pragma once

// Restricted (baby) Verma modules M(chi) = coinvariants (x) chi over the
// algebra at T = 0 with generic parameters, and central characters.
//
// Basis index b = i * dim(chi) + k, with i running over the coinvariant basis
// (sorted by degree) and k over a basis of chi. The V* coordinates raise the
// degree, W preserves it and V lowers it.

#include "cmlab/cherednik/elements.hpp"
#include "cmlab/verma/coinvariants.hpp"

#include <json.hpp>

namespace cmlab {

using PMatrix = Matrix<Poly>;

class BabyVerma {
public:
    BabyVerma(AlgebraPtr alg, const Character& chi) : alg_(std::move(alg)), chi_(chi), coinv_(alg_) {
        if (alg_->with_T()) throw std::invalid_argument("baby Verma modules live over the algebra at T = 0");
        const auto& g = alg_->group();
        rho_ = realization(g, chi_);
        r_ = static_cast<size_t>(chi_.degree());
        n_ = coinv_.dimension() * r_;
        build_group_and_dual();
        build_v();
    }

    const Character& character() const { return chi_; }
    const AlgebraPtr& algebra() const { return alg_; }
    const CoinvariantSpace& coinvariants() const { return coinv_; }
    size_t dimension() const { return n_; }
    int degree(size_t b) const { return coinv_.degree(b / r_); }

    const PMatrix& group_matrix(int w) const { return group_.at(w); }
    const PMatrix& dual_matrix(int i) const { return dual_.at(i); }
    const PMatrix& v_matrix(int i) const { return v_.at(i); }

    /// Matrix of an arbitrary element of H (given in PBW normal form).
    PMatrix matrix_of(const PBWElement& z) const {
        if (z.algebra()->group().spec != alg_->group().spec) throw std::invalid_argument("element of another algebra");
        PMatrix out(n_, n_);
        for (const auto& [k, c] : z.terms()) {
            const PMatrix& G = group_.at(k.w);
            PMatrix term = mono_matrix(k.v, false) * G * mono_matrix(k.q, true);
            out = out + term.scaled(c);
        }
        return out;
    }

    /// Omega_chi(z) = trace / dim, certified by nilpotency of z - Omega.
    Poly omega(const PBWElement& z) const {
        if (!is_central(z)) throw std::invalid_argument("omega needs a central element");
        PMatrix m = matrix_of(z);
        Poly om = m.trace().scaled(Cyclotomic(Rational(1, static_cast<long>(n_))));
        PMatrix d = m - PMatrix::identity(n_).scaled(om);
        size_t p = 1;
        while (p < n_ && !d.is_zero()) {
            d = d * d;
            p *= 2;
        }
        if (!d.is_zero()) throw std::logic_error("central element minus its trace is not nilpotent");
        return om;
    }

    /// Graded dimension of the W-invariants, as a polynomial in t.
    Poly graded_invariants() const {
        const auto& g = alg_->group();
        Poly out;
        for (int deg = 0; deg <= coinv_.top_degree(); ++deg) {
            Cyclotomic tr(0);
            for (int w = 0; w < g.order(); ++w)
                for (size_t b = 0; b < n_; ++b) {
                    if (degree(b) != deg) continue;
                    if (auto c = group_.at(w)(b, b).as_constant()) tr += *c;
                }
            tr = tr.scaled(Rational(1, g.order()));
            if (!tr.is_zero()) out += Poly::var("t", deg).scaled(tr);
        }
        return out;
    }

    /// Dimension of the simple head at a point of parameter space. The maximal
    /// submodule is the set of m in degree k with k[V]_k m = 0, so dim L is the
    /// sum over k of the rank of M_k -> (M_0)^{monomials of degree k}.
    int simple_dimension(const std::map<std::string, Poly>& point) const {
        auto spec_entry = [&](const Poly& p) {
            Poly q = p.substitute(point);
            auto c = q.as_constant();
            if (!c) throw std::invalid_argument("parameter point leaves free variables");
            return *c;
        };
        int total = 0;
        std::vector<size_t> low;
        for (size_t b = 0; b < n_; ++b)
            if (degree(b) == 0) low.push_back(b);
        for (int k = 0; k <= coinv_.top_degree(); ++k) {
            std::vector<size_t> cols;
            for (size_t b = 0; b < n_; ++b)
                if (degree(b) == k) cols.push_back(b);
            std::vector<PMono> monos;
            enumerate(k, 0, PMono{}, monos);
            Matrix<Cyclotomic> stacked(monos.size() * low.size(), cols.size());
            for (size_t mi = 0; mi < monos.size(); ++mi) {
                const PMatrix& P = mono_matrix(monos[mi], false);
                for (size_t r = 0; r < low.size(); ++r)
                    for (size_t c = 0; c < cols.size(); ++c) stacked(mi * low.size() + r, c) = spec_entry(P(low[r], cols[c]));
            }
            total += static_cast<int>(rank(stacked));
        }
        return total;
    }

    /// An explicit matrix model of chi: scalars for linear characters,
    /// otherwise the reflection representation or its dual when they match.
    static std::vector<CMatrix> realization(const ReflectionGroup& g, const Character& chi) {
        std::vector<CMatrix> rho;
        if (chi.degree() == 1) {
            for (int w = 0; w < g.order(); ++w) rho.push_back(CMatrix::identity(1).scaled(chi.values[w]));
            return rho;
        }
        for (const auto* src : {&g.on_v, &g.on_dual}) {
            bool ok = true;
            for (int w = 0; w < g.order() && ok; ++w) ok = (*src)[w].trace() == chi.values[w];
            if (ok) return *src;
        }
        throw std::invalid_argument("no matrix realization of " + chi.name);
    }

private:
    AlgebraPtr alg_;
    Character chi_;
    CoinvariantSpace coinv_;
    std::vector<CMatrix> rho_;
    size_t r_ = 1, n_ = 0;
    std::vector<PMatrix> group_, dual_, v_;
    mutable std::map<std::pair<PMono, bool>, PMatrix> mono_cache_;

    void enumerate(int k, int var, PMono cur, std::vector<PMono>& out) const {
        int n = alg_->group().rank;
        if (var == n - 1) {
            cur[var] = static_cast<unsigned char>(k);
            out.push_back(cur);
            return;
        }
        for (int e = k; e >= 0; --e) {
            cur[var] = static_cast<unsigned char>(e);
            enumerate(k - e, var + 1, cur, out);
        }
    }

    // Writes coordinates(poly) (x) (rho(w) e_k) into column (i, k) of m.
    void put(PMatrix& m, size_t col_i, size_t k, const std::vector<std::pair<PMono, Cyclotomic>>& poly, int w,
             const Poly& scale) const {
        if (poly.empty()) return;
        auto coords = coinv_.reduce(poly);
        for (size_t j = 0; j < coords.size(); ++j) {
            if (coords[j].is_zero()) continue;
            for (size_t l = 0; l < r_; ++l) {
                const Cyclotomic& rw = rho_[w](l, k);
                if (rw.is_zero()) continue;
                m(j * r_ + l, col_i * r_ + k) += scale.scaled(coords[j] * rw);
            }
        }
    }

    void build_group_and_dual() {
        const auto& g = alg_->group();
        const auto& basis = coinv_.basis();
        for (int w = 0; w < g.order(); ++w) {
            PMatrix m(n_, n_);
            for (size_t i = 0; i < basis.size(); ++i)
                for (size_t k = 0; k < r_; ++k) put(m, i, k, alg_->act(w, basis[i], true), w, Poly(1));
            group_.push_back(std::move(m));
        }
        for (int a = 0; a < g.rank; ++a) {
            PMatrix m(n_, n_);
            PMono unit{};
            unit[a] = 1;
            for (size_t i = 0; i < basis.size(); ++i)
                for (size_t k = 0; k < r_; ++k) put(m, i, k, {{detail::pmono_mul(basis[i], unit), Cyclotomic(1)}}, 0, Poly(1));
            dual_.push_back(std::move(m));
        }
    }

    // v (m (x) e) = [v, m] (x) e since v kills the lowest line; [v, m] has no V part.
    void build_v() {
        const auto& g = alg_->group();
        const auto& basis = coinv_.basis();
        for (int a = 0; a < g.rank; ++a) {
            PMatrix m(n_, n_);
            for (size_t i = 0; i < basis.size(); ++i) {
                PBWKey mk;
                mk.q = basis[i];
                PBWElement c = alg_->commutator(alg_->v_gen(a), alg_->term(mk, Poly(1)));
                for (const auto& [key, coef] : c.terms()) {
                    if (!detail::pmono_is_one(key.v)) throw std::logic_error("commutator [v, m] has a V part");
                    for (size_t k = 0; k < r_; ++k) put(m, i, k, alg_->act(key.w, key.q, true), key.w, coef);
                }
            }
            v_.push_back(std::move(m));
        }
    }

    const PMatrix& mono_matrix(const PMono& e, bool dual) const {
        auto key = std::make_pair(e, dual);
        if (auto it = mono_cache_.find(key); it != mono_cache_.end()) return it->second;
        PMatrix m = PMatrix::identity(n_);
        const auto& gens = dual ? dual_ : v_;
        for (int i = 0; i < alg_->group().rank; ++i)
            for (unsigned k = 0; k < e[i]; ++k) m = m * gens[i];
        return mono_cache_.emplace(key, std::move(m)).first->second;
    }
};

/// (1 / chi(1)) sum_s eps(s) chi(s) C_s.
inline Poly omega_euler_closed_form(const ReflectionGroup& g, const Character& chi, const std::vector<Poly>& params) {
    Poly out;
    for (int s : g.reflections)
        out += params.at(g.refl_class_of.at(s)).scaled(g.det[s] * chi.values[s]);
    return out.scaled(Cyclotomic(Rational(1, chi.degree())));
}

/// Rows = characters, columns = named central generators.
inline nlohmann::ordered_json omega_table_json(const AlgebraPtr& alg, const std::vector<std::string>& columns) {
    auto named = named_center_generators(alg);
    nlohmann::ordered_json j;
    j["group"] = alg->group().spec;
    j["columns"] = columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& chi : alg->group().chars) {
        BabyVerma M(alg, chi);
        nlohmann::ordered_json row;
        row["character"] = chi.name;
        nlohmann::ordered_json vals;
        for (const auto& c : columns) {
            auto it = named.find(c);
            if (it == named.end()) throw std::invalid_argument("unknown central generator '" + c + "'");
            vals[c] = M.omega(it->second).str();
        }
        row["omega"] = vals;
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

}  // namespace cmlab
