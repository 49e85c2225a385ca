#pragma once

// The coinvariant algebra of polynomial functions in the coordinates of V*
// (the PBW generators on the right), with a monomial basis and reduction.
//
// Degree by degree, the ideal generated by the positive-degree invariants is
// row reduced with monomials ordered lex-decreasingly; the monomials that are
// not pivots form the basis, and reduction is elimination against the pivots.

#include "cmlab/cherednik/algebra.hpp"

#include <map>
#include <vector>

namespace cmlab {

class CoinvariantSpace {
public:
    explicit CoinvariantSpace(const AlgebraPtr& alg) : alg_(alg) {
        const auto& g = alg->group();
        n_ = g.rank;
        top_ = static_cast<int>(g.reflections.size());
        max_deg_ = top_ + 1;
        for (int k = 0; k <= max_deg_; ++k) build_degree(k);
        for (int k = 0; k <= top_; ++k)
            for (size_t i = 0; i < levels_[k].standard.size(); ++i) {
                basis_.push_back(levels_[k].monos[levels_[k].standard[i]]);
                degree_of_.push_back(k);
            }
        if (static_cast<int>(basis_.size()) != g.order())
            throw std::logic_error("coinvariant algebra has the wrong dimension");
    }

    /// Basis monomials, ordered by degree.
    const std::vector<PMono>& basis() const { return basis_; }
    int degree(size_t i) const { return degree_of_[i]; }
    int top_degree() const { return top_; }
    size_t dimension() const { return basis_.size(); }

    /// Coordinates of a homogeneous polynomial, given as (monomial, coeff) pairs
    /// of one degree, in the full basis (zeros outside that degree).
    std::vector<Cyclotomic> reduce(const std::vector<std::pair<PMono, Cyclotomic>>& poly) const {
        std::vector<Cyclotomic> out(basis_.size(), Cyclotomic(0));
        if (poly.empty()) return out;
        int k = static_cast<int>(detail::pmono_degree(poly[0].first));
        if (k > top_) return out;
        const Level& L = levels_[k];
        std::vector<Cyclotomic> v(L.monos.size(), Cyclotomic(0));
        for (const auto& [m, c] : poly) {
            if (static_cast<int>(detail::pmono_degree(m)) != k) throw std::invalid_argument("reduce expects a homogeneous polynomial");
            v[L.index.at(m)] += c;
        }
        for (size_t r = 0; r < L.pivots.size(); ++r) {
            Cyclotomic f = v[L.pivots[r]];
            if (f.is_zero()) continue;
            for (size_t j = 0; j < L.monos.size(); ++j)
                if (!L.rref(r, j).is_zero()) v[j] -= f * L.rref(r, j);
        }
        size_t offset = L.offset;
        for (size_t i = 0; i < L.standard.size(); ++i) out[offset + i] = v[L.standard[i]];
        return out;
    }

private:
    struct Level {
        std::vector<PMono> monos;
        std::map<PMono, size_t> index;
        Matrix<Cyclotomic> rref;
        std::vector<size_t> pivots;
        std::vector<size_t> standard;
        size_t offset = 0;
    };

    AlgebraPtr alg_;
    int n_ = 0, top_ = 0, max_deg_ = 0;
    std::vector<Level> levels_;
    std::vector<std::vector<std::vector<std::pair<PMono, Cyclotomic>>>> invariants_;  // [degree] -> basis
    std::vector<PMono> basis_;
    std::vector<int> degree_of_;

    static void monomials_of_degree(int n, int k, int var, PMono& cur, std::vector<PMono>& out) {
        if (var == n - 1) {
            cur[var] = static_cast<unsigned char>(k);
            out.push_back(cur);
            cur[var] = 0;
            return;
        }
        for (int e = k; e >= 0; --e) {
            cur[var] = static_cast<unsigned char>(e);
            monomials_of_degree(n, k - e, var + 1, cur, out);
        }
        cur[var] = 0;
    }

    void build_degree(int k) {
        Level L;
        PMono cur{};
        monomials_of_degree(n_, k, 0, cur, L.monos);  // lex decreasing
        for (size_t i = 0; i < L.monos.size(); ++i) L.index[L.monos[i]] = i;
        const auto& g = alg_->group();
        // Invariants of degree k via the Reynolds operator.
        std::vector<std::vector<std::pair<PMono, Cyclotomic>>> inv_k;
        if (k > 0) {
            Matrix<Cyclotomic> rey(L.monos.size(), L.monos.size());
            for (size_t i = 0; i < L.monos.size(); ++i)
                for (int w = 0; w < g.order(); ++w)
                    for (const auto& [m, c] : alg_->act(w, L.monos[i], true)) rey(i, L.index.at(m)) += c;
            rref_in_place(rey);
            for (size_t r = 0; r < rey.rows(); ++r) {
                std::vector<std::pair<PMono, Cyclotomic>> p;
                for (size_t j = 0; j < rey.cols(); ++j)
                    if (!rey(r, j).is_zero()) p.push_back({L.monos[j], rey(r, j)});
                if (!p.empty()) inv_k.push_back(p);
            }
        }
        invariants_.push_back(inv_k);
        // Spanning set of the ideal in degree k: inv_j * monomials of degree k - j.
        std::vector<std::vector<Cyclotomic>> rows;
        for (int j = 1; j <= k; ++j) {
            std::vector<PMono> cof;
            PMono c2{};
            monomials_of_degree(n_, k - j, 0, c2, cof);
            for (const auto& inv : invariants_[j])
                for (const auto& m : cof) {
                    std::vector<Cyclotomic> row(L.monos.size(), Cyclotomic(0));
                    for (const auto& [im, ic] : inv) row[L.index.at(detail::pmono_mul(im, m))] += ic;
                    rows.push_back(row);
                }
        }
        L.rref = Matrix<Cyclotomic>(rows.size(), L.monos.size());
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t j = 0; j < L.monos.size(); ++j) L.rref(r, j) = rows[r][j];
        L.pivots = rref_in_place(L.rref);
        std::vector<bool> is_piv(L.monos.size(), false);
        for (auto p : L.pivots) is_piv[p] = true;
        for (size_t j = 0; j < L.monos.size(); ++j)
            if (!is_piv[j]) L.standard.push_back(j);
        L.offset = 0;
        for (const auto& prev : levels_) L.offset += prev.standard.size();
        if (k > top_ && !L.standard.empty()) throw std::logic_error("coinvariants above the top degree");
        levels_.push_back(std::move(L));
    }
};

}  // namespace cmlab
