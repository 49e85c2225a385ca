#pragma once

// Normal forms of arbitrary words in the generators by local rewriting.
//
// This does not share code with CherednikAlgebra::multiply: it applies the
// defining relations to adjacent letters until every word has the shape
// V-letters (sorted), at most one group letter, V*-letters (sorted). The
// choice of which inversion to rewrite first is a parameter, which makes it
// usable as a confluence check.

#include "cmlab/cherednik/algebra.hpp"

#include <map>
#include <vector>

namespace cmlab {

struct Letter {
    enum Kind : unsigned char { V = 0, G = 1, D = 2 } kind;
    int index;  // coordinate index, or group element index
    auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

enum class RewriteStrategy { Leftmost, Rightmost };

class WordRewriter {
public:
    explicit WordRewriter(AlgebraPtr alg) : alg_(std::move(alg)) {}

    PBWElement normal_form(const Word& w, RewriteStrategy strategy) const {
        std::map<Word, Poly> cur{{w, Poly(1)}};
        PBWElement out = alg_->zero();
        while (!cur.empty()) {
            auto [word, coeff] = *cur.begin();
            cur.erase(cur.begin());
            if (coeff.is_zero()) continue;
            auto pos = find_redex(word, strategy);
            if (!pos) {
                detail::add_term(out.mutable_terms(), to_key(word), coeff);
                continue;
            }
            for (auto& [nw, c] : rewrite(word, *pos)) {
                Poly v = coeff * c;
                auto it = cur.find(nw);
                if (it == cur.end())
                    cur.emplace(std::move(nw), v);
                else
                    it->second += v;
            }
        }
        return out;
    }

private:
    AlgebraPtr alg_;

    static int rankL(const Letter& l) { return l.kind; }

    std::optional<size_t> find_redex(const Word& w, RewriteStrategy s) const {
        auto reducible = [&](size_t i) {
            const Letter &a = w[i], &b = w[i + 1];
            if (a.kind == Letter::G && a.index == 0) return true;
            if (b.kind == Letter::G && b.index == 0) return true;
            if (rankL(a) > rankL(b)) return true;
            if (a.kind == b.kind && a.kind == Letter::G) return true;
            if (a.kind == b.kind && a.index > b.index) return true;
            return false;
        };
        if (w.size() == 1 && w[0].kind == Letter::G && w[0].index == 0) return size_t(0);
        if (w.size() < 2) return std::nullopt;
        if (s == RewriteStrategy::Leftmost) {
            for (size_t i = 0; i + 1 < w.size(); ++i)
                if (reducible(i)) return i;
        } else {
            for (size_t i = w.size() - 1; i-- > 0;)
                if (reducible(i)) return i;
        }
        return std::nullopt;
    }

    std::vector<std::pair<Word, Poly>> rewrite(const Word& w, size_t i) const {
        const auto& g = alg_->group();
        std::vector<std::pair<Word, Poly>> out;
        auto splice = [&](size_t from, size_t len, const Word& mid) {
            Word r(w.begin(), w.begin() + from);
            r.insert(r.end(), mid.begin(), mid.end());
            r.insert(r.end(), w.begin() + from + len, w.end());
            return r;
        };
        if (w.size() == 1) return {{Word{}, Poly(1)}};  // lone identity letter
        const Letter a = w[i], b = w[i + 1];
        if (a.kind == Letter::G && a.index == 0) return {{splice(i, 1, {}), Poly(1)}};
        if (b.kind == Letter::G && b.index == 0) return {{splice(i + 1, 1, {}), Poly(1)}};
        if (a.kind == Letter::G && b.kind == Letter::G) return {{splice(i, 2, {Letter{Letter::G, g.mult[a.index][b.index]}}), Poly(1)}};
        if (a.kind == b.kind) return {{splice(i, 2, {b, a}), Poly(1)}};  // commuting coordinates
        if (a.kind == Letter::G) {
            // w v = w(v) w
            const CMatrix& M = b.kind == Letter::V ? g.on_v[a.index] : g.on_dual[a.index];
            for (int r = 0; r < g.rank; ++r)
                if (!M(r, b.index).is_zero())
                    out.push_back({splice(i, 2, {Letter{b.kind, r}, a}), Poly(M(r, b.index))});
            return out;
        }
        if (b.kind == Letter::G) {
            // xi w = w w^-1(xi)
            const CMatrix& M = g.on_dual[g.inv[b.index]];
            for (int r = 0; r < g.rank; ++r)
                if (!M(r, a.index).is_zero())
                    out.push_back({splice(i, 2, {b, Letter{Letter::D, r}}), Poly(M(r, a.index))});
            return out;
        }
        // a = xi_j (D), b = v_k (V): xi_j v_k = v_k xi_j - [v_k, xi_j].
        int j = a.index, k = b.index;
        out.push_back({splice(i, 2, {b, a}), Poly(1)});
        if (alg_->with_T() && j == k) out.push_back({splice(i, 2, {}), -Poly::var("T")});
        CMatrix id = CMatrix::identity(g.rank);
        for (int s : g.reflections) {
            Cyclotomic pair = g.on_v[s](j, k) - id(j, k);
            if (pair.is_zero()) continue;
            out.push_back({splice(i, 2, {Letter{Letter::G, s}}), -alg_->param_of(s).scaled(pair)});
        }
        return out;
    }

    static PBWKey to_key(const Word& w) {
        PBWKey k;
        for (const auto& l : w) {
            if (l.kind == Letter::V)
                k.v[l.index]++;
            else if (l.kind == Letter::D)
                k.q[l.index]++;
            else
                k.w = l.index;
        }
        return k;
    }
};

}  // namespace cmlab
