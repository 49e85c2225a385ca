#pragma once

// Power series in two variables t, u truncated at total degree N:
// coefficients a(i, j) are kept for i + j <= N.

#include "cmlab/exactnum/cyclotomic.hpp"
#include "cmlab/exactnum/rational.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmlab {

template <class F>
class BiSeries {
public:
    explicit BiSeries(int order = 0) : n_(order), a_((order + 1) * (order + 1), F(0)) {
        if (order < 0) throw std::invalid_argument("truncation order must be non-negative");
    }
    static BiSeries constant(int order, const F& c) {
        BiSeries s(order);
        s.at(0, 0) = c;
        return s;
    }
    /// c * t^i * u^j (dropped if beyond the order).
    static BiSeries monomial(int order, int i, int j, const F& c = F(1)) {
        BiSeries s(order);
        if (i + j <= order) s.at(i, j) = c;
        return s;
    }

    int order() const { return n_; }
    F& at(int i, int j) {
        check(i, j);
        return a_[i * (n_ + 1) + j];
    }
    const F& at(int i, int j) const {
        check(i, j);
        return a_[i * (n_ + 1) + j];
    }
    /// Coefficient of t^i u^j; zero beyond the order.
    F coeff(int i, int j) const {
        if (i < 0 || j < 0 || i + j > n_) return F(0);
        return at(i, j);
    }

    friend BiSeries operator+(const BiSeries& x, const BiSeries& y) {
        BiSeries r(std::min(x.n_, y.n_));
        for (int i = 0; i <= r.n_; ++i)
            for (int j = 0; i + j <= r.n_; ++j) r.at(i, j) = x.at(i, j) + y.at(i, j);
        return r;
    }
    friend BiSeries operator-(const BiSeries& x, const BiSeries& y) {
        BiSeries r(std::min(x.n_, y.n_));
        for (int i = 0; i <= r.n_; ++i)
            for (int j = 0; i + j <= r.n_; ++j) r.at(i, j) = x.at(i, j) - y.at(i, j);
        return r;
    }
    friend BiSeries operator*(const BiSeries& x, const BiSeries& y) {
        BiSeries r(std::min(x.n_, y.n_));
        int n = r.n_;
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) {
                const F& xa = x.at(i, j);
                if (xa == F(0)) continue;
                for (int k = 0; i + k <= n; ++k)
                    for (int l = 0; i + j + k + l <= n; ++l) {
                        const F& yb = y.at(k, l);
                        if (!(yb == F(0))) r.at(i + k, j + l) = r.at(i + k, j + l) + xa * yb;
                    }
            }
        return r;
    }
    BiSeries scaled(const F& c) const {
        BiSeries r(*this);
        for (auto& v : r.a_) v = v * c;
        return r;
    }

    /// Multiplicative inverse; the constant term must be invertible.
    BiSeries inverse() const {
        const F& c0 = at(0, 0);
        if (c0 == F(0)) throw std::domain_error("series inverse needs a non-zero constant term");
        F inv0 = F(1) / c0;
        BiSeries r(n_);
        // Solve (x * r)(d) = delta_d0 degree by degree in total degree.
        for (int d = 0; d <= n_; ++d)
            for (int i = 0; i <= d; ++i) {
                int j = d - i;
                F s = (d == 0) ? F(1) : F(0);
                for (int k = 0; k <= i; ++k)
                    for (int l = 0; l <= j; ++l) {
                        if (k == 0 && l == 0) continue;
                        const F& xa = at(k, l);
                        if (!(xa == F(0))) s = s - xa * r.at(i - k, j - l);
                    }
                r.at(i, j) = s * inv0;
            }
        return r;
    }

    BiSeries truncated(int order) const {
        if (order > n_) throw std::invalid_argument("cannot extend a truncated series");
        BiSeries r(order);
        for (int i = 0; i <= order; ++i)
            for (int j = 0; i + j <= order; ++j) r.at(i, j) = at(i, j);
        return r;
    }

    friend bool operator==(const BiSeries& x, const BiSeries& y) { return x.n_ == y.n_ && x.a_ == y.a_; }
    friend bool operator!=(const BiSeries& x, const BiSeries& y) { return !(x == y); }

    template <class G, class Fn>
    BiSeries<G> map(Fn f) const {
        BiSeries<G> r(n_);
        for (int i = 0; i <= n_; ++i)
            for (int j = 0; i + j <= n_; ++j) r.at(i, j) = f(at(i, j));
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (int d = 0; d <= n_; ++d)
            for (int i = d; i >= 0; --i) {
                int j = d - i;
                const F& c = at(i, j);
                if (c == F(0)) continue;
                if (!first) os << " + ";
                first = false;
                os << "(" << c << ")";
                if (i) os << "*t^" << i;
                if (j) os << "*u^" << j;
            }
        if (first) os << "0";
        os << " + O(" << n_ + 1 << ")";
        return os.str();
    }

private:
    int n_;
    std::vector<F> a_;

    void check(int i, int j) const {
        if (i < 0 || j < 0 || i + j > n_) throw std::out_of_range("series index beyond truncation order");
    }
};

using TruncSeries2 = BiSeries<Rational>;

}  // namespace cmlab
