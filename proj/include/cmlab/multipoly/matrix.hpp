#pragma once

// Dense matrices over a commutative ring R.
//
// charpoly() uses Berkowitz's algorithm, which needs no division and so works
// for polynomial entries. The elimination routines further down require R to
// be a field (Rational or Cyclotomic).

#include <functional>
#include <stdexcept>
#include <vector>

namespace cmlab {

template <class R>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, const R& fill = R(0)) : r_(rows), c_(cols), a_(rows * cols, fill) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = R(1);
        return m;
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    R& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const R& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        check_same(x, y);
        Matrix m(x);
        for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = m.a_[i] + y.a_[i];
        return m;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        check_same(x, y);
        Matrix m(x);
        for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = m.a_[i] - y.a_[i];
        return m;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.c_ != y.r_) throw std::invalid_argument("matrix dimension mismatch");
        Matrix m(x.r_, y.c_);
        for (size_t i = 0; i < x.r_; ++i)
            for (size_t k = 0; k < x.c_; ++k) {
                const R& xik = x(i, k);
                if (is_zero_value(xik)) continue;
                for (size_t j = 0; j < y.c_; ++j)
                    if (!is_zero_value(y(k, j))) m(i, j) = m(i, j) + xik * y(k, j);
            }
        return m;
    }
    Matrix scaled(const R& s) const {
        Matrix m(*this);
        for (auto& v : m.a_) v = v * s;
        return m;
    }
    std::vector<R> apply(const std::vector<R>& v) const {
        if (v.size() != c_) throw std::invalid_argument("vector dimension mismatch");
        std::vector<R> out(r_, R(0));
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j)
                if (!is_zero_value((*this)(i, j)) && !is_zero_value(v[j])) out[i] = out[i] + (*this)(i, j) * v[j];
        return out;
    }
    Matrix transpose() const {
        Matrix m(c_, r_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }
    R trace() const {
        R t(0);
        for (size_t i = 0; i < std::min(r_, c_); ++i) t = t + (*this)(i, i);
        return t;
    }
    bool is_zero() const {
        for (const auto& v : a_)
            if (!is_zero_value(v)) return false;
        return true;
    }
    template <class S>
    Matrix<S> map(const std::function<S(const R&)>& f) const {
        Matrix<S> m(r_, c_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) { return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_; }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    Matrix pow(unsigned e) const {
        Matrix r = identity(r_), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    /// Coefficients [1, c1, ..., cn] of det(t*I - A), highest power first.
    std::vector<R> charpoly() const {
        if (r_ != c_) throw std::invalid_argument("charpoly of a non-square matrix");
        std::vector<R> poly{R(1)};
        for (size_t k = 1; k <= r_; ++k) {
            size_t m = k - 1;  // size of the leading block already processed
            const R& akk = (*this)(m, m);
            // q[0] = 1, q[1] = -a, q[i] = -R * A^{i-2} * C
            std::vector<R> q(k + 1, R(0));
            q[0] = R(1);
            q[1] = -akk;
            std::vector<R> col(m);
            for (size_t i = 0; i < m; ++i) col[i] = (*this)(i, m);
            for (size_t i = 2; i <= k; ++i) {
                R s(0);
                for (size_t j = 0; j < m; ++j)
                    if (!is_zero_value(col[j]) && !is_zero_value((*this)(m, j))) s = s + (*this)(m, j) * col[j];
                q[i] = -s;
                if (i == k) break;
                std::vector<R> next(m, R(0));
                for (size_t r = 0; r < m; ++r)
                    for (size_t j = 0; j < m; ++j)
                        if (!is_zero_value((*this)(r, j)) && !is_zero_value(col[j])) next[r] = next[r] + (*this)(r, j) * col[j];
                col = std::move(next);
            }
            std::vector<R> np(k + 1, R(0));
            for (size_t i = 0; i <= k; ++i)
                for (size_t j = 0; j < poly.size() && j <= i; ++j)
                    if (!is_zero_value(q[i - j]) && !is_zero_value(poly[j])) np[i] = np[i] + q[i - j] * poly[j];
            poly = std::move(np);
        }
        return poly;
    }

    /// Determinant via the characteristic polynomial (division free).
    R det() const {
        auto cp = charpoly();
        R d = cp.back();
        return (r_ % 2) ? -d : d;
    }

private:
    size_t r_ = 0, c_ = 0;
    std::vector<R> a_;

    static void check_same(const Matrix& x, const Matrix& y) {
        if (x.r_ != y.r_ || x.c_ != y.c_) throw std::invalid_argument("matrix dimension mismatch");
    }
    static bool is_zero_value(const R& v) { return v == R(0); }
};

/// Reduced row echelon form over a field; returns the pivot columns.
template <class F>
std::vector<size_t> rref_in_place(Matrix<F>& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
        size_t p = row;
        while (p < m.rows() && m(p, c) == F(0)) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        F inv = F(1) / m(row, c);
        for (size_t j = c; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, c) == F(0)) continue;
            F f = m(r, c);
            for (size_t j = c; j < m.cols(); ++j)
                if (!(m(row, j) == F(0))) m(r, j) = m(r, j) - f * m(row, j);
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

template <class F>
size_t rank(Matrix<F> m) {
    return rref_in_place(m).size();
}

/// Basis of the right null space {v : m v = 0}.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m) {
    auto piv = rref_in_place(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<std::vector<F>> basis;
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_piv[free]) continue;
        std::vector<F> v(m.cols(), F(0));
        v[free] = F(1);
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Inverse over a field; throws std::domain_error if singular.
template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    size_t n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = F(1);
    }
    auto piv = rref_in_place(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("singular matrix");
    Matrix<F> inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

}  // namespace cmlab
