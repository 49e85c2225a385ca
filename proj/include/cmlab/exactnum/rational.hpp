#pragma once

// Exact rationals. Small values live in a pair of int64 words; anything that
// overflows is promoted to a GMP rational and demoted again when it fits.

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cmlab {

class Rational {
public:
    Rational() = default;
    Rational(int v) : num_(v) {}
    Rational(long v) : num_(v) {}
    Rational(long long v) : num_(v) {}
    Rational(long long n, long long d) { set_small_checked(n, d); }
    explicit Rational(const mpq_class& q) { assign_big(q); }
    explicit Rational(const mpz_class& z) { assign_big(mpq_class(z)); }

    Rational(const Rational& o) : num_(o.num_), den_(o.den_), big_(o.big_ ? new mpq_class(*o.big_) : nullptr) {}
    Rational(Rational&& o) noexcept : num_(o.num_), den_(o.den_), big_(o.big_) { o.big_ = nullptr; }
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            Rational tmp(o);
            swap(tmp);
        }
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        swap(o);
        return *this;
    }
    ~Rational() { delete big_; }

    void swap(Rational& o) noexcept {
        std::swap(num_, o.num_);
        std::swap(den_, o.den_);
        std::swap(big_, o.big_);
    }

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
    /// or a zero denominator.
    static Rational parse(std::string_view s) {
        std::string t(s);
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
        size_t b = 0;
        while (b < t.size() && std::isspace(static_cast<unsigned char>(t[b]))) ++b;
        t = t.substr(b);
        if (t.empty()) throw std::invalid_argument("empty rational literal");
        auto slash = t.find('/');
        auto valid_int = [](const std::string& u) {
            size_t i = (!u.empty() && (u[0] == '-' || u[0] == '+')) ? 1 : 0;
            if (i >= u.size()) return false;
            for (; i < u.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
            return true;
        };
        std::string n = slash == std::string::npos ? t : t.substr(0, slash);
        std::string d = slash == std::string::npos ? "1" : t.substr(slash + 1);
        if (!valid_int(n) || !valid_int(d)) throw std::invalid_argument("malformed rational literal: " + t);
        if (n[0] == '+') n = n.substr(1);
        if (d[0] == '+') d = d.substr(1);
        mpz_class zn(n), zd(d);
        if (zd == 0) throw std::invalid_argument("zero denominator in rational literal: " + t);
        mpq_class q(zn, zd);
        q.canonicalize();
        return Rational(q);
    }

    bool is_zero() const { return big_ ? sgn(*big_) == 0 : num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
    int sign() const {
        if (big_) return sgn(*big_);
        return (num_ > 0) - (num_ < 0);
    }

    mpq_class to_mpq() const {
        if (big_) return *big_;
        mpq_class q(mpz_from(num_), mpz_from(den_));
        return q;
    }
    mpz_class numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_from(num_); }
    mpz_class denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_from(den_); }

    /// True when the value fits the small representation; exposed for tests.
    bool is_small() const { return big_ == nullptr; }

    std::string str() const {
        if (big_) return big_->get_str();
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    Rational operator-() const {
        if (!big_ && num_ != INT64_MIN) {
            Rational r;
            r.num_ = -num_;
            r.den_ = den_;
            return r;
        }
        return Rational(mpq_class(-to_mpq()));
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            if (a.den_ == 1 && b.den_ == 1) {
                long long s;
                if (!__builtin_add_overflow(a.num_, b.num_, &s)) return Rational(s);
            } else {
                long long x, y, n, d;
                if (!__builtin_mul_overflow(a.num_, b.den_, &x) && !__builtin_mul_overflow(b.num_, a.den_, &y) &&
                    !__builtin_add_overflow(x, y, &n) && !__builtin_mul_overflow(a.den_, b.den_, &d)) {
                    Rational r;
                    r.set_small_reduce(n, d);
                    return r;
                }
            }
        }
        return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            if (a.den_ == 1 && b.den_ == 1) {
                long long p;
                if (!__builtin_mul_overflow(a.num_, b.num_, &p)) return Rational(p);
            } else {
                long long n, d;
                if (!__builtin_mul_overflow(a.num_, b.num_, &n) && !__builtin_mul_overflow(a.den_, b.den_, &d)) {
                    Rational r;
                    r.set_small_reduce(n, d);
                    return r;
                }
            }
        }
        return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        return a * b.inverse();
    }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        if (!big_ && num_ != INT64_MIN) {
            Rational r;
            r.num_ = num_ < 0 ? -den_ : den_;
            r.den_ = num_ < 0 ? -num_ : num_;
            return r;
        }
        mpq_class q = to_mpq();
        mpq_inv(q.get_mpq_t(), q.get_mpq_t());
        return Rational(q);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;  // representations are canonical: a small value is never stored big
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            __int128 l = static_cast<__int128>(a.num_) * b.den_;
            __int128 r = static_cast<__int128>(b.num_) * a.den_;
            return l < r;
        }
        return a.to_mpq() < b.to_mpq();
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

    size_t hash() const {
        if (!big_) return std::hash<long long>()(num_) * 1000003u ^ std::hash<long long>()(den_);
        return std::hash<std::string>()(big_->get_str());
    }

    /// Exact power with integer exponent (negative exponents invert).
    Rational pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        Rational r(1), b(*this);
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

private:
    long long num_ = 0;
    long long den_ = 1;
    mpq_class* big_ = nullptr;

    static_assert(sizeof(long) == sizeof(long long), "LP64 target expected");
    static mpz_class mpz_from(long long v) { return mpz_class(static_cast<long>(v)); }
    static unsigned long long neg_abs(long long v) { return 0ull - static_cast<unsigned long long>(v); }

    static long long gcd64(long long a, long long b) {
        unsigned long long x = a < 0 ? neg_abs(a) : (unsigned long long)a;
        unsigned long long y = b < 0 ? neg_abs(b) : (unsigned long long)b;
        while (y) {
            unsigned long long t = x % y;
            x = y;
            y = t;
        }
        return static_cast<long long>(x);
    }

    void set_small_reduce(long long n, long long d) {
        if (d < 0) {
            if (n == INT64_MIN || d == INT64_MIN) {
                assign_big(mpq_class(mpz_from(n), mpz_from(d)), true);
                return;
            }
            n = -n;
            d = -d;
        }
        long long g = gcd64(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num_ = n;
        den_ = n == 0 ? 1 : d;
    }

    void set_small_checked(long long n, long long d) {
        if (d == 0) throw std::domain_error("zero denominator");
        set_small_reduce(n, d);
    }

    void assign_big(const mpq_class& q, bool canonicalize = false) {
        mpq_class c(q);
        if (canonicalize) c.canonicalize();
        if (c.get_num().fits_slong_p() && c.get_den().fits_slong_p()) {
            delete big_;
            big_ = nullptr;
            num_ = c.get_num().get_si();
            den_ = c.get_den().get_si();
            return;
        }
        if (big_)
            *big_ = c;
        else
            big_ = new mpq_class(c);
        num_ = 0;
        den_ = 1;
    }
};

inline Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

}  // namespace cmlab

template <>
struct std::hash<cmlab::Rational> {
    size_t operator()(const cmlab::Rational& q) const { return q.hash(); }
};
