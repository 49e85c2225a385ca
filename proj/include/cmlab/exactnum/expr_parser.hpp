#pragma once

// Recursive-descent parser for infix expressions over an arbitrary ring type.
//
//   expr   := [+|-] term { (+|-) term }
//   term   := power { [*|/] power }        juxtaposition means *
//   power  := atom [ ^ integer ]
//   atom   := integer | identifier | ( expr )
//
// Identifiers may contain letters, digits, '_' and trailing primes (eu', s').
// Division is only allowed by operands that evaluate to a rational constant.

#include "cmlab/exactnum/rational.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cmlab {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& msg, size_t pos)
        : std::invalid_argument(msg + " at offset " + std::to_string(pos)), pos_(pos) {}
    size_t position() const { return pos_; }

private:
    size_t pos_;
};

template <class V>
struct ExprOps {
    std::function<V(const std::string&)> ident;
    std::function<V(const Rational&)> constant;
    std::function<std::optional<Rational>(const V&)> as_rational;
};

template <class V>
class ExprParser {
public:
    explicit ExprParser(ExprOps<V> ops) : ops_(std::move(ops)) {}

    V parse(std::string_view text) {
        src_ = text;
        pos_ = 0;
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("empty expression", pos_);
        V v = expr();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
        return v;
    }

private:
    ExprOps<V> ops_;
    std::string_view src_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }
    bool starts_atom() {
        skip_ws();
        if (pos_ >= src_.size()) return false;
        char c = src_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    V expr() {
        bool neg = false;
        if (peek('+')) {
            ++pos_;
        } else if (peek('-')) {
            ++pos_;
            neg = true;
        }
        V acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (peek('+')) {
                ++pos_;
                acc = acc + term();
            } else if (peek('-')) {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    V term() {
        V acc = power();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc = acc * power();
            } else if (peek('/')) {
                size_t at = ++pos_;
                V d = power();
                auto q = ops_.as_rational ? ops_.as_rational(d) : std::nullopt;
                if (!q) throw ParseError("division by a non-constant", at);
                if (q->is_zero()) throw ParseError("division by zero", at);
                acc = acc * ops_.constant(q->inverse());
            } else if (starts_atom()) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    V power() {
        V base = atom();
        if (peek('^')) {
            ++pos_;
            skip_ws();
            bool braces = pos_ < src_.size() && src_[pos_] == '{';
            if (braces) ++pos_;
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            if (start == pos_) throw ParseError("expected a non-negative integer exponent", pos_);
            unsigned long e = std::stoul(std::string(src_.substr(start, pos_ - start)));
            if (braces) {
                if (pos_ >= src_.size() || src_[pos_] != '}') throw ParseError("expected '}'", pos_);
                ++pos_;
            }
            V r = ops_.constant(Rational(1));
            V b = base;
            while (e) {
                if (e & 1) r = r * b;
                e >>= 1;
                if (e) b = b * b;
            }
            return r;
        }
        return base;
    }

    V atom() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of expression", pos_);
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            V v = expr();
            if (!peek(')')) throw ParseError("expected ')'", pos_);
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            return ops_.constant(Rational::parse(src_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            while (pos_ < src_.size() && src_[pos_] == '\'') ++pos_;
            std::string name(src_.substr(start, pos_ - start));
            try {
                return ops_.ident(name);
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception& e) {
                throw ParseError(e.what(), start);
            }
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }
};

}  // namespace cmlab
