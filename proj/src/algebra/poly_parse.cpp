#include "algebra/poly_parse.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace jl {
namespace {

class Parser {
public:
    Parser(std::string_view s, char outer, char inner) : s_(s), outer_(outer), inner_(inner) {}

    BiPoly run() {
        BiPoly v = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("polynomial parse error (" + why + ") at " +
                                    std::to_string(pos_) + " in: " + std::string(s_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    BiPoly expr() {
        BiPoly acc;
        char c = peek();
        bool neg = false;
        if (c == '+' || c == '-') {
            neg = c == '-';
            ++pos_;
        }
        acc = term();
        if (neg) acc = -acc;
        for (;;) {
            c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            BiPoly t = term();
            if (c == '+') acc += t;
            else acc -= t;
        }
        return acc;
    }

    bool starts_factor(char c) const {
        return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' || c == outer_ || c == inner_;
    }

    BiPoly term() {
        BiPoly acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (c == '/') {
                ++pos_;
                BiPoly d = factor();
                if (d.degree_outer() != 0 || d.degree_inner() != 0) fail("division by non-constant");
                acc = acc * (Rational(1) / d.coeff(0, 0));
            } else if (starts_factor(c)) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    BiPoly factor() {
        BiPoly base = primary();
        if (peek() == '^') {
            ++pos_;
            skip();
            size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (st == pos_) fail("exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(st, pos_ - st)))));
        }
        return base;
    }

    BiPoly primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            BiPoly v = expr();
            if (peek() != ')') fail("missing )");
            ++pos_;
            return v;
        }
        if (c == outer_) {
            ++pos_;
            return BiPoly::outer();
        }
        if (c == inner_) {
            ++pos_;
            return BiPoly::inner();
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            size_t st = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
            if (pos_ + 1 < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E') &&
                (std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])) || s_[pos_ + 1] == '-' || s_[pos_ + 1] == '+')) {
                pos_ += 2;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
            return BiPoly(Rational::parse(s_.substr(st, pos_ - st)));
        }
        fail("unexpected character");
    }

    std::string_view s_;
    size_t pos_ = 0;
    char outer_, inner_;
};

}  // namespace

BiPoly parse_bipoly(std::string_view text, char outer, char inner) {
    return Parser(text, outer, inner).run();
}

UPoly parse_upoly(std::string_view text, char var) {
    BiPoly b = Parser(text, '\x01', var).run();
    return b.coeff(0);
}

}  // namespace jl
