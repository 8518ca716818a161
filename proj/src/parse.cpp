#include "formsym/parse.hpp"

#include <cctype>

namespace formsym {

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars)
        : s_(text), vars_(vars) {}

    MultiPoly run() {
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    const std::string& s_;
    const std::vector<std::string>& vars_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw SyntaxError("parse error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    MultiPoly expr() {
        bool neg = false;
        skip_ws();
        if (eat('-')) neg = true;
        else eat('+');
        MultiPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (eat('*')) acc *= factor();
        return acc;
    }

    MultiPoly factor() {
        MultiPoly b = base();
        if (eat('^')) {
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_])) fail("exponent expected after '^'");
            uint64_t e = 0;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
                e = e * 10 + (uint64_t)(s_[pos_] - '0');
                if (e > 100000) fail("exponent too large");
                ++pos_;
            }
            return b.pow((uint32_t)e);
        }
        return b;
    }

    MultiPoly base() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            if (!eat(')')) fail("')' expected");
            return inner;
        }
        if (std::isdigit((unsigned char)c)) {
            BigInt num = integer();
            if (eat('/')) {
                skip_ws();
                if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_])) fail("denominator expected");
                BigInt den = integer();
                if (den.is_zero()) fail("zero denominator in literal");
                return MultiPoly::constant(vars_, GaussianRational(Rational(num, den)));
            }
            return MultiPoly::constant(vars_, GaussianRational(Rational(num)));
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_')) {
                name += s_[pos_];
                ++pos_;
            }
            if (name == "i") return MultiPoly::constant(vars_, GaussianRational::i());
            for (const auto& v : vars_)
                if (v == name) return MultiPoly::variable(vars_, name);
            throw UnknownVariable("undeclared variable: " + name);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    BigInt integer() {
        std::string digits;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
            digits += s_[pos_];
            ++pos_;
        }
        return BigInt(digits);
    }
};

} // namespace

MultiPoly parse_polynomial(const std::string& text, const std::vector<std::string>& variables) {
    return Parser(text, variables).run();
}

} // namespace formsym
