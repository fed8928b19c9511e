#pragma once

/**
 * @file parse.hpp
 * @brief Small recursive-descent parser for arithmetic expressions over a ring.
 *
 * Grammar:
 *   expr    := term (('+' | '-') term)*
 *   term    := unary (('*' | '/') unary)*
 *   unary   := ('+' | '-') unary | power
 *   power   := primary ('^' integer)?
 *   primary := integer | identifier | '(' expr ')'
 *
 * The ring supplies value_type, add, sub, neg, mul, div, pow(v, unsigned),
 * number(digits) and atom(identifier).
 */

#include <cctype>
#include <stdexcept>
#include <string>

namespace skewalg {

template <class Ring>
class ExpressionParser {
public:
    using V = typename Ring::value_type;

    ExpressionParser(const Ring& ring, std::string text) : R_(ring), s_(std::move(text)) {}

    V parse() {
        V v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    const Ring& R_;
    std::string s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + " in '" + s_ + "': " + msg);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    V expr() {
        V v = term();
        while (true) {
            if (eat('+'))
                v = R_.add(v, term());
            else if (eat('-'))
                v = R_.sub(v, term());
            else
                return v;
        }
    }
    V term() {
        V v = unary();
        while (true) {
            if (eat('*'))
                v = R_.mul(v, unary());
            else if (eat('/'))
                v = R_.div(v, unary());
            else
                return v;
        }
    }
    V unary() {
        if (eat('-')) return R_.neg(unary());
        if (eat('+')) return unary();
        return power();
    }
    V power() {
        V base = primary();
        if (eat('^')) {
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a non-negative integer exponent");
            const std::string digits = s_.substr(start, pos_ - start);
            if (digits.size() > 6) fail("exponent too large");
            return R_.pow(base, static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }
    V primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            V v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return R_.number(s_.substr(start, pos_ - start));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            return R_.atom(s_.substr(start, pos_ - start));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

template <class Ring>
typename Ring::value_type parse_expression(const Ring& ring, const std::string& text) {
    return ExpressionParser<Ring>(ring, text).parse();
}

}  // namespace skewalg
