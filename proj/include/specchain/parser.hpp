#ifndef SPECCHAIN_PARSER_HPP
#define SPECCHAIN_PARSER_HPP

/// Recursive-descent parser for polynomial expressions.
///
/// Grammar (whitespace insignificant between tokens):
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := '-' factor | power
///   power  := atom ('^' integer)?
///   atom   := integer | identifier | '(' expr ')'
///
/// Identifiers are ring variables or coefficient-field symbols (extension
/// generators, function-field parameters). Exponents are nonnegative integer
/// literals. There is no implicit multiplication. '/' divides by a constant
/// subexpression only; it exists so printed coefficients such as 1/2 or
/// 1/(t) read back in.

#include <cctype>
#include <string>

#include "specchain/common.hpp"
#include "specchain/polynomial.hpp"

namespace specchain {

namespace detail {

class ExprParser {
public:
    ExprParser(RingPtr ring, const std::string& text)
        : ring_(std::move(ring)), text_(text) {}

    Polynomial parse() {
        Polynomial p = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    RingPtr ring_;
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ == text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial parse_expr() {
        Polynomial acc = parse_term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + parse_term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * parse_factor();
            } else if (c == '/') {
                std::size_t op = pos_;
                ++pos_;
                Polynomial d = parse_factor();
                if (!d.is_constant())
                    throw ParseError("division by non-constant", op);
                if (d.is_zero())
                    throw ParseError("division by zero", op);
                acc = acc.scaled(d.constant_coefficient().inverse());
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_factor() {
        if (peek() == '-') {
            ++pos_;
            return -parse_factor();
        }
        return parse_power();
    }

    Polynomial parse_power() {
        Polynomial base = parse_atom();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("expected nonnegative integer exponent", pos_);
            long e = parse_small_int();
            base = base.pow(static_cast<int>(e));
        }
        return base;
    }

    long parse_small_int() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::string digits = text_.substr(start, pos_ - start);
        if (digits.size() > 6)
            throw ParseError("exponent too large", start);
        return std::stol(digits);
    }

    Polynomial parse_atom() {
        skip_ws();
        if (pos_ == text_.size())
            throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            mpz_class n(text_.substr(start, pos_ - start), 10);
            return ring_->constant(ring_->field()->integer(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            int vi = ring_->var_index(name);
            if (vi >= 0) return ring_->var(vi);
            auto fe = ring_->field()->symbol_element(name);
            if (fe) return ring_->constant(*fe);
            throw ParseError("unknown symbol: " + name, start);
        }
        if (c == '(') {
            ++pos_;
            Polynomial inner = parse_expr();
            if (peek() != ')')
                throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
};

} // namespace detail

inline Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    return detail::ExprParser(ring, text).parse();
}

} // namespace specchain

#endif
