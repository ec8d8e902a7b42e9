#pragma once

#include "polynomial.hpp"
#include "scalar.hpp"

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace liekit {

/// Error in a coefficient expression, carrying the 0-based offset of the
/// offending character.
class ExprError : public std::runtime_error {
public:
    ExprError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at column " + std::to_string(position + 1)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Recursive-descent parser for coefficient expressions:
///
///   expr    := term (('+' | '-') term)*
///   term    := factor (('*' | '/') factor)*
///   factor  := ('+' | '-') factor | primary ('^' digits)?
///   primary := digits | identifier | '(' expr ')'
///
/// Whitespace is insignificant. Division requires a nonzero constant
/// divisor (so "27/16*alpha^2" works and "1/0" is rejected); exponents are
/// nonnegative integer literals. Identifiers are parameter names.
class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    Polynomial parse() {
        Polynomial p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ExprError(message, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial parse_expr() {
        Polynomial acc = parse_term();
        while (true) {
            if (eat('+'))
                acc += parse_term();
            else if (eat('-'))
                acc -= parse_term();
            else
                return acc;
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (true) {
            if (eat('*')) {
                acc = acc * parse_factor();
            } else if (eat('/')) {
                std::size_t at = pos_;
                Polynomial divisor = parse_factor();
                if (!divisor.is_constant()) {
                    pos_ = at;
                    fail("divisor must be a constant");
                }
                if (divisor.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                acc = acc.divided_by(divisor.constant_value());
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_factor() {
        if (eat('-')) return -parse_factor();
        if (eat('+')) return parse_factor();
        Polynomial base = parse_primary();
        if (eat('^')) {
            skip_ws();
            std::size_t at = pos_;
            unsigned long e = 0;
            bool any = false;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
                if (e > 4096) {
                    pos_ = at;
                    fail("exponent too large");
                }
                ++pos_;
                any = true;
            }
            if (!any) fail("expected a nonnegative integer exponent");
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return Polynomial(Scalar(Integer(std::string(text_.substr(start, pos_ - start)), 10)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return Polynomial::variable(std::string(text_.substr(start, pos_ - start)));
        }
        if (c == '(') {
            ++pos_;
            Polynomial inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline Polynomial parse_coefficient(std::string_view text) { return ExprParser(text).parse(); }

}  // namespace liekit
