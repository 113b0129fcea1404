#pragma once

// Text form of classes on P(T_X).
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*')? unary)*        juxtaposition multiplies
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' INT)?
//   primary := NUMBER ('/' NUMBER)? | SYMBOL | '(' expr ')'
//
// Symbols: z (tautological class), any basis symbol of the profile, and K
// (the canonical class -c_1) unless the basis already names a K.
// Error positions are 1-based character columns.

#include "tanpos/profile.hpp"
#include "tanpos/pt_class.hpp"
#include "tanpos/rational.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tanpos {

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error("syntax error at offset " + std::to_string(position) + ": " + what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

class ExprParser {
public:
    ExprParser(const BaseProfile& profile, std::string_view text) : profile_(profile), text_(text) {}

    PTClass parse() {
        PTClass value = expr();
        skip_space();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return value;
    }

private:
    PTClass expr() {
        PTClass acc = term();
        for (;;) {
            skip_space();
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    PTClass term() {
        PTClass acc = unary();
        for (;;) {
            skip_space();
            if (peek('*')) {
                ++pos_;
                acc = acc * unary();
            } else if (pos_ < text_.size() && starts_primary(text_[pos_])) {
                acc = acc * unary();
            } else {
                return acc;
            }
        }
    }

    PTClass unary() {
        skip_space();
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    PTClass power() {
        PTClass base = primary();
        skip_space();
        if (!peek('^')) return base;
        ++pos_;
        skip_space();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected non-negative integer exponent");
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 4) fail("exponent too large", start);
        return base.power(static_cast<unsigned>(std::stoul(digits)));
    }

    PTClass primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            PTClass inner = expr();
            skip_space();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return PTClass::constant(profile_, number());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return symbol();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Rational number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (peek('/')) {
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected denominator");
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
        try {
            return parse_rational(text_.substr(start, pos_ - start));
        } catch (const Error& e) {
            fail(e.what(), start);
        }
    }

    PTClass symbol() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        if (profile_.has_symbol(name)) return PTClass::pullback(profile_, name);
        if (name == "z") return PTClass::zeta(profile_);
        if (name == "K") return PTClass::pullback(profile_, profile_.canonical());
        fail("unknown symbol '" + name + "' for profile " + profile_.label, start);
    }

    static bool starts_primary(char c) {
        return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
    [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(at + 1, what); }

    const BaseProfile& profile_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline PTClass parse_expr(const BaseProfile& profile, std::string_view text) {
    return detail::ExprParser(profile, text).parse();
}

/// Canonical text: terms by descending power of z, then descending base
/// monomial; integer coefficients juxtaposed ("3z - H"), fractional ones
/// parenthesised ("(4/3)H"). Output parses back to the same class.
inline std::string to_string(const PTClass& cls, const BaseProfile& profile) {
    if (cls.nvars() != profile.nvars()) throw Error("class does not match profile symbols");
    if (cls.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = cls.terms().rbegin(); it != cls.terms().rend(); ++it) {
        const auto& [key, raw] = *it;
        std::vector<std::string> factors;
        if (key.first > 0) factors.push_back(key.first == 1 ? "z" : "z^" + std::to_string(key.first));
        for (std::size_t i = 0; i < key.second.size(); ++i) {
            int e = key.second[i];
            if (e == 0) continue;
            factors.push_back(e == 1 ? profile.basis[i] : profile.basis[i] + "^" + std::to_string(e));
        }
        std::string mono;
        for (std::size_t i = 0; i < factors.size(); ++i) mono += (i ? "*" : "") + factors[i];

        const bool negative = raw < 0;
        const Rational mag = negative ? Rational(-raw) : raw;
        std::string coeff;
        if (mono.empty()) {
            coeff = to_string(mag);
        } else if (mag != 1) {
            coeff = is_integer(mag) ? to_string(mag) : "(" + to_string(mag) + ")";
        }
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        out += coeff + mono;
        first = false;
    }
    return out;
}

}  // namespace tanpos
