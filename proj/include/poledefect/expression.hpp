#pragma once

// Recursive-descent parser for integer polynomial expressions:
//
//   EXPR   := ['-'] TERM (('+'|'-') TERM)*
//   TERM   := FACTOR ('*' FACTOR)*
//   FACTOR := ATOM ('^' INTEGER)*
//   ATOM   := INTEGER | VAR | '(' EXPR ')' | 'subst' '(' EXPR (',' VAR ',' EXPR)+ ')'
//
// subst(g, x, a, y, b) replaces x by a and y by b simultaneously.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "poledefect/errors.hpp"
#include "poledefect/polynomial.hpp"

namespace poledefect {

namespace detail {

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, const std::vector<std::string>& vars)
        : text_(text), vars_(vars) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but reached end of input");
            fail(std::string("expected '") + c + "'");
        }
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::string identifier() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Integer integer() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    std::size_t variable_index(const std::string& name, std::size_t at) const {
        for (std::size_t j = 0; j < vars_.size(); ++j)
            if (vars_[j] == name) return j;
        throw UnknownVariableError(name, at);
    }

    Polynomial expr() {
        bool negate = accept('-');
        Polynomial p = term();
        if (negate) p = -p;
        for (;;) {
            if (accept('+')) p += term();
            else if (accept('-')) p -= term();
            else return p;
        }
    }

    Polynomial term() {
        Polynomial p = factor();
        while (accept('*')) p *= factor();
        return p;
    }

    Polynomial factor() {
        Polynomial p = atom();
        while (accept('^')) {
            skip_space();
            std::size_t at = pos_;
            Integer e = integer();
            if (e > max_exponent) throw ExponentOverflowError("exponent at position " +
                                                              std::to_string(at) + " exceeds 2^31-1");
            p = p.pow(e.get_ui());
        }
        return p;
    }

    Polynomial atom() {
        char c = peek();
        if (c == '\0') fail("unexpected end of input");
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(vars_, integer());
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            expect(')');
            return p;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = pos_;
            std::string name = identifier();
            if (name == "subst" && peek() == '(') return subst();
            return Polynomial::variable(vars_, variable_index(name, at));
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    Polynomial subst() {
        expect('(');
        Polynomial body = expr();
        std::vector<Polynomial> values;
        std::vector<std::size_t> targets;
        values.reserve(vars_.size());
        do {
            expect(',');
            skip_space();
            std::size_t at = pos_;
            std::string name = identifier();
            if (name.empty()) fail("expected variable name in subst");
            targets.push_back(variable_index(name, at));
            expect(',');
            values.push_back(expr());
        } while (peek() == ',');
        expect(')');
        std::vector<const Polynomial*> table(vars_.size(), nullptr);
        for (std::size_t i = 0; i < targets.size(); ++i) table[targets[i]] = &values[i];
        return body.substitute(table);
    }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses and fully expands an expression over the given ordered variables.
inline Polynomial parse_expression(std::string_view text, const std::vector<std::string>& variables) {
    Polynomial ring(variables); // validates the names
    return detail::ExpressionParser(text, ring.variables()).parse();
}

inline std::vector<std::string> default_variables() { return {"x", "y", "z", "u", "v"}; }

} // namespace poledefect
