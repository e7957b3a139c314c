#pragma once

// Term-list format: a stream of signed decimal integers, (m+1) per term in the
// order coefficient, e_0, ..., e_{m-1}, terminated by '/'. Any character that
// is not a digit, '-' or '/' separates numbers, so "3 (0,0,0,2,4)" reads the
// same as "3 0 0 0 2 4".

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "poledefect/errors.hpp"
#include "poledefect/expression.hpp"
#include "poledefect/polynomial.hpp"

namespace poledefect {

struct TermListOptions {
    std::vector<std::string> variables = default_variables();
    std::size_t max_terms = 100000;
};

inline Polynomial parse_term_list(std::string_view bytes, const TermListOptions& opts = {}) {
    Polynomial poly(opts.variables);
    const std::size_t m = poly.variable_count();
    const std::size_t per_term = m + 1;

    std::vector<Integer> fields;
    fields.reserve(per_term);
    std::size_t terms = 0;
    std::uint64_t degree = 0;
    std::size_t pos = 0;
    bool negative = false;

    auto flush_term = [&](std::size_t at) {
        ExponentVector a(m);
        for (std::size_t j = 0; j < m; ++j) {
            const Integer& e = fields[j + 1];
            if (e < 0) throw ParseError("negative exponent", at);
            if (e > max_exponent) throw ExponentOverflowError("exponent exceeds 2^31-1");
            a.set(j, static_cast<std::uint32_t>(e.get_ui()));
        }
        if (terms == 0) degree = a.degree();
        else if (a.degree() != degree)
            throw ParseError("Degree error: term " + std::to_string(terms + 1) + " has degree " +
                                 std::to_string(a.degree()) + ", expected " + std::to_string(degree),
                             at);
        if (++terms > opts.max_terms)
            throw ParseError("Too many monomials (limit " + std::to_string(opts.max_terms) + ")", at);
        poly.add_term(a, fields[0]);
        fields.clear();
    };

    while (pos < bytes.size()) {
        const char c = bytes[pos];
        if (c == '/') {
            if (!fields.empty() || negative)
                throw ParseError("premature end of stream: incomplete term before '/'", pos);
            return poly;
        }
        if (c == '-') {
            negative = true;
            ++pos;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos;
            while (pos < bytes.size() && std::isdigit(static_cast<unsigned char>(bytes[pos]))) ++pos;
            Integer v(std::string(bytes.substr(start, pos - start)));
            if (negative) v = -v;
            negative = false;
            fields.push_back(std::move(v));
            if (fields.size() == per_term) flush_term(start);
            continue;
        }
        ++pos;
    }
    throw ParseError("premature end of stream: missing '/' terminator", bytes.size());
}

/// Serializes in GradedOrder, one space between integers, then "/".
inline std::string emit_term_list(const Polynomial& poly) {
    std::string out;
    for (const auto& [a, c] : poly.terms()) {
        out += c.get_str();
        for (std::size_t j = 0; j < a.size(); ++j) {
            out += ' ';
            out += std::to_string(a[j]);
        }
        out += ' ';
    }
    out += '/';
    return out;
}

} // namespace poledefect
