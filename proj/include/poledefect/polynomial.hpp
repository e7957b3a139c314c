#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "poledefect/errors.hpp"
#include "poledefect/monomials.hpp"

namespace poledefect {

using Integer = mpz_class;

/// Sparse multivariate polynomial over the integers. Terms are kept in
/// GradedOrder and zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<ExponentVector, Integer, GradedOrder>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {
        std::set<std::string> seen;
        if (vars_.empty()) throw std::invalid_argument("polynomial ring needs at least one variable");
        for (const auto& v : vars_)
            if (v.empty() || !seen.insert(v).second)
                throw std::invalid_argument("variable names must be distinct and non-empty");
    }

    static Polynomial constant(const std::vector<std::string>& vars, const Integer& c) {
        Polynomial p(vars);
        p.add_term(ExponentVector(vars.size()), c);
        return p;
    }
    static Polynomial variable(const std::vector<std::string>& vars, std::size_t j) {
        Polynomial p(vars);
        p.add_term(ExponentVector::unit(vars.size(), j), 1);
        return p;
    }

    const std::vector<std::string>& variables() const noexcept { return vars_; }
    std::size_t variable_count() const noexcept { return vars_.size(); }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Integer coefficient(const ExponentVector& a) const {
        auto it = terms_.find(a);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    /// Adds c·x^a, dropping the term if it cancels.
    void add_term(const ExponentVector& a, const Integer& c) {
        if (a.size() != vars_.size())
            throw std::invalid_argument("exponent vector length does not match variable count");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(a, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [a, c] : r.terms_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        same_ring(o);
        for (const auto& [a, c] : o.terms_) add_term(a, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        same_ring(o);
        for (const auto& [a, c] : o.terms_) add_term(a, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.same_ring(b);
        Polynomial r(a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(std::uint64_t n) const {
        Polynomial result = constant(vars_, 1);
        Polynomial base = *this;
        while (n) {
            if (n & 1) result *= base;
            n >>= 1;
            if (n) base *= base;
        }
        return result;
    }

    /// Simultaneous substitution: variable j is replaced by replacement[j]
    /// when present, otherwise kept.
    Polynomial substitute(const std::vector<const Polynomial*>& replacement) const {
        if (replacement.size() != vars_.size())
            throw std::invalid_argument("substitution table has wrong length");
        Polynomial r(vars_);
        // Powers of each replacement, built on demand.
        std::vector<std::vector<Polynomial>> powers(vars_.size());
        auto power_of = [&](std::size_t j, std::uint32_t e) -> const Polynomial& {
            auto& cache = powers[j];
            if (cache.empty()) cache.push_back(constant(vars_, 1));
            while (cache.size() <= e) cache.push_back(cache.back() * *replacement[j]);
            return cache[e];
        };
        for (const auto& [a, c] : terms_) {
            ExponentVector kept(vars_.size());
            Polynomial term = constant(vars_, c);
            for (std::size_t j = 0; j < vars_.size(); ++j) {
                if (a[j] == 0) continue;
                if (replacement[j]) term *= power_of(j, a[j]);
                else kept.set(j, a[j]);
            }
            for (const auto& [b, cb] : term.terms_) r.add_term(b + kept, cb);
        }
        return r;
    }

    bool operator==(const Polynomial& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [a, c] : terms_) {
            Integer mag = abs(c);
            os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
            bool constant_term = a.degree() == 0;
            if (mag != 1 || constant_term) os << mag.get_str();
            bool need_star = mag != 1;
            for (std::size_t j = 0; j < a.size(); ++j) {
                if (a[j] == 0) continue;
                os << (need_star ? "*" : "") << vars_[j];
                if (a[j] > 1) os << '^' << a[j];
                need_star = true;
            }
            first = false;
        }
        return os.str();
    }

private:
    void same_ring(const Polynomial& o) const {
        if (vars_ != o.vars_) throw std::invalid_argument("polynomials live in different rings");
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Exact formal derivative with respect to variable j.
inline Polynomial partial_derivative(const Polynomial& f, std::size_t j) {
    if (j >= f.variable_count()) throw std::out_of_range("variable index out of range");
    Polynomial r(f.variables());
    for (const auto& [a, c] : f.terms()) {
        if (a[j] == 0) continue;
        ExponentVector b = a;
        b.set(j, a[j] - 1);
        r.add_term(b, c * a[j]);
    }
    return r;
}

/// Returns the common total degree of all terms.
inline unsigned check_homogeneous(const Polynomial& f) {
    if (f.is_zero()) throw ZeroPolynomialError();
    const auto& first = *f.terms().begin();
    const auto d = first.first.degree();
    for (const auto& term : f.terms()) {
        if (term.first.degree() != d) {
            std::ostringstream os;
            os << "polynomial is not homogeneous: term " << first.second.get_str() << "*x^"
               << first.first << " has degree " << d << " but term " << term.second.get_str()
               << "*x^" << term.first << " has degree " << term.first.degree();
            throw NonHomogeneousError(os.str());
        }
    }
    if (d > std::numeric_limits<unsigned>::max()) throw std::overflow_error("degree too large");
    return static_cast<unsigned>(d);
}

/// A nonzero homogeneous polynomial with its degree.
class HomogeneousForm {
public:
    explicit HomogeneousForm(Polynomial p) : poly_(std::move(p)), degree_(check_homogeneous(poly_)) {
        if (degree_ == 0) throw NonHomogeneousError("constant polynomial is not a form of positive degree");
    }

    const Polynomial& poly() const noexcept { return poly_; }
    unsigned degree() const noexcept { return degree_; }
    std::size_t variable_count() const noexcept { return poly_.variable_count(); }

private:
    Polynomial poly_;
    unsigned degree_;
};

} // namespace poledefect
