#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "poledefect/errors.hpp"

namespace poledefect {

inline constexpr std::uint32_t max_exponent = 0x7fffffffu;

/// Exponents of a monomial in m variables.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t m) : exps_(m, 0) {}
    ExponentVector(std::initializer_list<std::uint32_t> exps) : exps_(exps) { check(); }
    explicit ExponentVector(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) { check(); }

    static ExponentVector unit(std::size_t m, std::size_t j) {
        ExponentVector v(m);
        v.exps_.at(j) = 1;
        return v;
    }

    std::size_t size() const noexcept { return exps_.size(); }
    std::uint32_t operator[](std::size_t j) const { return exps_[j]; }
    std::span<const std::uint32_t> values() const noexcept { return exps_; }

    void set(std::size_t j, std::uint32_t e) {
        if (e > max_exponent) throw ExponentOverflowError("exponent exceeds 2^31-1");
        exps_.at(j) = e;
    }

    std::uint64_t degree() const noexcept {
        return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
    }

    /// Monomial product; throws ExponentOverflowError past 2^31-1.
    ExponentVector operator+(const ExponentVector& o) const {
        if (o.size() != size()) throw std::invalid_argument("exponent vectors of different length");
        ExponentVector r(size());
        for (std::size_t j = 0; j < size(); ++j) {
            std::uint64_t s = std::uint64_t{exps_[j]} + o.exps_[j];
            if (s > max_exponent) throw ExponentOverflowError("exponent exceeds 2^31-1");
            r.exps_[j] = static_cast<std::uint32_t>(s);
        }
        return r;
    }

    bool operator==(const ExponentVector&) const = default;
    auto operator<=>(const ExponentVector&) const = default;

    friend std::ostream& operator<<(std::ostream& os, const ExponentVector& v) {
        os << '(';
        for (std::size_t j = 0; j < v.size(); ++j) os << (j ? "," : "") << v.exps_[j];
        return os << ')';
    }

private:
    void check() const {
        for (auto e : exps_)
            if (e > max_exponent) throw ExponentOverflowError("exponent exceeds 2^31-1");
    }

    std::vector<std::uint32_t> exps_;
};

namespace detail {

/// C(n, k) for small k; throws on 64-bit overflow.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

} // namespace detail

/// Number of monomials of degree e in m variables: C(e+m-1, m-1), or 0 if e < 0.
inline std::uint64_t dim_graded(std::size_t m, std::int64_t e) {
    if (m == 0) throw std::invalid_argument("dim_graded needs at least one variable");
    if (e < 0) return 0;
    return detail::binomial(static_cast<std::uint64_t>(e) + m - 1, m - 1);
}

// Ranking within a graded piece: with r_i the sum of exponents i..m-1, the
// index is sum_{i=1}^{m-1} C(r_i + m-1-i, m-i). This agrees with the numbering
// of monomials used in the Singular and C listings (shifted to start at 0):
// x_0^e gets 0, x_{m-1}^e gets the last index.
inline std::uint64_t monomial_index(const ExponentVector& a) {
    const std::size_t m = a.size();
    std::uint64_t idx = 0;
    std::uint64_t r = a.degree();
    for (std::size_t i = 1; i < m; ++i) {
        r -= a[i - 1];
        idx += detail::binomial(r + (m - 1 - i), m - i);
    }
    return idx;
}

/// Inverse of monomial_index on the degree-e piece.
inline ExponentVector index_monomial(std::size_t m, std::int64_t e, std::uint64_t i) {
    if (i >= dim_graded(m, e))
        throw std::out_of_range("monomial index " + std::to_string(i) + " out of range for m=" +
                                std::to_string(m) + ", e=" + std::to_string(e));
    ExponentVector a(m);
    std::uint64_t r = static_cast<std::uint64_t>(e);
    for (std::size_t pos = 0; pos + 1 < m; ++pos) {
        const std::size_t rest = m - pos; // variables pos..m-1
        // Largest rr <= r with C(rr + rest-2, rest-1) <= i; rr is the degree left for pos+1..
        std::uint64_t rr = r;
        while (detail::binomial(rr + rest - 2, rest - 1) > i) --rr;
        i -= detail::binomial(rr + rest - 2, rest - 1);
        a.set(pos, static_cast<std::uint32_t>(r - rr));
        r = rr;
    }
    a.set(m - 1, static_cast<std::uint32_t>(r));
    return a;
}

/// Orders monomials by total degree, then by monomial_index within a degree.
struct GradedOrder {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        const auto da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        // monomial_index ascending == lexicographically descending exponents
        return std::lexicographical_compare(b.values().begin(), b.values().end(),
                                            a.values().begin(), a.values().end());
    }
};

/// Degree-e monomials in m variables, addressed by monomial_index.
class GradedBasis {
public:
    GradedBasis(std::size_t m, std::int64_t e) : m_(m), e_(e), size_(dim_graded(m, e)) {}

    std::size_t variables() const noexcept { return m_; }
    std::int64_t degree() const noexcept { return e_; }
    std::uint64_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    std::uint64_t index(const ExponentVector& a) const {
        if (a.size() != m_ || static_cast<std::int64_t>(a.degree()) != e_)
            throw std::invalid_argument("monomial not in this graded basis");
        return monomial_index(a);
    }
    ExponentVector monomial(std::uint64_t i) const { return index_monomial(m_, e_, i); }

    /// All monomials in index order.
    std::vector<ExponentVector> enumerate() const {
        std::vector<ExponentVector> out;
        out.reserve(size_);
        for (std::uint64_t i = 0; i < size_; ++i) out.push_back(monomial(i));
        return out;
    }

private:
    std::size_t m_;
    std::int64_t e_;
    std::uint64_t size_;
};

} // namespace poledefect
