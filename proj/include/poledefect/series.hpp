#pragma once

// Euler characteristic and primitive Hodge numbers of a smooth degree-d
// hypersurface in P^{n+1}, read off as coefficients of
//   d t (1+t)^{n+2} / (1 + d t)        at t^{n+1}
//   ((t - t^d) / (1 - t))^{n+2}         at t^{(p+1) d}
// All arithmetic is on exact integer truncated series.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace poledefect {

/// Power series truncated after t^order, integer coefficients.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order) : c_(order + 1, 0) {}
    TruncatedSeries(std::size_t order, const std::vector<mpz_class>& coeffs) : c_(order + 1, 0) {
        for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i) c_[i] = coeffs[i];
    }

    std::size_t order() const noexcept { return c_.size() - 1; }
    const mpz_class& operator[](std::size_t i) const { return c_.at(i); }
    mpz_class& operator[](std::size_t i) { return c_.at(i); }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        TruncatedSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    TruncatedSeries pow(std::size_t e) const {
        TruncatedSeries r(order());
        r.c_[0] = 1;
        for (std::size_t i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    /// 1/(1 + a t) = sum (-a)^k t^k.
    static TruncatedSeries geometric(std::size_t order, const mpz_class& a) {
        TruncatedSeries r(order);
        mpz_class term = 1;
        for (std::size_t k = 0; k <= order; ++k) {
            r.c_[k] = term;
            term *= -a;
        }
        return r;
    }

private:
    std::vector<mpz_class> c_;
};

inline mpz_class smooth_euler(unsigned n, unsigned d) {
    if (n < 1 || d < 1) throw std::invalid_argument("smooth_euler needs n >= 1 and d >= 1");
    const std::size_t order = n + 1;
    TruncatedSeries one_plus_t(order, {1, 1});
    TruncatedSeries dt(order, {0, d});
    auto s = dt * one_plus_t.pow(n + 2) * TruncatedSeries::geometric(order, d);
    return s[order];
}

/// Coefficient of t^k in ((t - t^d)/(1 - t))^m, i.e. of (t + ... + t^{d-1})^m.
inline mpz_class primitive_series_coefficient(std::size_t m, unsigned d, std::size_t k) {
    if (d < 1) throw std::invalid_argument("degree must be positive");
    std::vector<mpz_class> base(d, 0);
    for (unsigned i = 1; i < d; ++i) base[i] = 1;
    TruncatedSeries s(k, base);
    return s.pow(m)[k];
}

inline mpz_class smooth_hodge_prim(unsigned n, unsigned d, unsigned p) {
    if (n < 1 || d < 1) throw std::invalid_argument("smooth_hodge_prim needs n >= 1 and d >= 1");
    if (p > n) throw std::out_of_range("Hodge index must lie in [0, n]");
    return primitive_series_coefficient(n + 2, d, static_cast<std::size_t>(p + 1) * d);
}

struct SmoothFiberInvariants {
    unsigned n = 0;
    unsigned d = 0;
    mpz_class euler;
    std::vector<mpz_class> hodge_prim; // index p = 0..n

    static SmoothFiberInvariants compute(unsigned n, unsigned d) {
        SmoothFiberInvariants s;
        s.n = n;
        s.d = d;
        s.euler = smooth_euler(n, d);
        for (unsigned p = 0; p <= n; ++p) s.hodge_prim.push_back(smooth_hodge_prim(n, d, p));
        return s;
    }

    bool symmetric() const {
        for (std::size_t p = 0; p < hodge_prim.size(); ++p)
            if (hodge_prim[p] != hodge_prim[hodge_prim.size() - 1 - p]) return false;
        return true;
    }

    /// b_n: the primitive part plus the hyperplane class when n is even.
    mpz_class middle_betti() const {
        mpz_class s = n % 2 == 0 ? 1 : 0;
        for (const auto& h : hodge_prim) s += h;
        return s;
    }
};

} // namespace poledefect
