#pragma once

// Reference implementations used only as oracles. Each one takes a different
// route from the library code it checks.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "poledefect/poledefect.hpp"

namespace testing_support {

using poledefect::ExponentVector;
using poledefect::Polynomial;
using poledefect::SparseIntMatrix;

/// (sum of variables)^k, minus the pure powers if requested, by enumerating
/// all ordered k-tuples of variables.
inline std::map<std::vector<std::uint32_t>, long> expand_power_sum(std::size_t m, unsigned k, bool drop_pure) {
    std::map<std::vector<std::uint32_t>, long> out;
    std::vector<std::size_t> pick(k, 0);
    for (;;) {
        std::vector<std::uint32_t> e(m, 0);
        for (auto j : pick) ++e[j];
        ++out[e];
        std::size_t pos = 0;
        while (pos < k && ++pick[pos] == m) pick[pos++] = 0;
        if (pos == k) break;
    }
    if (drop_pure)
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<std::uint32_t> e(m, 0);
            e[j] = k;
            if (--out[e] == 0) out.erase(e);
        }
    return out;
}

inline std::map<std::vector<std::uint32_t>, mpz_class> term_table(const Polynomial& p) {
    std::map<std::vector<std::uint32_t>, mpz_class> out;
    for (const auto& [a, c] : p.terms()) out[{a.values().begin(), a.values().end()}] = c;
    return out;
}

/// Rank mod p by textbook dense row reduction, top-left to bottom-right.
inline std::size_t dense_rank_mod_p(const SparseIntMatrix& a, std::uint64_t p) {
    auto d = a.to_dense();
    std::vector<std::vector<std::uint64_t>> m(a.rows(), std::vector<std::uint64_t>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            long long v = d[i][j] % static_cast<long long>(p);
            m[i][j] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<long long>(p) : v);
        }
    auto power = [p](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < a.rows() && m[piv][c] == 0) ++piv;
        if (piv == a.rows()) continue;
        std::swap(m[piv], m[rank]);
        const std::uint64_t inv = power(m[rank][c], p - 2); // Fermat
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == rank || m[i][c] == 0) continue;
            const std::uint64_t f = m[i][c] * inv % p;
            for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = (m[i][j] + (p - f) * m[rank][j]) % p;
        }
        ++rank;
    }
    return rank;
}

/// Rank over Q with rational Gauss-Jordan elimination.
inline std::size_t rational_rank(const SparseIntMatrix& a) {
    auto d = a.to_dense();
    std::vector<std::vector<mpq_class>> m(a.rows(), std::vector<mpq_class>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = mpq_class(static_cast<long>(d[i][j]));
    std::size_t rank = 0;
    for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < a.rows() && m[piv][c] == 0) ++piv;
        if (piv == a.rows()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == rank || m[i][c] == 0) continue;
            const mpq_class f = m[i][c] / m[rank][c];
            for (std::size_t j = c; j < a.cols(); ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline SparseIntMatrix random_sparse(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density,
                                     int magnitude) {
    std::bernoulli_distribution keep(density);
    std::uniform_int_distribution<int> value(-magnitude, magnitude);
    std::vector<poledefect::Triplet> t;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (keep(rng)) t.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), value(rng)});
    return SparseIntMatrix::from_triplets(rows, cols, std::move(t));
}

/// Random product of two random matrices: rank at most `inner`.
inline SparseIntMatrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t inner) {
    auto l = random_sparse(rng, rows, inner, 0.5, 3).to_dense();
    auto r = random_sparse(rng, inner, cols, 0.5, 3).to_dense();
    std::vector<std::vector<std::int64_t>> p(rows, std::vector<std::int64_t>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < cols; ++j) p[i][j] += l[i][k] * r[k][j];
    return SparseIntMatrix::from_dense(p);
}

inline Polynomial random_polynomial(std::mt19937_64& rng, const std::vector<std::string>& vars, std::size_t terms,
                                    unsigned max_exp) {
    Polynomial p(vars);
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    std::uniform_int_distribution<int> coeff(-20, 20);
    for (std::size_t t = 0; t < terms; ++t) {
        ExponentVector a(vars.size());
        for (std::size_t j = 0; j < vars.size(); ++j) a.set(j, exp(rng));
        p.add_term(a, coeff(rng));
    }
    return p;
}

inline Polynomial random_form(std::mt19937_64& rng, const std::vector<std::string>& vars, std::size_t terms,
                              unsigned degree) {
    Polynomial p(vars);
    const auto size = poledefect::dim_graded(vars.size(), degree);
    std::uniform_int_distribution<std::uint64_t> pick(0, size - 1);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (std::size_t t = 0; t < terms; ++t) p.add_term(poledefect::index_monomial(vars.size(), degree, pick(rng)), coeff(rng));
    return p;
}

inline SparseIntMatrix permuted(const SparseIntMatrix& a, const std::vector<std::uint32_t>& row_perm,
                                const std::vector<std::uint32_t>& col_perm, const std::vector<int>& row_sign) {
    std::vector<poledefect::Triplet> t;
    for (const auto& e : a.entries()) t.push_back({row_perm[e.row], col_perm[e.col], row_sign[e.row] * e.value});
    return SparseIntMatrix::from_triplets(a.rows(), a.cols(), std::move(t));
}

} // namespace testing_support
