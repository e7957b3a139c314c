#pragma once

// Rank over Z/p by Gaussian elimination.
//
// Columns are swept from last to first. In each column the pivot row is the
// candidate with the smallest entry (symmetric representative), ties broken
// by fewest nonzeros, then by row number. Rows are sparse until the active
// submatrix fills in past a density threshold; the remainder is then
// finished on a dense buffer.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "poledefect/sparse_matrix.hpp"

namespace poledefect {

struct ModularOptions {
    /// Switch to dense elimination once nnz exceeds this fraction of the active area.
    double dense_switch_density = 0.15;
    /// Areas smaller than this are never densified.
    std::size_t dense_switch_min_cells = 1 << 14;
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2u, 3u, 5u, 7u})
        if (n % q == 0) return n == q;
    for (std::uint64_t q = 11; q * q <= n; q += 2)
        if (n % q == 0) return false;
    return true;
}

namespace detail {

inline std::uint32_t reduce_mod(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

inline std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw std::domain_error("element not invertible modulo p");
    return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

/// x mod p for x < p*(p+1) and p < 2^31, via a precomputed reciprocal.
class Reducer {
public:
    explicit Reducer(std::uint32_t p) : p_(p), inv_(1.0 / static_cast<double>(p)) {}

    std::uint32_t operator()(std::uint64_t x) const {
        auto q = static_cast<std::uint64_t>(static_cast<double>(x) * inv_);
        auto r = static_cast<std::int64_t>(x - q * p_);
        if (r < 0) r += p_;
        else if (r >= static_cast<std::int64_t>(p_)) r -= p_;
        return static_cast<std::uint32_t>(r);
    }
    std::uint32_t prime() const noexcept { return p_; }

private:
    std::uint32_t p_;
    double inv_;
};

class ModularEliminator {
public:
    ModularEliminator(const SparseIntMatrix& a, std::uint32_t p, const ModularOptions& opt)
        : p_(p), red_(p), opt_(opt), cols_(a.cols()), rows_(a.rows()), col_rows_(a.cols()),
          active_(a.rows(), 1), stamp_(a.rows(), 0) {
        for (const auto& t : a.entries()) {
            std::uint32_t v = reduce_mod(t.value, p);
            if (v == 0) continue;
            rows_[t.row].push_back({t.col, v});
            col_rows_[t.col].push_back(t.row);
        }
        for (const auto& r : rows_) {
            if (!r.empty()) ++live_rows_;
            nnz_ += r.size();
        }
    }

    std::size_t run() {
        std::size_t rank = 0;
        std::vector<std::uint32_t> cand;
        for (std::size_t c = cols_; c-- > 0;) {
            cand.clear();
            for (std::uint32_t r : col_rows_[c]) {
                if (!active_[r] || rows_[r].empty() || rows_[r].back().col != c || stamp_[r] == c + 1) continue;
                stamp_[r] = static_cast<std::uint32_t>(c + 1);
                cand.push_back(r);
            }
            std::vector<std::uint32_t>().swap(col_rows_[c]);
            if (cand.empty()) continue;

            std::uint32_t piv = cand[0];
            for (std::uint32_t r : cand) {
                auto key = [&](std::uint32_t i) {
                    std::uint32_t v = rows_[i].back().val;
                    return std::tuple(std::min(v, p_ - v), rows_[i].size(), i);
                };
                if (key(r) < key(piv)) piv = r;
            }
            ++rank;
            active_[piv] = 0;
            --live_rows_;
            nnz_ -= rows_[piv].size();

            auto& prow = rows_[piv];
            const std::uint32_t inv = inverse_mod(prow.back().val, p_);
            prow.pop_back();
            for (auto& e : prow) e.val = red_(std::uint64_t{e.val} * inv);

            for (std::uint32_t r : cand) {
                if (r == piv) continue;
                eliminate(r, prow);
            }
            std::vector<Entry>().swap(prow);

            const double area = static_cast<double>(live_rows_) * static_cast<double>(c);
            if (c > 0 && area >= static_cast<double>(opt_.dense_switch_min_cells) &&
                static_cast<double>(nnz_) > opt_.dense_switch_density * area)
                return rank + dense_rank(c);
        }
        return rank;
    }

private:
    struct Entry {
        std::uint32_t col;
        std::uint32_t val;
    };

    // row[r] -= row[r][c] * pivot, where the pivot is normalized and has its
    // leading entry removed.
    void eliminate(std::uint32_t r, const std::vector<Entry>& pivot) {
        auto& row = rows_[r];
        const std::uint32_t factor = p_ - row.back().val;
        row.pop_back();
        const std::size_t before = row.size() + 1;
        scratch_.clear();
        scratch_.reserve(row.size() + pivot.size());
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < pivot.size()) {
            if (j == pivot.size() || (i < row.size() && row[i].col < pivot[j].col)) {
                scratch_.push_back(row[i++]);
            } else if (i == row.size() || pivot[j].col < row[i].col) {
                scratch_.push_back({pivot[j].col, red_(std::uint64_t{factor} * pivot[j].val)});
                col_rows_[pivot[j].col].push_back(r);
                ++j;
            } else {
                std::uint32_t v = red_(std::uint64_t{row[i].val} + std::uint64_t{factor} * pivot[j].val);
                if (v) scratch_.push_back({row[i].col, v});
                ++i;
                ++j;
            }
        }
        row.swap(scratch_);
        nnz_ = nnz_ - before + row.size();
        if (row.empty()) --live_rows_;
    }

    // Rank of the active rows restricted to columns [0, width).
    std::size_t dense_rank(std::size_t width) {
        std::vector<std::uint32_t> live;
        for (std::uint32_t r = 0; r < rows_.size(); ++r)
            if (active_[r] && !rows_[r].empty()) live.push_back(r);
        const std::size_t n = live.size();
        std::vector<std::uint32_t> buf(n * width, 0);
        for (std::size_t k = 0; k < n; ++k) {
            for (const auto& e : rows_[live[k]]) buf[k * width + e.col] = e.val;
            std::vector<Entry>().swap(rows_[live[k]]);
        }
        col_rows_.clear();

        std::size_t rank = 0;
        for (std::size_t c = width; c-- > 0 && rank < n;) {
            std::size_t pr = rank;
            while (pr < n && buf[pr * width + c] == 0) ++pr;
            if (pr == n) continue;
            if (pr != rank)
                std::swap_ranges(buf.begin() + pr * width, buf.begin() + pr * width + c + 1,
                                 buf.begin() + rank * width);
            std::uint32_t* prow = &buf[rank * width];
            const std::uint32_t inv = inverse_mod(prow[c], p_);
            for (std::size_t j = 0; j < c; ++j) prow[j] = red_(std::uint64_t{prow[j]} * inv);
            prow[c] = 1;
            for (std::size_t k = rank + 1; k < n; ++k) {
                std::uint32_t* row = &buf[k * width];
                if (row[c] == 0) continue;
                const std::uint64_t factor = p_ - row[c];
                row[c] = 0;
                for (std::size_t j = 0; j < c; ++j)
                    if (prow[j]) row[j] = red_(row[j] + factor * prow[j]);
            }
            ++rank;
        }
        return rank;
    }

    std::uint32_t p_;
    Reducer red_;
    ModularOptions opt_;
    std::size_t cols_;
    std::vector<std::vector<Entry>> rows_;
    std::vector<std::vector<std::uint32_t>> col_rows_;
    std::vector<char> active_;
    std::vector<std::uint32_t> stamp_;
    std::vector<Entry> scratch_;
    std::size_t live_rows_ = 0;
    std::size_t nnz_ = 0;
};

} // namespace detail

/// Rank of the matrix reduced mod p. Deterministic for a fixed (matrix, p).
inline std::size_t rank_mod_p(const SparseIntMatrix& a, std::uint32_t p, const ModularOptions& opt = {}) {
    if (!is_prime(p) || p > static_cast<std::uint32_t>(std::numeric_limits<std::int32_t>::max()))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^31");
    if (a.empty()) return 0;
    return detail::ModularEliminator(a, p, opt).run();
}

} // namespace poledefect
