#pragma once

// Rank over Q by fraction-free elimination on sparse integer rows.
// A row r is reduced against the pivot row q at column c as
//   r <- (q_c / g) r - (r_c / g) q,  g = gcd(q_c, r_c),
// and then divided by its content, so entries stay primitive.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "poledefect/errors.hpp"
#include "poledefect/sparse_matrix.hpp"

namespace poledefect {

struct ExactBudget {
    /// Largest rows*cols accepted at all.
    std::uint64_t max_cells = 20'000'000;
    /// Abort once the working rows hold more nonzeros than this.
    std::uint64_t max_nonzeros = 20'000'000;
};

namespace detail {

class ExactEliminator {
public:
    ExactEliminator(const SparseIntMatrix& a, const ExactBudget& budget)
        : budget_(budget), cols_(a.cols()), rows_(a.rows()), col_rows_(a.cols()), active_(a.rows(), 1),
          stamp_(a.rows(), 0) {
        for (const auto& t : a.entries()) {
            rows_[t.row].push_back({t.col, mpz_class(static_cast<long>(t.value))});
            col_rows_[t.col].push_back(t.row);
        }
        for (const auto& r : rows_) nnz_ += r.size();
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
                int cmp = mpz_cmpabs(rows_[r].back().val.get_mpz_t(), rows_[piv].back().val.get_mpz_t());
                if (cmp < 0 || (cmp == 0 && std::tuple(rows_[r].size(), r) < std::tuple(rows_[piv].size(), piv)))
                    piv = r;
            }
            ++rank;
            active_[piv] = 0;
            nnz_ -= rows_[piv].size();

            for (std::uint32_t r : cand) {
                if (r == piv) continue;
                eliminate(r, rows_[piv]);
                if (nnz_ > budget_.max_nonzeros)
                    throw BudgetExceededError("exact elimination exceeded " +
                                              std::to_string(budget_.max_nonzeros) + " working nonzeros");
            }
            std::vector<Entry>().swap(rows_[piv]);
        }
        return rank;
    }

private:
    struct Entry {
        std::uint32_t col;
        mpz_class val;
    };

    void eliminate(std::uint32_t r, const std::vector<Entry>& pivot) {
        auto& row = rows_[r];
        const mpz_class& pc = pivot.back().val;
        mpz_class rc = row.back().val;
        row.pop_back();
        mpz_gcd(g_.get_mpz_t(), pc.get_mpz_t(), rc.get_mpz_t());
        const mpz_class a = pc / g_;  // multiplies row
        const mpz_class b = rc / g_;  // multiplies pivot
        const std::size_t before = row.size() + 1;

        scratch_.clear();
        scratch_.reserve(row.size() + pivot.size());
        std::size_t i = 0, j = 0;
        const std::size_t pn = pivot.size() - 1; // skip leading entry
        while (i < row.size() || j < pn) {
            if (j == pn || (i < row.size() && row[i].col < pivot[j].col)) {
                scratch_.push_back({row[i].col, a * row[i].val});
                ++i;
            } else if (i == row.size() || pivot[j].col < row[i].col) {
                scratch_.push_back({pivot[j].col, -b * pivot[j].val});
                col_rows_[pivot[j].col].push_back(r);
                ++j;
            } else {
                mpz_class v = a * row[i].val - b * pivot[j].val;
                if (v != 0) scratch_.push_back({row[i].col, std::move(v)});
                ++i;
                ++j;
            }
        }
        if (!scratch_.empty()) {
            mpz_class content = 0;
            for (const auto& e : scratch_) {
                mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), e.val.get_mpz_t());
                if (content == 1) break;
            }
            if (content != 1)
                for (auto& e : scratch_) mpz_divexact(e.val.get_mpz_t(), e.val.get_mpz_t(), content.get_mpz_t());
        }
        row.swap(scratch_);
        nnz_ = nnz_ - before + row.size();
    }

    ExactBudget budget_;
    std::size_t cols_;
    std::vector<std::vector<Entry>> rows_;
    std::vector<std::vector<std::uint32_t>> col_rows_;
    std::vector<char> active_;
    std::vector<std::uint32_t> stamp_;
    std::vector<Entry> scratch_;
    mpz_class g_;
    std::size_t nnz_ = 0;
};

} // namespace detail

/// Exact rank over the rationals. Throws BudgetExceededError when the matrix
/// or its fill-in exceeds the budget.
inline std::size_t rank_exact(const SparseIntMatrix& a, const ExactBudget& budget = {}) {
    if (a.empty()) return 0;
    if (static_cast<std::uint64_t>(a.rows()) * a.cols() > budget.max_cells)
        throw BudgetExceededError("matrix of size " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                  " exceeds the exact-rank budget of " + std::to_string(budget.max_cells) +
                                  " cells");
    return detail::ExactEliminator(a, budget).run();
}

} // namespace poledefect
