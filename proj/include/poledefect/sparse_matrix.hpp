#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace poledefect {

struct Triplet {
    std::uint32_t row;
    std::uint32_t col;
    std::int64_t value;

    bool operator==(const Triplet&) const = default;
};

/// Integer matrix in coordinate form, sorted by (row, col), no duplicates and
/// no stored zeros.
class SparseIntMatrix {
public:
    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) { check_shape(); }

    /// Sorts, sums duplicates and drops zeros.
    static SparseIntMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> entries) {
        SparseIntMatrix m(rows, cols);
        for (const auto& t : entries)
            if (t.row >= rows || t.col >= cols) throw std::out_of_range("triplet index out of range");
        std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
            return a.row != b.row ? a.row < b.row : a.col < b.col;
        });
        m.entries_.reserve(entries.size());
        for (const auto& t : entries) {
            if (!m.entries_.empty() && m.entries_.back().row == t.row && m.entries_.back().col == t.col) {
                if (__builtin_add_overflow(m.entries_.back().value, t.value, &m.entries_.back().value))
                    throw std::overflow_error("matrix entry exceeds 64 bits");
            } else {
                if (!m.entries_.empty() && m.entries_.back().value == 0) m.entries_.pop_back();
                m.entries_.push_back(t);
            }
        }
        if (!m.entries_.empty() && m.entries_.back().value == 0) m.entries_.pop_back();
        return m;
    }

    static SparseIntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r ? rows[0].size() : 0;
        std::vector<Triplet> t;
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("ragged dense matrix");
            for (std::size_t j = 0; j < c; ++j)
                if (rows[i][j] != 0)
                    t.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), rows[i][j]});
        }
        return from_triplets(r, c, std::move(t));
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nonzeros() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
    std::span<const Triplet> entries() const noexcept { return entries_; }

    std::int64_t at(std::size_t r, std::size_t c) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), Triplet{static_cast<std::uint32_t>(r),
                                                                            static_cast<std::uint32_t>(c), 0},
                                   [](const Triplet& a, const Triplet& b) {
                                       return a.row != b.row ? a.row < b.row : a.col < b.col;
                                   });
        return (it != entries_.end() && it->row == r && it->col == c) ? it->value : 0;
    }

    std::int64_t max_abs() const noexcept {
        std::int64_t m = 0;
        for (const auto& t : entries_) m = std::max(m, t.value < 0 ? -t.value : t.value);
        return m;
    }

    std::vector<std::vector<std::int64_t>> to_dense() const {
        std::vector<std::vector<std::int64_t>> d(rows_, std::vector<std::int64_t>(cols_, 0));
        for (const auto& t : entries_) d[t.row][t.col] = t.value;
        return d;
    }

    SparseIntMatrix transposed() const {
        std::vector<Triplet> t;
        t.reserve(entries_.size());
        for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
        return from_triplets(cols_, rows_, std::move(t));
    }

    bool operator==(const SparseIntMatrix&) const = default;

    /// Text dump: "rows cols nnz" header, then "row col value" per line.
    void write_triplets(std::ostream& os) const {
        os << rows_ << ' ' << cols_ << ' ' << entries_.size() << '\n';
        for (const auto& t : entries_) os << t.row << ' ' << t.col << ' ' << t.value << '\n';
    }

    static SparseIntMatrix read_triplets(std::istream& is) {
        std::size_t r = 0, c = 0, n = 0;
        if (!(is >> r >> c >> n)) throw std::runtime_error("bad triplet header");
        std::vector<Triplet> t;
        t.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            std::uint64_t i = 0, j = 0;
            std::int64_t v = 0;
            if (!(is >> i >> j >> v)) throw std::runtime_error("truncated triplet list");
            t.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), v});
        }
        return from_triplets(r, c, std::move(t));
    }

private:
    void check_shape() const {
        if (rows_ > UINT32_MAX || cols_ > UINT32_MAX) throw std::length_error("matrix too large");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Triplet> entries_;
};

} // namespace poledefect
