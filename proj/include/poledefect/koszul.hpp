#pragma once

// Matrices of the map (w, w') -> (df^w, dw + df^w') on top forms.
//
// A top-degree-minus-one form is written in the contraction basis as
// sum_j g_j * (dx_0 ^ ... ^ (dx_j omitted) ^ ... ^ dx_{m-1}), so a row is
// addressed by (component j, monomial of g_j). Both df^ and d then act on
// component j by multiplication with df/dx_j resp. by d/dx_j, up to signs.
// Signs only rescale rows and cannot change any rank, so they are dropped.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "poledefect/monomials.hpp"
#include "poledefect/polynomial.hpp"
#include "poledefect/sparse_matrix.hpp"

namespace poledefect {

struct PhiDegrees {
    std::size_t m = 0;
    unsigned d = 0;
    unsigned kk = 0;
    std::int64_t lower_source = 0; // coefficient degree of the A rows
    std::int64_t upper_source = 0; // coefficient degree of the B and Dm rows
    std::int64_t lower_target = 0; // columns of A and Dm
    std::int64_t upper_target = 0; // columns of B
};

/// [[A, 0], [Dm, B]] with its blocks.
struct PhiBlocks {
    SparseIntMatrix A;
    SparseIntMatrix B;
    SparseIntMatrix Dm;
    SparseIntMatrix full;
    PhiDegrees degrees;
};

namespace detail {

inline std::int64_t checked_coefficient(const Integer& c) {
    if (!c.fits_slong_p()) throw std::overflow_error("polynomial coefficient does not fit a matrix entry");
    return c.get_si();
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("matrix entry exceeds 64 bits");
    return r;
}

} // namespace detail

/// df^ on coefficient degree e: row j*dim(e) + idx(a), column idx(a + t - unit_j),
/// accumulating t_j * c_t for every term c_t x^t of f with t_j > 0.
inline SparseIntMatrix build_wedge_block(const HomogeneousForm& f, std::int64_t e) {
    const std::size_t m = f.variable_count();
    const std::int64_t target = e + static_cast<std::int64_t>(f.degree()) - 1;
    const std::uint64_t src = dim_graded(m, e);
    const std::uint64_t cols = dim_graded(m, target);
    const std::uint64_t rows = m * src;
    if (rows == 0) return SparseIntMatrix(0, cols);

    struct Term {
        ExponentVector exps;
        std::int64_t coeff;
    };
    std::vector<Term> terms;
    terms.reserve(f.poly().size());
    for (const auto& [t, c] : f.poly().terms()) terms.push_back({t, detail::checked_coefficient(c)});

    std::vector<Triplet> entries;
    entries.reserve(rows * terms.size() / 2 + 1);
    const GradedBasis basis(m, e);
    for (std::uint64_t i = 0; i < src; ++i) {
        const ExponentVector a = basis.monomial(i);
        for (const auto& term : terms) {
            const ExponentVector shifted = a + term.exps;
            for (std::size_t j = 0; j < m; ++j) {
                const std::uint32_t tj = term.exps[j];
                if (tj == 0) continue;
                ExponentVector b = shifted;
                b.set(j, shifted[j] - 1);
                entries.push_back({static_cast<std::uint32_t>(j * src + i),
                                   static_cast<std::uint32_t>(monomial_index(b)),
                                   detail::checked_mul(tj, term.coeff)});
            }
        }
    }
    return SparseIntMatrix::from_triplets(rows, cols, std::move(entries));
}

/// d on coefficient degree e: row j*dim(e) + idx(a) gets a_j at column idx(a - unit_j).
inline SparseIntMatrix build_derivative_block(std::size_t m, std::int64_t e) {
    const std::uint64_t src = dim_graded(m, e);
    const std::uint64_t cols = dim_graded(m, e - 1);
    const std::uint64_t rows = m * src;
    std::vector<Triplet> entries;
    if (cols == 0 || rows == 0) return SparseIntMatrix(rows, cols);
    entries.reserve(rows);
    const GradedBasis basis(m, e);
    for (std::uint64_t i = 0; i < src; ++i) {
        const ExponentVector a = basis.monomial(i);
        for (std::size_t j = 0; j < m; ++j) {
            if (a[j] == 0) continue;
            ExponentVector b = a;
            b.set(j, a[j] - 1);
            entries.push_back({static_cast<std::uint32_t>(j * src + i),
                               static_cast<std::uint32_t>(monomial_index(b)), static_cast<std::int64_t>(a[j])});
        }
    }
    return SparseIntMatrix::from_triplets(rows, cols, std::move(entries));
}

/// Source coefficient degrees for the grading kk*d: (kk-2)d-(m-1) and (kk-1)d-(m-1).
inline PhiDegrees phi_degrees(std::size_t m, unsigned d, unsigned kk) {
    if (kk < 2) throw std::invalid_argument("page-degree multiplier must be at least 2");
    PhiDegrees g;
    g.m = m;
    g.d = d;
    g.kk = kk;
    const auto D = static_cast<std::int64_t>(d);
    const auto M = static_cast<std::int64_t>(m);
    g.lower_source = (static_cast<std::int64_t>(kk) - 2) * D - (M - 1);
    g.upper_source = g.lower_source + D;
    g.lower_target = g.lower_source + D - 1;
    g.upper_target = g.upper_source + D - 1;
    return g;
}

inline PhiBlocks assemble_phi(const HomogeneousForm& f, unsigned kk) {
    PhiBlocks phi;
    phi.degrees = phi_degrees(f.variable_count(), f.degree(), kk);
    const auto& g = phi.degrees;
    phi.A = build_wedge_block(f, g.lower_source);
    phi.B = build_wedge_block(f, g.upper_source);
    phi.Dm = build_derivative_block(g.m, g.upper_source);

    if (phi.Dm.cols() != phi.A.cols() || phi.Dm.rows() != phi.B.rows())
        throw std::logic_error("phi blocks have inconsistent shapes");

    const std::size_t top = phi.A.rows();
    const std::size_t left = phi.A.cols();
    std::vector<Triplet> all;
    all.reserve(phi.A.nonzeros() + phi.B.nonzeros() + phi.Dm.nonzeros());
    for (const auto& t : phi.A.entries()) all.push_back(t);
    for (const auto& t : phi.Dm.entries())
        all.push_back({static_cast<std::uint32_t>(t.row + top), t.col, t.value});
    for (const auto& t : phi.B.entries())
        all.push_back({static_cast<std::uint32_t>(t.row + top), static_cast<std::uint32_t>(t.col + left), t.value});
    phi.full = SparseIntMatrix::from_triplets(top + phi.B.rows(), left + phi.B.cols(), std::move(all));
    return phi;
}

} // namespace poledefect
