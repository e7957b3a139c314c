#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "poledefect/errors.hpp"
#include "poledefect/koszul.hpp"
#include "poledefect/monomials.hpp"
#include "poledefect/polynomial.hpp"
#include "poledefect/rank.hpp"
#include "poledefect/series.hpp"

namespace poledefect {

struct BlockSummary {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t nonzeros = 0;
    RankReport rank;
};

/// Dimension data of the E_2 term at grading kk*d.
struct E2Report {
    unsigned kk = 0;
    PhiDegrees degrees;
    BlockSummary A, B, full;
    std::int64_t mu = 0;      // dim R_{kk d - m} - rk B
    std::int64_t gamma = 0;   // coefficient of t^{(kk-1) d} in ((t - t^d)/(1 - t))^m
    std::int64_t nu = 0;      // mu - gamma
    std::int64_t rank_d1 = 0; // rk full - rk A - rk B
    std::int64_t dim_n2 = 0;  // nu - rank_d1
    std::vector<std::string> warnings;
};

struct DefectReport {
    std::size_t m = 0;
    unsigned d = 0;
    std::size_t terms = 0;
    E2Report e2;
    std::int64_t mu2 = 0; // dim R_{2d - m} - rk A
    std::int64_t defect = 0;
    std::vector<std::string> hypotheses;
    std::vector<std::string> warnings;
};

namespace detail {

inline std::int64_t to_int64(const mpz_class& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("invariant does not fit in 64 bits");
    return v.get_si();
}

inline std::int64_t to_int64(std::uint64_t v) {
    if (v > static_cast<std::uint64_t>(INT64_MAX)) throw std::overflow_error("invariant does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

inline BlockSummary summarize(const SparseIntMatrix& m, const RankConfig& cfg) {
    return {m.rows(), m.cols(), m.nonzeros(), rank_multimodular(m, cfg)};
}

inline void note_disagreement(const char* name, const BlockSummary& b, std::vector<std::string>& warnings) {
    if (!b.rank.agreed) warnings.push_back(std::string("ranks of ") + name + " differ between primes");
    if (b.rank.exact_rank && !b.rank.certified)
        warnings.push_back(std::string("modular rank of ") + name + " does not match its exact rank");
}

} // namespace detail

inline E2Report e2_piece(const HomogeneousForm& f, unsigned kk, const RankConfig& cfg = {}) {
    const std::size_t m = f.variable_count();
    if (m < 3) throw WrongVariableCountError("at least 3 variables are required");
    const PhiBlocks phi = assemble_phi(f, kk);

    E2Report r;
    r.kk = kk;
    r.degrees = phi.degrees;
    r.A = detail::summarize(phi.A, cfg);
    r.B = detail::summarize(phi.B, cfg);
    r.full = detail::summarize(phi.full, cfg);

    const auto rkA = detail::to_int64(std::uint64_t{r.A.rank.value()});
    const auto rkB = detail::to_int64(std::uint64_t{r.B.rank.value()});
    const auto rkF = detail::to_int64(std::uint64_t{r.full.rank.value()});
    const auto d = static_cast<std::int64_t>(f.degree());
    const auto M = static_cast<std::int64_t>(m);

    r.mu = detail::to_int64(dim_graded(m, static_cast<std::int64_t>(kk) * d - M)) - rkB;
    r.gamma = detail::to_int64(primitive_series_coefficient(m, f.degree(), (kk - 1) * f.degree()));
    r.nu = r.mu - r.gamma;
    r.rank_d1 = rkF - rkA - rkB;
    r.dim_n2 = r.nu - r.rank_d1;

    detail::note_disagreement("A", r.A, r.warnings);
    detail::note_disagreement("B", r.B, r.warnings);
    detail::note_disagreement("full", r.full, r.warnings);
    if (r.rank_d1 < 0) r.warnings.push_back("rank(full) < rank(A) + rank(B): some prime is bad for this input");
    if (r.dim_n2 < 0) r.warnings.push_back("negative E2 dimension: hypotheses on the singularities likely fail");
    return r;
}

/// def(X) for a hypersurface in P^4 (five variables), as dim N^(2) at grading 3d.
inline DefectReport defect(const HomogeneousForm& f, const RankConfig& cfg = {}) {
    if (f.variable_count() != 5)
        throw WrongVariableCountError("defect() supports exactly 5 variables (threefolds in P^4); got " +
                                      std::to_string(f.variable_count()) + ", use e2_piece() for other cases");
    DefectReport rep;
    rep.m = 5;
    rep.d = f.degree();
    rep.terms = f.poly().size();
    rep.e2 = e2_piece(f, 3, cfg);
    rep.mu2 = detail::to_int64(dim_graded(5, 2 * static_cast<std::int64_t>(f.degree()) - 5)) -
              detail::to_int64(std::uint64_t{rep.e2.A.rank.value()});
    rep.defect = rep.e2.dim_n2;
    rep.hypotheses = {
        "equals def(X) only if the singularities of X are isolated and weighted homogeneous "
        "(not verified by this tool)",
        "equals def(X) only if 1 is not a spectral number of any singular point, e.g. X has only "
        "rational singularities (not verified by this tool)",
    };
    rep.warnings = rep.e2.warnings;
    return rep;
}

/// Local vanishing-cohomology dimensions supplied by the user.
struct LocalData {
    std::optional<std::int64_t> dim_v;   // dim V
    std::optional<std::int64_t> dim_nv1; // dim Ker N on V_1
    std::optional<std::int64_t> dim_v1;  // dim V_1
    std::optional<std::int64_t> gr2_v;   // dim Gr_F^2 V_C

    /// Only ordinary double points (n odd): V = V_1 = Ker N = C^s.
    static LocalData nodes(std::int64_t s) { return {s, s, s, std::nullopt}; }
};

struct InequalityCheck {
    std::int64_t defect = 0;
    std::int64_t bound = 0; // dim Gr_F^2 V - dim Gr_F^2 H^3(X_c)
    bool satisfied = false;
};

struct IhReport {
    std::int64_t h3_smooth = 0;  // dim H^3(X_c)
    std::int64_t gr2_smooth = 0; // dim Gr_F^2 H^3(X_c)
    std::int64_t dim_ih3 = 0;
    std::optional<std::int64_t> gr2_ih3;
    std::optional<InequalityCheck> inequality;
    std::int64_t sigma = 0; // Q-factoriality defect
    std::vector<std::string> notes;
};

inline IhReport ih_report(const DefectReport& rep, const LocalData& local) {
    if (!local.dim_v || !local.dim_nv1)
        throw MissingLocalDataError("intersection cohomology needs dim V and dim Ker(N|V_1)");
    const auto smooth = SmoothFiberInvariants::compute(3, rep.d);

    IhReport ih;
    // n = 3 is odd, so H^3(X_c) is entirely primitive.
    ih.h3_smooth = detail::to_int64(smooth.middle_betti());
    ih.gr2_smooth = detail::to_int64(smooth.hodge_prim[1]);
    ih.dim_ih3 = ih.h3_smooth - *local.dim_v - *local.dim_nv1 + 2 * rep.defect;
    if (local.gr2_v) {
        ih.inequality = InequalityCheck{rep.defect, *local.gr2_v - ih.gr2_smooth, false};
        ih.inequality->satisfied = ih.inequality->defect >= ih.inequality->bound;
        if (!ih.inequality->satisfied)
            ih.notes.push_back("lower bound on def(X) from Gr_F^2 is violated: check the local data");
        if (local.dim_v1) {
            ih.gr2_ih3 = ih.gr2_smooth - *local.gr2_v - *local.dim_v1 + 2 * rep.defect;
            ih.notes.push_back("Gr_F^2 IH^3 assumes 1 is not a spectral number of any singular point");
            if (*ih.gr2_ih3 < 0) ih.notes.push_back("negative dim Gr_F^2 IH^3: check dim Gr_F^2 V and dim V_1");
        }
    }
    ih.sigma = rep.defect;
    ih.notes.push_back("sigma(X) = def(X) assumes X has only rational singularities");
    if (ih.dim_ih3 < 0) ih.notes.push_back("negative dim IH^3: the local data are inconsistent");
    return ih;
}

} // namespace poledefect
