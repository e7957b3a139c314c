#include <gtest/gtest.h>

#include "poledefect/series.hpp"

using namespace poledefect;

namespace {

// Euler number of a smooth degree-d hypersurface of dimension n, closed form.
mpz_class euler_closed_form(unsigned n, unsigned d) {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), mpz_class(1 - static_cast<long>(d)).get_mpz_t(), n + 2);
    return (p - 1) / d + (n + 2);
}

// Ordered m-tuples with entries in [1, d-1] summing to k.
long compositions(unsigned m, unsigned d, long k) {
    if (m == 0) return k == 0 ? 1 : 0;
    long total = 0;
    for (long part = 1; part < static_cast<long>(d) && part <= k; ++part) total += compositions(m - 1, d, k - part);
    return total;
}

} // namespace

TEST(TruncatedSeriesTest, Arithmetic) {
    TruncatedSeries one_plus_t(6, {1, 1});
    const auto b = one_plus_t.pow(4);
    const long expected[] = {1, 4, 6, 4, 1, 0, 0};
    for (std::size_t i = 0; i <= 6; ++i) EXPECT_EQ(b[i], expected[i]);
    const auto g = one_plus_t * TruncatedSeries::geometric(6, 1);
    EXPECT_EQ(g[0], 1);
    for (std::size_t i = 1; i <= 6; ++i) EXPECT_EQ(g[i], 0);
}

TEST(SmoothEuler, Values) {
    EXPECT_EQ(smooth_euler(2, 1), 3);   // P^2
    EXPECT_EQ(smooth_euler(1, 3), 0);   // plane cubic
    EXPECT_EQ(smooth_euler(3, 5), -200);
    EXPECT_EQ(smooth_euler(3, 1), 4);   // P^3
    EXPECT_EQ(smooth_euler(2, 4), 24);  // K3
    EXPECT_THROW(smooth_euler(0, 3), std::invalid_argument);
}

TEST(SmoothEuler, MatchesClosedForm) {
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned d = 1; d <= 10; ++d) EXPECT_EQ(smooth_euler(n, d), euler_closed_form(n, d)) << n << "," << d;
}

TEST(SmoothHodge, Values) {
    EXPECT_EQ(smooth_hodge_prim(3, 5, 1), 101);
    EXPECT_EQ(smooth_hodge_prim(3, 6, 1), 255);
    EXPECT_EQ(smooth_hodge_prim(3, 3, 1), 5);
    EXPECT_EQ(smooth_hodge_prim(3, 4, 1), 30);
    EXPECT_EQ(smooth_hodge_prim(3, 5, 0), 1);
    EXPECT_EQ(smooth_hodge_prim(2, 4, 1), 19); // K3 primitive h^{1,1}
    EXPECT_THROW(smooth_hodge_prim(3, 5, 4), std::out_of_range);
    EXPECT_EQ(SmoothFiberInvariants::compute(3, 5).middle_betti(), 204);
    EXPECT_EQ(SmoothFiberInvariants::compute(2, 4).middle_betti(), 22);
}

TEST(SmoothHodge, MatchesCompositionCount) {
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned d = 2; d <= 7; ++d)
            for (unsigned p = 0; p <= n; ++p)
                EXPECT_EQ(smooth_hodge_prim(n, d, p), compositions(n + 2, d, static_cast<long>(p + 1) * d));
    EXPECT_EQ(compositions(5, 5, 10), 101);
}

TEST(SmoothHodge, EulerCrossIdentity) {
    for (unsigned d = 2; d <= 9; ++d) {
        mpz_class sum = 0;
        for (unsigned p = 0; p <= 3; ++p) sum += smooth_hodge_prim(3, d, p);
        EXPECT_EQ(smooth_euler(3, d), 4 - sum) << d;
    }
    // general n: euler = n + 1 + (-1)^n * (sum of primitive numbers)
    for (unsigned n = 1; n <= 5; ++n)
        for (unsigned d = 1; d <= 9; ++d) {
            mpz_class sum = 0;
            for (unsigned p = 0; p <= n; ++p) sum += smooth_hodge_prim(n, d, p);
            const mpz_class signed_sum = n % 2 ? mpz_class(-sum) : sum;
            EXPECT_EQ(smooth_euler(n, d), n + 1 + signed_sum) << n << "," << d;
        }
}

TEST(SmoothHodge, Symmetry) {
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned d = 1; d <= 9; ++d) {
            const auto s = SmoothFiberInvariants::compute(n, d);
            EXPECT_TRUE(s.symmetric());
            for (unsigned p = 0; p <= n; ++p) EXPECT_EQ(s.hodge_prim[p], s.hodge_prim[n - p]);
        }
}

TEST(PrimitiveSeries, GammaCoefficient) {
    // gamma at grading 3d is the coefficient that gives h^{2,1}.
    for (unsigned d = 2; d <= 8; ++d) EXPECT_EQ(primitive_series_coefficient(5, d, 2 * d), smooth_hodge_prim(3, d, 1));
    EXPECT_EQ(primitive_series_coefficient(5, 1, 0), 0);
}
