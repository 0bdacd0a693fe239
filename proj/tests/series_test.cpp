#include "dscore/series.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "dscore/enumeration.hpp"

using dscore::big_int;
using dscore::rational_series;

namespace {

// Test-side oracle: expand 1/(1 - u) as the truncated geometric sum
// 1 + u + u^2 + ... with exact big-int polynomial arithmetic. Independent of
// the linear-recurrence expansion under test.
std::vector<big_int> big_mul(const std::vector<big_int>& a, const std::vector<big_int>& b,
                             std::size_t cap) {
    std::vector<big_int> out(std::min(cap + 1, a.size() + b.size() - 1));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size() && i + j <= cap; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<big_int> geometric_inverse(const std::vector<std::int64_t>& den, std::size_t cap) {
    // den = 1 - u, so u = 1 - den has zero constant term and the powers of u
    // stabilize the low coefficients
    std::vector<big_int> u(den.size());
    for (std::size_t i = 0; i < den.size(); ++i) u[i] = -den[i];
    u[0] += 1;
    std::vector<big_int> sum{1}, power{1};
    for (std::size_t k = 1; k <= cap; ++k) {
        power = big_mul(power, u, cap);
        sum.resize(std::max(sum.size(), power.size()));
        for (std::size_t i = 0; i < power.size(); ++i) sum[i] += power[i];
    }
    sum.resize(cap + 1);
    return sum;
}

std::vector<big_int> oracle_prefix(const std::vector<std::int64_t>& num,
                                   const std::vector<std::int64_t>& den, std::size_t cap) {
    std::vector<big_int> n(num.begin(), num.end());
    return big_mul(n, geometric_inverse(den, cap), cap);
}

}  // namespace

TEST(PolyMul, KnownProducts) {
    const std::vector<std::int64_t> base{1, -1, 0, -1};
    EXPECT_EQ(dscore::poly_mul(base, base),
              (std::vector<std::int64_t>{1, -2, 1, -2, 2, 0, 1}));
    const std::vector<std::int64_t> one{1};
    EXPECT_EQ(dscore::poly_mul(one, base), base);
    EXPECT_TRUE(dscore::poly_mul({}, base).empty());
}

TEST(RationalSeries, ValidatesDenominator) {
    EXPECT_THROW(rational_series({1}, {}), std::invalid_argument);
    EXPECT_THROW(rational_series({1}, {2, 1}), std::invalid_argument);
    EXPECT_NO_THROW(rational_series({1}, {-1, 1}));
}

TEST(RationalSeries, NegativeLeadingDenominator) {
    // 1/(-1 + x) = -1 - x - x^2 - ...
    rational_series s({1}, {-1, 1});
    for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(s.coefficient(i), big_int(-1));
}

TEST(RationalSeries, MatchesGeometricOracle) {
    auto check = [](rational_series s, std::size_t cap) {
        const auto want = oracle_prefix(s.numerator(), s.denominator(), cap);
        const auto got = s.prefix(cap);
        ASSERT_EQ(got.size(), want.size());
        for (std::size_t i = 0; i <= cap; ++i) EXPECT_EQ(got[i], want[i]) << "x^" << i;
    };
    check(dscore::ds_count_series(), 40);
    check(dscore::ds_hook_count_series(), 40);
    check(dscore::ds_total_size_series(), 40);
}

TEST(RationalSeries, ConvolutionIdentityHolds) {
    auto check = [](rational_series s, std::size_t cap) {
        const auto c = s.prefix(cap);
        const auto& den = s.denominator();
        const auto& num = s.numerator();
        for (std::size_t n = 0; n <= cap; ++n) {
            big_int conv = 0;
            for (std::size_t j = 0; j < den.size() && j <= n; ++j) conv += den[j] * c[n - j];
            const big_int expect = n < num.size() ? big_int(num[n]) : big_int(0);
            EXPECT_EQ(conv, expect) << "x^" << n;
        }
    };
    check(dscore::ds_count_series(), 60);
    check(dscore::ds_hook_count_series(), 60);
    check(dscore::ds_total_size_series(), 60);
}

TEST(GfCoeffs, KnownPrefixes) {
    auto as_i64 = [](const std::vector<big_int>& v) {
        std::vector<std::int64_t> out;
        for (const auto& x : v) out.push_back(x.convert_to<std::int64_t>());
        return out;
    };
    EXPECT_EQ(as_i64(dscore::gf_coeffs(dscore::ds_statistic::count, 8)),
              (std::vector<std::int64_t>{1, 1, 1, 2, 3, 4, 6, 9, 13}));
    EXPECT_EQ(as_i64(dscore::gf_coeffs(dscore::ds_statistic::hook_count, 3)),
              (std::vector<std::int64_t>{0, 0, 0, 1}));
    EXPECT_EQ(as_i64(dscore::gf_coeffs(dscore::ds_statistic::hook_count, 4)),
              (std::vector<std::int64_t>{0, 0, 0, 1, 2}));
    EXPECT_EQ(as_i64(dscore::gf_coeffs(dscore::ds_statistic::total_size, 3)),
              (std::vector<std::int64_t>{0, 0, 0, 1}));
    EXPECT_EQ(as_i64(dscore::gf_coeffs(dscore::ds_statistic::total_size, 0)),
              (std::vector<std::int64_t>{0}));
}

TEST(GfCoeffs, MatchesRecurrencesShiftedByOne) {
    const std::size_t terms = 120;
    const auto table = dscore::stats_table(static_cast<std::int64_t>(terms));
    const auto f = dscore::gf_coeffs(dscore::ds_statistic::count, terms + 1);
    const auto g = dscore::gf_coeffs(dscore::ds_statistic::hook_count, terms + 1);
    const auto h = dscore::gf_coeffs(dscore::ds_statistic::total_size, terms + 1);
    for (std::size_t t = 1; t <= terms; ++t) {
        EXPECT_EQ(f[t + 1], table[t - 1].count) << t;  // statistic at t sits at x^(t+1)
        EXPECT_EQ(g[t + 1], table[t - 1].hook_count) << t;
        EXPECT_EQ(h[t + 1], table[t - 1].total_size) << t;
    }
    // x^0 and x^1 carry the t = -1 and t = 0 initial values
    EXPECT_EQ(f[0], big_int(1));
    EXPECT_EQ(g[0], big_int(0));
    EXPECT_EQ(h[0], big_int(0));
    EXPECT_EQ(f[1], big_int(1));
    EXPECT_EQ(g[1], big_int(0));
    EXPECT_EQ(h[1], big_int(0));
}
