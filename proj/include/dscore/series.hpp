#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "dscore/bigint.hpp"

namespace dscore {

/// Product of two integer polynomials given as coefficient sequences
/// (index = degree).
inline std::vector<std::int64_t> poly_mul(std::span<const std::int64_t> a,
                                          std::span<const std::int64_t> b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

/// Power series of a rational function num/den with den[0] = +-1, so the
/// expansion has integer coefficients. Coefficients are produced by the
/// constant-coefficient recurrence the denominator induces,
///   den[0]*c_n = num_n - sum_{j>=1} den[j]*c_{n-j},
/// exactly in arbitrary precision, and cached.
class rational_series {
public:
    rational_series(std::vector<std::int64_t> numerator, std::vector<std::int64_t> denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_.empty() || (den_[0] != 1 && den_[0] != -1)) {
            throw std::invalid_argument(
                "rational_series: denominator constant term must be +1 or -1");
        }
    }

    const std::vector<std::int64_t>& numerator() const { return num_; }
    const std::vector<std::int64_t>& denominator() const { return den_; }

    const big_int& coefficient(std::size_t n) {
        extend(n);
        return coeffs_[n];
    }

    /// Coefficients of x^0..x^n.
    std::vector<big_int> prefix(std::size_t n) {
        extend(n);
        return {coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n + 1)};
    }

private:
    void extend(std::size_t n) {
        while (coeffs_.size() <= n) {
            const std::size_t i = coeffs_.size();
            big_int acc = i < num_.size() ? big_int(num_[i]) : big_int(0);
            for (std::size_t j = 1; j < den_.size() && j <= i; ++j) {
                acc -= den_[j] * coeffs_[i - j];
            }
            if (den_[0] == -1) acc = -acc;
            coeffs_.push_back(std::move(acc));
        }
    }

    std::vector<std::int64_t> num_, den_;
    std::vector<big_int> coeffs_;
};

/// Which DS statistic a series or table column refers to.
enum class ds_statistic { count, hook_count, total_size };

/// 1/(1 - x - x^3): coefficient of x^t is count(t-1).
inline rational_series ds_count_series() { return rational_series({1}, {1, -1, 0, -1}); }

/// x^3/(1 - x - x^3)^2: coefficient of x^t is hook_count(t-1).
inline rational_series ds_hook_count_series() {
    const std::vector<std::int64_t> base{1, -1, 0, -1};
    return rational_series({0, 0, 0, 1}, poly_mul(base, base));
}

/// (1 + 4x - x^2 + 6x^3 + 4x^4 + 5x^6) x^3 / ((1 + x + x^3)(1 - x - x^3)^3):
/// coefficient of x^t is total_size(t-1).
inline rational_series ds_total_size_series() {
    const std::vector<std::int64_t> base{1, -1, 0, -1};
    const std::vector<std::int64_t> lead{1, 1, 0, 1};
    const auto den = poly_mul(lead, poly_mul(base, poly_mul(base, base)));
    return rational_series({0, 0, 0, 1, 4, -1, 6, 4, 0, 5}, den);
}

/// Coefficients x^0..x^n of the chosen statistic's generating function.
inline std::vector<big_int> gf_coeffs(ds_statistic which, std::size_t n) {
    switch (which) {
        case ds_statistic::count: return ds_count_series().prefix(n);
        case ds_statistic::hook_count: return ds_hook_count_series().prefix(n);
        case ds_statistic::total_size: return ds_total_size_series().prefix(n);
    }
    throw std::invalid_argument("gf_coeffs: unknown statistic");
}

}  // namespace dscore
