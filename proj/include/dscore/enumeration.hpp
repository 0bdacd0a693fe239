#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "dscore/bigint.hpp"
#include "dscore/md_set.hpp"

namespace dscore {

/// Aggregate statistics of DS(t): member count, total number of diagonal
/// hooks, total partition size.
struct ds_stats {
    std::int64_t t = 1;
    big_int count;
    big_int hook_count;
    big_int total_size;

    friend bool operator==(const ds_stats&, const ds_stats&) = default;
};

/// Visits the diagonal-hook sets of every member of DS(t), in lexicographic
/// order on the decreasing hook sequences with the empty set first. The span
/// passed to visit is only valid during the call.
///
/// Backtracking over the candidate set in decreasing element order: each new
/// hook must sit at least 4 below the previous one, and picking hook v bans
/// the two smaller values 2t-v and 2t+2-v that would complete a forbidden
/// pair sum. Chosen hooks are >= 4 apart, so no banned value is marked twice.
template <typename Visit>
void for_each_ds(std::int64_t t, Visit&& visit) {
    if (t < 1) throw std::invalid_argument("for_each_ds: t must be >= 1");
    const q_set q = make_q_set(t);
    const std::vector<std::int64_t>& cand = q.elements;  // ascending
    std::vector<std::int64_t> chain;                     // current hooks, decreasing
    std::vector<std::uint8_t> banned(static_cast<std::size_t>(2 * t + 2), 0);

    visit(std::span<const std::int64_t>(chain));
    auto rec = [&](auto&& self, std::size_t limit) -> void {
        for (std::size_t i = 0; i < limit; ++i) {
            const std::int64_t v = cand[i];
            if (!chain.empty() && chain.back() - v < 4) break;  // all later i are closer
            if (banned[static_cast<std::size_t>(v)]) continue;
            chain.push_back(v);
            visit(std::span<const std::int64_t>(chain));
            ++banned[static_cast<std::size_t>(2 * t - v)];
            ++banned[static_cast<std::size_t>(2 * t + 2 - v)];
            self(self, i);
            --banned[static_cast<std::size_t>(2 * t - v)];
            --banned[static_cast<std::size_t>(2 * t + 2 - v)];
            chain.pop_back();
        }
    };
    rec(rec, cand.size());
}

/// Materializes DS(t) in canonical order. Memory grows like 1.47^t; prefer
/// for_each_ds for t much above 30.
inline std::vector<md_set> enumerate_ds(std::int64_t t) {
    std::vector<md_set> out;
    for_each_ds(t, [&](std::span<const std::int64_t> hooks) {
        out.push_back(md_set::from_hooks({hooks.begin(), hooks.end()}));
    });
    return out;
}

/// Statistics by exhaustive enumeration.
inline ds_stats stats_direct(std::int64_t t) {
    std::int64_t count = 0, hooks = 0, size = 0;
    for_each_ds(t, [&](std::span<const std::int64_t> chain) {
        ++count;
        hooks += static_cast<std::int64_t>(chain.size());
        for (std::int64_t h : chain) size += h;
    });
    return {t, count, hooks, size};
}

/// Statistics for t = 1..max_t by the coupled recurrences
///   count(t) = count(t-1) + count(t-3)
///   hooks(t) = hooks(t-1) + hooks(t-3) + count(t-3)
///   size(t)  = 2t*hooks(t-1) + (2t-2)*hooks(t-3) - size(t-1) - size(t-3) + count(t-3)
/// from the initial values count(-1..2) = 1,1,1,2; hooks(-1..2) = 0,0,0,1;
/// size(-1..2) = 0,0,0,1.
inline std::vector<ds_stats> stats_table(std::int64_t max_t) {
    if (max_t < 1) throw std::invalid_argument("stats_table: max_t must be >= 1");
    // index i holds the value at t = i - 2, so t = -1 sits at index 1
    std::vector<big_int> f{0, 1, 1, 1, 2}, g{0, 0, 0, 0, 1}, h{0, 0, 0, 0, 1};
    f.resize(static_cast<std::size_t>(max_t + 3));
    g.resize(static_cast<std::size_t>(max_t + 3));
    h.resize(static_cast<std::size_t>(max_t + 3));
    for (std::int64_t t = 3; t <= max_t; ++t) {
        const auto i = static_cast<std::size_t>(t + 2);
        f[i] = f[i - 1] + f[i - 3];
        g[i] = g[i - 1] + g[i - 3] + f[i - 3];
        h[i] = 2 * t * g[i - 1] + (2 * t - 2) * g[i - 3] - h[i - 1] - h[i - 3] + f[i - 3];
    }
    std::vector<ds_stats> rows;
    rows.reserve(static_cast<std::size_t>(max_t));
    for (std::int64_t t = 1; t <= max_t; ++t) {
        const auto i = static_cast<std::size_t>(t + 2);
        rows.push_back({t, f[i], g[i], h[i]});
    }
    return rows;
}

/// Statistics of DS(t) by recurrence.
inline ds_stats stats_recurrence(std::int64_t t) { return stats_table(t).back(); }

/// Exact average member size, total_size(t)/count(t) in lowest terms.
inline big_rat average_size(std::int64_t t) {
    const ds_stats s = stats_recurrence(t);
    return big_rat(s.total_size, s.count);
}

}  // namespace dscore
