#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "dscore/bijections.hpp"
#include "dscore/enumeration.hpp"
#include "dscore/extremal.hpp"
#include "dscore/md_set.hpp"
#include "dscore/partition.hpp"
#include "dscore/series.hpp"

namespace dscore {

/// Outcome of one verification suite; detail holds the first counterexample.
struct check_result {
    bool ok = true;
    std::string detail;
};

/// Random valid diagonal-hook set: a subset of the odd numbers up to max_hook,
/// about a quarter of them kept.
inline md_set random_md_set(std::mt19937_64& rng, std::int64_t max_hook) {
    std::bernoulli_distribution keep(0.25);
    std::vector<std::int64_t> hooks;
    for (std::int64_t h = max_hook | 1; h >= 1; h -= 2) {
        if (keep(rng)) hooks.push_back(h);
    }
    return md_set::from_hooks(std::move(hooks));
}

/// Roundtrip between partitions and their diagonal-hook encodings, plus the
/// size identity |p| = sum of hooks. Exhaustive over every self-conjugate
/// partition of size <= max_size (generated partition-first, so the check does
/// not lean on the encoding), then random_sets random encodings with hooks
/// below 100, encoding-first.
inline check_result check_roundtrip(std::int64_t max_size, int random_sets,
                                    std::uint64_t seed = 20260810) {
    check_result res;
    for_each_partition(max_size, [&](std::span<const std::int64_t> parts) {
        if (!res.ok) return;
        const partition p = partition::from_parts({parts.begin(), parts.end()});
        if (!is_self_conjugate(p)) return;
        const md_set m = md_hooks(p);
        if (partition_from_md(m) != p) {
            res = {false, "partition -> hooks -> partition failed at " + m.to_string()};
        } else if (m.sum() != p.size()) {
            res = {false, "hook sum != size at " + m.to_string()};
        }
    });
    if (!res.ok) return res;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < random_sets; ++i) {
        const md_set m = random_md_set(rng, 99);
        const partition p = partition_from_md(m);
        if (md_hooks(p) != m) {
            return {false, "hooks -> partition -> hooks failed at " + m.to_string()};
        }
        if (!is_self_conjugate(p) || p.size() != m.sum()) {
            return {false, "decoded partition inconsistent at " + m.to_string()};
        }
    }
    return res;
}

/// The two routes to every predicate must agree on all self-conjugate
/// partitions of size <= max_size, for each t in [1, max_t]:
///   - DS membership via the hook-set characterization vs the definition,
///   - t-core via the diagonal-hook criterion vs the hook lengths,
///   - among self-conjugate (t,t+1)-cores, DS membership iff all consecutive
///     diagonal-hook gaps are >= 4,
///   - members keep every hook <= 2t-1.
inline check_result check_characterization(std::int64_t max_size, std::int64_t max_t) {
    check_result res;
    for_each_partition(max_size, [&](std::span<const std::int64_t> parts) {
        if (!res.ok) return;
        const partition p = partition::from_parts({parts.begin(), parts.end()});
        if (!is_self_conjugate(p)) return;
        const md_set m = md_hooks(p);
        for (std::int64_t t = 1; t <= max_t; ++t) {
            const bool member = is_ds_member(m, t);
            if (member != is_ds_member_definitional(p, t)) {
                res = {false, "membership routes disagree at " + m.to_string() +
                                  ", t=" + std::to_string(t)};
                return;
            }
            if (md_is_t_core(m, t) != is_t_core(p, t)) {
                res = {false, "t-core routes disagree at " + m.to_string() +
                                  ", t=" + std::to_string(t)};
                return;
            }
            if (is_simultaneous_core(p, {t, t + 1})) {
                const auto d = diff_seq(m);
                const bool wide = std::all_of(d.begin(), d.end(),
                                              [](std::int64_t x) { return x >= 4; });
                if (member != wide) {
                    res = {false, "gap criterion disagrees at " + m.to_string() +
                                      ", t=" + std::to_string(t)};
                    return;
                }
            }
            if (member && !m.empty() && m.hooks().front() > 2 * t - 1) {
                res = {false, "member exceeds hook bound at " + m.to_string() +
                                  ", t=" + std::to_string(t)};
                return;
            }
        }
    });
    return res;
}

/// Exhaustive statistics equal the recurrence values for every t <= max_t.
inline check_result check_recurrence(std::int64_t max_t) {
    const auto table = stats_table(max_t);
    for (std::int64_t t = 1; t <= max_t; ++t) {
        const ds_stats direct = stats_direct(t);
        const ds_stats& rec = table[static_cast<std::size_t>(t - 1)];
        if (direct != rec) {
            return {false, "direct (" + direct.count.str() + "," + direct.hook_count.str() +
                               "," + direct.total_size.str() + ") != recurrence (" +
                               rec.count.str() + "," + rec.hook_count.str() + "," +
                               rec.total_size.str() + ") at t=" + std::to_string(t)};
        }
    }
    return {};
}

/// The three series prefixes match the recurrences: the coefficient of x^t is
/// the statistic at t-1 for every 1 <= t <= terms. x^1 carries the t=0
/// initial values (1, 0, 0); later coefficients come from the table.
inline check_result check_gf(std::int64_t terms) {
    const auto table = stats_table(terms);
    const auto f = gf_coeffs(ds_statistic::count, static_cast<std::size_t>(terms));
    const auto g = gf_coeffs(ds_statistic::hook_count, static_cast<std::size_t>(terms));
    const auto h = gf_coeffs(ds_statistic::total_size, static_cast<std::size_t>(terms));
    for (std::int64_t t = 1; t <= terms; ++t) {
        const ds_stats row = t >= 2 ? table[static_cast<std::size_t>(t - 2)]
                                    : ds_stats{0, 1, 0, 0};
        const auto i = static_cast<std::size_t>(t);
        if (f[i] != row.count) {
            return {false, "count series x^" + std::to_string(t) + " = " + f[i].str() +
                               ", recurrence " + row.count.str()};
        }
        if (g[i] != row.hook_count) {
            return {false, "hook-count series x^" + std::to_string(t) + " = " + g[i].str() +
                               ", recurrence " + row.hook_count.str()};
        }
        if (h[i] != row.total_size) {
            return {false, "size series x^" + std::to_string(t) + " = " + h[i].str() +
                               ", recurrence " + row.total_size.str()};
        }
    }
    return {};
}

/// verify_bijections passes with clean class counts for every 4 <= t <= max_t.
/// On success the detail carries the class sizes at max_t.
inline check_result check_bijections(std::int64_t max_t) {
    check_result res;
    for (std::int64_t t = 4; t <= max_t; ++t) {
        const bijection_report report = verify_bijections(t);
        if (!report.ok()) {
            return {false, "t=" + std::to_string(t) + ": " + report.failures.front().reason +
                               " (input " + report.failures.front().input.to_string() + ")"};
        }
        res.detail = "t=" + std::to_string(t) + ": " + report.count_without_one.str() +
                     " members avoid hook 1, " + report.count_with_one.str() + " contain it";
    }
    return res;
}

/// verify_extremal passes for every 3 <= t <= max_t.
inline check_result check_extremal(std::int64_t max_t) {
    for (std::int64_t t = 3; t <= max_t; ++t) {
        const extremal_check c = verify_extremal(t);
        if (!c.ok()) {
            return {false, "t=" + std::to_string(t) + ": " + c.violations.front()};
        }
    }
    return {};
}

/// Closed-form / construction self-consistency without any enumeration, for
/// every t <= max_t: the chain starts at 2t-1 (t >= 3), stays in DS(t), its
/// gaps are 4s then 6s, and its sum is the closed-form size (the latter two
/// are asserted inside extremal_size/extremal_md and rechecked here).
inline check_result check_extremal_construction(std::int64_t max_t) {
    for (std::int64_t t = 1; t <= max_t; ++t) {
        const md_set m = extremal_md(t);  // throws on any internal inconsistency
        if (t >= 3 && (m.empty() || m.hooks().front() != 2 * t - 1)) {
            return {false, "chain does not start at 2t-1 for t=" + std::to_string(t)};
        }
        bool seen6 = false;
        for (std::int64_t d : diff_seq(m)) {
            if (d != 4 && d != 6) {
                return {false, "gap " + std::to_string(d) + " at t=" + std::to_string(t)};
            }
            if (d == 6) seen6 = true;
            else if (seen6) {
                return {false, "gap 4 after gap 6 at t=" + std::to_string(t)};
            }
        }
        if (m.sum() != extremal_size(t)) {
            return {false, "chain sum != closed form at t=" + std::to_string(t)};
        }
    }
    return {};
}

}  // namespace dscore
