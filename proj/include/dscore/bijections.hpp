#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dscore/bigint.hpp"
#include "dscore/enumeration.hpp"
#include "dscore/md_set.hpp"

namespace dscore {

// The two maps behind the count recurrence. Members of DS(t) whose diagonal
// hooks avoid 1 correspond to DS(t-1) by reflecting every hook at 2t; members
// containing 1 correspond to DS(t-3) by removing the 1 and reflecting the rest
// at 2t-2. Both are inclusion-reversing on the hook sets and invertible.

namespace detail {

inline md_set reflect_hooks(const md_set& m, std::int64_t pivot) {
    std::vector<std::int64_t> out;
    out.reserve(m.hooks().size());
    for (auto it = m.hooks().rbegin(); it != m.hooks().rend(); ++it) {
        out.push_back(pivot - *it);
    }
    return md_set::from_hooks(std::move(out));
}

}  // namespace detail

/// Maps a member of DS(t) without diagonal hook 1 to a member of DS(t-1):
/// every hook x becomes 2t - x. The empty set maps to itself.
inline md_set step_down_one(std::int64_t t, const md_set& m) {
    if (t < 2) throw std::invalid_argument("step_down_one: t must be >= 2");
    if (m.contains(1)) throw std::invalid_argument("step_down_one: input contains hook 1");
    if (!is_ds_member(m, t)) {
        throw std::invalid_argument("step_down_one: " + m.to_string() + " is not in DS(" +
                                    std::to_string(t) + ")");
    }
    if (m.empty()) return m;
    md_set image = detail::reflect_hooks(m, 2 * t);
    if (!is_ds_member(image, t - 1)) {
        throw std::logic_error("step_down_one: image " + image.to_string() + " left DS(t-1)");
    }
    return image;
}

/// Inverse of step_down_one: a member of DS(t-1) pulls back to the member of
/// DS(t) without hook 1 whose hooks are 2t - y.
inline md_set step_down_one_inv(std::int64_t t, const md_set& m) {
    if (t < 2) throw std::invalid_argument("step_down_one_inv: t must be >= 2");
    if (!is_ds_member(m, t - 1)) {
        throw std::invalid_argument("step_down_one_inv: " + m.to_string() + " is not in DS(" +
                                    std::to_string(t - 1) + ")");
    }
    if (m.empty()) return m;
    md_set pre = detail::reflect_hooks(m, 2 * t);
    if (pre.contains(1) || !is_ds_member(pre, t)) {
        throw std::logic_error("step_down_one_inv: preimage " + pre.to_string() +
                               " left the domain");
    }
    return pre;
}

/// Maps a member of DS(t) with diagonal hook 1 to a member of DS(t-3): the 1
/// is removed and every remaining hook x becomes 2t - 2 - x. {1} maps to the
/// empty set.
inline md_set step_down_three(std::int64_t t, const md_set& m) {
    if (t < 4) throw std::invalid_argument("step_down_three: t must be >= 4");
    if (!m.contains(1)) throw std::invalid_argument("step_down_three: input lacks hook 1");
    if (!is_ds_member(m, t)) {
        throw std::invalid_argument("step_down_three: " + m.to_string() + " is not in DS(" +
                                    std::to_string(t) + ")");
    }
    std::vector<std::int64_t> head(m.hooks().begin(), m.hooks().end() - 1);  // drop the 1
    md_set image = detail::reflect_hooks(md_set::from_hooks(std::move(head)), 2 * t - 2);
    if (!is_ds_member(image, t - 3)) {
        throw std::logic_error("step_down_three: image " + image.to_string() + " left DS(t-3)");
    }
    return image;
}

/// Inverse of step_down_three: reflect a member of DS(t-3) at 2t-2 and adjoin
/// the hook 1.
inline md_set step_down_three_inv(std::int64_t t, const md_set& m) {
    if (t < 4) throw std::invalid_argument("step_down_three_inv: t must be >= 4");
    if (!is_ds_member(m, t - 3)) {
        throw std::invalid_argument("step_down_three_inv: " + m.to_string() + " is not in DS(" +
                                    std::to_string(t - 3) + ")");
    }
    std::vector<std::int64_t> hooks;
    hooks.reserve(m.hooks().size() + 1);
    for (auto it = m.hooks().rbegin(); it != m.hooks().rend(); ++it) {
        hooks.push_back(2 * t - 2 - *it);
    }
    hooks.push_back(1);
    md_set pre = md_set::from_hooks(std::move(hooks));
    if (!is_ds_member(pre, t)) {
        throw std::logic_error("step_down_three_inv: preimage " + pre.to_string() +
                               " left DS(t)");
    }
    return pre;
}

struct bijection_failure {
    md_set input;
    std::string reason;
};

struct bijection_report {
    std::int64_t t = 4;
    big_int count_without_one;  // members whose hooks avoid 1
    big_int count_with_one;     // members whose hooks contain 1
    std::vector<bijection_failure> failures;

    bool ok() const { return failures.empty(); }
};

/// Walks all of DS(t), splits on whether the hooks contain 1, pushes each
/// member through the matching map, and records every membership failure,
/// collision, or roundtrip failure. Also checks the two class sizes against
/// the recurrence values for DS(t-1) and DS(t-3).
inline bijection_report verify_bijections(std::int64_t t) {
    if (t < 4) throw std::invalid_argument("verify_bijections: t must be >= 4");
    bijection_report report;
    report.t = t;
    std::int64_t without_one = 0, with_one = 0;
    std::set<md_set> images_one, images_three;

    for (const md_set& m : enumerate_ds(t)) {
        try {
            if (!m.contains(1)) {
                ++without_one;
                const md_set image = step_down_one(t, m);  // throws if it leaves DS(t-1)
                if (!images_one.insert(image).second) {
                    report.failures.push_back({m, "collision in DS(t-1) at " + image.to_string()});
                } else if (step_down_one_inv(t, image) != m) {
                    report.failures.push_back({m, "roundtrip through DS(t-1) failed"});
                }
            } else {
                ++with_one;
                const md_set image = step_down_three(t, m);
                if (!images_three.insert(image).second) {
                    report.failures.push_back({m, "collision in DS(t-3) at " + image.to_string()});
                } else if (step_down_three_inv(t, image) != m) {
                    report.failures.push_back({m, "roundtrip through DS(t-3) failed"});
                }
            }
        } catch (const std::exception& e) {
            report.failures.push_back({m, e.what()});
        }
    }

    report.count_without_one = without_one;
    report.count_with_one = with_one;
    const big_int expect_one = stats_recurrence(t - 1).count;
    const big_int expect_three = stats_recurrence(t - 3).count;
    if (report.count_without_one != expect_one) {
        report.failures.push_back({md_set{}, "class without hook 1 has size " +
                                                 report.count_without_one.str() + ", expected " +
                                                 expect_one.str()});
    }
    if (report.count_with_one != expect_three) {
        report.failures.push_back({md_set{}, "class with hook 1 has size " +
                                                 report.count_with_one.str() + ", expected " +
                                                 expect_three.str()});
    }
    return report;
}

}  // namespace dscore
