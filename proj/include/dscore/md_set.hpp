#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dscore/partition.hpp"

namespace dscore {

/// The main-diagonal hook lengths of a self-conjugate partition, stored
/// strictly decreasing. The entries are distinct positive odd integers and
/// determine the partition uniquely; the empty set encodes the empty
/// partition. We use this as the canonical identity of a self-conjugate
/// partition throughout.
class md_set {
public:
    md_set() = default;

    /// Validates: all entries odd, positive, strictly decreasing.
    static md_set from_hooks(std::vector<std::int64_t> hooks) {
        for (std::size_t i = 0; i < hooks.size(); ++i) {
            if (hooks[i] < 1 || hooks[i] % 2 == 0) {
                throw std::invalid_argument("md_set: entry " + std::to_string(hooks[i]) +
                                            " is not a positive odd integer");
            }
            if (i > 0 && hooks[i] >= hooks[i - 1]) {
                throw std::invalid_argument("md_set: entries must be strictly decreasing");
            }
        }
        return md_set(std::move(hooks));
    }

    const std::vector<std::int64_t>& hooks() const { return hooks_; }

    /// Number of diagonal hooks (the Durfee square side of the partition).
    std::int64_t count() const { return static_cast<std::int64_t>(hooks_.size()); }

    /// Sum of the hooks; equals the size of the encoded partition.
    std::int64_t sum() const {
        return std::accumulate(hooks_.begin(), hooks_.end(), std::int64_t{0});
    }

    bool empty() const { return hooks_.empty(); }

    bool contains(std::int64_t h) const {
        return std::binary_search(hooks_.rbegin(), hooks_.rend(), h);
    }

    std::string to_string() const {
        std::ostringstream out;
        out << '{';
        for (std::size_t i = 0; i < hooks_.size(); ++i) {
            if (i) out << ',';
            out << hooks_[i];
        }
        out << '}';
        return out.str();
    }

    friend bool operator==(const md_set&, const md_set&) = default;
    friend auto operator<=>(const md_set&, const md_set&) = default;

private:
    explicit md_set(std::vector<std::int64_t> hooks) : hooks_(std::move(hooks)) {}
    std::vector<std::int64_t> hooks_;
};

/// Diagonal hooks of a self-conjugate partition. Rejects non-self-conjugate
/// input: the encoding is only faithful on the symmetric diagrams.
inline md_set md_hooks(const partition& p) {
    if (!is_self_conjugate(p)) {
        throw std::invalid_argument("md_hooks: partition is not self-conjugate");
    }
    const std::int64_t s = durfee_size(p);
    std::vector<std::int64_t> hooks;
    hooks.reserve(static_cast<std::size_t>(s));
    for (std::int64_t i = 1; i <= s; ++i) hooks.push_back(hook_length(p, {i, i}));
    return md_set::from_hooks(std::move(hooks));
}

/// The unique self-conjugate partition with the given diagonal hooks.
/// Row i is (h_i - 1)/2 + i for i <= k; the remaining rows are forced by
/// self-conjugacy (row j > k holds the number of head rows of length >= j).
inline partition partition_from_md(const md_set& m) {
    const std::int64_t k = m.count();
    std::vector<std::int64_t> parts;
    parts.reserve(static_cast<std::size_t>(k));
    for (std::int64_t i = 1; i <= k; ++i) {
        parts.push_back((m.hooks()[static_cast<std::size_t>(i - 1)] - 1) / 2 + i);
    }
    for (std::int64_t j = k + 1;; ++j) {
        std::int64_t c = 0;
        for (std::int64_t i = 0; i < k; ++i) {
            if (parts[static_cast<std::size_t>(i)] >= j) ++c;
        }
        if (c == 0) break;
        parts.push_back(c);
    }
    // from_parts re-checks non-increase; a failure here would be a bug, not bad input
    return partition::from_parts(std::move(parts));
}

/// Consecutive hook differences d_i = h_i - h_{i+1}; empty when |m| <= 1.
inline std::vector<std::int64_t> diff_seq(const md_set& m) {
    std::vector<std::int64_t> d;
    const auto& h = m.hooks();
    for (std::size_t i = 0; i + 1 < h.size(); ++i) d.push_back(h[i] - h[i + 1]);
    return d;
}

/// The candidate diagonal hooks for DS(t): the odd values in [1, 2t-1] with t
/// and t+1 removed, split into an upper half [t+2, 2t-1] and a lower half
/// [1, t-1]. All three sequences ascending.
struct q_set {
    std::int64_t t = 1;
    std::vector<std::int64_t> elements;
    std::vector<std::int64_t> left;   // elements in [t+2, 2t-1]
    std::vector<std::int64_t> right;  // elements in [1, t-1]
};

inline q_set make_q_set(std::int64_t t) {
    if (t < 1) throw std::invalid_argument("make_q_set: t must be >= 1");
    q_set q;
    q.t = t;
    for (std::int64_t v = 1; v <= 2 * t - 1; v += 2) {
        if (v == t || v == t + 1) continue;
        q.elements.push_back(v);
        if (v <= t - 1) q.right.push_back(v);
        if (v >= t + 2) q.left.push_back(v);
    }
    return q;
}

/// t-core test on the diagonal-hook encoding: the hooks must be closed under
/// subtracting 2t (for entries above 2t), and no two entries -- equal indices
/// included -- may sum to a multiple of 2t. The equal-index case h + h = 0
/// (mod 2t), i.e. t | h, does occur for odd t and is required for equivalence
/// with the hook-length definition.
inline bool md_is_t_core(const md_set& m, std::int64_t t) {
    if (t < 1) throw std::invalid_argument("md_is_t_core: t must be >= 1");
    const auto& h = m.hooks();
    for (std::int64_t x : h) {
        if (x > 2 * t && !m.contains(x - 2 * t)) return false;
    }
    for (std::size_t i = 0; i < h.size(); ++i) {
        for (std::size_t j = i; j < h.size(); ++j) {
            if ((h[i] + h[j]) % (2 * t) == 0) return false;
        }
    }
    return true;
}

namespace detail {

/// True iff some pair of distinct entries of the decreasing sequence h sums to
/// target. Two-pointer scan, O(|h|).
inline bool has_pair_sum(std::span<const std::int64_t> h, std::int64_t target) {
    std::size_t lo = 0, hi = h.size();
    while (hi - lo >= 2) {
        const std::int64_t s = h[lo] + h[hi - 1];
        if (s == target) return true;
        if (s > target) ++lo;
        else --hi;
    }
    return false;
}

}  // namespace detail

/// Membership test for DS(t) on the diagonal-hook encoding:
///   (i)   every hook lies in the candidate set of make_q_set(t),
///   (ii)  consecutive hooks differ by at least 4,
///   (iii) no two distinct hooks sum to 2t or 2t+2.
/// Equivalent to is_ds_member_definitional on the encoded partition.
inline bool is_ds_member(const md_set& m, std::int64_t t) {
    if (t < 1) throw std::invalid_argument("is_ds_member: t must be >= 1");
    const auto& h = m.hooks();
    for (std::int64_t x : h) {
        if (x > 2 * t - 1 || x == t || x == t + 1) return false;
    }
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
        if (h[i] - h[i + 1] < 4) return false;
    }
    return !detail::has_pair_sum(h, 2 * t) && !detail::has_pair_sum(h, 2 * t + 2);
}

}  // namespace dscore
