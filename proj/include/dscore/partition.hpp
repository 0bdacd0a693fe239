#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dscore {

/// A box position in a Young diagram. 1-based: row i, column j.
struct cell {
    std::int64_t row = 1;
    std::int64_t col = 1;
};

/// An integer partition: a non-increasing sequence of positive parts.
/// The empty sequence is the empty partition.
class partition {
public:
    partition() = default;

    /// Validates and wraps a part sequence. Throws std::invalid_argument if an
    /// entry is < 1 or the sequence increases anywhere.
    static partition from_parts(std::vector<std::int64_t> raw) {
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] < 1) {
                throw std::invalid_argument("partition: part " + std::to_string(i + 1) +
                                            " is " + std::to_string(raw[i]) + ", must be >= 1");
            }
            if (i > 0 && raw[i] > raw[i - 1]) {
                throw std::invalid_argument("partition: parts increase at position " +
                                            std::to_string(i + 1));
            }
        }
        return partition(std::move(raw));
    }

    const std::vector<std::int64_t>& parts() const { return parts_; }

    /// 1-based row access; caller guarantees 1 <= row <= length().
    std::int64_t part(std::int64_t row) const { return parts_[static_cast<std::size_t>(row - 1)]; }

    /// Number of parts.
    std::int64_t length() const { return static_cast<std::int64_t>(parts_.size()); }

    bool empty() const { return parts_.empty(); }

    /// Sum of the parts, i.e. the number of boxes of the Young diagram.
    std::int64_t size() const {
        return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
    }

    friend bool operator==(const partition&, const partition&) = default;
    friend auto operator<=>(const partition&, const partition&) = default;

private:
    explicit partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {}
    std::vector<std::int64_t> parts_;
};

/// Column counts of the Young diagram (reflection about the main diagonal).
inline partition conjugate(const partition& p) {
    if (p.empty()) return {};
    std::vector<std::int64_t> cols;
    cols.reserve(static_cast<std::size_t>(p.part(1)));
    std::int64_t rows = p.length();
    for (std::int64_t j = 1; j <= p.part(1); ++j) {
        while (rows > 0 && p.part(rows) < j) --rows;
        cols.push_back(rows);
    }
    return partition::from_parts(std::move(cols));
}

inline bool is_self_conjugate(const partition& p) { return p == conjugate(p); }

/// Hook length of box c: arm + leg + 1. The leg is counted by scanning the
/// rows below c.row, so no conjugate is materialized.
inline std::int64_t hook_length(const partition& p, cell c) {
    if (c.row < 1 || c.row > p.length() || c.col < 1 || c.col > p.part(c.row)) {
        throw std::invalid_argument("hook_length: box (" + std::to_string(c.row) + "," +
                                    std::to_string(c.col) + ") is outside the diagram");
    }
    const std::int64_t arm = p.part(c.row) - c.col;
    std::int64_t leg = 0;
    for (std::int64_t r = c.row + 1; r <= p.length() && p.part(r) >= c.col; ++r) ++leg;
    return arm + leg + 1;
}

/// Hook lengths of every box, row-major. The conjugate is computed once so the
/// whole diagram costs O(size).
inline std::vector<std::int64_t> all_hooks(const partition& p) {
    std::vector<std::int64_t> hooks;
    hooks.reserve(static_cast<std::size_t>(p.size()));
    const partition conj = conjugate(p);
    for (std::int64_t i = 1; i <= p.length(); ++i) {
        for (std::int64_t j = 1; j <= p.part(i); ++j) {
            hooks.push_back((p.part(i) - j) + (conj.part(j) - i) + 1);
        }
    }
    return hooks;
}

/// True iff no hook length is divisible by t.
inline bool is_t_core(const partition& p, std::int64_t t) {
    if (t < 1) throw std::invalid_argument("is_t_core: t must be >= 1");
    const partition conj = conjugate(p);
    for (std::int64_t i = 1; i <= p.length(); ++i) {
        for (std::int64_t j = 1; j <= p.part(i); ++j) {
            if (((p.part(i) - j) + (conj.part(j) - i) + 1) % t == 0) return false;
        }
    }
    return true;
}

/// True iff p is a t-core for every t in ts.
inline bool is_simultaneous_core(const partition& p, std::span<const std::int64_t> ts) {
    if (ts.empty()) throw std::invalid_argument("is_simultaneous_core: empty modulus set");
    return std::all_of(ts.begin(), ts.end(), [&](std::int64_t t) { return is_t_core(p, t); });
}

inline bool is_simultaneous_core(const partition& p, std::initializer_list<std::int64_t> ts) {
    return is_simultaneous_core(p, std::span<const std::int64_t>(ts.begin(), ts.size()));
}

/// Side length of the Durfee square: the largest s with at least s parts >= s.
inline std::int64_t durfee_size(const partition& p) {
    std::int64_t s = 0;
    while (s < p.length() && p.part(s + 1) >= s + 1) ++s;
    return s;
}

/// Membership test for the family DS(t) straight from its definition:
/// self-conjugate, simultaneously a t-core and a (t+1)-core, and the first
/// durfee_size(p) parts strictly decreasing. The empty partition is a member
/// for every t.
inline bool is_ds_member_definitional(const partition& p, std::int64_t t) {
    if (t < 1) throw std::invalid_argument("is_ds_member_definitional: t must be >= 1");
    if (!is_self_conjugate(p)) return false;
    if (!is_t_core(p, t) || !is_t_core(p, t + 1)) return false;
    const std::int64_t s = durfee_size(p);
    for (std::int64_t i = 1; i < s; ++i) {
        if (p.part(i) <= p.part(i + 1)) return false;
    }
    return true;
}

/// Visits every partition of every size 0..max_size, the empty partition
/// first, parts passed as a non-increasing sequence.
template <typename Visit>
void for_each_partition(std::int64_t max_size, Visit&& visit) {
    std::vector<std::int64_t> parts;
    auto rec = [&](auto&& self, std::int64_t remaining, std::int64_t cap) -> void {
        visit(std::span<const std::int64_t>(parts));
        for (std::int64_t next = std::min(remaining, cap); next >= 1; --next) {
            parts.push_back(next);
            self(self, remaining - next, next);
            parts.pop_back();
        }
    };
    rec(rec, max_size, max_size);
}

}  // namespace dscore
