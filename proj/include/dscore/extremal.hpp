#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dscore/enumeration.hpp"
#include "dscore/md_set.hpp"

namespace dscore {

/// Shape class of the maximum-size member of DS(t). For t >= 6 the maximizer's
/// diagonal hooks run down from 2t-1 in gaps of 4, then gaps of 6; the class
/// decides where the switch happens and at which value the chain stops.
enum class extremal_case {
    tiny,     // t <= 5: at most one diagonal hook
    a,        // gap-4 run of length floor((2t+1)/12), chain ends at 1+4*floor
    b,        // gap-4 run two longer, chain ends at 9+4*floor
    b_small,  // degenerate b (even t, surplus 1): all gaps 4, chain ends at t+3
    c,        // gap-4 run one longer, chain ends at 5+4*floor
};

inline std::string_view to_string(extremal_case c) {
    switch (c) {
        case extremal_case::tiny: return "tiny";
        case extremal_case::a: return "A";
        case extremal_case::b: return "B";
        case extremal_case::b_small: return "B-small";
        case extremal_case::c: return "C";
    }
    return "?";
}

/// Classification data for the maximum-size member of DS(t).
struct extremal_report {
    std::int64_t t = 1;
    std::int64_t gap4_floor = 0;  // floor((2t+1)/12), lower bound on the gap-4 run
    std::int64_t surplus = 0;     // |upper half of the candidate set| - 2*gap4_floor
    bool t_even = false;
    extremal_case tag = extremal_case::tiny;
    std::int64_t gap4_len = 0;  // hooks in the gap-4 run, switch point to gap 6
    std::int64_t endpoint = 0;  // smallest hook of the maximizer (0 when it is empty)
    md_set md;                  // filled by extremal()
    std::int64_t size = 0;      // filled by extremal()
};

/// Decides the shape class of the maximizer. md/size are left empty; see
/// extremal(). The even and odd surplus residues pair up as
/// even:(0,1,2)->(a,b,c) and odd:(2,0,1)->(a,b,c).
inline extremal_report classify_extremal(std::int64_t t) {
    if (t < 1) throw std::invalid_argument("classify_extremal: t must be >= 1");
    extremal_report r;
    r.t = t;
    r.t_even = (t % 2 == 0);
    r.gap4_floor = (2 * t + 1) / 12;
    r.surplus = (r.t_even ? t / 2 - 1 : (t - 1) / 2) - 2 * r.gap4_floor;
    if (t <= 5) {
        r.tag = extremal_case::tiny;
        r.gap4_len = (t == 1) ? 0 : 1;
        r.endpoint = (t == 1) ? 0 : (t == 2 ? 1 : 2 * t - 1);
        return r;
    }
    if (r.surplus < 0) {
        throw std::logic_error("classify_extremal: negative surplus at t=" + std::to_string(t));
    }
    const int residue = static_cast<int>(r.surplus % 3);
    if (r.t_even) {
        r.tag = residue == 0   ? extremal_case::a
                : residue == 1 ? extremal_case::b
                               : extremal_case::c;
    } else {
        r.tag = residue == 2   ? extremal_case::a
                : residue == 0 ? extremal_case::b
                               : extremal_case::c;
    }
    if (r.tag == extremal_case::b && r.t_even && r.surplus == 1) {
        r.tag = extremal_case::b_small;
        // whole chain in gaps of 4, from 2t-1 down to t+3
        if ((t - 4) % 4 != 0) {
            throw std::logic_error("classify_extremal: b_small chain misaligned at t=" +
                                   std::to_string(t));
        }
        r.gap4_len = (t - 4) / 4 + 1;
        r.endpoint = t + 3;
        return r;
    }
    switch (r.tag) {
        case extremal_case::a:
            r.gap4_len = r.gap4_floor;
            r.endpoint = 1 + 4 * r.gap4_floor;
            break;
        case extremal_case::b:
            r.gap4_len = r.gap4_floor + 2;
            r.endpoint = 9 + 4 * r.gap4_floor;
            break;
        case extremal_case::c:
            r.gap4_len = r.gap4_floor + 1;
            r.endpoint = 5 + 4 * r.gap4_floor;
            break;
        default: break;
    }
    return r;
}

/// Diagonal hooks of the maximum-size member of DS(t): the chain from 2t-1
/// down in gaps of 4 (gap4_len hooks), then gaps of 6, stopping exactly on the
/// classified endpoint. Throws std::logic_error if the chain misses the
/// endpoint or fails membership -- a construction bug, never bad input.
inline md_set extremal_md(std::int64_t t) {
    const extremal_report r = classify_extremal(t);
    if (t == 1) return {};
    std::vector<std::int64_t> hooks{t == 2 ? 1 : 2 * t - 1};
    if (t > 5) {
        std::int64_t taken = 1;
        while (hooks.back() != r.endpoint) {
            hooks.push_back(hooks.back() - (taken < r.gap4_len ? 4 : 6));
            ++taken;
            if (hooks.back() < r.endpoint) {
                throw std::logic_error("extremal_md: chain missed endpoint at t=" +
                                       std::to_string(t));
            }
        }
    }
    md_set result = md_set::from_hooks(std::move(hooks));
    if (!is_ds_member(result, t)) {
        throw std::logic_error("extremal_md: construction left DS(t) at t=" + std::to_string(t));
    }
    return result;
}

/// Maximum member size of DS(t), closed form per shape class. Cross-checked
/// against the constructed chain on every call.
inline std::int64_t extremal_size(std::int64_t t) {
    const extremal_report r = classify_extremal(t);
    std::int64_t m = 0;
    if (t == 1) {
        m = 0;
    } else if (t == 2) {
        m = 1;
    } else if (t <= 5) {
        m = 2 * t - 1;
    } else {
        const std::int64_t L = r.gap4_floor;
        std::int64_t prod = 0;
        switch (r.tag) {
            case extremal_case::a:
                prod = (t - 1) * (t + 1 - 4 * L);
                m = prod / 3 + L * (2 * t + 1 - 2 * L);
                break;
            case extremal_case::b:
            case extremal_case::b_small:
                prod = (t - 1) * (t - 7 - 4 * L);
                m = prod / 3 + (L + 2) * (2 * t - 3 - 2 * L);
                break;
            case extremal_case::c:
                prod = (t - 1) * (t - 3 - 4 * L);
                m = prod / 3 + (L + 1) * (2 * t - 1 - 2 * L);
                break;
            default: break;
        }
        if (prod % 3 != 0) {
            throw std::logic_error("extremal_size: non-integral term at t=" + std::to_string(t));
        }
    }
    if (m != extremal_md(t).sum()) {
        throw std::logic_error("extremal_size: closed form disagrees with the chain at t=" +
                               std::to_string(t));
    }
    return m;
}

/// Classification with the maximizer and its size filled in.
inline extremal_report extremal(std::int64_t t) {
    extremal_report r = classify_extremal(t);
    r.md = extremal_md(t);
    r.size = extremal_size(t);
    return r;
}

/// Chain oracle: starting from 2t-1, repeatedly append the largest admissible
/// next hook among {last-4, last-6}, stopping when neither keeps the set in
/// DS(t). Matches the closed construction in the all-gap-4 (b_small) class;
/// used there as a second, formula-free route.
inline md_set extremal_md_greedy(std::int64_t t) {
    if (t < 3) throw std::invalid_argument("extremal_md_greedy: t must be >= 3");
    std::vector<std::int64_t> hooks{2 * t - 1};
    for (;;) {
        bool grew = false;
        for (std::int64_t gap : {4, 6}) {
            const std::int64_t v = hooks.back() - gap;
            if (v < 1) continue;
            bool clash = false;
            for (std::int64_t x : hooks) {
                if (x + v == 2 * t || x + v == 2 * t + 2) {
                    clash = true;
                    break;
                }
            }
            if (clash || v == t || v == t + 1) continue;
            hooks.push_back(v);
            grew = true;
            break;
        }
        if (!grew) break;
    }
    return md_set::from_hooks(std::move(hooks));
}

/// Result of brute-force verification of the extremal description at one t.
struct extremal_check {
    std::int64_t t = 3;
    md_set maximizer;
    std::int64_t max_size = 0;
    std::int64_t maximizer_count = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Enumerates DS(t) and checks everything the closed description claims:
/// unique maximizer, equal to extremal_md(t) with size extremal_size(t), and
/// the structural facts about its hooks (2t-1 present; 1, 3, 2t-3 absent; gaps
/// in {4,6}; once a gap is 6 the rest are; a 6-gap high in the candidate range
/// forces the mirror hook 2t+4-h; the gap-4 run length within the classified
/// window). Violations are recorded, not thrown.
inline extremal_check verify_extremal(std::int64_t t) {
    if (t < 3) throw std::invalid_argument("verify_extremal: t must be >= 3");
    extremal_check out;
    out.t = t;

    std::vector<std::int64_t> best;
    std::int64_t best_sum = -1, best_count = 0;
    for_each_ds(t, [&](std::span<const std::int64_t> chain) {
        std::int64_t s = 0;
        for (std::int64_t h : chain) s += h;
        if (s > best_sum) {
            best_sum = s;
            best_count = 1;
            best.assign(chain.begin(), chain.end());
        } else if (s == best_sum) {
            ++best_count;
        }
    });
    out.maximizer = md_set::from_hooks(std::move(best));
    out.max_size = best_sum;
    out.maximizer_count = best_count;

    auto flag = [&](std::string msg) { out.violations.push_back(std::move(msg)); };
    if (best_count != 1) flag("maximizer not unique: " + std::to_string(best_count) + " found");
    if (out.maximizer != extremal_md(t)) {
        flag("maximizer " + out.maximizer.to_string() + " != constructed " +
             extremal_md(t).to_string());
    }
    if (best_sum != extremal_size(t)) {
        flag("max size " + std::to_string(best_sum) + " != closed form " +
             std::to_string(extremal_size(t)));
    }

    const md_set& m = out.maximizer;
    if (!m.contains(2 * t - 1)) flag("2t-1 missing from the maximizer");
    for (std::int64_t bad : {std::int64_t{1}, std::int64_t{3}, 2 * t - 3}) {
        if (m.contains(bad)) flag("forbidden hook " + std::to_string(bad) + " present");
    }

    if (t >= 6) {
        const std::vector<std::int64_t> d = diff_seq(m);
        bool seen6 = false;
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (d[i] != 4 && d[i] != 6) flag("gap " + std::to_string(d[i]) + " outside {4,6}");
            if (seen6 && d[i] == 4) flag("gap 4 after a gap 6 at index " + std::to_string(i));
            if (d[i] == 6) {
                seen6 = true;
                const std::int64_t hi = m.hooks()[i], lo = m.hooks()[i + 1];
                if (hi >= t + 2 && lo >= t + 2 && !m.contains(2 * t + 4 - hi)) {
                    flag("6-gap at " + std::to_string(hi) + " without mirror hook " +
                         std::to_string(2 * t + 4 - hi));
                }
            }
        }
        if (m.count() >= 2) {
            std::int64_t run = 1;
            while (run - 1 < static_cast<std::int64_t>(d.size()) &&
                   d[static_cast<std::size_t>(run - 1)] == 4) {
                ++run;
            }
            const std::int64_t L = classify_extremal(t).gap4_floor;
            if (run < L || run > L + 2) {
                flag("gap-4 run " + std::to_string(run) + " outside [" + std::to_string(L) +
                     ", " + std::to_string(L + 2) + "]");
            }
        }
        if (classify_extremal(t).tag == extremal_case::b_small &&
            extremal_md_greedy(t) != m) {
            flag("greedy chain disagrees with the maximizer");
        }
    }
    return out;
}

}  // namespace dscore
