#pragma once

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dscore/bigint.hpp"
#include "dscore/enumeration.hpp"
#include "dscore/extremal.hpp"
#include "dscore/md_set.hpp"
#include "dscore/series.hpp"
#include "dscore/verify.hpp"

namespace dscore::render {

using nlohmann::json;

enum class format { json, csv, pretty };

inline format parse_format(std::string_view s) {
    if (s == "json") return format::json;
    if (s == "csv") return format::csv;
    if (s == "pretty") return format::pretty;
    throw std::invalid_argument("unknown format '" + std::string(s) +
                                "', expected json, csv or pretty");
}

inline ds_statistic parse_statistic(std::string_view s) {
    if (s == "f") return ds_statistic::count;
    if (s == "g") return ds_statistic::hook_count;
    if (s == "h") return ds_statistic::total_size;
    throw std::invalid_argument("unknown series '" + std::string(s) + "', expected f, g or h");
}

inline std::string_view statistic_name(ds_statistic s) {
    switch (s) {
        case ds_statistic::count: return "f";
        case ds_statistic::hook_count: return "g";
        case ds_statistic::total_size: return "h";
    }
    return "?";
}

namespace detail {

/// "a b c" for a quoted CSV field; empty for the empty sequence.
inline std::string joined(const std::vector<std::int64_t>& xs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ' ';
        out << xs[i];
    }
    return out.str();
}

/// "(a,b,c)" partition display, "()" when empty.
inline std::string partition_text(const partition& p) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) out << ',';
        out << p.parts()[i];
    }
    out << ')';
    return out.str();
}

}  // namespace detail

// ---- record builders (the JSON layer; csv/pretty render from the same data)

inline json enumerate_record(std::int64_t t) {
    json members = json::array();
    for (const md_set& m : enumerate_ds(t)) {
        members.push_back({{"md", m.hooks()}, {"parts", partition_from_md(m).parts()}});
    }
    return {{"schema_version", "1"},
            {"command", "enumerate"},
            {"t", t},
            {"count", std::to_string(members.size())},
            {"members", members}};
}

inline json counts_record(std::int64_t max_t) {
    const auto table = stats_table(max_t);
    // the recurrence view must agree with the series view before anything is
    // printed; the statistic at t sits at x^(t+1)
    const auto f = gf_coeffs(ds_statistic::count, static_cast<std::size_t>(max_t + 1));
    const auto g = gf_coeffs(ds_statistic::hook_count, static_cast<std::size_t>(max_t + 1));
    const auto h = gf_coeffs(ds_statistic::total_size, static_cast<std::size_t>(max_t + 1));
    json rows = json::array();
    for (const ds_stats& row : table) {
        const auto i = static_cast<std::size_t>(row.t + 1);
        if (f[i] != row.count || g[i] != row.hook_count || h[i] != row.total_size) {
            throw std::logic_error("counts: series cross-check failed at t=" +
                                   std::to_string(row.t));
        }
        rows.push_back({{"t", row.t},
                        {"count", row.count.str()},
                        {"hook_count", row.hook_count.str()},
                        {"total_size", row.total_size.str()},
                        {"avg_size", to_fraction_string(big_rat(row.total_size, row.count))}});
    }
    return {{"schema_version", "1"}, {"command", "counts"}, {"max_t", max_t}, {"rows", rows}};
}

inline json largest_record(std::int64_t lo, std::int64_t hi) {
    json rows = json::array();
    for (std::int64_t t = lo; t <= hi; ++t) {
        const extremal_report r = extremal(t);
        rows.push_back({{"t", t},
                        {"md", r.md.hooks()},
                        {"size", std::to_string(r.size)},
                        {"case", std::string(to_string(r.tag))}});
    }
    return {{"schema_version", "1"},
            {"command", "largest"},
            {"t_min", lo},
            {"t_max", hi},
            {"rows", rows}};
}

inline json gf_record(ds_statistic which, std::int64_t terms) {
    json coeffs = json::array();
    for (const big_int& c : gf_coeffs(which, static_cast<std::size_t>(terms))) {
        coeffs.push_back(c.str());
    }
    return {{"schema_version", "1"},
            {"command", "gf"},
            {"which", std::string(statistic_name(which))},
            {"terms", terms},
            {"coefficients", coeffs}};
}

struct suite_outcome {
    std::string name;
    check_result result;
};

inline json verify_record(std::int64_t max_t, const std::vector<suite_outcome>& outcomes) {
    json suites = json::array();
    bool all = true;
    for (const suite_outcome& s : outcomes) {
        all = all && s.result.ok;
        suites.push_back(
            {{"name", s.name}, {"pass", s.result.ok}, {"detail", s.result.detail}});
    }
    return {{"schema_version", "1"},
            {"command", "verify"},
            {"max_t", max_t},
            {"suites", suites},
            {"pass", all}};
}

// ---- flat renderings

inline std::string enumerate_csv(std::int64_t t) {
    std::ostringstream out;
    out << "t,index,md,parts\n";
    std::int64_t i = 0;
    for (const md_set& m : enumerate_ds(t)) {
        out << t << ',' << i++ << ",\"" << detail::joined(m.hooks()) << "\",\""
            << detail::joined(partition_from_md(m).parts()) << "\"\n";
    }
    return out.str();
}

inline std::string enumerate_pretty(std::int64_t t) {
    const auto members = enumerate_ds(t);
    std::ostringstream out;
    out << "DS(" << t << "): " << members.size() << " member(s)\n";
    for (const md_set& m : members) {
        out << "  " << detail::partition_text(partition_from_md(m)) << "   md " << m.to_string()
            << "\n";
    }
    return out.str();
}

inline std::string counts_csv(std::int64_t max_t) {
    const json rec = counts_record(max_t);
    std::ostringstream out;
    out << "t,count,hook_count,total_size,avg_size\n";
    for (const json& row : rec["rows"]) {
        out << row["t"].get<std::int64_t>() << ',' << row["count"].get<std::string>() << ','
            << row["hook_count"].get<std::string>() << ','
            << row["total_size"].get<std::string>() << ','
            << row["avg_size"].get<std::string>() << "\n";
    }
    return out.str();
}

inline std::string counts_pretty(std::int64_t max_t) {
    const json rec = counts_record(max_t);
    std::ostringstream out;
    out << std::setw(6) << "t" << std::setw(16) << "count" << std::setw(16) << "hooks"
        << std::setw(18) << "total size" << "  avg size\n";
    for (const json& row : rec["rows"]) {
        out << std::setw(6) << row["t"].get<std::int64_t>() << std::setw(16)
            << row["count"].get<std::string>() << std::setw(16)
            << row["hook_count"].get<std::string>() << std::setw(18)
            << row["total_size"].get<std::string>() << "  " << row["avg_size"].get<std::string>()
            << "\n";
    }
    return out.str();
}

inline std::string largest_csv(std::int64_t lo, std::int64_t hi) {
    std::ostringstream out;
    out << "t,md,size,case\n";
    for (std::int64_t t = lo; t <= hi; ++t) {
        const extremal_report r = extremal(t);
        out << t << ",\"" << detail::joined(r.md.hooks()) << "\"," << r.size << ','
            << to_string(r.tag) << "\n";
    }
    return out.str();
}

inline std::string largest_pretty(std::int64_t lo, std::int64_t hi) {
    std::ostringstream out;
    out << std::setw(6) << "t" << std::setw(12) << "size" << std::setw(10) << "case"
        << "  md\n";
    for (std::int64_t t = lo; t <= hi; ++t) {
        const extremal_report r = extremal(t);
        out << std::setw(6) << t << std::setw(12) << r.size << std::setw(10) << to_string(r.tag)
            << "  " << r.md.to_string() << "\n";
    }
    return out.str();
}

inline std::string gf_csv(ds_statistic which, std::int64_t terms) {
    const auto coeffs = gf_coeffs(which, static_cast<std::size_t>(terms));
    std::ostringstream out;
    out << "n,coefficient\n";
    for (std::size_t i = 0; i < coeffs.size(); ++i) out << i << ',' << coeffs[i].str() << "\n";
    return out.str();
}

inline std::string gf_pretty(ds_statistic which, std::int64_t terms) {
    const auto coeffs = gf_coeffs(which, static_cast<std::size_t>(terms));
    std::ostringstream out;
    out << "series " << statistic_name(which) << ", coefficients of x^0..x^" << terms << ":\n";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        out << "  x^" << i << "  " << coeffs[i].str() << "\n";
    }
    return out.str();
}

inline std::string enumerate_output(std::int64_t t, format f) {
    switch (f) {
        case format::json: return enumerate_record(t).dump() + "\n";
        case format::csv: return enumerate_csv(t);
        case format::pretty: return enumerate_pretty(t);
    }
    return {};
}

inline std::string counts_output(std::int64_t max_t, format f) {
    switch (f) {
        case format::json: return counts_record(max_t).dump() + "\n";
        case format::csv: return counts_csv(max_t);
        case format::pretty: return counts_pretty(max_t);
    }
    return {};
}

inline std::string largest_output(std::int64_t lo, std::int64_t hi, format f) {
    switch (f) {
        case format::json: return largest_record(lo, hi).dump() + "\n";
        case format::csv: return largest_csv(lo, hi);
        case format::pretty: return largest_pretty(lo, hi);
    }
    return {};
}

inline std::string gf_output(ds_statistic which, std::int64_t terms, format f) {
    switch (f) {
        case format::json: return gf_record(which, terms).dump() + "\n";
        case format::csv: return gf_csv(which, terms);
        case format::pretty: return gf_pretty(which, terms);
    }
    return {};
}

}  // namespace dscore::render
