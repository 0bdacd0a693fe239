// Command-line front end: enumerate DS(t), tabulate its statistics, expand the
// generating functions, print the largest members, and run the verification
// suites. Exit status: 0 success, 1 verification failure, 2 usage error.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dscore/render.hpp"

namespace {

struct range {
    std::int64_t lo = 1;
    std::int64_t hi = 1;
};

range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        throw std::invalid_argument("--range expects a..b, got '" + text + "'");
    }
    range r;
    try {
        r.lo = std::stoll(text.substr(0, dots));
        r.hi = std::stoll(text.substr(dots + 2));
    } catch (const std::exception&) {
        throw std::invalid_argument("--range expects a..b with integers, got '" + text + "'");
    }
    if (r.lo < 1 || r.hi < r.lo) {
        throw std::invalid_argument("--range needs 1 <= a <= b, got '" + text + "'");
    }
    return r;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream stream(s);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Self-conjugate (t,t+1)-core partitions with distinct Durfee parts: "
                 "enumeration, statistics, generating functions, extremal members"};
    app.require_subcommand(1);
    std::string format_name = "pretty";

    auto* enumerate = app.add_subcommand("enumerate", "List every member of DS(t)");
    std::int64_t enum_t = 1;
    enumerate->add_option("--t", enum_t, "Family index t")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--format", format_name, "json, csv or pretty");

    auto* counts = app.add_subcommand(
        "counts", "Member count, total hook count, total size and average size for t = 1..max");
    std::int64_t counts_max = 1;
    counts->add_option("--max-t", counts_max, "Largest t")->required()->check(CLI::PositiveNumber);
    counts->add_option("--format", format_name, "json, csv or pretty");

    auto* largest = app.add_subcommand("largest", "The unique largest member of DS(t)");
    std::int64_t largest_t = 0;
    std::string largest_range;
    largest->add_option("--t", largest_t, "Single t")->check(CLI::PositiveNumber);
    largest->add_option("--range", largest_range, "Range a..b of t values");
    largest->add_option("--format", format_name, "json, csv or pretty");

    auto* gf = app.add_subcommand("gf", "Power-series coefficients of a statistic's "
                                        "generating function");
    std::string gf_which;
    std::int64_t gf_terms = 0;
    gf->add_option("which", gf_which, "f (count), g (hook count) or h (total size)")->required();
    gf->add_option("--terms", gf_terms, "Highest power of x")
        ->required()
        ->check(CLI::NonNegativeNumber);
    gf->add_option("--format", format_name, "json, csv or pretty");

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    std::int64_t verify_max = 1;
    std::string suites_arg = "roundtrip,characterization,recurrence,gf,bijections,extremal";
    verify->add_option("--max-t", verify_max,
                       "Bound: t for recurrence/gf/bijections/extremal, partition size for "
                       "roundtrip/characterization (characterization fixes t in 1..12)")
        ->required()
        ->check(CLI::PositiveNumber);
    verify->add_option("--suite", suites_arg, "Comma-separated subset of "
                                              "roundtrip,characterization,recurrence,gf,"
                                              "bijections,extremal");
    verify->add_option("--format", format_name, "json or pretty");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const dscore::render::format fmt = dscore::render::parse_format(format_name);

        if (enumerate->parsed()) {
            std::cout << dscore::render::enumerate_output(enum_t, fmt);
            return 0;
        }
        if (counts->parsed()) {
            std::cout << dscore::render::counts_output(counts_max, fmt);
            return 0;
        }
        if (largest->parsed()) {
            range r;
            if (!largest_range.empty()) {
                r = parse_range(largest_range);
            } else if (largest_t >= 1) {
                r = {largest_t, largest_t};
            } else {
                std::cerr << "largest: provide --t or --range\n";
                return 2;
            }
            std::cout << dscore::render::largest_output(r.lo, r.hi, fmt);
            return 0;
        }
        if (gf->parsed()) {
            std::cout << dscore::render::gf_output(dscore::render::parse_statistic(gf_which),
                                                   gf_terms, fmt);
            return 0;
        }
        if (verify->parsed()) {
            std::vector<dscore::render::suite_outcome> outcomes;
            for (const std::string& name : split_commas(suites_arg)) {
                dscore::check_result r;
                if (name == "roundtrip") {
                    r = dscore::check_roundtrip(verify_max, 1000);
                } else if (name == "characterization") {
                    r = dscore::check_characterization(verify_max, 12);
                } else if (name == "recurrence") {
                    r = dscore::check_recurrence(verify_max);
                } else if (name == "gf") {
                    r = dscore::check_gf(verify_max);
                } else if (name == "bijections") {
                    r = verify_max >= 4 ? dscore::check_bijections(verify_max)
                                        : dscore::check_result{};
                } else if (name == "extremal") {
                    r = verify_max >= 3 ? dscore::check_extremal(verify_max)
                                        : dscore::check_result{};
                    if (r.ok) {
                        // the closed construction is cheap to sweep far past
                        // anything enumeration can reach
                        r = dscore::check_extremal_construction(
                            std::max<std::int64_t>(verify_max, 10000));
                    }
                } else {
                    std::cerr << "verify: unknown suite '" << name << "'\n";
                    return 2;
                }
                outcomes.push_back({name, r});
            }
            bool all = true;
            for (const auto& o : outcomes) {
                all = all && o.result.ok;
                if (fmt != dscore::render::format::json) {
                    std::cout << (o.result.ok ? "PASS " : "FAIL ") << o.name;
                    if (!o.result.detail.empty()) std::cout << "  " << o.result.detail;
                    std::cout << "\n";
                }
            }
            if (fmt == dscore::render::format::json) {
                std::cout << dscore::render::verify_record(verify_max, outcomes).dump() << "\n";
            }
            return all ? 0 : 1;
        }
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
