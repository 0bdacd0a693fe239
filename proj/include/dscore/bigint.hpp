#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace dscore {

using big_int = boost::multiprecision::cpp_int;
using big_rat = boost::multiprecision::cpp_rational;

/// Decimal rendering of an exact rational, reduced, "p/q" with "/q" omitted
/// when the denominator is 1.
inline std::string to_fraction_string(const big_rat& r) {
    std::string s = boost::multiprecision::numerator(r).str();
    if (boost::multiprecision::denominator(r) != 1) {
        s += "/";
        s += boost::multiprecision::denominator(r).str();
    }
    return s;
}

}  // namespace dscore
