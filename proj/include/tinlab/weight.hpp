#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tinlab {

/// Exact nonnegative rational vertex/member weight.
using Weight = boost::multiprecision::cpp_rational;

/// Parses "3", "1.25", ".5" or "7/4" exactly. Throws InputError on junk or
/// negative values.
Weight parse_weight(std::string_view text);

/// Integers print as "3", terminating decimals as "1.25", the rest as "p/q".
/// parse_weight(format_weight(w)) == w.
std::string format_weight(const Weight& w);

}  // namespace tinlab
