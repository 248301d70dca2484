#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hlag::cli {

using ExactRational = boost::multiprecision::cpp_rational;

// One weight as given on the command line: "1/3", "0.25", "1e-3".
struct ParsedWeight {
    double value = 0.0;
    // Set for fractions and plain decimals; absent for exponent forms.
    std::optional<ExactRational> exact;
};

ParsedWeight parse_weight(std::string_view text);
std::vector<ParsedWeight> parse_weight_list(std::string_view text);

}  // namespace hlag::cli
