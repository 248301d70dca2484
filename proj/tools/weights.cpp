#include "weights.hpp"

#include <charconv>
#include <string>

#include "hlag/errors.hpp"

namespace hlag::cli {

namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
}

// cpp_int reads a leading 0 as an octal prefix.
cpp_int decimal_int(std::string_view digits) {
    const auto first = digits.find_first_not_of('0');
    return first == std::string_view::npos ? cpp_int(0) : cpp_int(std::string(digits.substr(first)));
}

std::optional<ExactRational> exact_decimal(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto dot = s.find('.');
    const std::string_view whole = s.substr(0, dot);
    const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) return std::nullopt;
    const cpp_int num = decimal_int(std::string(whole) + std::string(frac));
    cpp_int den = boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(frac.size()));
    return ExactRational(num, den);
}

}  // namespace

ParsedWeight parse_weight(std::string_view text) {
    const std::string shown(text);
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw InvalidParametersError("bad weight \"" + shown + "\"");
        const cpp_int d = decimal_int(den);
        if (d == 0) throw InvalidParametersError("zero denominator in \"" + shown + "\"");
        ExactRational q(decimal_int(num), d);
        return {static_cast<double>(q), q};
    }
    if (auto q = exact_decimal(text)) return {static_cast<double>(*q), *q};
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InvalidParametersError("bad weight \"" + shown + "\"");
    }
    return {v, std::nullopt};
}

std::vector<ParsedWeight> parse_weight_list(std::string_view text) {
    std::vector<ParsedWeight> out;
    while (true) {
        const auto comma = text.find(',');
        out.push_back(parse_weight(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace hlag::cli
