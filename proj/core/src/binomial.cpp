#include "hlag/binomial.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace hlag {

namespace {
__extension__ typedef unsigned __int128 u128;
}

bool try_binomial(std::int64_t n, std::int64_t k, std::uint64_t& out) noexcept {
    if (k < 0 || n < 0 || k > n) {
        out = 0;
        return true;
    }
    if (k > n - k) k = n - k;
    u128 acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // acc * (n - k + i) / i stays integral at every step.
        acc = acc * static_cast<u128>(n - k + i) / static_cast<u128>(i);
        if (acc > UINT64_MAX) return false;
    }
    out = static_cast<std::uint64_t>(acc);
    return true;
}

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
    std::uint64_t out = 0;
    if (!try_binomial(n, k, out)) {
        throw std::overflow_error("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                                  ") overflows 64 bits");
    }
    return out;
}

}  // namespace hlag
