#pragma once

#include <cstdint>

namespace hlag {

// C(n, k) in 64-bit arithmetic. Returns 0 when k > n. Throws
// std::overflow_error if the result does not fit.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

// Same as binomial() but returns false instead of throwing on overflow.
bool try_binomial(std::int64_t n, std::int64_t k, std::uint64_t& out) noexcept;

}  // namespace hlag
