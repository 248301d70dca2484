#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "hlag/rset.hpp"

namespace hlag {

// A < B iff max(A symmetric-difference B) lies in B.
std::strong_ordering colex_compare(const RSet& a, const RSet& b);

// 1-based position in the colex ordering of all r-subsets of the positive
// integers; {1..r} has rank 1.
std::uint64_t colex_rank(const RSet& a);

RSet colex_unrank(std::uint64_t rank, std::size_t r);

// Every set b != a with b[s] <= a[s] for each position s. With direct_only,
// only those whose coordinate sum is one less. Result is in colex order.
std::vector<RSet> descendants(const RSet& a, bool direct_only);

// Sets obtained by raising one coordinate of a by one, staying inside [n].
std::vector<RSet> direct_ancestors(const RSet& a, Vertex n);

// True iff b is a descendant of a.
bool is_descendant(const RSet& b, const RSet& a);

}  // namespace hlag
