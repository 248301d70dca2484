#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hlag {

using Vertex = std::uint32_t;

// A sorted set of r distinct 1-based vertex labels.
class RSet {
public:
    RSet() = default;
    RSet(std::initializer_list<Vertex> elems);
    explicit RSet(std::vector<Vertex> elems);

    // Sorts and validates; duplicates or a zero label are rejected.
    static RSet from_unsorted(std::vector<Vertex> elems);

    std::size_t r() const noexcept { return elems_.size(); }
    Vertex operator[](std::size_t i) const { return elems_[i]; }
    Vertex min() const { return elems_.front(); }
    Vertex max() const { return elems_.back(); }
    std::span<const Vertex> elements() const noexcept { return elems_; }
    auto begin() const noexcept { return elems_.begin(); }
    auto end() const noexcept { return elems_.end(); }

    bool contains(Vertex v) const noexcept;
    std::uint64_t coordinate_sum() const noexcept;

    // Set with v removed; v must be a member.
    RSet without(Vertex v) const;
    // Set with v inserted; v must not be a member.
    RSet with(Vertex v) const;

    std::string to_string() const;

    bool operator==(const RSet&) const = default;
    // Colex order. Throws UniformityMismatchError when sizes differ.
    std::strong_ordering operator<=>(const RSet& other) const;

private:
    std::vector<Vertex> elems_;
};

// The initial segment {1, ..., k} as a set.
RSet initial_segment(std::size_t k);

}  // namespace hlag
