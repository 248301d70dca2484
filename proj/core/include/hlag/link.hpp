#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hlag/hypergraph.hpp"

namespace hlag {

// The family of (r - |pinned|)-sets that complete to an edge (or, when
// complemented, to a non-edge) through the pinned vertices. With a
// difference vertex j and a single pinned i this is E_{i\j} = E_i minus the
// sets that also complete to an edge through j.
struct LinkView {
    std::vector<Vertex> pinned;
    bool complemented = false;
    std::optional<Vertex> difference_against;
    std::size_t set_size = 0;
    std::vector<RSet> sets;  // colex order

    bool empty() const noexcept { return sets.empty(); }
    std::size_t size() const noexcept { return sets.size(); }
    std::string label() const;
};

LinkView link(const Hypergraph& g, std::vector<Vertex> pinned, bool complemented = false,
              std::optional<Vertex> difference_against = std::nullopt);

}  // namespace hlag
