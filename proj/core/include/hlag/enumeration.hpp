#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hlag/hypergraph.hpp"

namespace hlag {

struct EnumerationBudget {
    Vertex max_vertices = 40;
    std::uint64_t max_edges = 64;
    std::uint64_t max_instances = 2'000'000;
};

// Return false to stop the enumeration early.
using GraphVisitor = std::function<bool(const Hypergraph&)>;

// Streams every left-compressed r-graph on [n] with exactly m edges, i.e.
// every m-element down-set of the descendant order on [n]^{(r)}. Each one
// is produced exactly once, built as an increasing colex sequence where a
// set is added only after all of its direct descendants. With
// required_prefix = p only down-sets containing the first p colex sets are
// produced. Returns the number of graphs visited.
//
// Throws ResourceLimitError when n, m or the number of graphs exceeds the
// budget, InvalidParametersError when C(n, r) < m.
std::uint64_t enumerate_left_compressed(std::size_t r, std::uint64_t m, Vertex n, const GraphVisitor& visit,
                                        const EnumerationBudget& budget = {}, std::uint64_t required_prefix = 0);

std::vector<Hypergraph> collect_left_compressed(std::size_t r, std::uint64_t m, Vertex n,
                                                const EnumerationBudget& budget = {},
                                                std::uint64_t required_prefix = 0);

// Vertex count that holds every left-compressed r-graph with m edges: an
// edge with largest vertex v forces v - r + 1 edges below it.
Vertex left_compressed_span(std::size_t r, std::uint64_t m);

}  // namespace hlag
