#pragma once

#include <cstddef>
#include <vector>

#include "hlag/hypergraph.hpp"

namespace hlag {

inline constexpr Vertex kDefaultCliqueBudget = 20;

// Order of a largest clique; r - 1 for an edgeless graph. Left-compressed
// graphs are answered from the colex prefix without a vertex budget,
// others by branch and bound when n <= budget (ResourceLimitError otherwise).
std::size_t max_clique_order(const Hypergraph& g, Vertex budget = kDefaultCliqueBudget);

// Vertices of one largest clique (lexicographically first among those found).
// Empty when the graph has no edge.
std::vector<Vertex> find_max_clique(const Hypergraph& g, Vertex budget = kDefaultCliqueBudget);

// Maximal cliques of order >= r, largest first then lexicographic. Search
// stops after `limit` cliques or `node_budget` search nodes, whichever comes
// first, so the list may be partial on dense inputs.
std::vector<std::vector<Vertex>> maximal_cliques(const Hypergraph& g, std::size_t limit,
                                                 std::size_t node_budget = 200'000);

// Some (t-1)-subset of vertices spans at least C(t-1, r) - 1 edges.
bool contains_near_clique(const Hypergraph& g, std::size_t t);

// Whether the vertex set spans every r-subset.
bool is_clique(const Hypergraph& g, const std::vector<Vertex>& vertices);

}  // namespace hlag
