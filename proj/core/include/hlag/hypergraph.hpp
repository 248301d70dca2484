#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hlag/rset.hpp"

namespace hlag {

// An r-uniform hypergraph on the vertex set [n]. Edges are kept in colex
// order, so iteration is deterministic and matches the canonical file form.
class Hypergraph {
public:
    Hypergraph(std::size_t r, Vertex n, std::vector<RSet> edges);

    static Hypergraph edgeless(std::size_t r, Vertex n) { return {r, n, {}}; }

    std::size_t r() const noexcept { return r_; }
    Vertex n() const noexcept { return n_; }
    std::size_t m() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }

    std::span<const RSet> edges() const noexcept { return edges_; }
    // Colex ranks of the edges, ascending.
    std::span<const std::uint64_t> ranks() const noexcept { return ranks_; }
    // Edges flattened row-major as 0-based vertex indices, r per edge.
    std::span<const std::uint32_t> flat_edges() const noexcept { return flat_; }

    bool contains(const RSet& e) const;
    std::size_t degree(Vertex v) const;

    // Largest vertex that appears in an edge, or 0 when edgeless.
    Vertex max_used_vertex() const noexcept;

    // Same edges on [max(r, max_used_vertex())].
    Hypergraph trimmed() const;
    // Same edges on [n]; n must cover every edge.
    Hypergraph on_vertices(Vertex n) const;

    // Copies with one edge added or removed.
    Hypergraph with_edge(const RSet& e) const;
    Hypergraph without_edge(const RSet& e) const;

    bool operator==(const Hypergraph& other) const {
        return r_ == other.r_ && n_ == other.n_ && ranks_ == other.ranks_;
    }

private:
    std::size_t r_;
    Vertex n_;
    std::vector<RSet> edges_;
    std::vector<std::uint64_t> ranks_;
    std::vector<std::uint32_t> flat_;
};

// C_{r,m}: the first m r-sets in colex order, on [largest vertex used].
Hypergraph colex_graph(std::size_t r, std::uint64_t m);

// [t]^{(r)}.
Hypergraph complete_graph(Vertex t, std::size_t r);

// All k-subsets of [n] in colex order.
std::vector<RSet> all_subsets(Vertex n, std::size_t k);

}  // namespace hlag
