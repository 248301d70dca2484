#include "hlag/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "hlag/binomial.hpp"
#include "hlag/colex.hpp"
#include "hlag/errors.hpp"

namespace hlag {

Hypergraph::Hypergraph(std::size_t r, Vertex n, std::vector<RSet> edges)
    : r_(r), n_(n), edges_(std::move(edges)) {
    if (r < 2) throw InvalidParametersError("uniformity must be at least 2, got " + std::to_string(r));
    if (n < r) {
        throw InvalidParametersError("vertex count " + std::to_string(n) + " is below uniformity " +
                                     std::to_string(r));
    }
    for (const auto& e : edges_) {
        if (e.r() != r) {
            throw UniformityMismatchError("edge " + e.to_string() + " is not a " + std::to_string(r) + "-set");
        }
        if (e.max() > n) {
            throw IndexError("edge " + e.to_string() + " uses a vertex above n = " + std::to_string(n));
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        throw InvalidParametersError("duplicate edge " + dup->to_string());
    }
    ranks_.reserve(edges_.size());
    flat_.reserve(edges_.size() * r);
    for (const auto& e : edges_) {
        ranks_.push_back(colex_rank(e));
        for (Vertex v : e) flat_.push_back(v - 1);
    }
}

bool Hypergraph::contains(const RSet& e) const {
    if (e.r() != r_) throw UniformityMismatchError("membership query with a set of the wrong size");
    if (e.r() > 0 && e.max() > n_) return false;
    return std::binary_search(ranks_.begin(), ranks_.end(), colex_rank(e));
}

std::size_t Hypergraph::degree(Vertex v) const {
    if (v < 1 || v > n_) throw IndexError("vertex " + std::to_string(v) + " outside [" + std::to_string(n_) + "]");
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [v](const RSet& e) { return e.contains(v); }));
}

Vertex Hypergraph::max_used_vertex() const noexcept {
    // Colex order puts an edge with the largest maximum last.
    return edges_.empty() ? 0 : edges_.back().max();
}

Hypergraph Hypergraph::trimmed() const {
    return on_vertices(std::max<Vertex>(static_cast<Vertex>(r_), max_used_vertex()));
}

Hypergraph Hypergraph::on_vertices(Vertex n) const { return {r_, n, edges_}; }

Hypergraph Hypergraph::with_edge(const RSet& e) const {
    auto edges = edges_;
    edges.push_back(e);
    return {r_, n_, std::move(edges)};
}

Hypergraph Hypergraph::without_edge(const RSet& e) const {
    auto edges = edges_;
    auto it = std::find(edges.begin(), edges.end(), e);
    if (it == edges.end()) throw IndexError("edge " + e.to_string() + " not present");
    edges.erase(it);
    return {r_, n_, std::move(edges)};
}

Hypergraph colex_graph(std::size_t r, std::uint64_t m) {
    if (r < 2) throw InvalidParametersError("uniformity must be at least 2");
    if (m < 1) throw InvalidParametersError("colex graph needs at least one edge");
    std::vector<RSet> edges;
    edges.reserve(m);
    for (std::uint64_t k = 1; k <= m; ++k) edges.push_back(colex_unrank(k, r));
    const Vertex n = edges.back().max();
    return {r, n, std::move(edges)};
}

Hypergraph complete_graph(Vertex t, std::size_t r) {
    if (r < 2 || t < r) {
        throw InvalidParametersError("complete graph needs t >= r >= 2, got t = " + std::to_string(t) +
                                     ", r = " + std::to_string(r));
    }
    return {r, t, all_subsets(t, r)};
}

std::vector<RSet> all_subsets(Vertex n, std::size_t k) {
    std::vector<RSet> out;
    if (k > n) return out;
    out.reserve(binomial(n, static_cast<std::int64_t>(k)));
    std::vector<Vertex> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = static_cast<Vertex>(i + 1);
    while (true) {
        out.emplace_back(cur);
        // Colex successor: bump the lowest coordinate that has room, reset below it.
        std::size_t s = 0;
        while (s < k) {
            const Vertex ceiling = s + 1 < k ? cur[s + 1] : n + 1;
            if (cur[s] + 1 < ceiling) break;
            ++s;
        }
        if (s == k) break;
        ++cur[s];
        for (std::size_t i = 0; i < s; ++i) cur[i] = static_cast<Vertex>(i + 1);
    }
    return out;
}

}  // namespace hlag
