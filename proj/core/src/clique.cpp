#include "hlag/clique.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "hlag/binomial.hpp"
#include "hlag/colex.hpp"
#include "hlag/compression.hpp"
#include "hlag/errors.hpp"

namespace hlag {

namespace {

class EdgeLookup {
public:
    explicit EdgeLookup(const Hypergraph& g) : r_(g.r()), ranks_(g.ranks().begin(), g.ranks().end()) {}

    // Number of k-subsets S of `base` (k = r - 1) for which S + v is not an
    // edge, stopping early once it exceeds `cap`.
    std::size_t missing_with(const std::vector<Vertex>& base, Vertex v, std::size_t cap) const {
        const std::size_t k = r_ - 1;
        if (base.size() < k) return 0;
        std::size_t missing = 0;
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        std::vector<Vertex> buf(r_);
        while (true) {
            for (std::size_t i = 0; i < k; ++i) buf[i] = base[idx[i]];
            buf[k] = v;
            if (!ranks_.contains(colex_rank(RSet::from_unsorted(buf)))) {
                if (++missing > cap) return missing;
            }
            std::size_t s = k;
            while (s > 0 && idx[s - 1] == base.size() - k + s - 1) --s;
            if (s == 0) break;
            ++idx[s - 1];
            for (std::size_t i = s; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
        return missing;
    }

    bool extends(const std::vector<Vertex>& clique, Vertex v) const { return missing_with(clique, v, 0) == 0; }

private:
    std::size_t r_;
    std::unordered_set<std::uint64_t> ranks_;
};

// Largest s with [s]^{(r)} inside a left-compressed graph.
std::size_t prefix_clique_order(const Hypergraph& g) {
    const auto ranks = g.ranks();
    std::size_t prefix = 0;
    while (prefix < ranks.size() && ranks[prefix] == prefix + 1) ++prefix;
    std::size_t s = g.r() - 1;
    while (binomial(static_cast<std::int64_t>(s) + 1, static_cast<std::int64_t>(g.r())) <= prefix) ++s;
    return s;
}

class MaxCliqueSearch {
public:
    explicit MaxCliqueSearch(const Hypergraph& g) : g_(g), lookup_(g) {}

    std::vector<Vertex> run() {
        if (g_.empty()) return {};
        const auto& first = g_.edges().front();
        best_.assign(first.begin(), first.end());
        std::vector<Vertex> cands;
        const std::uint64_t min_degree = binomial(static_cast<std::int64_t>(best_.size()),
                                                  static_cast<std::int64_t>(g_.r()) - 1);
        for (Vertex v = 1; v <= g_.n(); ++v) {
            if (g_.degree(v) >= min_degree) cands.push_back(v);
        }
        std::vector<Vertex> current;
        expand(current, cands);
        return best_;
    }

private:
    void expand(std::vector<Vertex>& current, const std::vector<Vertex>& cands) {
        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (current.size() + (cands.size() - i) <= best_.size()) return;
            const Vertex v = cands[i];
            current.push_back(v);
            std::vector<Vertex> next;
            for (std::size_t j = i + 1; j < cands.size(); ++j) {
                if (lookup_.extends(current, cands[j])) next.push_back(cands[j]);
            }
            if (current.size() > best_.size()) best_ = current;
            expand(current, next);
            current.pop_back();
        }
    }

    const Hypergraph& g_;
    EdgeLookup lookup_;
    std::vector<Vertex> best_;
};

class MaximalCliqueSearch {
public:
    MaximalCliqueSearch(const Hypergraph& g, std::size_t limit, std::size_t node_budget)
        : g_(g), lookup_(g), limit_(limit), node_budget_(node_budget) {}

    std::vector<std::vector<Vertex>> run() {
        std::vector<Vertex> all;
        for (Vertex v = 1; v <= g_.n(); ++v) {
            if (g_.degree(v) > 0) all.push_back(v);
        }
        std::vector<Vertex> current;
        bron_kerbosch(current, all, {});
        return std::move(out_);
    }

private:
    bool stopped() const { return out_.size() >= limit_ || nodes_ >= node_budget_; }

    void emit(std::vector<Vertex> clique) {
        if (clique.size() < g_.r()) return;
        std::sort(clique.begin(), clique.end());
        out_.push_back(std::move(clique));
    }

    void bron_kerbosch(std::vector<Vertex>& current, std::vector<Vertex> cands, std::vector<Vertex> excluded) {
        if (stopped()) return;
        ++nodes_;
        if (cands.empty()) {
            if (excluded.empty()) emit(current);
            return;
        }
        // When current + cands is already a clique it is the only maximal
        // clique below this node.
        std::vector<Vertex> joined = current;
        bool joined_is_clique = true;
        for (Vertex v : cands) {
            if (!lookup_.extends(joined, v)) {
                joined_is_clique = false;
                break;
            }
            joined.push_back(v);
        }
        if (joined_is_clique) {
            const bool blocked = std::any_of(excluded.begin(), excluded.end(),
                                             [&](Vertex x) { return lookup_.extends(joined, x); });
            if (!blocked) emit(joined);
            return;
        }
        while (!cands.empty()) {
            const Vertex v = cands.front();
            current.push_back(v);
            std::vector<Vertex> next_cands;
            std::vector<Vertex> next_excluded;
            for (std::size_t j = 1; j < cands.size(); ++j) {
                if (lookup_.extends(current, cands[j])) next_cands.push_back(cands[j]);
            }
            for (Vertex x : excluded) {
                if (lookup_.extends(current, x)) next_excluded.push_back(x);
            }
            bron_kerbosch(current, std::move(next_cands), std::move(next_excluded));
            current.pop_back();
            if (stopped()) return;
            cands.erase(cands.begin());
            excluded.push_back(v);
        }
    }

    const Hypergraph& g_;
    EdgeLookup lookup_;
    std::size_t limit_;
    std::size_t node_budget_;
    std::size_t nodes_ = 0;
    std::vector<std::vector<Vertex>> out_;
};

void check_budget(const Hypergraph& g, Vertex budget) {
    if (g.n() > budget) {
        throw ResourceLimitError("clique-vertices", "clique search limited to " + std::to_string(budget) +
                                                        " vertices, graph has " + std::to_string(g.n()));
    }
}

bool near_clique_search(const Hypergraph& g, const EdgeLookup& lookup, std::vector<Vertex>& current,
                        Vertex next, std::size_t target, std::size_t missing) {
    if (current.size() == target) return true;
    for (Vertex v = next; v + (target - current.size()) <= g.n() + 1; ++v) {
        const std::size_t extra = lookup.missing_with(current, v, 1 - missing);
        if (missing + extra > 1) continue;
        current.push_back(v);
        if (near_clique_search(g, lookup, current, v + 1, target, missing + extra)) return true;
        current.pop_back();
    }
    return false;
}

}  // namespace

bool is_clique(const Hypergraph& g, const std::vector<Vertex>& vertices) {
    std::vector<Vertex> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidParametersError("clique vertex list has duplicates");
    }
    EdgeLookup lookup(g);
    std::vector<Vertex> prefix;
    for (Vertex v : sorted) {
        if (!lookup.extends(prefix, v)) return false;
        prefix.push_back(v);
    }
    return true;
}

std::size_t max_clique_order(const Hypergraph& g, Vertex budget) {
    if (g.empty()) return g.r() - 1;
    if (is_left_compressed(g)) return prefix_clique_order(g);
    check_budget(g, budget);
    return MaxCliqueSearch(g).run().size();
}

std::vector<Vertex> find_max_clique(const Hypergraph& g, Vertex budget) {
    if (g.empty()) return {};
    if (is_left_compressed(g)) {
        const auto s = prefix_clique_order(g);
        const auto seg = initial_segment(s);
        return {seg.begin(), seg.end()};
    }
    check_budget(g, budget);
    return MaxCliqueSearch(g).run();
}

std::vector<std::vector<Vertex>> maximal_cliques(const Hypergraph& g, std::size_t limit, std::size_t node_budget) {
    if (g.empty() || limit == 0) return {};
    auto out = MaximalCliqueSearch(g, limit, node_budget).run();
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return out;
}

bool contains_near_clique(const Hypergraph& g, std::size_t t) {
    if (t < 1) throw InvalidParametersError("near-clique order must be positive");
    const std::size_t target = t - 1;
    if (target > g.n()) return false;
    const auto full = binomial(static_cast<std::int64_t>(target), static_cast<std::int64_t>(g.r()));
    if (full <= 1) return true;
    if (is_left_compressed(g)) {
        // A near-clique anywhere forces one on [t-1]: map the k-th smallest
        // vertex to k and every r-set moves to a descendant.
        const auto inside = std::count_if(g.edges().begin(), g.edges().end(),
                                          [&](const RSet& e) { return e.max() <= target; });
        return static_cast<std::uint64_t>(inside) + 1 >= full;
    }
    EdgeLookup lookup(g);
    std::vector<Vertex> current;
    return near_clique_search(g, lookup, current, 1, target, 0);
}

}  // namespace hlag
