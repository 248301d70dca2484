#include "hlag/compression.hpp"

#include <set>

#include "hlag/colex.hpp"

namespace hlag {

bool is_left_compressed(const Hypergraph& g) {
    // Closure under direct descendants implies closure under all of them:
    // any descendant is reached by lowering coordinates one step at a time.
    for (const RSet& e : g.edges()) {
        for (const RSet& d : descendants(e, true)) {
            if (!g.contains(d)) return false;
        }
    }
    return true;
}

Hypergraph left_compress(const Hypergraph& g) {
    std::set<RSet> edges(g.edges().begin(), g.edges().end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
            for (const RSet& d : descendants(*it, false)) {
                if (!edges.contains(d)) {
                    const RSet victim = *it;
                    edges.erase(victim);
                    edges.insert(d);
                    changed = true;
                    break;
                }
            }
            if (changed) break;
        }
    }
    return {g.r(), g.n(), {edges.begin(), edges.end()}};
}

}  // namespace hlag
