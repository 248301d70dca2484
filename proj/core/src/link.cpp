#include "hlag/link.hpp"

#include <algorithm>

#include "hlag/errors.hpp"

namespace hlag {

std::string LinkView::label() const {
    std::string s = "E_";
    for (Vertex v : pinned) s += std::to_string(v);
    if (difference_against) s += "\\" + std::to_string(*difference_against);
    if (complemented) s += "^c";
    return s;
}

namespace {

bool completes_to_edge(const Hypergraph& g, const RSet& a, const std::vector<Vertex>& pinned) {
    RSet e = a;
    for (Vertex p : pinned) e = e.with(p);
    return g.contains(e);
}

}  // namespace

LinkView link(const Hypergraph& g, std::vector<Vertex> pinned, bool complemented,
              std::optional<Vertex> difference_against) {
    if (pinned.empty() || pinned.size() > 2) throw InvalidParametersError("a link pins one or two vertices");
    std::sort(pinned.begin(), pinned.end());
    if (pinned.size() == 2 && pinned[0] == pinned[1]) throw InvalidParametersError("pinned vertices must differ");
    for (Vertex p : pinned) {
        if (p < 1 || p > g.n()) {
            throw IndexError("pinned vertex " + std::to_string(p) + " outside [" + std::to_string(g.n()) + "]");
        }
    }
    if (difference_against) {
        if (pinned.size() != 1) throw InvalidParametersError("a difference link pins exactly one vertex");
        const Vertex j = *difference_against;
        if (j < 1 || j > g.n()) {
            throw IndexError("difference vertex " + std::to_string(j) + " outside [" + std::to_string(g.n()) + "]");
        }
        if (j == pinned[0]) throw InvalidParametersError("difference vertex must differ from the pinned vertex");
    }

    LinkView view;
    view.pinned = pinned;
    view.complemented = complemented;
    view.difference_against = difference_against;
    view.set_size = g.r() - pinned.size();

    for (const RSet& a : all_subsets(g.n(), view.set_size)) {
        if (std::any_of(pinned.begin(), pinned.end(), [&](Vertex p) { return a.contains(p); })) continue;
        bool member = completes_to_edge(g, a, pinned) != complemented;
        if (member && difference_against) {
            const Vertex j = *difference_against;
            // E_j^c only ranges over sets that avoid j.
            member = !a.contains(j) && !completes_to_edge(g, a, {j});
        }
        if (member) view.sets.push_back(a);
    }
    return view;
}

}  // namespace hlag
