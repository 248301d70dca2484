#include "hlag/enumeration.hpp"

#include <algorithm>
#include <string>

#include "hlag/binomial.hpp"
#include "hlag/colex.hpp"
#include "hlag/errors.hpp"

namespace hlag {

namespace {

class IdealEnumerator {
public:
    IdealEnumerator(std::size_t r, std::uint64_t m, Vertex n, const GraphVisitor& visit, const EnumerationBudget& budget)
        : r_(r), m_(m), n_(n), visit_(visit), budget_(budget) {
        universe_ = binomial(n, static_cast<std::int64_t>(r));
        sets_.reserve(universe_);
        for (RSet& s : all_subsets(n, r)) sets_.push_back(std::move(s));
        ancestors_.resize(universe_);
        missing_below_.resize(universe_);
        for (std::uint64_t k = 0; k < universe_; ++k) {
            missing_below_[k] = static_cast<std::uint32_t>(descendants(sets_[k], true).size());
            for (const RSet& a : direct_ancestors(sets_[k], n)) ancestors_[k].push_back(colex_rank(a) - 1);
        }
        present_.assign(universe_, false);
    }

    std::uint64_t run(std::uint64_t prefix) {
        for (std::uint64_t k = 0; k < prefix; ++k) add(k);
        search(prefix == 0 ? 0 : prefix);
        return visited_;
    }

private:
    void add(std::uint64_t k) {
        present_[k] = true;
        chosen_.push_back(k);
        for (auto a : ancestors_[k]) --missing_below_[a];
    }

    void remove(std::uint64_t k) {
        present_[k] = false;
        chosen_.pop_back();
        for (auto a : ancestors_[k]) ++missing_below_[a];
    }

    // `floor` is one past the last chosen index: the next set must lie above it.
    void search(std::uint64_t floor) {
        if (stop_) return;
        if (chosen_.size() == m_) {
            emit();
            return;
        }
        std::vector<std::uint64_t> cands;
        if (chosen_.empty()) {
            cands.push_back(0);
        } else {
            for (auto k : chosen_) {
                for (auto a : ancestors_[k]) {
                    if (a >= floor && !present_[a] && missing_below_[a] == 0) cands.push_back(a);
                }
            }
            std::sort(cands.begin(), cands.end());
            cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        }
        for (auto k : cands) {
            add(k);
            search(k + 1);
            remove(k);
            if (stop_) return;
        }
    }

    void emit() {
        if (visited_ >= budget_.max_instances) {
            throw ResourceLimitError("instances", "enumeration of left-compressed graphs exceeded " +
                                                      std::to_string(budget_.max_instances) + " instances");
        }
        ++visited_;
        std::vector<RSet> edges;
        edges.reserve(chosen_.size());
        for (auto k : chosen_) edges.push_back(sets_[k]);
        if (!visit_(Hypergraph(r_, n_, std::move(edges)))) stop_ = true;
    }

    std::size_t r_;
    std::uint64_t m_;
    Vertex n_;
    const GraphVisitor& visit_;
    EnumerationBudget budget_;
    std::uint64_t universe_ = 0;
    std::vector<RSet> sets_;
    std::vector<std::vector<std::uint64_t>> ancestors_;
    std::vector<std::uint32_t> missing_below_;
    std::vector<bool> present_;
    std::vector<std::uint64_t> chosen_;
    std::uint64_t visited_ = 0;
    bool stop_ = false;
};

}  // namespace

Vertex left_compressed_span(std::size_t r, std::uint64_t m) {
    return static_cast<Vertex>(m + r - 1);
}

std::uint64_t enumerate_left_compressed(std::size_t r, std::uint64_t m, Vertex n, const GraphVisitor& visit,
                                        const EnumerationBudget& budget, std::uint64_t required_prefix) {
    if (r < 2) throw InvalidParametersError("uniformity must be at least 2");
    if (n < r) throw InvalidParametersError("vertex count must be at least r");
    if (n > budget.max_vertices) {
        throw ResourceLimitError("vertices", "enumeration limited to " + std::to_string(budget.max_vertices) +
                                                 " vertices, asked for " + std::to_string(n));
    }
    if (m > budget.max_edges) {
        throw ResourceLimitError("edges", "enumeration limited to " + std::to_string(budget.max_edges) +
                                              " edges, asked for " + std::to_string(m));
    }
    std::uint64_t universe = 0;
    if (!try_binomial(n, static_cast<std::int64_t>(r), universe)) {
        throw ResourceLimitError("vertices", "C(n, r) overflows");
    }
    if (universe < m) {
        throw InvalidParametersError("C(" + std::to_string(n) + ", " + std::to_string(r) + ") = " +
                                     std::to_string(universe) + " is below m = " + std::to_string(m));
    }
    if (required_prefix > m) return 0;
    return IdealEnumerator(r, m, n, visit, budget).run(required_prefix);
}

std::vector<Hypergraph> collect_left_compressed(std::size_t r, std::uint64_t m, Vertex n,
                                                const EnumerationBudget& budget, std::uint64_t required_prefix) {
    std::vector<Hypergraph> out;
    enumerate_left_compressed(
        r, m, n,
        [&](const Hypergraph& g) {
            out.push_back(g);
            return true;
        },
        budget, required_prefix);
    return out;
}

}  // namespace hlag
