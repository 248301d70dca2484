#pragma once

// Independent reference implementations and random generators for tests.
// Nothing here calls into the code it is used to check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hlag/hypergraph.hpp"

namespace oracle {

using Set = std::vector<std::uint32_t>;
using Exact = boost::multiprecision::cpp_rational;

// All k-subsets of [n], lexicographic.
inline std::vector<Set> subsets(std::uint32_t n, std::size_t k) {
    std::vector<Set> out;
    Set cur;
    auto rec = [&](auto& self, std::uint32_t from) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::uint32_t v = from; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// Colex by comparing reversed sequences.
inline bool colex_less(const Set& a, const Set& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

inline std::vector<Set> colex_sorted(std::uint32_t n, std::size_t k) {
    auto all = subsets(n, k);
    std::sort(all.begin(), all.end(), colex_less);
    return all;
}

// b <= a coordinatewise and b != a.
inline bool dominated(const Set& b, const Set& a) {
    if (a == b || a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] > a[i]) return false;
    }
    return true;
}

inline std::vector<Set> to_sets(const hlag::Hypergraph& g) {
    std::vector<Set> out;
    for (const auto& e : g.edges()) out.emplace_back(e.begin(), e.end());
    return out;
}

// Closed under every coordinatewise-smaller set.
inline bool down_closed(const std::vector<Set>& edges, std::uint32_t n) {
    const std::set<Set> present(edges.begin(), edges.end());
    if (edges.empty()) return true;
    for (const auto& a : edges) {
        for (const auto& b : subsets(n, a.size())) {
            if (dominated(b, a) && !present.count(b)) return false;
        }
    }
    return true;
}

inline bool clique_on(const std::set<Set>& present, const Set& vertices, std::size_t r) {
    std::vector<Set> inside;
    const auto idx = subsets(static_cast<std::uint32_t>(vertices.size()), r);
    for (const auto& s : idx) {
        Set e;
        for (auto i : s) e.push_back(vertices[i - 1]);
        if (!present.count(e)) return false;
    }
    return true;
}

// Exhaustive over vertex subsets; clique order r-1 when no edge exists.
inline std::size_t max_clique(const hlag::Hypergraph& g) {
    const auto edges = to_sets(g);
    const std::set<Set> present(edges.begin(), edges.end());
    std::size_t best = g.r() - 1;
    for (std::size_t k = g.r(); k <= g.n(); ++k) {
        bool found = false;
        for (const auto& vs : subsets(g.n(), k)) {
            if (clique_on(present, vs, g.r())) {
                found = true;
                break;
            }
        }
        if (!found) break;
        best = k;
    }
    return best;
}

inline Exact evaluate(const hlag::Hypergraph& g, const std::vector<Exact>& x) {
    Exact sum = 0;
    for (const auto& e : g.edges()) {
        Exact p = 1;
        for (auto v : e) p *= x[v - 1];
        sum += p;
    }
    return sum;
}

}  // namespace oracle

namespace gen {

using Rng = std::mt19937_64;

inline hlag::Hypergraph random_graph(Rng& rng, std::size_t r, std::uint32_t n, double density) {
    std::bernoulli_distribution keep(density);
    std::vector<hlag::RSet> edges;
    for (auto& e : hlag::all_subsets(n, r)) {
        if (keep(rng)) edges.push_back(std::move(e));
    }
    return {r, n, std::move(edges)};
}

inline hlag::Hypergraph random_subgraph(Rng& rng, const hlag::Hypergraph& g, double keep_p) {
    std::bernoulli_distribution keep(keep_p);
    std::vector<hlag::RSet> edges;
    for (const auto& e : g.edges()) {
        if (keep(rng)) edges.push_back(e);
    }
    return {g.r(), g.n(), std::move(edges)};
}

inline std::vector<double> random_simplex_point(Rng& rng, std::size_t n) {
    std::exponential_distribution<double> exp1(1.0);
    std::vector<double> w(n);
    double sum = 0;
    for (auto& v : w) sum += v = exp1(rng) + 1e-3;
    for (auto& v : w) v /= sum;
    return w;
}

}  // namespace gen
