#include "hlag/colex.hpp"

#include <algorithm>
#include <string>

#include "hlag/binomial.hpp"
#include "hlag/errors.hpp"

namespace hlag {

std::strong_ordering colex_compare(const RSet& a, const RSet& b) {
    if (a.r() != b.r()) {
        throw UniformityMismatchError("cannot compare a " + std::to_string(a.r()) + "-set with a " +
                                      std::to_string(b.r()) + "-set");
    }
    // Scanning from the top, the first differing position holds max(A ^ B).
    for (std::size_t i = a.r(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::uint64_t colex_rank(const RSet& a) {
    std::uint64_t rank = 1;
    for (std::size_t s = 0; s < a.r(); ++s) {
        rank += binomial(static_cast<std::int64_t>(a[s]) - 1, static_cast<std::int64_t>(s) + 1);
    }
    return rank;
}

RSet colex_unrank(std::uint64_t rank, std::size_t r) {
    if (rank < 1) throw InvalidParametersError("colex rank is 1-based");
    if (r < 1) throw InvalidParametersError("colex_unrank needs r >= 1");
    std::uint64_t remaining = rank - 1;
    std::vector<Vertex> elems(r);
    for (std::size_t s = r; s >= 1; --s) {
        // Largest c with C(c, s) <= remaining; c >= s - 1 always qualifies.
        std::int64_t lo = static_cast<std::int64_t>(s) - 1;
        std::int64_t hi = lo + 1;
        std::uint64_t v = 0;
        while (try_binomial(hi, static_cast<std::int64_t>(s), v) && v <= remaining) {
            lo = hi;
            hi *= 2;
        }
        while (hi - lo > 1) {
            const std::int64_t mid = lo + (hi - lo) / 2;
            if (try_binomial(mid, static_cast<std::int64_t>(s), v) && v <= remaining) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        remaining -= binomial(lo, static_cast<std::int64_t>(s));
        elems[s - 1] = static_cast<Vertex>(lo + 1);
    }
    return RSet(std::move(elems));
}

namespace {

void collect_descendants(const RSet& a, std::vector<Vertex>& cur, std::size_t pos, bool strictly_below,
                         std::vector<RSet>& out) {
    // Fill positions from the top so the upper bound of each slot is known.
    if (pos == 0) {
        if (strictly_below) out.emplace_back(cur);
        return;
    }
    const std::size_t s = pos - 1;
    Vertex hi = a[s];
    if (s + 1 < cur.size()) hi = std::min<Vertex>(hi, cur[s + 1] - 1);
    const auto lo = static_cast<Vertex>(s + 1);
    for (Vertex v = lo; v <= hi; ++v) {
        cur[s] = v;
        collect_descendants(a, cur, s, strictly_below || v != a[s], out);
    }
}

}  // namespace

std::vector<RSet> descendants(const RSet& a, bool direct_only) {
    std::vector<RSet> out;
    if (direct_only) {
        std::vector<Vertex> cur(a.begin(), a.end());
        for (std::size_t s = 0; s < a.r(); ++s) {
            const Vertex floor = s == 0 ? 0 : a[s - 1];
            if (a[s] - 1 > floor) {
                cur[s] = a[s] - 1;
                out.emplace_back(cur);
                cur[s] = a[s];
            }
        }
    } else {
        std::vector<Vertex> cur(a.r());
        collect_descendants(a, cur, a.r(), false, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RSet> direct_ancestors(const RSet& a, Vertex n) {
    std::vector<RSet> out;
    std::vector<Vertex> cur(a.begin(), a.end());
    for (std::size_t s = 0; s < a.r(); ++s) {
        const Vertex ceiling = s + 1 < a.r() ? a[s + 1] : n + 1;
        if (a[s] + 1 < ceiling) {
            cur[s] = a[s] + 1;
            out.emplace_back(cur);
            cur[s] = a[s];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_descendant(const RSet& b, const RSet& a) {
    if (a.r() != b.r()) throw UniformityMismatchError("descendant test on sets of different sizes");
    bool differs = false;
    for (std::size_t s = 0; s < a.r(); ++s) {
        if (b[s] > a[s]) return false;
        differs = differs || b[s] != a[s];
    }
    return differs;
}

}  // namespace hlag
