#include "hlag/rset.hpp"

#include <algorithm>
#include <numeric>

#include "hlag/colex.hpp"
#include "hlag/errors.hpp"

namespace hlag {

namespace {

void validate(const std::vector<Vertex>& elems) {
    if (!elems.empty() && elems.front() < 1) {
        throw InvalidParametersError("vertex labels are 1-based; got 0");
    }
    for (std::size_t i = 1; i < elems.size(); ++i) {
        if (elems[i - 1] >= elems[i]) {
            throw InvalidParametersError("set elements must be strictly increasing");
        }
    }
}

}  // namespace

RSet::RSet(std::initializer_list<Vertex> elems) : elems_(elems) { validate(elems_); }

RSet::RSet(std::vector<Vertex> elems) : elems_(std::move(elems)) { validate(elems_); }

RSet RSet::from_unsorted(std::vector<Vertex> elems) {
    std::sort(elems.begin(), elems.end());
    return RSet(std::move(elems));
}

bool RSet::contains(Vertex v) const noexcept {
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

std::uint64_t RSet::coordinate_sum() const noexcept {
    return std::accumulate(elems_.begin(), elems_.end(), std::uint64_t{0});
}

RSet RSet::without(Vertex v) const {
    RSet out;
    out.elems_.reserve(elems_.size());
    bool found = false;
    for (Vertex e : elems_) {
        if (e == v) {
            found = true;
        } else {
            out.elems_.push_back(e);
        }
    }
    if (!found) throw IndexError("vertex " + std::to_string(v) + " not in " + to_string());
    return out;
}

RSet RSet::with(Vertex v) const {
    if (v < 1) throw InvalidParametersError("vertex labels are 1-based; got 0");
    if (contains(v)) throw InvalidParametersError("vertex " + std::to_string(v) + " already in " + to_string());
    RSet out = *this;
    out.elems_.insert(std::upper_bound(out.elems_.begin(), out.elems_.end(), v), v);
    return out;
}

std::string RSet::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(elems_[i]);
    }
    s += '}';
    return s;
}

std::strong_ordering RSet::operator<=>(const RSet& other) const { return colex_compare(*this, other); }

RSet initial_segment(std::size_t k) {
    std::vector<Vertex> v(k);
    std::iota(v.begin(), v.end(), Vertex{1});
    return RSet(std::move(v));
}

}  // namespace hlag
