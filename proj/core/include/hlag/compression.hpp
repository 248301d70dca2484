#pragma once

#include "hlag/hypergraph.hpp"

namespace hlag {

// Every descendant of every edge is an edge.
bool is_left_compressed(const Hypergraph& g);

// Repeatedly replaces the colex-largest edge that has a missing descendant
// by its colex-smallest missing descendant, until none remains. Keeps n and
// the edge count.
Hypergraph left_compress(const Hypergraph& g);

}  // namespace hlag
