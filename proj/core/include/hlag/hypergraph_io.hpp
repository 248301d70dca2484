#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "hlag/hypergraph.hpp"

namespace hlag {

// Text format: a header line "r n m", then m lines of r ascending 1-based
// labels. Lines starting with '#' and blank lines are ignored. Throws
// ParseError with the offending line number.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(std::string_view text);
Hypergraph read_hypergraph_file(const std::string& path);

// Canonical form: colex-ordered edges, single spaces, trailing newline.
std::string to_text(const Hypergraph& g);
void write_hypergraph(std::ostream& out, const Hypergraph& g);
void write_hypergraph_file(const std::string& path, const Hypergraph& g);

// FNV-1a of the canonical text, as 16 hex digits.
std::string edge_hash(const Hypergraph& g);

}  // namespace hlag
