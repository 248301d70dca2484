#include "hlag/hypergraph_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "hlag/errors.hpp"

namespace hlag {

namespace {

std::vector<std::uint64_t> parse_integers(std::string_view line, std::size_t lineno) {
    std::vector<std::uint64_t> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::uint64_t value = 0;
        const auto* first = line.data() + i;
        const auto* last = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || (ptr != last && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
            throw ParseError(lineno, "expected a non-negative integer in \"" + std::string(line) + "\"");
        }
        out.push_back(value);
        i = static_cast<std::size_t>(ptr - line.data());
    }
    return out;
}

bool skippable(std::string_view line) {
    const auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string_view::npos || line[pos] == '#';
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::size_t header_line = 0;
    std::uint64_t r = 0, n = 0, m = 0;
    bool have_header = false;
    std::vector<RSet> edges;
    std::map<RSet, std::size_t> seen;

    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        const auto values = parse_integers(line, lineno);
        if (!have_header) {
            if (values.size() != 3) throw ParseError(lineno, "header must be \"r n m\"");
            r = values[0];
            n = values[1];
            m = values[2];
            if (r < 2) throw ParseError(lineno, "uniformity must be at least 2");
            if (n < r) throw ParseError(lineno, "vertex count must be at least r");
            if (n > UINT32_MAX) throw ParseError(lineno, "vertex count too large");
            have_header = true;
            header_line = lineno;
            continue;
        }
        if (edges.size() == m) throw ParseError(lineno, "more edge lines than the declared m = " + std::to_string(m));
        if (values.size() != r) {
            throw ParseError(lineno, "edge has " + std::to_string(values.size()) + " labels, expected " +
                                         std::to_string(r));
        }
        std::vector<Vertex> elems;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (values[i] < 1 || values[i] > n) {
                throw ParseError(lineno, "label " + std::to_string(values[i]) + " outside [1, " + std::to_string(n) + "]");
            }
            if (i > 0 && values[i] <= values[i - 1]) throw ParseError(lineno, "edge labels must be strictly ascending");
            elems.push_back(static_cast<Vertex>(values[i]));
        }
        RSet e(std::move(elems));
        if (auto [it, fresh] = seen.emplace(e, lineno); !fresh) {
            throw ParseError(lineno, "duplicate edge " + e.to_string() + " (first on line " +
                                         std::to_string(it->second) + ")");
        }
        edges.push_back(std::move(e));
    }
    if (!have_header) throw ParseError(lineno + 1, "missing header line \"r n m\"");
    if (edges.size() != m) {
        throw ParseError(lineno + 1, "header on line " + std::to_string(header_line) + " declares " +
                                         std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    }
    return {static_cast<std::size_t>(r), static_cast<Vertex>(n), std::move(edges)};
}

Hypergraph parse_hypergraph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_hypergraph(in);
}

Hypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return parse_hypergraph(in);
}

std::string to_text(const Hypergraph& g) {
    std::string out = std::to_string(g.r()) + " " + std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
    for (const RSet& e : g.edges()) {
        for (std::size_t i = 0; i < e.r(); ++i) {
            if (i) out += ' ';
            out += std::to_string(e[i]);
        }
        out += '\n';
    }
    return out;
}

void write_hypergraph(std::ostream& out, const Hypergraph& g) { out << to_text(g); }

void write_hypergraph_file(const std::string& path, const Hypergraph& g) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    write_hypergraph(out, g);
}

std::string edge_hash(const Hypergraph& g) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : to_text(g)) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace hlag
