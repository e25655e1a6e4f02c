#pragma once

#include <string>
#include <string_view>

#include "zf/graph.hpp"

namespace zf {

/// Decodes one graph6 line. A leading ">>graph6<<" header is tolerated.
/// Throws ParseError (with the byte offset into `line`) on bad length,
/// out-of-range characters, or nonzero padding bits.
Graph parse_graph6(std::string_view line);

/// Encodes with the shortest size prefix (1-byte for n <= 62, then the
/// 4- and 8-byte extended forms). parse_graph6(write_graph6(g)) == g.
std::string write_graph6(const Graph& g);

}  // namespace zf
