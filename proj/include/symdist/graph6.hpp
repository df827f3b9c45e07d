#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "symdist/graph.hpp"

namespace symdist {

/// Decodes one graph6 line (no trailing newline; an optional ">>graph6<<"
/// header is accepted). Throws ParseError on a malformed size field, bytes
/// outside 63..126, wrong length, or nonzero padding bits.
Graph parse_graph6(std::string_view line);

/// Encodes g: size byte n+63 (or '~' plus three bytes for n >= 63), then
/// the upper triangle in column order x(0,1), x(0,2), x(1,2), x(0,3), ...
/// packed six bits per byte, most significant first, zero padded.
std::string write_graph6(const Graph& g);

/// Reads every non-blank line of a graph6 stream.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace symdist
