#pragma once

#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// graph6: printable encoding of the upper adjacency triangle, column-major,
// 6-bit groups offset by 63. sparse6 (":" prefix) encodes an edge stream.
// Decoders accept the optional ">>graph6<<" / ">>sparse6<<" headers and a
// trailing newline; anything else malformed raises ParseError with the
// offending byte offset.
std::string graph6_encode(const SmallGraph& g);
SmallGraph graph6_decode(const std::string& bytes);

std::string sparse6_encode(const SmallGraph& g);
SmallGraph sparse6_decode(const std::string& bytes);

// Dispatches on the ':' prefix.
SmallGraph decode_any(const std::string& bytes);

// Newline-delimited graph6 atlas files.
std::vector<SmallGraph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, const std::vector<SmallGraph>& graphs);

}  // namespace turan
