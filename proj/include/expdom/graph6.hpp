#pragma once

#include "expdom/graph.hpp"

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace expdom {

/// Malformed graph6 text.
class Graph6Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Decodes one graph6 line (no trailing newline). Accepts orders up to 64.
Graph decode_graph6(std::string_view text);

/// Bit-exact graph6 encoding of g with its current labelling.
std::string encode_graph6(const Graph& g);

/// Reads LF-terminated graph6 lines, skipping blank lines and an optional
/// ">>graph6<<" header. Errors carry the 1-based line number.
std::vector<Graph> read_graph6_stream(std::istream& in);

} // namespace expdom
