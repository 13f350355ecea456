#pragma once

#include <functional>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sumbalaban/graph.hpp"

namespace sumbalaban {

/// Largest order representable with the single-byte size field.
inline constexpr std::size_t kGraph6MaxOrder = 62;

class Graph6Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// graph6: one size byte chr(n + 63), then the upper triangle read column by
// column, x(0,1) x(0,2) x(1,2) x(0,3) ..., packed big-endian into 6-bit
// groups, each group offset by 63. Trailing pad bits are zero.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);

/// Reads one graph per line. Blank lines and an optional ">>graph6<<" header
/// are skipped; trailing '\r' is tolerated. Returns the number of graphs.
std::size_t for_each_graph6(std::istream& in, const std::function<void(const Graph&, std::string_view)>& visit);

std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace sumbalaban
