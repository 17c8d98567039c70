#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qtough/graph.hpp"

namespace qtough {

/// Malformed input; `offset` is the byte position of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// graph6: 6-bit groups biased by 63, upper triangle column-major.
std::string to_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" header and trailing whitespace; any other
/// ">>...<<" header is rejected.
Graph from_graph6(std::string_view text);

// Plain edge list: first line "n m", then m lines "u v" (0-based).
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

enum class GraphFormat { Graph6, EdgeList };

/// Leading-byte heuristic: digits mean edge list, anything else graph6.
GraphFormat detect_format(std::string_view content);

Graph parse_graph(std::string_view content);
Graph parse_graph(std::string_view content, GraphFormat format);
Graph load_graph_file(const std::string& path);

}  // namespace qtough
