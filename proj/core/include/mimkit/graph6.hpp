#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mimkit/graph.hpp"

namespace mimkit {

/// graph6 decoding failure; offset() is the byte position within the line.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Largest vertex count representable with the single-byte size field.
inline constexpr std::size_t kGraph6MaxVertices = 62;
inline constexpr std::string_view kGraph6Header = ">>graph6<<";

/// Decodes one graph6 line. A leading ">>graph6<<" and trailing CR/LF are
/// ignored. Throws Graph6Error.
Graph from_graph6(std::string_view line);

/// Throws std::invalid_argument when g.n() exceeds kGraph6MaxVertices.
std::string to_graph6(const Graph& g);

/// True for lines that carry no graph: blank or the bare header.
bool is_graph6_blank(std::string_view line);

}  // namespace mimkit
