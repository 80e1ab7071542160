#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "kconn/graph.hpp"

namespace kconn {

class Graph6Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Encodes `g` as a graph6 line without the trailing newline.
std::string to_graph6(const Graph& g);

/// Decodes one graph6 line. A trailing '\n' (and '\r') is tolerated; an optional
/// ">>graph6<<" header is accepted. Anything else malformed throws Graph6Error.
Graph from_graph6(std::string_view line);

/// One decoded line of a graph6 stream: either a graph or an error message.
struct StreamRecord {
    std::size_t line_number = 0;
    std::string text;
    Graph graph;
    std::string error;

    bool ok() const { return error.empty(); }
};

/// Reads a whole stream, skipping empty lines; malformed lines become error records.
std::vector<StreamRecord> read_graph6_stream(std::istream& in);

}  // namespace kconn
