#pragma once

#include <istream>
#include <string>

#include "rsing/graph.hpp"

namespace rsing {

/// Syntax or ordering error in a graph file, carrying the 1-based line number.
class ParseError : public GraphError {
public:
    ParseError(int line, const std::string& message)
        : GraphError("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Line-oriented graph format:
///   blank line          ignored
///   # comment           ignored
///   v <id> <b>          vertex, id alphanumeric, b a positive integer (-E^2)
///   e <id1> <id2>       edge; both endpoints must be declared on earlier lines
DualGraph parse_graph_file(std::istream& in);
DualGraph parse_graph_file(const std::string& text);

/// Renders a graph in the same format: vertex lines in declaration order,
/// then edge lines. parse_graph_file(render_graph_file(g)) reproduces g.
std::string render_graph_file(const DualGraph& g);

} // namespace rsing
