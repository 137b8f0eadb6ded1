#include "rsing/graph_io.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <vector>

namespace rsing {

namespace {

bool is_token(const std::string& s) {
    if (s.empty())
        return false;
    for (unsigned char c : s)
        if (!std::isalnum(c))
            return false;
    return true;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string field;
    while (in >> field)
        fields.push_back(field);
    return fields;
}

} // namespace

DualGraph parse_graph_file(std::istream& in) {
    std::vector<VertexSpec> vertices;
    std::vector<EdgeSpec> edges;
    std::set<std::string> declared;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto fields = split(line);
        if (fields.empty() || fields[0][0] == '#')
            continue;
        if (fields[0] == "v") {
            if (fields.size() != 3)
                throw ParseError(line_no, "expected 'v <id> <weight>'");
            if (!is_token(fields[1]))
                throw ParseError(line_no, "vertex id '" + fields[1] + "' is not alphanumeric");
            long long weight = 0;
            try {
                size_t used = 0;
                weight = std::stoll(fields[2], &used);
                if (used != fields[2].size())
                    throw std::invalid_argument("trailing characters");
            } catch (const std::exception&) {
                throw ParseError(line_no, "weight '" + fields[2] + "' is not an integer");
            }
            if (weight < 1)
                throw ParseError(line_no, "weight must be a positive integer, got " + fields[2]);
            vertices.push_back({fields[1], weight});
            declared.insert(fields[1]);
        } else if (fields[0] == "e") {
            if (fields.size() != 3)
                throw ParseError(line_no, "expected 'e <id1> <id2>'");
            for (int k = 1; k <= 2; ++k) {
                if (!is_token(fields[k]))
                    throw ParseError(line_no, "vertex id '" + fields[k] + "' is not alphanumeric");
                if (!declared.count(fields[k]))
                    throw ParseError(line_no, "unknown vertex '" + fields[k] +
                                                  "' (vertices must precede edges)");
            }
            edges.push_back({fields[1], fields[2]});
        } else {
            throw ParseError(line_no, "unrecognized directive '" + fields[0] + "'");
        }
    }
    return DualGraph::build(vertices, edges);
}

DualGraph parse_graph_file(const std::string& text) {
    std::istringstream in(text);
    return parse_graph_file(in);
}

std::string render_graph_file(const DualGraph& g) {
    std::ostringstream out;
    for (int i = 0; i < g.size(); ++i)
        out << "v " << g.id(i) << " " << g.weight(i) << "\n";
    for (const auto& [i, j] : g.edges())
        out << "e " << g.id(i) << " " << g.id(j) << "\n";
    return out.str();
}

} // namespace rsing
