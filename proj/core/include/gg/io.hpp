#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "gg/geometry.hpp"
#include "gg/trigraph.hpp"

namespace gg {

// Malformed JSON (line/column set, 1-based) or a well-formed document with
// the wrong shape (line/column 0).
class IoError : public std::runtime_error {
public:
    IoError(const std::string& what, int line = 0, int column = 0)
        : std::runtime_error(what), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Rationals are written as decimal strings when the expansion terminates,
// otherwise as "p/q". Both forms are accepted on input, as are JSON numbers.
std::string rational_to_string(const Rational& r);
Rational parse_rational(std::string_view s);

// {"n": int, "diagonals": [[i, j], ...]}. Structural violations surface as
// GraphError from TriangulationGraph::build.
std::string graph_to_json(const TriangulationGraph& t);
TriangulationGraph graph_from_json(std::string_view text);

// {"mode": "diagonal" | "edge", "members": [[i, j], ...]}
std::string dominating_set_to_json(const DominatingSet& d);
DominatingSet dominating_set_from_json(std::string_view text);

// {"vertices": [[x, y], ...], "arcs": [{"type": "segment"} |
//  {"type": "circular", "center": [x, y], "orientation": "ccw" | "cw"}, ...]}
std::string polygon_to_json(const PiecewiseConvexPolygon& P);
PiecewiseConvexPolygon polygon_from_json(std::string_view text);

// {"mode": "edge" | "mobile", "guards": [{"arc": i} | {"diagonal": [a, b]}, ...]}
std::string guard_set_to_json(const GuardSet& g);
GuardSet guard_set_from_json(std::string_view text);

// "graph" if the document has "diagonals", "polygon" if it has "vertices",
// "dominating_set" for "members", "guard_set" for "guards".
std::string detect_kind(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace gg
