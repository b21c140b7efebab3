#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "gbs/gbs_graph.hpp"
#include "gbs/moves.hpp"

namespace gbs {

// A well-formed document that fails graph validation (zero label,
// disconnected, no edges). Carries the full diagnostic list.
class InvalidGraphError : public std::runtime_error {
public:
  explicit InvalidGraphError(std::vector<Diagnostic> diags);

  const std::vector<Diagnostic>& diagnostics() const { return diags_; }

private:
  std::vector<Diagnostic> diags_;
};

// Graph file format:
//   { "vertices": ["A", "B"],
//     "edges": [ { "id": "e0",
//                  "ends": [ {"vertex": "A", "label": 2},
//                            {"vertex": "B", "label": 6} ] } ] }
// Vertex and edge ids are the display names; numeric ids are assigned in
// array order on parse. Labels are JSON numbers when they fit in 64 bits and
// decimal strings otherwise; the parser accepts both forms everywhere.
// serialize(parse(doc)) is the identity on documents in serialized form.
GbsGraph parse_graph(const std::string& text);
GbsGraph load_graph(const std::string& path);
nlohmann::ordered_json graph_to_json(const GbsGraph& g);
std::string serialize_graph(const GbsGraph& g);

// Move line grammar, names resolved through the graph the move applies to:
//   collapse <edge>
//   expand <vertex> d=<n> ends=[<edge>.<side>,...] sign=<+|->
//   slide <edge>.<side> across <edge><+|->
//   remove-redundant <vertex>
// Names containing spaces, commas, or dots are not representable here; the
// parser splits end specs at the last dot.
std::string format_move(const GbsGraph& g, const Move& m);
Move parse_move(const GbsGraph& g, const std::string& line);

// {"length": n, "moves": [...], "final": <graph document>}, each move
// formatted against the graph it applies to.
nlohmann::ordered_json trace_to_json(const GbsGraph& start,
                                     const MoveTrace& trace);

// Graphviz rendering: one arrow per edge with both arrowheads drawn, end
// labels as taillabel/headlabel, unit ends with empty arrowheads.
std::string to_dot(const GbsGraph& g);

}  // namespace gbs
