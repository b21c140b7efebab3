#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gbs/multigraph.hpp"

namespace gbs {

// Edge-end labels are exact big integers: collapse chains multiply labels and
// silent overflow would corrupt every invariant downstream.
using Label = boost::multiprecision::cpp_int;

// Graph of groups with all vertex and edge groups infinite cyclic. Each edge
// end carries a nonzero integer whose absolute value is the index of the edge
// group in the adjacent vertex group; the sign records the direction of the
// inclusion. Vertices and edges keep optional display names so files
// round-trip; names never affect semantics.
class GbsGraph {
public:
  MultiGraph& graph() { return graph_; }
  const MultiGraph& graph() const { return graph_; }

  VertexId add_vertex() { return graph_.add_vertex(); }
  void add_vertex(VertexId v) { graph_.add_vertex(v); }
  EdgeId add_edge(VertexId a, VertexId b, Label la, Label lb);
  void add_edge(EdgeId e, VertexId a, VertexId b, Label la, Label lb);

  const Label& label(EdgeId e, int side) const;
  const Label& label(const EdgeEnd& end) const {
    return label(end.edge, end.side);
  }
  void set_label(EdgeId e, int side, Label l);
  void set_label(const EdgeEnd& end, Label l) {
    set_label(end.edge, end.side, std::move(l));
  }

  void remove_edge(EdgeId e);
  void remove_vertex(VertexId v);

  std::string vertex_name(VertexId v) const;
  std::string edge_name(EdgeId e) const;
  void set_vertex_name(VertexId v, std::string name);
  void set_edge_name(EdgeId e, std::string name);
  std::optional<VertexId> vertex_by_name(const std::string& name) const;
  std::optional<EdgeId> edge_by_name(const std::string& name) const;

  // Deterministic structural serialization (ids, endpoints, labels). Not
  // canonical; used as an exact-identity key and for debugging.
  std::string structural_key() const;

private:
  MultiGraph graph_;
  std::map<EdgeId, std::array<Label, 2>> labels_;
  std::map<VertexId, std::string> vertex_names_;
  std::map<EdgeId, std::string> edge_names_;
};

struct Diagnostic {
  enum class Code { ZeroLabel, Disconnected, NoEdges };
  Code code;
  std::string detail;
};

const char* to_string(Diagnostic::Code code);

// Empty result means the graph satisfies every type invariant: all labels
// nonzero, connected, at least one edge.
std::vector<Diagnostic> validate(const GbsGraph& g);

// |E| - |V| + 1; first Betti number of the underlying connected graph.
std::size_t betti(const GbsGraph& g);

}  // namespace gbs
