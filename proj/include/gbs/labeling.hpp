#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "gbs/gbs_graph.hpp"

namespace gbs {

enum class Mark { Eq, Neq };

// The purely combinatorial layer: a multigraph whose edge ends are marked
// Eq or Neq. Everything about shelters and surviving edges is a statement
// about these marks only, so it is kept independent of integer labels.
struct EqNeqLabeling {
  MultiGraph graph;
  std::map<EdgeId, std::array<Mark, 2>> marks;

  Mark at(EdgeId e, int side) const { return marks.at(e)[side]; }
  Mark at(const EdgeEnd& end) const { return at(end.edge, end.side); }
};

// Pointwise |label| = 1 test.
EqNeqLabeling labeling_of(const GbsGraph& g);

// Loops carrying one Eq and one Neq mark. Their presence voids the
// surviving-edge theory below.
std::vector<EdgeId> strict_ascending_loops(const EqNeqLabeling& l);

struct AscendingCircle {
  std::vector<OrientedEdge> edges;  // oriented so every origin mark is Eq
  bool all_terminus_eq = false;
};

// Embedded circles admitting an orientation with all origin marks Eq, each
// reported once. A circle with all_terminus_eq false is the seed of a strict
// ascending loop (collapse all but one edge).
std::vector<AscendingCircle> ascending_circles(const EqNeqLabeling& l,
                                               std::size_t max_len = 0);

struct Shelter {
  enum class Type { Path, Circle };
  Type type = Type::Path;
  std::vector<OrientedEdge> edges;
  // Circles only: the one vertex allowed to carry two Neq marks.
  std::optional<VertexId> special_vertex;
};

struct ShelterReport {
  std::vector<Shelter> shelters;
  // True when a strict ascending loop exists; shelters are still listed but
  // the surviving-edge conclusions do not apply.
  bool ascending_context = false;
};

// Exhaustive enumeration of both shelter shapes, up to reversal for paths
// and rotation plus reversal for circles. A path shelter has Eq marks at
// every interior vertex and Neq marks at its two extremes; a circle shelter
// is marked Eq everywhere except possibly both marks at one special vertex.
// max_len 0 means |E|, which is exhaustive since shelters are embedded.
ShelterReport shelters(const EqNeqLabeling& l, std::size_t max_len = 0);

// Union of all shelter edge sets: the edges that can be kept while making
// the graph reduced. Refuses ascending contexts.
std::vector<EdgeId> surviving_edges(const EqNeqLabeling& l);
std::vector<EdgeId> surviving_edges(const GbsGraph& g);

// Mark-level mirrors of the move layer: a segment with an Eq end collapses,
// a moved end keeps Neq and otherwise inherits the far mark. These commute
// with labeling_of by construction.
std::vector<EdgeId> collapsible_edges(const EqNeqLabeling& l);
EqNeqLabeling collapse(const EqNeqLabeling& l, EdgeId e);
bool is_reduced(const EqNeqLabeling& l);

// Collapses non-surviving edges (lowest id first) until every edge
// survives. Each such edge is a segment with an Eq end, so the process only
// stops at the spine. Refuses ascending contexts.
GbsGraph retract_to_spine(const GbsGraph& g);

bool is_in_spine(const GbsGraph& g);

}  // namespace gbs
