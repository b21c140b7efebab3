#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gbs/gbs_graph.hpp"

namespace gbs {

// Equal bytes exactly when two graphs are related by a label-preserving
// isomorphism composed with per-vertex sign flips, per-edge sign flips and
// per-edge end swaps. The dedup key of every search.
struct CanonicalForm {
  std::string bytes;

  auto operator<=>(const CanonicalForm&) const = default;
};

// How the minimizing candidate placed the input graph: vertex -> position in
// the canonical ordering, and for each canonical edge slot the source edge
// plus whether its sides were swapped. Lets callers transport edge handles
// between canonically equal graphs.
struct CanonicalWitness {
  std::map<VertexId, std::size_t> vertex_pos;
  std::vector<std::pair<EdgeId, bool>> slots;
};

// Brute force over class-respecting vertex orderings and sign assignments;
// exact but exponential, hence the vertex bound.
CanonicalForm canonical_form(const GbsGraph& g, std::size_t max_vertices = 10);
CanonicalForm canonical_form(const GbsGraph& g, CanonicalWitness& witness,
                             std::size_t max_vertices = 10);

// Edge correspondence from x to y, defined when their canonical forms are
// equal (throws std::invalid_argument otherwise). Second component tells
// whether the edge's sides are swapped under the correspondence. Ties between
// identical canonical slots are matched positionally; any such matching is a
// valid isomorphism because tied edges are interchangeable.
std::map<EdgeId, std::pair<EdgeId, bool>> edge_isomorphism(
    const GbsGraph& x, const GbsGraph& y, std::size_t max_vertices = 10);

// Full correspondence from x to y: vertex map plus the edge map above.
// Labels may differ in sign along the correspondence but never in absolute
// value, which is what move rebasing needs.
struct GraphIso {
  std::map<VertexId, VertexId> vertex;
  std::map<EdgeId, std::pair<EdgeId, bool>> edge;
};

GraphIso graph_isomorphism(const GbsGraph& x, const GbsGraph& y,
                           std::size_t max_vertices = 10);

}  // namespace gbs
