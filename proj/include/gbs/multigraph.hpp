#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <vector>

namespace gbs {

using VertexId = int;
using EdgeId = int;

// Handle for one of the two ends of an edge; side is 0 or 1. A loop has both
// ends at the same vertex but the two handles stay distinct, so a loop can
// carry two different labels.
struct EdgeEnd {
  EdgeId edge = -1;
  int side = 0;

  auto operator<=>(const EdgeEnd&) const = default;
};

struct OrientedEdge {
  EdgeId edge = -1;
  bool backward = false;  // origin is end(edge, backward ? 1 : 0)

  OrientedEdge reversed() const { return {edge, !backward}; }
  int origin_side() const { return backward ? 1 : 0; }
  int terminus_side() const { return backward ? 0 : 1; }

  auto operator<=>(const OrientedEdge&) const = default;
};

// Undirected multigraph with stable integer ids; loops and parallel edges
// allowed. Incidence is derived by scanning the edge table: graphs here are
// desk scale and this avoids keeping an index consistent across
// reattach/remove. Connectivity is checked by validation, not construction,
// so builders can assemble graphs incrementally.
class MultiGraph {
public:
  VertexId add_vertex();
  void add_vertex(VertexId v);  // explicit id, must be fresh
  EdgeId add_edge(VertexId a, VertexId b);
  void add_edge(EdgeId e, VertexId a, VertexId b);

  bool has_vertex(VertexId v) const { return vertices_.count(v) != 0; }
  bool has_edge(EdgeId e) const { return edges_.count(e) != 0; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::set<VertexId>& vertices() const { return vertices_; }
  const std::map<EdgeId, std::array<VertexId, 2>>& edges() const {
    return edges_;
  }

  VertexId endpoint(EdgeId e, int side) const;
  VertexId endpoint(const EdgeEnd& end) const {
    return endpoint(end.edge, end.side);
  }
  bool is_loop(EdgeId e) const;
  VertexId origin(const OrientedEdge& oe) const {
    return endpoint(oe.edge, oe.origin_side());
  }
  VertexId terminus(const OrientedEdge& oe) const {
    return endpoint(oe.edge, oe.terminus_side());
  }

  // All ends attached at v, sorted by (edge, side).
  std::vector<EdgeEnd> ends_at(VertexId v) const;
  std::size_t degree(VertexId v) const { return ends_at(v).size(); }

  void reattach_end(const EdgeEnd& end, VertexId to);
  void remove_edge(EdgeId e);
  void remove_vertex(VertexId v);  // must be isolated

  VertexId max_vertex_id() const;
  EdgeId max_edge_id() const;

  bool connected() const;

private:
  std::set<VertexId> vertices_;
  std::map<EdgeId, std::array<VertexId, 2>> edges_;
};

// Fundamental cycles w.r.t. a deterministic BFS spanning tree: one cycle per
// non-tree edge, listed as a closed oriented walk starting with the non-tree
// edge (forward) followed by the tree path from its terminus back to its
// origin. prefer_high_edge_ids flips the tree-building tie-break so callers
// can check invariance under the choice of spanning tree.
std::vector<std::vector<OrientedEdge>> cycle_basis(
    const MultiGraph& g, bool prefer_high_edge_ids = false);

struct SimplePath {
  std::vector<OrientedEdge> edges;
  bool is_circle = false;
};

// Every vertex-embedded path and embedded circle of length <= max_len,
// exactly once up to reversal (paths) and rotation plus reversal (circles).
// A loop shows up as a one-edge circle, never as a path.
std::vector<SimplePath> simple_paths_and_cycles(const MultiGraph& g,
                                                std::size_t max_len);

}  // namespace gbs
