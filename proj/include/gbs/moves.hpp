#pragma once

#include <variant>
#include <vector>

#include "gbs/canonical.hpp"
#include "gbs/gbs_graph.hpp"

namespace gbs {

struct CollapseMove {
  EdgeId edge = -1;

  bool operator==(const CollapseMove&) const = default;
};

// Splits a new vertex off m.vertex: the new edge carries divisor at the old
// vertex and unit_sign at the new one, and each listed end moves to the new
// vertex with its label divided by divisor (times unit_sign). Inverse of a
// collapse.
struct ExpandMove {
  VertexId vertex = -1;
  Label divisor = 1;
  std::vector<EdgeEnd> ends;  // kept sorted
  int unit_sign = 1;

  bool operator==(const ExpandMove&) const = default;
};

struct SlideMove {
  EdgeEnd end;
  OrientedEdge across;

  bool operator==(const SlideMove&) const = default;
};

struct RemoveRedundantMove {
  VertexId vertex = -1;

  bool operator==(const RemoveRedundantMove&) const = default;
};

using Move =
    std::variant<CollapseMove, ExpandMove, SlideMove, RemoveRedundantMove>;

// Every successful move returns the new graph together with a move that
// undoes it, exactly for slides and up to canonical form for the rest.
struct MoveResult {
  GbsGraph graph;
  Move inverse;
};

// Segments (never loops) carrying at least one label of absolute value 1.
std::vector<EdgeId> collapsible_edges(const GbsGraph& g);

bool is_reduced(const GbsGraph& g);

// Removes edge e and merges its unit-label endpoint into the far one; every
// other end at the dying vertex reattaches at the survivor with its label
// multiplied by (unit label) * (far label). When both ends are units the
// side-0 endpoint dies; the two directions give canonically equal results.
// Refuses with NoEdgesResult when e is the only edge, since the result would
// have no edges at all.
MoveResult collapse(const GbsGraph& g, EdgeId e);

MoveResult expand(const GbsGraph& g, const ExpandMove& m);

// Reattaches one edge end across an adjacent edge: with across running from
// v (label l) to w (label m) and the end carrying k = l*c at v, the end moves
// to w carrying m*c. The inverse slides back across the reversed edge.
MoveResult slide(const GbsGraph& g, const EdgeEnd& end,
                 const OrientedEdge& across);

// Degree-2 vertices whose two ends lie on distinct edges and both carry
// labels of absolute value 1.
std::vector<VertexId> redundant_vertices(const GbsGraph& g);

// Fuses the two edges at a redundant vertex into one by collapsing the
// lower-id incident edge. When that edge has units on both ends the literal
// survivor may keep either vertex id; the results are canonically equal.
MoveResult remove_redundant(const GbsGraph& g, VertexId v);

MoveResult apply_move(const GbsGraph& g, const Move& m);

// Exhaustive search over collapse sequences; returns every reduced graph
// reachable, deduplicated by canonical form when dedup is set (by structural
// identity otherwise).
std::vector<GbsGraph> all_reductions(const GbsGraph& g, bool dedup = true);

struct TraceStep {
  Move move;
  CanonicalForm after;
};

// Replayable witness of a move sequence; each step records the canonical
// form reached so a replay can verify it step by step.
struct MoveTrace {
  std::vector<TraceStep> steps;
};

// Applies the moves in order, checking each recorded form; throws
// ReplayError on an inapplicable move or a form mismatch.
GbsGraph replay(const GbsGraph& start, const MoveTrace& trace);
GbsGraph replay(const GbsGraph& start, const std::vector<Move>& moves);

}  // namespace gbs
