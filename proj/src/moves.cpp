#include "gbs/moves.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "gbs/errors.hpp"

namespace gbs {

namespace {

using boost::multiprecision::abs;

int unit_side_of(const GbsGraph& g, EdgeId e) {
  if (abs(g.label(e, 0)) == 1) return 0;
  if (abs(g.label(e, 1)) == 1) return 1;
  return -1;
}

}  // namespace

std::vector<EdgeId> collapsible_edges(const GbsGraph& g) {
  std::vector<EdgeId> out;
  for (const auto& [e, vw] : g.graph().edges()) {
    if (vw[0] == vw[1]) continue;
    if (unit_side_of(g, e) >= 0) out.push_back(e);
  }
  return out;
}

bool is_reduced(const GbsGraph& g) { return collapsible_edges(g).empty(); }

MoveResult collapse(const GbsGraph& g, EdgeId e) {
  if (!g.graph().has_edge(e))
    throw MoveError(MoveError::Code::NotCollapsible,
                    "no such edge " + std::to_string(e));
  if (g.graph().is_loop(e))
    throw MoveError(MoveError::Code::NotCollapsible,
                    "edge " + g.edge_name(e) + " is a loop");
  int us = unit_side_of(g, e);
  if (us < 0)
    throw MoveError(MoveError::Code::NotCollapsible,
                    "edge " + g.edge_name(e) + " has no unit label");
  if (g.graph().edge_count() == 1)
    throw MoveError(MoveError::Code::NoEdgesResult,
                    "collapsing " + g.edge_name(e) +
                        " would leave a graph with no edges");

  Label eps = g.label(e, us);
  VertexId v = g.graph().endpoint(e, us);  // dies
  VertexId w = g.graph().endpoint(e, 1 - us);
  Label m = g.label(e, 1 - us);

  GbsGraph out = g;
  std::vector<EdgeEnd> moved;
  for (const EdgeEnd& end : g.graph().ends_at(v))
    if (end.edge != e) moved.push_back(end);
  out.remove_edge(e);
  for (const EdgeEnd& end : moved) {
    out.set_label(end, g.label(end) * eps * m);
    out.graph().reattach_end(end, w);
  }
  out.remove_vertex(v);

  ExpandMove inverse{w, m, moved, eps > 0 ? 1 : -1};
  return {std::move(out), inverse};
}

MoveResult expand(const GbsGraph& g, const ExpandMove& m) {
  if (!g.graph().has_vertex(m.vertex))
    throw MoveError(MoveError::Code::UnknownEnd,
                    "no such vertex " + std::to_string(m.vertex));
  if (m.divisor == 0)
    throw MoveError(MoveError::Code::DivisorMismatch, "zero divisor");
  if (m.unit_sign != 1 && m.unit_sign != -1)
    throw MoveError(MoveError::Code::DivisorMismatch,
                    "unit_sign must be +1 or -1");
  std::set<EdgeEnd> ends(m.ends.begin(), m.ends.end());
  for (const EdgeEnd& end : ends) {
    if (!g.graph().has_edge(end.edge) || (end.side != 0 && end.side != 1) ||
        g.graph().endpoint(end) != m.vertex)
      throw MoveError(MoveError::Code::UnknownEnd,
                      "end " + std::to_string(end.edge) + "." +
                          std::to_string(end.side) + " is not at vertex " +
                          g.vertex_name(m.vertex));
    if (g.label(end) % m.divisor != 0)
      throw MoveError(MoveError::Code::DivisorMismatch,
                      "divisor does not divide the label of end " +
                          g.edge_name(end.edge) + "." +
                          std::to_string(end.side));
  }

  GbsGraph out = g;
  VertexId nw = out.graph().max_vertex_id() + 1;
  out.add_vertex(nw);
  EdgeId ne = out.graph().max_edge_id() + 1;
  out.add_edge(ne, m.vertex, nw, m.divisor, Label(m.unit_sign));
  for (const EdgeEnd& end : ends) {
    out.set_label(end, Label(m.unit_sign) * (g.label(end) / m.divisor));
    out.graph().reattach_end(end, nw);
  }
  return {std::move(out), CollapseMove{ne}};
}

MoveResult slide(const GbsGraph& g, const EdgeEnd& end,
                 const OrientedEdge& across) {
  if (!g.graph().has_edge(across.edge) || !g.graph().has_edge(end.edge) ||
      (end.side != 0 && end.side != 1))
    throw MoveError(MoveError::Code::UnknownEnd, "unknown end or edge");
  if (end.edge == across.edge)
    throw MoveError(MoveError::Code::SameEdge,
                    "cannot slide " + g.edge_name(end.edge) +
                        " across itself");
  VertexId v = g.graph().origin(across);
  if (g.graph().endpoint(end) != v)
    throw MoveError(MoveError::Code::NotAdjacent,
                    "end " + g.edge_name(end.edge) + "." +
                        std::to_string(end.side) +
                        " is not at the origin of " +
                        g.edge_name(across.edge));
  const Label& l = g.label(across.edge, across.origin_side());
  const Label& m = g.label(across.edge, across.terminus_side());
  const Label& k = g.label(end);
  if (k % l != 0)
    throw MoveError(MoveError::Code::NotDivisible,
                    "label of " + g.edge_name(end.edge) + "." +
                        std::to_string(end.side) +
                        " is not divisible by the near label of " +
                        g.edge_name(across.edge));

  GbsGraph out = g;
  out.set_label(end, m * (k / l));
  out.graph().reattach_end(end, g.graph().terminus(across));
  return {std::move(out), SlideMove{end, across.reversed()}};
}

std::vector<VertexId> redundant_vertices(const GbsGraph& g) {
  std::vector<VertexId> out;
  for (VertexId v : g.graph().vertices()) {
    auto ends = g.graph().ends_at(v);
    if (ends.size() != 2 || ends[0].edge == ends[1].edge) continue;
    if (abs(g.label(ends[0])) == 1 && abs(g.label(ends[1])) == 1)
      out.push_back(v);
  }
  return out;
}

MoveResult remove_redundant(const GbsGraph& g, VertexId v) {
  auto redundant = redundant_vertices(g);
  if (std::find(redundant.begin(), redundant.end(), v) == redundant.end())
    throw MoveError(MoveError::Code::NotRedundant,
                    "vertex " + g.vertex_name(v) + " is not redundant");
  auto ends = g.graph().ends_at(v);
  return collapse(g, std::min(ends[0].edge, ends[1].edge));
}

MoveResult apply_move(const GbsGraph& g, const Move& m) {
  return std::visit(
      [&](const auto& move) -> MoveResult {
        using T = std::decay_t<decltype(move)>;
        if constexpr (std::is_same_v<T, CollapseMove>)
          return collapse(g, move.edge);
        else if constexpr (std::is_same_v<T, ExpandMove>)
          return expand(g, move);
        else if constexpr (std::is_same_v<T, SlideMove>)
          return slide(g, move.end, move.across);
        else
          return remove_redundant(g, move.vertex);
      },
      m);
}

std::vector<GbsGraph> all_reductions(const GbsGraph& g, bool dedup) {
  std::vector<GbsGraph> out;
  std::set<std::string> expanded{g.structural_key()};
  std::set<std::string> emitted;
  std::vector<GbsGraph> stack{g};
  while (!stack.empty()) {
    GbsGraph cur = std::move(stack.back());
    stack.pop_back();
    auto cols = collapsible_edges(cur);
    if (cols.empty()) {
      std::string key =
          dedup ? canonical_form(cur).bytes : cur.structural_key();
      if (emitted.insert(key).second) out.push_back(std::move(cur));
      continue;
    }
    if (cur.graph().edge_count() == 1) continue;  // collapse would empty it
    for (EdgeId e : cols) {
      GbsGraph child = collapse(cur, e).graph;
      if (expanded.insert(child.structural_key()).second)
        stack.push_back(std::move(child));
    }
  }
  return out;
}

GbsGraph replay(const GbsGraph& start, const std::vector<Move>& moves) {
  GbsGraph cur = start;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    try {
      cur = apply_move(cur, moves[i]).graph;
    } catch (const MoveError& err) {
      throw ReplayError("step " + std::to_string(i) +
                        " inapplicable: " + err.what());
    }
  }
  return cur;
}

GbsGraph replay(const GbsGraph& start, const MoveTrace& trace) {
  GbsGraph cur = start;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    try {
      cur = apply_move(cur, trace.steps[i].move).graph;
    } catch (const MoveError& err) {
      throw ReplayError("step " + std::to_string(i) +
                        " inapplicable: " + err.what());
    }
    if (canonical_form(cur) != trace.steps[i].after)
      throw ReplayError("step " + std::to_string(i) +
                        " reached a graph with an unexpected canonical form");
  }
  return cur;
}

}  // namespace gbs
