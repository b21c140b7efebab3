#include "gbs/labeling.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "gbs/errors.hpp"
#include "gbs/moves.hpp"

namespace gbs {

namespace {

using boost::multiprecision::abs;

Mark origin_mark(const EqNeqLabeling& l, const OrientedEdge& oe) {
  return l.at(oe.edge, oe.origin_side());
}

Mark terminus_mark(const EqNeqLabeling& l, const OrientedEdge& oe) {
  return l.at(oe.edge, oe.terminus_side());
}

std::vector<OrientedEdge> reversed_walk(const std::vector<OrientedEdge>& w) {
  std::vector<OrientedEdge> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(it->reversed());
  return out;
}

}  // namespace

EqNeqLabeling labeling_of(const GbsGraph& g) {
  EqNeqLabeling l;
  l.graph = g.graph();
  for (const auto& [e, vw] : g.graph().edges()) {
    (void)vw;
    l.marks[e] = {abs(g.label(e, 0)) == 1 ? Mark::Eq : Mark::Neq,
                  abs(g.label(e, 1)) == 1 ? Mark::Eq : Mark::Neq};
  }
  return l;
}

std::vector<EdgeId> strict_ascending_loops(const EqNeqLabeling& l) {
  std::vector<EdgeId> out;
  for (const auto& [e, marks] : l.marks)
    if (l.graph.is_loop(e) && marks[0] != marks[1]) out.push_back(e);
  return out;
}

std::vector<AscendingCircle> ascending_circles(const EqNeqLabeling& l,
                                               std::size_t max_len) {
  if (max_len == 0) max_len = l.graph.edge_count();
  std::vector<AscendingCircle> out;
  for (const auto& path : simple_paths_and_cycles(l.graph, max_len)) {
    if (!path.is_circle) continue;
    for (const auto& walk : {path.edges, reversed_walk(path.edges)}) {
      bool ascending = true;
      for (const auto& oe : walk)
        if (origin_mark(l, oe) != Mark::Eq) ascending = false;
      if (!ascending) continue;
      bool all_term = true;
      for (const auto& oe : walk)
        if (terminus_mark(l, oe) != Mark::Eq) all_term = false;
      out.push_back({walk, all_term});
      break;
    }
  }
  return out;
}

ShelterReport shelters(const EqNeqLabeling& l, std::size_t max_len) {
  if (max_len == 0) max_len = l.graph.edge_count();
  ShelterReport report;
  report.ascending_context = !strict_ascending_loops(l).empty();
  for (const auto& path : simple_paths_and_cycles(l.graph, max_len)) {
    const auto& w = path.edges;
    const std::size_t k = w.size();
    if (!path.is_circle) {
      bool ok = origin_mark(l, w.front()) == Mark::Neq &&
                terminus_mark(l, w.back()) == Mark::Neq;
      for (std::size_t i = 0; ok && i + 1 < k; ++i)
        ok = terminus_mark(l, w[i]) == Mark::Eq &&
             origin_mark(l, w[i + 1]) == Mark::Eq;
      if (ok) report.shelters.push_back({Shelter::Type::Path, w, {}});
      continue;
    }
    // Boundary i sits between w[i] and w[i+1]; a circle shelter allows
    // exactly one all-Neq boundary (the special vertex), all others all-Eq.
    std::size_t neq_boundaries = 0, mixed = 0;
    std::optional<VertexId> special;
    for (std::size_t i = 0; i < k; ++i) {
      Mark a = terminus_mark(l, w[i]);
      Mark b = origin_mark(l, w[(i + 1) % k]);
      if (a == Mark::Neq && b == Mark::Neq) {
        ++neq_boundaries;
        special = l.graph.terminus(w[i]);
      } else if (a != b) {
        ++mixed;
      }
    }
    if (mixed == 0 && neq_boundaries <= 1) {
      if (neq_boundaries == 0) special.reset();
      report.shelters.push_back({Shelter::Type::Circle, w, special});
    }
  }
  return report;
}

std::vector<EdgeId> surviving_edges(const EqNeqLabeling& l) {
  auto strict = strict_ascending_loops(l);
  if (!strict.empty())
    throw AscendingContextError(
        "strict ascending loop present (edge " + std::to_string(strict[0]) +
        "); surviving edges are undefined here");
  std::set<EdgeId> surv;
  for (const auto& s : shelters(l).shelters)
    for (const auto& oe : s.edges) surv.insert(oe.edge);
  return {surv.begin(), surv.end()};
}

std::vector<EdgeId> surviving_edges(const GbsGraph& g) {
  return surviving_edges(labeling_of(g));
}

std::vector<EdgeId> collapsible_edges(const EqNeqLabeling& l) {
  std::vector<EdgeId> out;
  for (const auto& [e, marks] : l.marks) {
    if (l.graph.is_loop(e)) continue;
    if (marks[0] == Mark::Eq || marks[1] == Mark::Eq) out.push_back(e);
  }
  return out;
}

EqNeqLabeling collapse(const EqNeqLabeling& l, EdgeId e) {
  if (!l.graph.has_edge(e) || l.graph.is_loop(e))
    throw MoveError(MoveError::Code::NotCollapsible,
                    "edge " + std::to_string(e) + " is not collapsible");
  int us;
  if (l.at(e, 0) == Mark::Eq)
    us = 0;
  else if (l.at(e, 1) == Mark::Eq)
    us = 1;
  else
    throw MoveError(MoveError::Code::NotCollapsible,
                    "edge " + std::to_string(e) + " has no Eq mark");
  if (l.graph.edge_count() == 1)
    throw MoveError(MoveError::Code::NoEdgesResult,
                    "collapsing the only edge");

  VertexId v = l.graph.endpoint(e, us);
  VertexId w = l.graph.endpoint(e, 1 - us);
  Mark far = l.at(e, 1 - us);

  EqNeqLabeling out = l;
  std::vector<EdgeEnd> moved;
  for (const EdgeEnd& end : l.graph.ends_at(v))
    if (end.edge != e) moved.push_back(end);
  out.graph.remove_edge(e);
  out.marks.erase(e);
  for (const EdgeEnd& end : moved) {
    out.marks[end.edge][end.side] =
        (l.at(end) == Mark::Eq && far == Mark::Eq) ? Mark::Eq : Mark::Neq;
    out.graph.reattach_end(end, w);
  }
  out.graph.remove_vertex(v);
  return out;
}

bool is_reduced(const EqNeqLabeling& l) { return collapsible_edges(l).empty(); }

GbsGraph retract_to_spine(const GbsGraph& g) {
  GbsGraph cur = g;
  for (;;) {
    auto surv = surviving_edges(cur);  // refuses ascending contexts
    std::set<EdgeId> keep(surv.begin(), surv.end());
    EdgeId doomed = -1;
    for (const auto& [e, vw] : cur.graph().edges()) {
      (void)vw;
      if (!keep.count(e)) {
        doomed = e;
        break;
      }
    }
    if (doomed < 0) return cur;
    cur = collapse(cur, doomed).graph;
  }
}

bool is_in_spine(const GbsGraph& g) {
  return surviving_edges(g).size() == g.graph().edge_count();
}

}  // namespace gbs
