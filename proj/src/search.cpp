#include "gbs/search.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

#include "gbs/errors.hpp"
#include "gbs/labeling.hpp"

namespace gbs {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

bool within_bounds(const GbsGraph& g, const SearchBounds& b) {
  if (g.graph().edge_count() > b.max_edges) return false;
  if (g.graph().vertex_count() > b.max_vertices) return false;
  for (const auto& [e, vw] : g.graph().edges()) {
    (void)vw;
    if (abs(g.label(e, 0)) > b.max_abs_label) return false;
    if (abs(g.label(e, 1)) > b.max_abs_label) return false;
  }
  return true;
}

// Canonicalization bound for search internals: at least the default so small
// graphs never trip it, and wide enough for the configured vertex cap.
std::size_t canon_cap(const SearchBounds& b) {
  return std::max<std::size_t>(b.max_vertices + 1, 10);
}

NeighborSet merge_sets(NeighborSet a, NeighborSet b) {
  for (auto& mv : b.moves) a.moves.push_back(std::move(mv));
  a.pruned += b.pruned;
  return a;
}

// Cheap inverse derivation; only collapses need a re-application.
Move derive_inverse(const GbsGraph& parent, const Move& m,
                    const GbsGraph& child) {
  if (const auto* s = std::get_if<SlideMove>(&m))
    return SlideMove{s->end, s->across.reversed()};
  if (std::holds_alternative<ExpandMove>(m))
    return CollapseMove{child.graph().max_edge_id()};
  return apply_move(parent, m).inverse;
}

}  // namespace

Move rebase_move(const Move& m, const GraphIso& iso) {
  if (const auto* s = std::get_if<SlideMove>(&m)) {
    auto [e1, swap1] = iso.edge.at(s->end.edge);
    auto [e2, swap2] = iso.edge.at(s->across.edge);
    return SlideMove{EdgeEnd{e1, swap1 ? 1 - s->end.side : s->end.side},
                     OrientedEdge{e2, s->across.backward != swap2}};
  }
  if (const auto* c = std::get_if<CollapseMove>(&m))
    return CollapseMove{iso.edge.at(c->edge).first};
  if (const auto* x = std::get_if<ExpandMove>(&m)) {
    ExpandMove out{iso.vertex.at(x->vertex), x->divisor, {}, x->unit_sign};
    for (const EdgeEnd& end : x->ends) {
      auto [e1, swap1] = iso.edge.at(end.edge);
      out.ends.push_back({e1, swap1 ? 1 - end.side : end.side});
    }
    std::sort(out.ends.begin(), out.ends.end());
    return out;
  }
  const auto& r = std::get<RemoveRedundantMove>(m);
  return RemoveRedundantMove{iso.vertex.at(r.vertex)};
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::NonAscending:
      return "non-ascending";
    case Classification::Ascending:
      return "ascending";
    default:
      return "unknown";
  }
}

NeighborSet slide_neighbor_set(const GbsGraph& g, const SearchBounds& b) {
  NeighborSet out;
  for (const auto& [f, fvw] : g.graph().edges()) {
    (void)fvw;
    for (int side = 0; side < 2; ++side) {
      EdgeEnd end{f, side};
      VertexId v = g.graph().endpoint(end);
      for (const auto& [e, evw] : g.graph().edges()) {
        (void)evw;
        if (e == f) continue;
        for (bool backward : {false, true}) {
          OrientedEdge across{e, backward};
          if (g.graph().origin(across) != v) continue;
          if (g.label(end) % g.label(e, across.origin_side()) != 0) continue;
          MoveResult r = slide(g, end, across);
          if (!within_bounds(r.graph, b)) {
            ++out.pruned;
            continue;
          }
          out.moves.emplace_back(SlideMove{end, across},
                                 std::move(r.graph));
        }
      }
    }
  }
  return out;
}

NeighborSet elementary_neighbor_set(const GbsGraph& g, const SearchBounds& b,
                                    bool include_negative_sign) {
  NeighborSet out;
  if (g.graph().edge_count() > 1) {
    for (EdgeId e : collapsible_edges(g)) {
      MoveResult r = collapse(g, e);
      if (!within_bounds(r.graph, b)) {
        ++out.pruned;
        continue;
      }
      out.moves.emplace_back(CollapseMove{e}, std::move(r.graph));
    }
  }

  const bool room = g.graph().edge_count() + 1 <= b.max_edges &&
                    g.graph().vertex_count() + 1 <= b.max_vertices;
  for (VertexId v : g.graph().vertices()) {
    auto ends = g.graph().ends_at(v);
    if (ends.size() > 20) {  // subset blowup guard, unreachable under bounds
      ++out.pruned;
      continue;
    }
    for (std::size_t mask = 1; mask < (std::size_t{1} << ends.size());
         ++mask) {
      Label divisor_gcd = 0;
      std::vector<EdgeEnd> subset;
      for (std::size_t i = 0; i < ends.size(); ++i) {
        if (!((mask >> i) & 1)) continue;
        subset.push_back(ends[i]);
        divisor_gcd = gcd(divisor_gcd, Label(abs(g.label(ends[i]))));
      }
      if (divisor_gcd < 2) continue;
      if (divisor_gcd > 1000000) {  // divisor scan guard
        ++out.pruned;
        continue;
      }
      for (Label d = 2; d <= divisor_gcd; ++d) {
        if (divisor_gcd % d != 0) continue;
        for (int sign : {1, -1}) {
          if (sign < 0 && !include_negative_sign) continue;
          if (!room) {
            ++out.pruned;
            continue;
          }
          ExpandMove m{v, d, subset, sign};
          MoveResult r = expand(g, m);
          if (!within_bounds(r.graph, b)) {
            ++out.pruned;
            continue;
          }
          out.moves.emplace_back(std::move(m), std::move(r.graph));
        }
      }
    }
  }
  return out;
}

std::vector<GbsGraph> slide_neighbors(const GbsGraph& g,
                                      const SearchBounds& b) {
  std::set<std::string> seen;
  std::vector<GbsGraph> out;
  for (auto& [m, child] : slide_neighbor_set(g, b).moves) {
    (void)m;
    if (seen.insert(canonical_form(child, canon_cap(b)).bytes).second)
      out.push_back(std::move(child));
  }
  return out;
}

Closure closure(const GbsGraph& start, const SearchBounds& b,
                const ClosureOptions& o) {
  Closure cl;
  cl.forms.insert(canonical_form(start, canon_cap(b)).bytes);
  cl.states.push_back(start);
  std::deque<std::pair<std::size_t, std::size_t>> frontier;
  frontier.emplace_back(0, 0);
  bool capped = false;
  while (!frontier.empty() && !capped) {
    auto [idx, depth] = frontier.front();
    frontier.pop_front();
    if (depth >= b.max_depth) {
      cl.exhausted = false;
      continue;
    }
    const GbsGraph cur = cl.states[idx];
    NeighborSet ns = slide_neighbor_set(cur, b);
    if (!o.slides_only)
      ns = merge_sets(std::move(ns),
                      elementary_neighbor_set(cur, b,
                                              o.include_negative_sign));
    cl.pruned_moves += ns.pruned;
    if (ns.pruned > 0) cl.exhausted = false;
    for (auto& [m, child] : ns.moves) {
      (void)m;
      std::string key = canonical_form(child, canon_cap(b)).bytes;
      if (cl.forms.count(key)) continue;
      if (cl.states.size() >= b.max_states) {
        cl.exhausted = false;
        capped = true;
        break;
      }
      cl.forms.insert(std::move(key));
      cl.states.push_back(std::move(child));
      frontier.emplace_back(cl.states.size() - 1, depth + 1);
    }
  }
  return cl;
}

namespace {

SpaceReport report_from(const GbsGraph& start, const Closure& cl,
                        const SearchBounds& b) {
  SpaceReport rep;
  rep.b1 = betti(start);
  rep.states_visited = cl.states.size();
  rep.exhausted = cl.exhausted;
  for (const GbsGraph& s : cl.states) {
    if (is_reduced(s)) {
      rep.reduced_forms.insert(canonical_form(s, canon_cap(b)).bytes);
      ++rep.vertex_counts[s.graph().vertex_count()];
    }
    try {
      if (is_in_spine(s))
        rep.spine_max_edges =
            std::max(rep.spine_max_edges, s.graph().edge_count());
    } catch (const AscendingContextError&) {
      // strict ascending loop in this state; spine membership undefined
    }
  }
  return rep;
}

// Reduces while keeping the given loop strict: collapses that cannot touch
// the loop's labels run freely, and each remaining collapsible edge (unit at
// the loop vertex, non-unit far) is slid across the loop once, which makes
// it permanently non-collapsible since labels never shrink under collapse.
std::pair<GbsGraph, EdgeId> reduce_keeping_strict_loop(GbsGraph cur,
                                                       EdgeId lambda) {
  for (;;) {
    VertexId v = cur.graph().endpoint(lambda, 0);
    auto cols = collapsible_edges(cur);
    if (cols.empty()) break;
    EdgeId collapse_pick = -1, slide_pick = -1;
    for (EdgeId e : cols) {
      auto vw = cur.graph().edges().at(e);
      if (vw[0] != v && vw[1] != v) {
        collapse_pick = e;
        break;
      }
      int vside = vw[0] == v ? 0 : 1;
      if (abs(cur.label(e, vside)) >= 2 ||
          abs(cur.label(e, 1 - vside)) == 1) {
        // Either the far end is the unit (the far vertex dies into v), or
        // both ends are units (the merge multiplier is +-1); the loop stays
        // strict in both cases.
        collapse_pick = e;
        break;
      }
      if (slide_pick < 0) slide_pick = e;
    }
    if (collapse_pick >= 0) {
      cur = collapse(cur, collapse_pick).graph;
      continue;
    }
    int unit_side = abs(cur.label(lambda, 0)) == 1 ? 0 : 1;
    auto vw = cur.graph().edges().at(slide_pick);
    cur = slide(cur, EdgeEnd{slide_pick, vw[0] == v ? 0 : 1},
                OrientedEdge{lambda, unit_side == 1})
              .graph;
  }
  const bool u0 = abs(cur.label(lambda, 0)) == 1;
  const bool u1 = abs(cur.label(lambda, 1)) == 1;
  if (u0 == u1)
    throw std::logic_error("loop did not stay strict during reduction");
  return {std::move(cur), lambda};
}

}  // namespace

SpaceReport enumerate_reduced_by_slides(const GbsGraph& g,
                                        const SearchBounds& b) {
  if (!is_reduced(g))
    throw SearchError(SearchError::Code::NotReduced,
                      "slide enumeration requires a reduced start graph");
  ClosureOptions o;
  o.slides_only = true;
  Closure cl = closure(g, b, o);
  return report_from(g, cl, b);
}

SpaceReport classify_space(const GbsGraph& g, const SearchBounds& b) {
  Closure cl = closure(g, b, {});
  SpaceReport rep = report_from(g, cl, b);
  rep.modulus = has_integer_modulus(modular_image(g));
  if (!rep.modulus->yes) {
    rep.classification = Classification::NonAscending;
    return rep;
  }
  for (const GbsGraph& s : cl.states) {
    auto strict = strict_ascending_loops(labeling_of(s));
    if (strict.empty()) continue;
    auto [witness, loop] = reduce_keeping_strict_loop(s, strict[0]);
    rep.ascending_witness = std::move(witness);
    rep.witness_loop = loop;
    rep.classification = Classification::Ascending;
    return rep;
  }
  rep.classification = Classification::Unknown;
  return rep;
}

SameSpaceResult same_space(const GbsGraph& g1, const GbsGraph& g2,
                           const SearchBounds& b) {
  const std::size_t cap = canon_cap(b);
  SameSpaceResult res;
  CanonicalForm target = canonical_form(g2, cap);
  if (canonical_form(g1, cap) == target) {
    res.connected = true;
    res.exhausted = true;
    return res;
  }

  struct Node {
    GbsGraph graph;
    int parent = -1;
    Move from_parent;
    Move inverse;
    std::size_t depth = 0;
  };
  // side 0 grows from g1, side 1 from g2; meeting forms are detected in the
  // opposite side's index.
  std::vector<Node> nodes[2];
  std::map<std::string, std::size_t> index[2];
  std::deque<std::size_t> frontier[2];
  bool pruned[2] = {false, false};

  nodes[0].push_back({g1, -1, {}, {}, 0});
  index[0][canonical_form(g1, cap).bytes] = 0;
  frontier[0].push_back(0);
  nodes[1].push_back({g2, -1, {}, {}, 0});
  index[1][target.bytes] = 0;
  frontier[1].push_back(0);

  auto splice = [&](std::size_t fwd_idx, std::size_t bwd_idx) {
    // The forward chain replays literally; the backward chain is replayed via
    // its recorded inverses, each rebased onto the current literal graph.
    std::vector<Move> fwd_moves;
    for (int i = static_cast<int>(fwd_idx); nodes[0][i].parent >= 0;
         i = nodes[0][i].parent)
      fwd_moves.push_back(nodes[0][i].from_parent);
    std::reverse(fwd_moves.begin(), fwd_moves.end());

    MoveTrace trace;
    GbsGraph cur = g1;
    for (const Move& m : fwd_moves) {
      cur = apply_move(cur, m).graph;
      trace.steps.push_back({m, canonical_form(cur, cap)});
    }
    for (int i = static_cast<int>(bwd_idx); nodes[1][i].parent >= 0;
         i = nodes[1][i].parent) {
      GraphIso iso = graph_isomorphism(nodes[1][i].graph, cur, cap);
      Move m = rebase_move(nodes[1][i].inverse, iso);
      cur = apply_move(cur, m).graph;
      trace.steps.push_back({m, canonical_form(cur, cap)});
    }
    if (canonical_form(cur, cap) != target)
      throw std::logic_error("spliced trace missed the target graph");
    res.connected = true;
    res.trace = std::move(trace);
    res.exhausted = true;
  };

  while (!res.connected && (!frontier[0].empty() || !frontier[1].empty())) {
    int side;
    if (frontier[0].empty())
      side = 1;
    else if (frontier[1].empty())
      side = 0;
    else
      side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::size_t idx = frontier[side].front();
    frontier[side].pop_front();
    if (nodes[side][idx].depth >= b.max_depth) {
      pruned[side] = true;
      continue;
    }
    const GbsGraph cur = nodes[side][idx].graph;
    NeighborSet ns = merge_sets(slide_neighbor_set(cur, b),
                                elementary_neighbor_set(cur, b, false));
    if (ns.pruned > 0) pruned[side] = true;
    for (auto& [m, child] : ns.moves) {
      std::string key = canonical_form(child, cap).bytes;
      if (index[side].count(key)) continue;
      if (nodes[side].size() >= b.max_states) {
        pruned[side] = true;
        break;
      }
      Move inv = derive_inverse(cur, m, child);
      nodes[side].push_back({std::move(child), static_cast<int>(idx), m, inv,
                             nodes[side][idx].depth + 1});
      std::size_t new_idx = nodes[side].size() - 1;
      index[side][key] = new_idx;
      frontier[side].push_back(new_idx);
      auto other = index[1 - side].find(key);
      if (other != index[1 - side].end()) {
        if (side == 0)
          splice(new_idx, other->second);
        else
          splice(other->second, new_idx);
        break;
      }
    }
  }
  if (!res.connected) res.exhausted = !pruned[0] && !pruned[1];
  return res;
}

namespace {

bool reduce_rec(const GbsGraph& cur, std::set<EdgeId> remaining,
                GbsGraph& out) {
  if (remaining.empty()) {
    out = cur;
    return true;
  }
  for (EdgeId e : remaining) {
    if (cur.graph().is_loop(e)) continue;
    if (abs(cur.label(e, 0)) != 1 && abs(cur.label(e, 1)) != 1) continue;
    if (cur.graph().edge_count() == 1) continue;
    GbsGraph child = collapse(cur, e).graph;
    std::set<EdgeId> rest = remaining;
    rest.erase(e);
    if (reduce_rec(child, std::move(rest), out)) return true;
  }
  return false;
}

}  // namespace

GbsGraph reduce_by_forest(const GbsGraph& theta, const std::set<EdgeId>& f) {
  for (EdgeId e : f) {
    if (!theta.graph().has_edge(e))
      throw std::invalid_argument("forest edge " + std::to_string(e) +
                                  " is not in the graph");
    if (theta.graph().is_loop(e))
      throw SearchError(SearchError::Code::NotReducing,
                        "forest edge " + theta.edge_name(e) + " is a loop");
  }
  GbsGraph out;
  if (!reduce_rec(theta, f, out))
    throw SearchError(SearchError::Code::NotReducing,
                      "no collapse order collapses the whole edge set");
  return out;
}

namespace {

struct RefineResult {
  GbsGraph a;
  GbsGraph b;
  std::vector<Move> slides;
};

// One level of the refinement recursion. Both forests are nonempty here or
// both empty; each level strips one edge from each and one edge from the
// graph.
RefineResult refine_rec(const GbsGraph& theta, const std::set<EdgeId>& f1,
                        const std::set<EdgeId>& f2, std::size_t cap) {
  if (f1.empty() || f2.empty()) {
    if (f1.size() != f2.size())
      throw SearchError(SearchError::Code::NotReducing,
                        "forest sizes diverged during refinement");
    return {theta, theta, {}};
  }

  // Pivot: a vertex v with an f2 edge and an f1 edge both carrying a unit
  // label at v. One exists in any non-ascending instance.
  VertexId v = -1;
  EdgeId e = -1, ep = -1;
  int e_vside = 0, ep_vside = 0;
  for (VertexId cand : theta.graph().vertices()) {
    e = ep = -1;
    for (EdgeId x : f2) {
      auto vw = theta.graph().edges().at(x);
      int side = vw[0] == cand ? 0 : (vw[1] == cand ? 1 : -1);
      if (side >= 0 && abs(theta.label(x, side)) == 1) {
        e = x;
        e_vside = side;
        break;
      }
    }
    for (EdgeId x : f1) {
      auto vw = theta.graph().edges().at(x);
      int side = vw[0] == cand ? 0 : (vw[1] == cand ? 1 : -1);
      if (side >= 0 && abs(theta.label(x, side)) == 1) {
        ep = x;
        ep_vside = side;
        break;
      }
    }
    if (e >= 0 && ep >= 0) {
      v = cand;
      break;
    }
  }
  if (v < 0)
    throw SearchError(SearchError::Code::NotReducing,
                      "no pivot vertex with unit labels from both edge sets");

  // Split v: the new edge carries units on both sides, and every f1 end at v
  // moves to the new vertex. Collapsing e and then ep drops the edge count
  // by one net and removes one edge from each forest.
  std::vector<EdgeEnd> split;
  for (const EdgeEnd& end : theta.graph().ends_at(v))
    if (f1.count(end.edge)) split.push_back(end);
  GbsGraph theta0 = expand(theta, ExpandMove{v, 1, split, 1}).graph;
  GbsGraph theta1 = collapse(theta0, e).graph;
  theta1 = collapse(theta1, ep).graph;

  std::set<EdgeId> f1c = f1, f2c = f2;
  f1c.erase(ep);
  f2c.erase(e);
  RefineResult sub = refine_rec(theta1, f1c, f2c, cap);

  GbsGraph a = reduce_by_forest(theta, f1);
  GbsGraph b = reduce_by_forest(theta, f2);

  std::vector<Move> trace;
  GbsGraph cur = a;
  // Slide every non-f1 end at v (other than e's own) across e. This mirrors,
  // inside the reduced graph, what collapsing e instead of the split edge
  // does to the refinement; the result is canonically the recursion's start.
  OrientedEdge across_a{e, e_vside == 1};
  for (const EdgeEnd& end : theta.graph().ends_at(v)) {
    if (f1.count(end.edge) || end.edge == e) continue;
    cur = slide(cur, end, across_a).graph;
    trace.push_back(SlideMove{end, across_a});
  }

  GraphIso phi = graph_isomorphism(sub.a, cur, cap);
  for (const Move& m : sub.slides) {
    Move m2 = rebase_move(m, phi);
    cur = apply_move(cur, m2).graph;
    trace.push_back(m2);
  }

  // Mirror chain on b: slide the remaining f1 ends at v across ep, landing
  // canonically on the recursion's end; then append its inversion, rebased
  // onto the main trace.
  GbsGraph curb = b;
  std::vector<SlideMove> chain_b;
  OrientedEdge across_b{ep, ep_vside == 1};
  for (const EdgeEnd& end : theta.graph().ends_at(v)) {
    if (!f1.count(end.edge) || end.edge == ep) continue;
    curb = slide(curb, end, across_b).graph;
    chain_b.push_back(SlideMove{end, across_b});
  }

  GraphIso psi = graph_isomorphism(curb, cur, cap);
  for (auto it = chain_b.rbegin(); it != chain_b.rend(); ++it) {
    Move m2 = rebase_move(SlideMove{it->end, it->across.reversed()}, psi);
    cur = apply_move(cur, m2).graph;
    trace.push_back(m2);
  }

  if (canonical_form(cur, cap) != canonical_form(b, cap))
    throw std::logic_error("refinement level failed to reach its target");
  return {std::move(a), std::move(b), std::move(trace)};
}

}  // namespace

MoveTrace slide_path_via_refinement(const GbsGraph& theta,
                                    const std::set<EdgeId>& f1,
                                    const std::set<EdgeId>& f2,
                                    bool assume_non_ascending) {
  const std::size_t cap =
      std::max<std::size_t>(theta.graph().vertex_count() + 1, 10);
  for (const std::set<EdgeId>* f : {&f1, &f2})
    for (EdgeId e : *f) {
      if (!theta.graph().has_edge(e))
        throw std::invalid_argument("edge " + std::to_string(e) +
                                    " is not in the graph");
      if (theta.graph().is_loop(e))
        throw SearchError(SearchError::Code::NotReducing,
                          "edge " + theta.edge_name(e) +
                              " is a loop and can never collapse");
    }

  // Shared edges are collapsed away first: both reductions collapse them,
  // so the slide path between the reductions is unaffected.
  GbsGraph th = theta;
  std::set<EdgeId> a_set = f1, b_set = f2;
  for (;;) {
    std::vector<EdgeId> shared;
    std::set_intersection(a_set.begin(), a_set.end(), b_set.begin(),
                          b_set.end(), std::back_inserter(shared));
    if (shared.empty()) break;
    EdgeId pick = -1;
    for (EdgeId e : shared) {
      if (th.graph().is_loop(e) || th.graph().edge_count() == 1) continue;
      if (abs(th.label(e, 0)) == 1 || abs(th.label(e, 1)) == 1) {
        pick = e;
        break;
      }
    }
    if (pick < 0)
      throw SearchError(SearchError::Code::ForestsOverlap,
                        "shared edges remain and none is collapsible");
    th = collapse(th, pick).graph;
    a_set.erase(pick);
    b_set.erase(pick);
  }

  if (a_set.empty() && b_set.empty()) return {};

  GbsGraph a = reduce_by_forest(th, a_set);
  if (!is_reduced(a))
    throw SearchError(SearchError::Code::NotReducing,
                      "first edge set does not reduce the graph");
  GbsGraph b = reduce_by_forest(th, b_set);
  if (!is_reduced(b))
    throw SearchError(SearchError::Code::NotReducing,
                      "second edge set does not reduce the graph");
  if (a_set.size() != b_set.size())
    throw SearchError(SearchError::Code::NotReducing,
                      "edge sets of different size cannot reduce to the "
                      "same space");

  if (!assume_non_ascending) {
    auto mod = has_integer_modulus(modular_image(th));
    if (mod.yes)
      throw AscendingContextError(
          "integer modulus " + mod.witness.str() +
          " exists; the slide construction needs a non-ascending space");
  }

  RefineResult rec = refine_rec(th, a_set, b_set, cap);

  GraphIso iso = graph_isomorphism(rec.a, a, cap);
  MoveTrace trace;
  GbsGraph cur = a;
  for (const Move& m : rec.slides) {
    Move m2 = rebase_move(m, iso);
    cur = apply_move(cur, m2).graph;
    trace.steps.push_back({m2, canonical_form(cur, cap)});
  }
  if (canonical_form(cur, cap) != canonical_form(b, cap))
    throw std::logic_error("refinement trace does not reach the second "
                           "reduction");
  return trace;
}

BoundCheck vertex_bound_harness(const SpaceReport& report,
                                std::optional<std::size_t> known_m) {
  BoundCheck out;
  if (report.vertex_counts.empty()) {
    out.pass = false;
    out.detail = "report contains no reduced forms";
    return out;
  }
  const long b1 = static_cast<long>(report.b1);
  const long s_min = static_cast<long>(report.vertex_counts.begin()->first);
  for (const auto& [s_raw, count] : report.vertex_counts) {
    (void)count;
    const long s = static_cast<long>(s_raw);
    const long derived = 2 * s_min + 2 * b1 - 2;
    if (s > derived) {
      out.pass = false;
      out.detail = "vertex count " + std::to_string(s) +
                   " exceeds 2*s_min + 2*b1 - 2 = " + std::to_string(derived);
      return out;
    }
    if (known_m) {
      const long m = static_cast<long>(*known_m);
      if (s < m || s > 2 * m + 2 * b1 - 2) {
        out.pass = false;
        out.detail = "vertex count " + std::to_string(s) +
                     " violates the exact bounds for |M| = " +
                     std::to_string(m);
        return out;
      }
    }
  }
  out.detail = "all " + std::to_string(report.vertex_counts.size()) +
               " vertex counts within bounds";
  return out;
}

}  // namespace gbs
