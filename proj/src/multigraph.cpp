#include "gbs/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace gbs {

VertexId MultiGraph::add_vertex() {
  VertexId v = vertices_.empty() ? 0 : *vertices_.rbegin() + 1;
  vertices_.insert(v);
  return v;
}

void MultiGraph::add_vertex(VertexId v) {
  if (!vertices_.insert(v).second)
    throw std::invalid_argument("duplicate vertex id " + std::to_string(v));
}

EdgeId MultiGraph::add_edge(VertexId a, VertexId b) {
  EdgeId e = edges_.empty() ? 0 : edges_.rbegin()->first + 1;
  add_edge(e, a, b);
  return e;
}

void MultiGraph::add_edge(EdgeId e, VertexId a, VertexId b) {
  if (!has_vertex(a) || !has_vertex(b))
    throw std::invalid_argument("edge endpoint does not exist");
  if (!edges_.emplace(e, std::array<VertexId, 2>{a, b}).second)
    throw std::invalid_argument("duplicate edge id " + std::to_string(e));
}

VertexId MultiGraph::endpoint(EdgeId e, int side) const {
  auto it = edges_.find(e);
  if (it == edges_.end() || side < 0 || side > 1)
    throw std::out_of_range("no such edge end");
  return it->second[static_cast<std::size_t>(side)];
}

bool MultiGraph::is_loop(EdgeId e) const {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw std::out_of_range("no such edge");
  return it->second[0] == it->second[1];
}

std::vector<EdgeEnd> MultiGraph::ends_at(VertexId v) const {
  std::vector<EdgeEnd> out;
  for (const auto& [e, vw] : edges_) {
    if (vw[0] == v) out.push_back({e, 0});
    if (vw[1] == v) out.push_back({e, 1});
  }
  return out;
}

void MultiGraph::reattach_end(const EdgeEnd& end, VertexId to) {
  auto it = edges_.find(end.edge);
  if (it == edges_.end() || end.side < 0 || end.side > 1)
    throw std::out_of_range("no such edge end");
  if (!has_vertex(to)) throw std::invalid_argument("no such vertex");
  it->second[static_cast<std::size_t>(end.side)] = to;
}

void MultiGraph::remove_edge(EdgeId e) {
  if (edges_.erase(e) == 0) throw std::out_of_range("no such edge");
}

void MultiGraph::remove_vertex(VertexId v) {
  if (!has_vertex(v)) throw std::out_of_range("no such vertex");
  if (!ends_at(v).empty())
    throw std::invalid_argument("vertex still has incident ends");
  vertices_.erase(v);
}

VertexId MultiGraph::max_vertex_id() const {
  return vertices_.empty() ? -1 : *vertices_.rbegin();
}

EdgeId MultiGraph::max_edge_id() const {
  return edges_.empty() ? -1 : edges_.rbegin()->first;
}

bool MultiGraph::connected() const {
  if (vertices_.size() <= 1) return true;
  std::set<VertexId> seen;
  std::deque<VertexId> frontier{*vertices_.begin()};
  seen.insert(*vertices_.begin());
  while (!frontier.empty()) {
    VertexId v = frontier.front();
    frontier.pop_front();
    for (const auto& [e, vw] : edges_) {
      for (VertexId u : vw) {
        if ((vw[0] == v || vw[1] == v) && seen.insert(u).second)
          frontier.push_back(u);
      }
    }
  }
  return seen.size() == vertices_.size();
}

namespace {

struct TreeInfo {
  // parent[v] = (parent vertex, oriented edge pointing v -> parent)
  std::map<VertexId, std::pair<VertexId, OrientedEdge>> parent;
  std::set<EdgeId> tree_edges;
};

TreeInfo spanning_tree(const MultiGraph& g, bool prefer_high_edge_ids) {
  TreeInfo t;
  if (g.vertices().empty()) return t;
  VertexId root = *g.vertices().begin();
  std::set<VertexId> seen{root};
  std::deque<VertexId> frontier{root};

  std::vector<EdgeId> order;
  for (const auto& [e, vw] : g.edges()) order.push_back(e);
  if (prefer_high_edge_ids) std::reverse(order.begin(), order.end());

  while (!frontier.empty()) {
    VertexId v = frontier.front();
    frontier.pop_front();
    for (EdgeId e : order) {
      for (int side = 0; side < 2; ++side) {
        if (g.endpoint(e, side) != v) continue;
        VertexId u = g.endpoint(e, 1 - side);
        if (seen.insert(u).second) {
          // oriented edge u -> v: origin side is 1-side
          t.parent[u] = {v, OrientedEdge{e, side == 0}};
          t.tree_edges.insert(e);
          frontier.push_back(u);
        }
      }
    }
  }
  return t;
}

std::vector<OrientedEdge> path_to_root(const TreeInfo& t, VertexId v) {
  std::vector<OrientedEdge> path;
  while (t.parent.count(v)) {
    const auto& [p, oe] = t.parent.at(v);
    path.push_back(oe);
    v = p;
  }
  return path;
}

// Oriented tree path from u to w.
std::vector<OrientedEdge> tree_path(const TreeInfo& t, VertexId u, VertexId w) {
  std::vector<OrientedEdge> up_u = path_to_root(t, u);
  std::vector<OrientedEdge> up_w = path_to_root(t, w);
  while (!up_u.empty() && !up_w.empty() && up_u.back() == up_w.back()) {
    up_u.pop_back();
    up_w.pop_back();
  }
  std::vector<OrientedEdge> path = up_u;
  for (auto it = up_w.rbegin(); it != up_w.rend(); ++it)
    path.push_back(it->reversed());
  return path;
}

}  // namespace

std::vector<std::vector<OrientedEdge>> cycle_basis(const MultiGraph& g,
                                                   bool prefer_high_edge_ids) {
  TreeInfo t = spanning_tree(g, prefer_high_edge_ids);
  std::vector<std::vector<OrientedEdge>> cycles;
  for (const auto& [e, vw] : g.edges()) {
    if (t.tree_edges.count(e)) continue;
    std::vector<OrientedEdge> cycle{OrientedEdge{e, false}};
    auto back = tree_path(t, vw[1], vw[0]);
    cycle.insert(cycle.end(), back.begin(), back.end());
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

namespace {

// Dedup key: lexicographic minimum over reversal (paths) or over all
// rotations of both directions (circles).
using Key = std::vector<std::pair<EdgeId, bool>>;

Key raw_key(const std::vector<OrientedEdge>& seq) {
  Key k;
  for (const auto& oe : seq) k.emplace_back(oe.edge, oe.backward);
  return k;
}

Key reversed_key(const std::vector<OrientedEdge>& seq) {
  Key k;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it)
    k.emplace_back(it->edge, !it->backward);
  return k;
}

Key path_key(const std::vector<OrientedEdge>& seq) {
  return std::min(raw_key(seq), reversed_key(seq));
}

Key circle_key(const std::vector<OrientedEdge>& seq) {
  Key best;
  for (const Key& base : {raw_key(seq), reversed_key(seq)}) {
    for (std::size_t r = 0; r < base.size(); ++r) {
      Key rot(base.begin() + static_cast<std::ptrdiff_t>(r), base.end());
      rot.insert(rot.end(), base.begin(),
                 base.begin() + static_cast<std::ptrdiff_t>(r));
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

}  // namespace

std::vector<SimplePath> simple_paths_and_cycles(const MultiGraph& g,
                                                std::size_t max_len) {
  std::vector<SimplePath> out;
  std::set<Key> seen_paths, seen_circles;

  std::vector<OrientedEdge> walk;
  std::set<EdgeId> used;
  std::vector<VertexId> visited;  // vertex sequence of the walk

  auto extend = [&](auto&& self, VertexId at, VertexId start) -> void {
    if (walk.size() >= max_len) return;
    for (const EdgeEnd& end : g.ends_at(at)) {
      if (used.count(end.edge)) continue;
      OrientedEdge oe{end.edge, end.side == 1};
      VertexId next = g.terminus(oe);
      walk.push_back(oe);
      if (next == start) {
        if (seen_circles.insert(circle_key(walk)).second)
          out.push_back({walk, true});
        walk.pop_back();
        continue;
      }
      bool embedded = true;
      for (VertexId v : visited)
        if (v == next) embedded = false;
      if (!embedded) {
        walk.pop_back();
        continue;
      }
      if (seen_paths.insert(path_key(walk)).second) out.push_back({walk, false});
      used.insert(oe.edge);
      visited.push_back(next);
      self(self, next, start);
      visited.pop_back();
      used.erase(oe.edge);
      walk.pop_back();
    }
  };

  for (VertexId start : g.vertices()) {
    visited = {start};
    extend(extend, start, start);
  }
  return out;
}

}  // namespace gbs
