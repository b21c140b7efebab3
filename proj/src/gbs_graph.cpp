#include "gbs/gbs_graph.hpp"

#include <sstream>
#include <stdexcept>

namespace gbs {

EdgeId GbsGraph::add_edge(VertexId a, VertexId b, Label la, Label lb) {
  EdgeId e = graph_.add_edge(a, b);
  labels_[e] = {std::move(la), std::move(lb)};
  return e;
}

void GbsGraph::add_edge(EdgeId e, VertexId a, VertexId b, Label la, Label lb) {
  graph_.add_edge(e, a, b);
  labels_[e] = {std::move(la), std::move(lb)};
}

const Label& GbsGraph::label(EdgeId e, int side) const {
  auto it = labels_.find(e);
  if (it == labels_.end() || side < 0 || side > 1)
    throw std::out_of_range("no such edge end");
  return it->second[static_cast<std::size_t>(side)];
}

void GbsGraph::set_label(EdgeId e, int side, Label l) {
  auto it = labels_.find(e);
  if (it == labels_.end() || side < 0 || side > 1)
    throw std::out_of_range("no such edge end");
  it->second[static_cast<std::size_t>(side)] = std::move(l);
}

void GbsGraph::remove_edge(EdgeId e) {
  graph_.remove_edge(e);
  labels_.erase(e);
  edge_names_.erase(e);
}

void GbsGraph::remove_vertex(VertexId v) {
  graph_.remove_vertex(v);
  vertex_names_.erase(v);
}

std::string GbsGraph::vertex_name(VertexId v) const {
  auto it = vertex_names_.find(v);
  if (it != vertex_names_.end()) return it->second;
  return "v" + std::to_string(v);
}

std::string GbsGraph::edge_name(EdgeId e) const {
  auto it = edge_names_.find(e);
  if (it != edge_names_.end()) return it->second;
  return "e" + std::to_string(e);
}

void GbsGraph::set_vertex_name(VertexId v, std::string name) {
  vertex_names_[v] = std::move(name);
}

void GbsGraph::set_edge_name(EdgeId e, std::string name) {
  edge_names_[e] = std::move(name);
}

std::optional<VertexId> GbsGraph::vertex_by_name(const std::string& name) const {
  for (VertexId v : graph_.vertices())
    if (vertex_name(v) == name) return v;
  return std::nullopt;
}

std::optional<EdgeId> GbsGraph::edge_by_name(const std::string& name) const {
  for (const auto& [e, vw] : graph_.edges())
    if (edge_name(e) == name) return e;
  return std::nullopt;
}

std::string GbsGraph::structural_key() const {
  std::ostringstream os;
  os << "V";
  for (VertexId v : graph_.vertices()) os << " " << v;
  os << " E";
  for (const auto& [e, vw] : graph_.edges())
    os << " " << e << ":" << vw[0] << "," << vw[1] << ","
       << label(e, 0) << "," << label(e, 1);
  return os.str();
}

const char* to_string(Diagnostic::Code code) {
  switch (code) {
    case Diagnostic::Code::ZeroLabel: return "ZeroLabel";
    case Diagnostic::Code::Disconnected: return "Disconnected";
    case Diagnostic::Code::NoEdges: return "NoEdges";
  }
  return "?";
}

std::vector<Diagnostic> validate(const GbsGraph& g) {
  std::vector<Diagnostic> out;
  for (const auto& [e, vw] : g.graph().edges()) {
    for (int side = 0; side < 2; ++side) {
      if (g.label(e, side) == 0)
        out.push_back({Diagnostic::Code::ZeroLabel,
                       g.edge_name(e) + "." + std::to_string(side)});
    }
  }
  if (g.graph().edge_count() == 0)
    out.push_back({Diagnostic::Code::NoEdges, ""});
  if (!g.graph().connected())
    out.push_back({Diagnostic::Code::Disconnected, ""});
  return out;
}

std::size_t betti(const GbsGraph& g) {
  return g.graph().edge_count() + 1 - g.graph().vertex_count();
}

}  // namespace gbs
