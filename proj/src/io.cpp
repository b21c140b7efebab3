#include "gbs/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "gbs/errors.hpp"

namespace gbs {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string join_codes(const std::vector<Diagnostic>& diags) {
  std::string out = "invalid graph:";
  for (const Diagnostic& d : diags) {
    out += std::string(" ") + to_string(d.code);
    if (!d.detail.empty()) out += "(" + d.detail + ")";
  }
  return out;
}

Label parse_label(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Label(v.get<std::int64_t>());
  if (v.is_number_unsigned()) return Label(v.get<std::uint64_t>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    std::size_t i = s.size() > 0 && (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw ParseError(where + ": empty label string");
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw ParseError(where + ": label string is not a decimal integer");
    return Label(s);
  }
  throw ParseError(where + ": label must be an integer or a decimal string");
}

json label_to_json(const Label& l) {
  static const Label lo = std::numeric_limits<std::int64_t>::min();
  static const Label hi = std::numeric_limits<std::int64_t>::max();
  if (l >= lo && l <= hi) return json(l.convert_to<std::int64_t>());
  return json(l.str());
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

InvalidGraphError::InvalidGraphError(std::vector<Diagnostic> diags)
    : std::runtime_error(join_codes(diags)), diags_(std::move(diags)) {}

GbsGraph parse_graph(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") ||
      !doc.contains("edges") || !doc["vertices"].is_array() ||
      !doc["edges"].is_array())
    throw ParseError("document needs \"vertices\" and \"edges\" arrays");

  GbsGraph g;
  std::map<std::string, VertexId> by_name;
  for (const json& v : doc["vertices"]) {
    if (!v.is_string()) throw ParseError("vertex ids must be strings");
    const std::string name = v.get<std::string>();
    if (by_name.count(name))
      throw ParseError("duplicate vertex id \"" + name + "\"");
    VertexId id = g.add_vertex();
    g.set_vertex_name(id, name);
    by_name[name] = id;
  }

  std::set<std::string> edge_names;
  for (const json& ej : doc["edges"]) {
    if (!ej.is_object() || !ej.contains("id") || !ej.contains("ends") ||
        !ej["ends"].is_array() || ej["ends"].size() != 2)
      throw ParseError("each edge needs an \"id\" and exactly two ends");
    if (!ej["id"].is_string()) throw ParseError("edge ids must be strings");
    const std::string name = ej["id"].get<std::string>();
    if (!edge_names.insert(name).second)
      throw ParseError("duplicate edge id \"" + name + "\"");
    VertexId vw[2];
    Label labels[2];
    for (int side = 0; side < 2; ++side) {
      const json& end = ej["ends"][side];
      if (!end.is_object() || !end.contains("vertex") ||
          !end.contains("label") || !end["vertex"].is_string())
        throw ParseError("edge \"" + name +
                         "\": each end needs a vertex and a label");
      const std::string vn = end["vertex"].get<std::string>();
      auto it = by_name.find(vn);
      if (it == by_name.end())
        throw ParseError("edge \"" + name + "\" references unknown vertex \"" +
                         vn + "\"");
      vw[side] = it->second;
      labels[side] = parse_label(end["label"], "edge \"" + name + "\"");
    }
    EdgeId e = g.add_edge(vw[0], vw[1], labels[0], labels[1]);
    g.set_edge_name(e, name);
  }

  auto diags = validate(g);
  if (!diags.empty()) throw InvalidGraphError(std::move(diags));
  return g;
}

GbsGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

nlohmann::ordered_json graph_to_json(const GbsGraph& g) {
  ordered_json doc;
  doc["vertices"] = ordered_json::array();
  for (VertexId v : g.graph().vertices())
    doc["vertices"].push_back(g.vertex_name(v));
  doc["edges"] = ordered_json::array();
  for (const auto& [e, vw] : g.graph().edges()) {
    ordered_json ej;
    ej["id"] = g.edge_name(e);
    ej["ends"] = ordered_json::array();
    for (int side = 0; side < 2; ++side) {
      ordered_json end;
      end["vertex"] = g.vertex_name(vw[side]);
      end["label"] = label_to_json(g.label(e, side));
      ej["ends"].push_back(std::move(end));
    }
    doc["edges"].push_back(std::move(ej));
  }
  return doc;
}

std::string serialize_graph(const GbsGraph& g) {
  return graph_to_json(g).dump(2) + "\n";
}

std::string format_move(const GbsGraph& g, const Move& m) {
  if (const auto* c = std::get_if<CollapseMove>(&m))
    return "collapse " + g.edge_name(c->edge);
  if (const auto* x = std::get_if<ExpandMove>(&m)) {
    std::string out = "expand " + g.vertex_name(x->vertex) +
                      " d=" + x->divisor.str() + " ends=[";
    for (std::size_t i = 0; i < x->ends.size(); ++i) {
      if (i) out += ",";
      out += g.edge_name(x->ends[i].edge) + "." +
             std::to_string(x->ends[i].side);
    }
    out += "] sign=";
    out += x->unit_sign > 0 ? "+" : "-";
    return out;
  }
  if (const auto* s = std::get_if<SlideMove>(&m))
    return "slide " + g.edge_name(s->end.edge) + "." +
           std::to_string(s->end.side) + " across " +
           g.edge_name(s->across.edge) + (s->across.backward ? "-" : "+");
  const auto& r = std::get<RemoveRedundantMove>(m);
  return "remove-redundant " + g.vertex_name(r.vertex);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

EdgeId edge_or_throw(const GbsGraph& g, const std::string& name) {
  auto e = g.edge_by_name(name);
  if (!e) throw ParseError("unknown edge \"" + name + "\"");
  return *e;
}

EdgeEnd parse_end(const GbsGraph& g, const std::string& spec) {
  auto dot = spec.rfind('.');
  if (dot == std::string::npos || dot + 2 != spec.size() ||
      (spec[dot + 1] != '0' && spec[dot + 1] != '1'))
    throw ParseError("end spec \"" + spec + "\" must be <edge>.<0|1>");
  return {edge_or_throw(g, spec.substr(0, dot)), spec[dot + 1] - '0'};
}

}  // namespace

Move parse_move(const GbsGraph& g, const std::string& line) {
  std::vector<std::string> tok;
  for (const std::string& t : split(line, ' '))
    if (!t.empty()) tok.push_back(t);
  if (tok.empty()) throw ParseError("empty move");

  if (tok[0] == "collapse") {
    if (tok.size() != 2) throw ParseError("usage: collapse <edge>");
    return CollapseMove{edge_or_throw(g, tok[1])};
  }
  if (tok[0] == "remove-redundant") {
    if (tok.size() != 2) throw ParseError("usage: remove-redundant <vertex>");
    auto v = g.vertex_by_name(tok[1]);
    if (!v) throw ParseError("unknown vertex \"" + tok[1] + "\"");
    return RemoveRedundantMove{*v};
  }
  if (tok[0] == "slide") {
    if (tok.size() != 4 || tok[2] != "across")
      throw ParseError("usage: slide <edge>.<side> across <edge><+|->");
    const std::string& a = tok[3];
    char dir = a.empty() ? '\0' : a.back();
    if (dir != '+' && dir != '-')
      throw ParseError("across spec \"" + a + "\" must end in + or -");
    return SlideMove{parse_end(g, tok[1]),
                     OrientedEdge{edge_or_throw(g, a.substr(0, a.size() - 1)),
                                  dir == '-'}};
  }
  if (tok[0] == "expand") {
    if (tok.size() != 5)
      throw ParseError(
          "usage: expand <vertex> d=<n> ends=[<edge>.<side>,...] sign=<+|->");
    auto v = g.vertex_by_name(tok[1]);
    if (!v) throw ParseError("unknown vertex \"" + tok[1] + "\"");
    if (tok[2].rfind("d=", 0) != 0 || tok[3].rfind("ends=[", 0) != 0 ||
        tok[3].back() != ']' || tok[4].rfind("sign=", 0) != 0)
      throw ParseError("expand arguments must be d=, ends=[...], sign=");
    ExpandMove m;
    m.vertex = *v;
    try {
      m.divisor = Label(tok[2].substr(2));
    } catch (const std::exception&) {
      throw ParseError("bad divisor \"" + tok[2].substr(2) + "\"");
    }
    const std::string inner = tok[3].substr(6, tok[3].size() - 7);
    if (!inner.empty())
      for (const std::string& spec : split(inner, ','))
        m.ends.push_back(parse_end(g, spec));
    const std::string sign = tok[4].substr(5);
    if (sign != "+" && sign != "-")
      throw ParseError("sign must be + or -");
    m.unit_sign = sign == "+" ? 1 : -1;
    return m;
  }
  throw ParseError("unknown move verb \"" + tok[0] + "\"");
}

nlohmann::ordered_json trace_to_json(const GbsGraph& start,
                                     const MoveTrace& trace) {
  ordered_json out;
  out["length"] = trace.steps.size();
  out["moves"] = ordered_json::array();
  GbsGraph cur = start;
  for (const TraceStep& step : trace.steps) {
    out["moves"].push_back(format_move(cur, step.move));
    cur = apply_move(cur, step.move).graph;
  }
  out["final"] = graph_to_json(cur);
  return out;
}

std::string to_dot(const GbsGraph& g) {
  std::ostringstream os;
  os << "digraph gbs {\n";
  for (VertexId v : g.graph().vertices())
    os << "  n" << v << " [label=\"" << dot_escape(g.vertex_name(v))
       << "\"];\n";
  for (const auto& [e, vw] : g.graph().edges()) {
    const bool eq0 = boost::multiprecision::abs(g.label(e, 0)) == 1;
    const bool eq1 = boost::multiprecision::abs(g.label(e, 1)) == 1;
    os << "  n" << vw[0] << " -> n" << vw[1] << " [dir=both, label=\""
       << dot_escape(g.edge_name(e)) << "\", taillabel=\"" << g.label(e, 0)
       << "\", headlabel=\"" << g.label(e, 1) << "\", arrowtail="
       << (eq0 ? "empty" : "normal") << ", arrowhead="
       << (eq1 ? "empty" : "normal") << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace gbs
