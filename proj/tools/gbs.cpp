#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "gbs/errors.hpp"
#include "gbs/io.hpp"
#include "gbs/labeling.hpp"
#include "gbs/lattice.hpp"
#include "gbs/moves.hpp"
#include "gbs/presentation.hpp"
#include "gbs/search.hpp"

namespace {

using gbs::GbsGraph;
using gbs::Label;
using nlohmann::ordered_json;

// Bounds that never prune a single-move listing.
gbs::SearchBounds listing_bounds() {
  gbs::SearchBounds b;
  b.max_abs_label = Label(1) << 256;
  b.max_edges = std::size_t{1} << 20;
  b.max_vertices = std::size_t{1} << 20;
  return b;
}

std::string rational_string(const std::vector<Label>& primes,
                            const std::vector<Label>& row) {
  Label num = 1, den = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (row[i] > 0)
      num *= pow(primes[i], row[i].convert_to<unsigned>());
    else if (row[i] < 0)
      den *= pow(primes[i], Label(-row[i]).convert_to<unsigned>());
  }
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

ordered_json modulus_json(const GbsGraph& g) {
  gbs::ModulusLattice lat = gbs::modular_image(g);
  ordered_json out;
  out["generators"] = ordered_json::array();
  for (const auto& row : gbs::hermite_normal_form(lat.basis))
    out["generators"].push_back(rational_string(lat.primes, row));
  gbs::IntegerModulus im = gbs::has_integer_modulus(lat);
  if (im.yes) out["integer_witness"] = im.witness.str();
  return out;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_validate(const std::string& path) {
  ordered_json out;
  try {
    (void)gbs::load_graph(path);
  } catch (const gbs::InvalidGraphError& e) {
    out["valid"] = false;
    out["diagnostics"] = ordered_json::array();
    for (const gbs::Diagnostic& d : e.diagnostics()) {
      ordered_json dj;
      dj["code"] = gbs::to_string(d.code);
      dj["detail"] = d.detail;
      out["diagnostics"].push_back(std::move(dj));
    }
    emit(out);
    return 1;
  }
  out["valid"] = true;
  out["diagnostics"] = ordered_json::array();
  emit(out);
  return 0;
}

int cmd_invariants(const std::string& path) {
  GbsGraph g = gbs::load_graph(path);
  ordered_json out;
  out["b1"] = gbs::betti(g);
  out["reduced"] = gbs::is_reduced(g);
  out["strict_ascending_loops"] = ordered_json::array();
  for (gbs::EdgeId e : gbs::strict_ascending_loops(gbs::labeling_of(g)))
    out["strict_ascending_loops"].push_back(g.edge_name(e));
  out["modulus"] = modulus_json(g);
  try {
    out["spine_member"] = gbs::is_in_spine(g);
  } catch (const gbs::AscendingContextError&) {
    // spine membership is undefined alongside a strict ascending loop
  }
  out["presentation"] = gbs::presentation(g);
  emit(out);
  return 0;
}

int cmd_reduce(const std::string& path, bool all) {
  GbsGraph g = gbs::load_graph(path);
  if (all) {
    ordered_json out = ordered_json::array();
    for (const GbsGraph& r : gbs::all_reductions(g))
      out.push_back(gbs::graph_to_json(r));
    emit(out);
    return 0;
  }
  GbsGraph r = g;
  while (r.graph().edge_count() > 1) {
    auto cols = gbs::collapsible_edges(r);
    if (cols.empty()) break;
    r = gbs::collapse(r, cols.front()).graph;
  }
  std::cout << gbs::serialize_graph(r);
  return 0;
}

int cmd_shelters(const std::string& path) {
  GbsGraph g = gbs::load_graph(path);
  gbs::ShelterReport rep = gbs::shelters(gbs::labeling_of(g));
  ordered_json out;
  out["ascending_context"] = rep.ascending_context;
  out["shelters"] = ordered_json::array();
  for (const gbs::Shelter& s : rep.shelters) {
    ordered_json sj;
    sj["type"] = s.type == gbs::Shelter::Type::Path ? "path" : "circle";
    sj["edges"] = ordered_json::array();
    for (const gbs::OrientedEdge& oe : s.edges)
      sj["edges"].push_back(g.edge_name(oe.edge));
    if (s.special_vertex)
      sj["special_vertex"] = g.vertex_name(*s.special_vertex);
    out["shelters"].push_back(std::move(sj));
  }
  emit(out);
  return 0;
}

int cmd_survivors(const std::string& path) {
  GbsGraph g = gbs::load_graph(path);
  ordered_json out;
  out["surviving"] = ordered_json::array();
  for (gbs::EdgeId e : gbs::surviving_edges(g))
    out["surviving"].push_back(g.edge_name(e));
  emit(out);
  return 0;
}

int cmd_retract(const std::string& path) {
  std::cout << gbs::serialize_graph(
      gbs::retract_to_spine(gbs::load_graph(path)));
  return 0;
}

int cmd_slides_list(const std::string& path) {
  GbsGraph g = gbs::load_graph(path);
  ordered_json out;
  out["moves"] = ordered_json::array();
  for (const auto& [m, result] : gbs::slide_neighbor_set(g, listing_bounds())
                                     .moves) {
    (void)result;
    out["moves"].push_back(gbs::format_move(g, m));
  }
  emit(out);
  return 0;
}

int cmd_apply(const std::string& path, const std::string& move_line) {
  GbsGraph g = gbs::load_graph(path);
  gbs::Move m = gbs::parse_move(g, move_line);
  gbs::MoveResult r = gbs::apply_move(g, m);
  ordered_json out;
  out["graph"] = gbs::graph_to_json(r.graph);
  out["inverse"] = gbs::format_move(r.graph, r.inverse);
  emit(out);
  return 0;
}

ordered_json report_json(const GbsGraph& g, const gbs::SpaceReport& r) {
  ordered_json out;
  out["b1"] = r.b1;
  out["classification"] = gbs::to_string(r.classification);
  out["reduced_forms"] = r.reduced_forms.size();
  out["vertex_counts"] = ordered_json::object();
  for (const auto& [s, n] : r.vertex_counts)
    out["vertex_counts"][std::to_string(s)] = n;
  out["spine_max_edges"] = r.spine_max_edges;
  out["states_visited"] = r.states_visited;
  out["exhausted"] = r.exhausted;
  out["modulus"] = modulus_json(g);
  if (r.ascending_witness) {
    out["ascending_witness"] = gbs::graph_to_json(*r.ascending_witness);
    if (r.witness_loop)
      out["witness_loop"] = r.ascending_witness->edge_name(*r.witness_loop);
  }
  return out;
}

int cmd_enumerate(const std::string& path, const std::string& moves,
                  const gbs::SearchBounds& b) {
  GbsGraph g = gbs::load_graph(path);
  gbs::SpaceReport r = moves == "all" ? gbs::classify_space(g, b)
                                      : gbs::enumerate_reduced_by_slides(g, b);
  emit(report_json(g, r));
  return 0;
}

int cmd_same_space(const std::string& path_a, const std::string& path_b,
                   const gbs::SearchBounds& b) {
  GbsGraph g1 = gbs::load_graph(path_a);
  GbsGraph g2 = gbs::load_graph(path_b);
  gbs::SameSpaceResult r = gbs::same_space(g1, g2, b);
  ordered_json out;
  out["connected"] = r.connected;
  if (r.connected) {
    ordered_json t = gbs::trace_to_json(g1, r.trace);
    for (auto& [k, v] : t.items()) out[k] = v;
    emit(out);
    return 0;
  }
  out["exhausted"] = r.exhausted;
  emit(out);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Baumslag-Solitar graph and deformation toolkit"};
  app.require_subcommand(1);

  std::string file, file_b, move_mode = "slides";
  std::vector<std::string> move_words;
  bool all = false;
  long long max_label = 54;
  std::size_t max_edges = 6, max_vertices = 7, max_states = 200000,
              max_depth = 64;

  auto add_bounds = [&](CLI::App* c) {
    c->add_option("--max-label", max_label, "largest |label| kept")
        ->capture_default_str();
    c->add_option("--max-edges", max_edges, "largest edge count kept")
        ->capture_default_str();
    c->add_option("--max-vertices", max_vertices, "largest vertex count kept")
        ->capture_default_str();
    c->add_option("--max-states", max_states, "state cap for the search")
        ->envname("GBS_MAX_STATES")
        ->capture_default_str();
    c->add_option("--max-depth", max_depth, "search depth cap")
        ->capture_default_str();
  };

  CLI::App* c_validate =
      app.add_subcommand("validate", "check a graph file's invariants");
  c_validate->add_option("file", file)->required();

  CLI::App* c_invariants = app.add_subcommand(
      "invariants", "report b1, reducedness, modulus and spine data");
  c_invariants->add_option("file", file)->required();

  CLI::App* c_reduce =
      app.add_subcommand("reduce", "collapse to a reduced graph");
  c_reduce->add_option("file", file)->required();
  c_reduce->add_flag("--all", all, "emit every reachable reduced graph");

  CLI::App* c_shelters =
      app.add_subcommand("shelters", "list path and circle shelters");
  c_shelters->add_option("file", file)->required();

  CLI::App* c_survivors =
      app.add_subcommand("survivors", "list edges surviving every reduction");
  c_survivors->add_option("file", file)->required();

  CLI::App* c_retract =
      app.add_subcommand("retract", "collapse non-surviving edges");
  c_retract->add_option("file", file)->required();

  CLI::App* c_slides = app.add_subcommand("slides", "list legal slide moves");
  c_slides->add_option("file", file)->required();

  CLI::App* c_apply = app.add_subcommand("apply", "apply one move");
  c_apply->add_option("file", file)->required();
  c_apply->add_option("move", move_words, "move line, e.g. 'collapse e0'")
      ->required();

  CLI::App* c_enumerate = app.add_subcommand(
      "enumerate", "bounded closure search from the input graph");
  c_enumerate->add_option("file", file)->required();
  c_enumerate
      ->add_option("--moves", move_mode, "slides: slide closure of a reduced "
                                         "graph; all: full deformation search")
      ->check(CLI::IsMember({"slides", "all"}))
      ->capture_default_str();
  add_bounds(c_enumerate);

  CLI::App* c_same = app.add_subcommand(
      "same-space", "search for a move path connecting two graphs");
  c_same->add_option("a", file)->required();
  c_same->add_option("b", file_b)->required();
  add_bounds(c_same);

  CLI::App* c_dot = app.add_subcommand("dot", "emit a Graphviz rendering");
  c_dot->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  gbs::SearchBounds bounds;
  bounds.max_abs_label = Label(max_label);
  bounds.max_edges = max_edges;
  bounds.max_vertices = max_vertices;
  bounds.max_states = max_states;
  bounds.max_depth = max_depth;

  try {
    if (c_validate->parsed()) return cmd_validate(file);
    if (c_invariants->parsed()) return cmd_invariants(file);
    if (c_reduce->parsed()) return cmd_reduce(file, all);
    if (c_shelters->parsed()) return cmd_shelters(file);
    if (c_survivors->parsed()) return cmd_survivors(file);
    if (c_retract->parsed()) return cmd_retract(file);
    if (c_slides->parsed()) return cmd_slides_list(file);
    if (c_apply->parsed()) {
      std::string line;
      for (const std::string& w : move_words) {
        if (!line.empty()) line += " ";
        line += w;
      }
      return cmd_apply(file, line);
    }
    if (c_enumerate->parsed()) return cmd_enumerate(file, move_mode, bounds);
    if (c_same->parsed()) return cmd_same_space(file, file_b, bounds);
    if (c_dot->parsed()) {
      std::cout << gbs::to_dot(gbs::load_graph(file));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return c_same->parsed() ? 3 : 1;
  }
  return 0;
}
