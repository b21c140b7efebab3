#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "gbs/canonical.hpp"
#include "gbs/errors.hpp"
#include "gbs/io.hpp"
#include "gbs/moves.hpp"
#include "oracles.hpp"

using namespace gbs;
using nlohmann::json;

static std::string fxp(const std::string& name) {
  return std::string(GBS_FIXTURE_DIR) + "/" + name + ".json";
}

static GbsGraph fx(const std::string& name) { return load_graph(fxp(name)); }

static oracle::RunResult cli(const std::string& args) {
  return oracle::run(std::string(GBS_CLI_PATH) + " " + args);
}

TEST_CASE("parse and serialize are inverse on serialized documents") {
  for (const char* name : {"bs16", "bs24_twovertex", "na3", "theta_c",
                           "spine4", "theta_d"}) {
    CAPTURE(name);
    GbsGraph g = fx(name);
    std::string once = serialize_graph(g);
    std::string twice = serialize_graph(parse_graph(once));
    CHECK(once == twice);
    CHECK(canonical_form(parse_graph(once)) == canonical_form(g));
  }
}

TEST_CASE("names survive the round trip") {
  GbsGraph g = fx("theta_c");
  GbsGraph h = parse_graph(serialize_graph(g));
  CHECK(h.vertex_by_name("M").has_value());
  CHECK(h.edge_by_name("sAB").has_value());
  CHECK(h.label(h.edge_by_name("sAB").value(), 0) == 2);
}

TEST_CASE("labels outside 64 bits become decimal strings") {
  GbsGraph g;
  VertexId a = g.add_vertex();
  VertexId b = g.add_vertex();
  Label big = Label(1) << 100;
  g.add_edge(a, b, 2, big);

  json doc = json::parse(serialize_graph(g));
  CHECK(doc["edges"][0]["ends"][0]["label"] == 2);
  CHECK(doc["edges"][0]["ends"][1]["label"] ==
        "1267650600228229401496703205376");

  GbsGraph h = parse_graph(serialize_graph(g));
  CHECK(h.label(0, 1) == big);

  // String labels are legal on input even when small.
  GbsGraph s = parse_graph(R"({"vertices":["A"],
      "edges":[{"id":"e","ends":[{"vertex":"A","label":"-5"},
                                 {"vertex":"A","label":2}]}]})");
  CHECK(s.label(0, 0) == -5);
}

TEST_CASE("malformed documents raise parse errors") {
  CHECK_THROWS_AS(parse_graph("not json"), ParseError);
  CHECK_THROWS_AS(parse_graph("{}"), ParseError);
  CHECK_THROWS_AS(
      parse_graph(R"({"vertices":["A","A"],"edges":[]})"),  // duplicate
      ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["A"],
      "edges":[{"id":"e","ends":[{"vertex":"B","label":1},
                                 {"vertex":"A","label":2}]}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["A"],
      "edges":[{"id":"e","ends":[{"vertex":"A","label":1}]}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["A"],
      "edges":[{"id":"e","ends":[{"vertex":"A","label":1.5},
                                 {"vertex":"A","label":2}]}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["A"],
      "edges":[{"id":"e","ends":[{"vertex":"A","label":"12x"},
                                 {"vertex":"A","label":2}]}]})"),
                  ParseError);
}

TEST_CASE("well-formed but invalid graphs carry diagnostics") {
  try {
    parse_graph(R"({"vertices":["A"],
      "edges":[{"id":"e","ends":[{"vertex":"A","label":0},
                                 {"vertex":"A","label":2}]}]})");
    FAIL("expected InvalidGraphError");
  } catch (const InvalidGraphError& e) {
    REQUIRE(e.diagnostics().size() == 1);
    CHECK(e.diagnostics()[0].code == Diagnostic::Code::ZeroLabel);
  }

  CHECK_THROWS_AS(parse_graph(R"({"vertices":["A","B"],
      "edges":[{"id":"e","ends":[{"vertex":"A","label":1},
                                 {"vertex":"A","label":2}]}]})"),
                  InvalidGraphError);  // B disconnected

  // Empty arrays are structurally fine; the graph just has no edges.
  CHECK_THROWS_AS(parse_graph(R"({"vertices":[],"edges":[]})"),
                  InvalidGraphError);
}

TEST_CASE("move lines round trip through their grammar") {
  GbsGraph g = fx("theta_c");
  EdgeId s1 = g.edge_by_name("s1").value();
  EdgeId s2 = g.edge_by_name("s2").value();
  EdgeId sab = g.edge_by_name("sAB").value();
  VertexId m = g.vertex_by_name("M").value();

  std::vector<Move> moves{
      CollapseMove{s1},
      SlideMove{{sab, 1}, {s2, false}},
      SlideMove{{sab, 1}, {s2, true}},
      ExpandMove{m, 3, {{sab, 1}}, -1},
  };
  for (const Move& mv : moves) {
    std::string line = format_move(g, mv);
    CAPTURE(line);
    CHECK(parse_move(g, line) == mv);
  }
  CHECK(format_move(g, CollapseMove{s1}) == "collapse s1");
  CHECK(format_move(g, SlideMove{{sab, 1}, {s2, false}}) ==
        "slide sAB.1 across s2+");
  CHECK(format_move(g, ExpandMove{m, 3, {{sab, 1}}, -1}) ==
        "expand M d=3 ends=[sAB.1] sign=-");

  GbsGraph path;
  VertexId pa = path.add_vertex();
  VertexId pm = path.add_vertex();
  path.add_edge(pa, pm, 4, 1);
  path.add_edge(pm, path.add_vertex(), 1, 9);
  path.set_vertex_name(pm, "mid");
  Move rr = RemoveRedundantMove{pm};
  CHECK(format_move(path, rr) == "remove-redundant mid");
  CHECK(parse_move(path, "remove-redundant mid") == rr);
}

TEST_CASE("move parse failures") {
  GbsGraph g = fx("theta_c");
  CHECK_THROWS_AS(parse_move(g, ""), ParseError);
  CHECK_THROWS_AS(parse_move(g, "teleport s1"), ParseError);
  CHECK_THROWS_AS(parse_move(g, "collapse nope"), ParseError);
  CHECK_THROWS_AS(parse_move(g, "slide s1.2 across s2+"), ParseError);
  CHECK_THROWS_AS(parse_move(g, "slide s1 across s2+"), ParseError);
  CHECK_THROWS_AS(parse_move(g, "slide s1.0 across s2"), ParseError);
  CHECK_THROWS_AS(parse_move(g, "expand M d=x ends=[s1.0] sign=+"),
                  ParseError);
  CHECK_THROWS_AS(parse_move(g, "expand M d=2 ends=[] sign=*"), ParseError);
}

TEST_CASE("trace serialization shape") {
  GbsGraph g = fx("theta_c");
  EdgeId s1 = g.edge_by_name("s1").value();
  auto r = collapse(g, s1);
  MoveTrace trace;
  trace.steps.push_back({CollapseMove{s1}, canonical_form(r.graph)});
  json doc = trace_to_json(g, trace);
  CHECK(doc["length"] == 1);
  REQUIRE(doc["moves"].size() == 1);
  CHECK(doc["moves"][0] == "collapse s1");
  CHECK(canonical_form(parse_graph(doc["final"].dump())) ==
        canonical_form(r.graph));
}

TEST_CASE("dot rendering distinguishes unit ends") {
  std::string dot = to_dot(fx("bs16"));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("dir=both") != std::string::npos);
  CHECK(dot.find("taillabel=\"1\"") != std::string::npos);
  CHECK(dot.find("headlabel=\"6\"") != std::string::npos);
  CHECK(dot.find("arrowtail=empty") != std::string::npos);
  CHECK(dot.find("arrowhead=normal") != std::string::npos);
  CHECK(dot.find("label=\"e0\"") != std::string::npos);
}

// ---- CLI subprocess coverage ----

TEST_CASE("cli usage errors exit 64") {
  CHECK(cli("").exit_code == 64);
  CHECK(cli("frobnicate x.json").exit_code == 64);
  CHECK(cli("dot").exit_code == 64);
  CHECK(cli("--help").exit_code == 0);
}

TEST_CASE("cli validate") {
  auto good = cli("validate " + fxp("bs16"));
  CHECK(good.exit_code == 0);
  CHECK(json::parse(good.out)["valid"] == true);

  auto bad = cli("validate " + fxp("zero_label"));
  CHECK(bad.exit_code == 1);
  json doc = json::parse(bad.out);
  CHECK(doc["valid"] == false);
  CHECK(doc["diagnostics"][0]["code"] == "ZeroLabel");
}

TEST_CASE("cli invariants for an ascending loop") {
  auto r = cli("invariants " + fxp("bs16"));
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["b1"] == 1);
  CHECK(doc["reduced"] == true);
  CHECK(doc["strict_ascending_loops"] == json::array({"e0"}));
  CHECK(doc["modulus"]["generators"] == json::array({"6"}));
  CHECK(doc["modulus"]["integer_witness"] == "6");
  CHECK(doc["presentation"] == "⟨a,t ∣ t a t⁻¹ = a⁶⟩");
  // Spine membership is undefined next to a strict ascending loop.
  CHECK(!doc.contains("spine_member"));
}

TEST_CASE("cli invariants for a rigid graph") {
  auto r = cli("invariants " + fxp("na3"));
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["spine_member"] == true);
  CHECK(doc["strict_ascending_loops"] == json::array());
  CHECK(doc["modulus"]["integer_witness"] == "3");

  auto seg = cli("invariants " + fxp("seg23"));
  json sdoc = json::parse(seg.out);
  CHECK(sdoc["modulus"]["generators"] == json::array());
  CHECK(!sdoc["modulus"].contains("integer_witness"));
  CHECK(sdoc["presentation"] == "⟨a,b ∣ a² = b³⟩");
}

TEST_CASE("cli reduce") {
  auto r = cli("reduce " + fxp("theta_c"));
  REQUIRE(r.exit_code == 0);
  GbsGraph reduced = parse_graph(r.out);
  CHECK(is_reduced(reduced));
  CHECK(reduced.graph().edge_count() == 3);

  auto all = cli("reduce --all " + fxp("theta_c"));
  json docs = json::parse(all.out);
  REQUIRE(docs.is_array());
  CHECK(docs.size() == 2);
  CHECK(canonical_form(parse_graph(docs[0].dump())) !=
        canonical_form(parse_graph(docs[1].dump())));
}

TEST_CASE("cli shelters and survivors") {
  json doc = json::parse(cli("shelters " + fxp("theta_c")).out);
  CHECK(doc["ascending_context"] == false);
  CHECK(doc["shelters"].size() == 3);

  json surv = json::parse(cli("survivors " + fxp("na3")).out);
  CHECK(surv["surviving"] == json::array({"e0", "e1", "e2"}));

  // Ascending context refuses with a semantic error.
  CHECK(cli("survivors " + fxp("bs16")).exit_code == 1);
  CHECK(cli("retract " + fxp("bs16")).exit_code == 1);
}

TEST_CASE("cli retract is the identity on spine members") {
  auto r = cli("retract " + fxp("spine4"));
  REQUIRE(r.exit_code == 0);
  CHECK(canonical_form(parse_graph(r.out)) == canonical_form(fx("spine4")));
}

TEST_CASE("cli slides listing") {
  json doc = json::parse(cli("slides " + fxp("bs24_twovertex")).out);
  REQUIRE(doc["moves"].size() == 3);
  CHECK(doc["moves"][0] == "slide s.1 across u+");
}

TEST_CASE("cli apply and its printed inverse") {
  auto r = cli("apply " + fxp("bs24_twovertex") + " slide u.1 across s-");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  GbsGraph moved = parse_graph(doc["graph"].dump());
  std::string inverse = doc["inverse"];

  GbsGraph back =
      apply_move(moved, parse_move(moved, inverse)).graph;
  CHECK(canonical_form(back) == canonical_form(fx("bs24_twovertex")));

  CHECK(cli("apply " + fxp("bs24_twovertex") + " collapse s").exit_code ==
        1);  // s has no unit label
}

TEST_CASE("cli enumerate") {
  auto r = cli("enumerate --moves slides " + fxp("na3"));
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["reduced_forms"] == 6);
  CHECK(doc["vertex_counts"]["3"] == 6);
  CHECK(doc["exhausted"] == false);
  CHECK(doc["spine_max_edges"] == 3);

  auto full = cli("enumerate --moves all --max-states 500 " + fxp("bs16"));
  REQUIRE(full.exit_code == 0);
  json fdoc = json::parse(full.out);
  CHECK(fdoc["classification"] == "ascending");
  CHECK(fdoc["ascending_witness"].is_object());

  CHECK(cli("enumerate --moves slides " + fxp("theta_c")).exit_code == 1);
}

TEST_CASE("cli same-space exit codes") {
  auto yes = cli("same-space " + fxp("bs24_loop") + " " +
                 fxp("bs24_twovertex"));
  REQUIRE(yes.exit_code == 0);
  json doc = json::parse(yes.out);
  CHECK(doc["connected"] == true);
  CHECK(doc["length"] == 2);

  auto no = cli("same-space --max-states 50 " + fxp("bs16") + " " +
                fxp("bs24_loop"));
  CHECK(no.exit_code == 2);
  json ndoc = json::parse(no.out);
  CHECK(ndoc["connected"] == false);
  CHECK(ndoc["exhausted"] == false);

  CHECK(cli("same-space " + fxp("bs16") + " " + fxp("zero_label"))
            .exit_code == 3);
}

TEST_CASE("cli state cap from the environment") {
  std::string pair = fxp("bs24_loop") + " " + fxp("bs24_twovertex");
  auto capped = oracle::run("GBS_MAX_STATES=2 " + std::string(GBS_CLI_PATH) +
                            " same-space " + pair);
  CHECK(capped.exit_code == 2);

  // An explicit flag beats the environment.
  auto flagged = oracle::run("GBS_MAX_STATES=2 " + std::string(GBS_CLI_PATH) +
                             " same-space --max-states 5000 " + pair);
  CHECK(flagged.exit_code == 0);
}

TEST_CASE("cli dot") {
  auto r = cli("dot " + fxp("bs16"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("digraph") != std::string::npos);
}
