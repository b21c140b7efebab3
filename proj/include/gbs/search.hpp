#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gbs/canonical.hpp"
#include "gbs/gbs_graph.hpp"
#include "gbs/lattice.hpp"
#include "gbs/moves.hpp"

namespace gbs {

// Hard limits every enumerated graph must respect. The spaces being searched
// are usually infinite, so every search here is bounded and must say whether
// it ran out of space or genuinely drained its frontier.
struct SearchBounds {
  Label max_abs_label = 54;
  std::size_t max_edges = 6;
  std::size_t max_vertices = 7;
  std::size_t max_states = 200000;
  std::size_t max_depth = 64;
};

// Single-move neighbor enumeration. pruned counts legal moves whose result
// violated the bounds; a search that pruned anything must not claim
// exhaustion.
struct NeighborSet {
  std::vector<std::pair<Move, GbsGraph>> moves;
  std::size_t pruned = 0;
};

// Transports a move along a graph correspondence: edge and vertex handles
// are mapped, slide orientations and expansion end sides flip with the
// edge's swap flag. The move then applies to the target graph with the same
// effect up to canonical form.
Move rebase_move(const Move& m, const GraphIso& iso);

NeighborSet slide_neighbor_set(const GbsGraph& g, const SearchBounds& b);

// Collapses of collapsible edges plus expansions with divisor > 1 ranging
// over divisors of gcds of nonempty end subsets at each vertex. unit_sign is
// +1 unless include_negative_sign is set.
NeighborSet elementary_neighbor_set(const GbsGraph& g, const SearchBounds& b,
                                    bool include_negative_sign = false);

// Slide results deduplicated by canonical form.
std::vector<GbsGraph> slide_neighbors(const GbsGraph& g,
                                      const SearchBounds& b = {});

struct ClosureOptions {
  bool slides_only = false;
  bool include_negative_sign = false;
};

// Canonical-form BFS closure. states holds one representative per canonical
// form in discovery order, states[0] being the start graph.
struct Closure {
  std::vector<GbsGraph> states;
  std::set<std::string> forms;
  bool exhausted = true;
  std::size_t pruned_moves = 0;
};

Closure closure(const GbsGraph& start, const SearchBounds& b,
                const ClosureOptions& o = {});

enum class Classification { NonAscending, Ascending, Unknown };

const char* to_string(Classification c);

struct SpaceReport {
  std::set<std::string> reduced_forms;  // canonical bytes
  std::map<std::size_t, std::size_t> vertex_counts;  // over reduced forms
  std::size_t b1 = 0;
  Classification classification = Classification::Unknown;
  std::optional<IntegerModulus> modulus;
  std::optional<GbsGraph> ascending_witness;  // reduced, contains witness_loop
  std::optional<EdgeId> witness_loop;
  std::size_t spine_max_edges = 0;
  std::size_t states_visited = 0;
  bool exhausted = false;
};

// BFS closure of a reduced graph under slides only; fills the descriptive
// fields of SpaceReport, classification stays Unknown. Throws
// SearchError(NotReduced) when the start graph is not reduced.
SpaceReport enumerate_reduced_by_slides(const GbsGraph& g,
                                        const SearchBounds& b);

// NonAscending exactly when the modular image has no integer modulus (a
// certificate independent of any bound). Otherwise Ascending when the
// bounded closure reaches a graph with a strict ascending loop; the witness
// is then reduced while keeping that loop strict. Otherwise Unknown.
SpaceReport classify_space(const GbsGraph& g, const SearchBounds& b);

struct SameSpaceResult {
  bool connected = false;
  MoveTrace trace;   // replayable from g1, landing on canonical_form(g2)
  bool exhausted = false;  // both frontiers drained without pruning
};

// Bidirectional canonical-form BFS over elementary moves and slides. A
// negative result is always "not found within bounds", never a disequality.
SameSpaceResult same_space(const GbsGraph& g1, const GbsGraph& g2,
                           const SearchBounds& b);

// Collapses every forest edge, backtracking over collapse orders (first
// success in edge-id order); throws SearchError(NotReducing) when no order
// collapses the whole forest. The forest edges must be segments.
GbsGraph reduce_by_forest(const GbsGraph& theta, const std::set<EdgeId>& f);

// Constructive slide connectivity: given one graph with two edge sets each
// collapsing to a reduced graph, returns a pure slide trace from the first
// reduction to the second. Shared edges are collapsed away first (error
// ForestsOverlap when a shared edge cannot be collapsed). Requires the
// no-integer-modulus certificate unless assume_non_ascending is set, since
// the construction is only valid in non-ascending spaces.
MoveTrace slide_path_via_refinement(const GbsGraph& theta,
                                    const std::set<EdgeId>& f1,
                                    const std::set<EdgeId>& f2,
                                    bool assume_non_ascending = false);

struct BoundCheck {
  bool pass = true;
  std::string detail;
};

// Checks every reduced vertex count s in the report against
// s <= 2*s_min + 2*b1 - 2 (always valid since the minimal vertical-set size
// is at most s_min), and against the exact bounds known_m <= s <=
// 2*known_m + 2*b1 - 2 when the vertical set size is supplied.
BoundCheck vertex_bound_harness(const SpaceReport& report,
                                std::optional<std::size_t> known_m = {});

}  // namespace gbs
