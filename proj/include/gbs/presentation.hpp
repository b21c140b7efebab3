#pragma once

#include <string>

#include "gbs/gbs_graph.hpp"

namespace gbs {

// Fundamental group presentation read off a spanning tree: one generator per
// vertex (letters a, b, c, ... in vertex-id order, skipping t), one stable
// letter per non-tree edge (t, or t1, t2, ... when there are several, in
// edge-id order). Tree edges contribute x^l0 = y^l1, the rest contribute
// t x^l0 t^-1 = y^l1, both with edge side 0 on the left; exponents render as
// Unicode superscripts and an exponent of 1 is dropped. Graphs with more than
// 25 vertices fall back to numbered generators a1, a2, ...
std::string presentation(const GbsGraph& g);

}  // namespace gbs
