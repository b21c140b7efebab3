#include "gbs/canonical.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "gbs/errors.hpp"

namespace gbs {

namespace {

struct Slot {
  std::size_t po, pt;
  Label lo, lt;
  EdgeId edge;
  bool swapped;

  std::tuple<const std::size_t&, const std::size_t&, const Label&,
             const Label&>
  key() const {
    return {po, pt, lo, lt};
  }
};

bool slot_less(const Slot& a, const Slot& b) {
  if (a.key() != b.key()) return a.key() < b.key();
  return a.edge < b.edge;  // deterministic tie-break inside one graph
}

bool candidate_less(const std::vector<Slot>& a, const std::vector<Slot>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].key() != b[i].key()) return a[i].key() < b[i].key();
  }
  return false;
}

// Iso-invariant vertex fingerprint: degree plus the multiset of
// (|own label|, |far label|, is_loop) over incident ends. Isomorphisms
// preserve it, so orderings may be restricted to permutations inside
// fingerprint classes.
struct VertexInv {
  std::size_t degree = 0;
  std::vector<std::tuple<Label, Label, bool>> ends;

  bool operator<(const VertexInv& o) const {
    if (degree != o.degree) return degree < o.degree;
    return ends < o.ends;
  }
  bool operator==(const VertexInv& o) const {
    return degree == o.degree && ends == o.ends;
  }
};

VertexInv vertex_inv(const GbsGraph& g, VertexId v) {
  VertexInv inv;
  for (const EdgeEnd& end : g.graph().ends_at(v)) {
    Label own = abs(g.label(end));
    Label far = abs(g.label(end.edge, 1 - end.side));
    inv.ends.emplace_back(std::move(own), std::move(far),
                          g.graph().is_loop(end.edge));
  }
  std::sort(inv.ends.begin(), inv.ends.end());
  inv.degree = inv.ends.size();
  return inv;
}

bool advance_classes(std::vector<std::vector<VertexId>>& classes) {
  for (auto& c : classes) {
    if (std::next_permutation(c.begin(), c.end())) return true;
  }
  return false;
}

}  // namespace

CanonicalForm canonical_form(const GbsGraph& g, CanonicalWitness& witness,
                             std::size_t max_vertices) {
  const MultiGraph& mg = g.graph();
  const std::size_t n = mg.vertex_count();
  if (n > max_vertices)
    throw TooLargeError("canonical form limited to " +
                        std::to_string(max_vertices) + " vertices, got " +
                        std::to_string(n));

  // Group vertices into fingerprint classes, classes ordered by fingerprint.
  std::vector<std::pair<VertexInv, VertexId>> tagged;
  for (VertexId v : mg.vertices()) tagged.emplace_back(vertex_inv(g, v), v);
  std::sort(tagged.begin(), tagged.end(),
            [](const auto& a, const auto& b) {
              if (!(a.first == b.first)) return a.first < b.first;
              return a.second < b.second;
            });
  std::vector<std::vector<VertexId>> classes;
  for (std::size_t i = 0; i < tagged.size(); ++i) {
    if (i == 0 || !(tagged[i].first == tagged[i - 1].first))
      classes.emplace_back();
    classes.back().push_back(tagged[i].second);
  }

  std::vector<Slot> best;
  bool have_best = false;
  std::map<VertexId, std::size_t> best_pos;

  std::map<VertexId, std::size_t> pos;
  std::vector<VertexId> order(n);

  do {
    std::size_t p = 0;
    for (const auto& c : classes)
      for (VertexId v : c) {
        pos[v] = p;
        order[p] = v;
        ++p;
      }

    // Sign assignments over positions 1..n-1; flipping every vertex equals a
    // composition of per-edge flips, which the per-edge normalization already
    // absorbs, so position 0 can stay unflipped.
    const std::size_t sign_count =
        n == 0 ? 1 : (std::size_t{1} << (n - 1));
    for (std::size_t mask = 0; mask < sign_count; ++mask) {
      auto flipped = [&](VertexId v) {
        std::size_t q = pos[v];
        return q > 0 && ((mask >> (q - 1)) & 1);
      };

      std::vector<Slot> cand;
      cand.reserve(mg.edge_count());
      for (const auto& [e, vw] : mg.edges()) {
        Label l0 = g.label(e, 0);
        Label l1 = g.label(e, 1);
        if (flipped(vw[0])) l0 = -l0;
        if (flipped(vw[1])) l1 = -l1;
        std::size_t p0 = pos[vw[0]], p1 = pos[vw[1]];
        Slot s;
        s.edge = e;
        if (p0 != p1) {
          if (p0 < p1)
            s = {p0, p1, l0, l1, e, false};
          else
            s = {p1, p0, l1, l0, e, true};
          if (s.lo < 0) {
            s.lo = -s.lo;
            s.lt = -s.lt;
          }
        } else {
          // Loop: minimize over end swap and edge flip.
          Slot variants[4] = {{p0, p0, l0, l1, e, false},
                              {p0, p0, l1, l0, e, true},
                              {p0, p0, -l0, -l1, e, false},
                              {p0, p0, -l1, -l0, e, true}};
          s = variants[0];
          for (int i = 1; i < 4; ++i)
            if (variants[i].key() < s.key()) s = variants[i];
        }
        cand.push_back(std::move(s));
      }
      std::sort(cand.begin(), cand.end(), slot_less);

      if (!have_best || candidate_less(cand, best)) {
        best = cand;
        best_pos = pos;
        have_best = true;
      }
    }
  } while (advance_classes(classes));

  witness.vertex_pos = best_pos;
  witness.slots.clear();
  std::ostringstream os;
  os << "V" << n << "|";
  for (const Slot& s : best) {
    witness.slots.emplace_back(s.edge, s.swapped);
    os << "(" << s.po << "," << s.pt << "," << s.lo << "," << s.lt << ")";
  }
  return CanonicalForm{os.str()};
}

CanonicalForm canonical_form(const GbsGraph& g, std::size_t max_vertices) {
  CanonicalWitness w;
  return canonical_form(g, w, max_vertices);
}

std::map<EdgeId, std::pair<EdgeId, bool>> edge_isomorphism(
    const GbsGraph& x, const GbsGraph& y, std::size_t max_vertices) {
  return graph_isomorphism(x, y, max_vertices).edge;
}

GraphIso graph_isomorphism(const GbsGraph& x, const GbsGraph& y,
                           std::size_t max_vertices) {
  CanonicalWitness wx, wy;
  CanonicalForm fx = canonical_form(x, wx, max_vertices);
  CanonicalForm fy = canonical_form(y, wy, max_vertices);
  if (fx != fy)
    throw std::invalid_argument("graphs are not canonically equal");
  GraphIso iso;
  std::map<std::size_t, VertexId> y_at;
  for (const auto& [v, p] : wy.vertex_pos) y_at[p] = v;
  for (const auto& [v, p] : wx.vertex_pos) iso.vertex[v] = y_at.at(p);
  for (std::size_t i = 0; i < wx.slots.size(); ++i) {
    const auto& [ex, sx] = wx.slots[i];
    const auto& [ey, sy] = wy.slots[i];
    iso.edge[ex] = {ey, sx != sy};
  }
  return iso;
}

}  // namespace gbs
