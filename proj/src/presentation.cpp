#include "gbs/presentation.hpp"

#include <map>
#include <set>
#include <vector>

namespace gbs {

namespace {

std::string superscript(const Label& e) {
  static const char* kDigits[10] = {"⁰", "¹", "²", "³",
                                    "⁴", "⁵", "⁶", "⁷",
                                    "⁸", "⁹"};
  std::string out;
  for (char c : e.str()) {
    if (c == '-')
      out += "⁻";
    else
      out += kDigits[c - '0'];
  }
  return out;
}

std::string power(const std::string& gen, const Label& e) {
  if (e == 1) return gen;
  return gen + superscript(e);
}

}  // namespace

std::string presentation(const GbsGraph& g) {
  std::map<VertexId, std::string> gen;
  const char* letters = "abcdefghijklmnopqrsuvwxyz";  // t reserved
  std::size_t i = 0;
  for (VertexId v : g.graph().vertices()) {
    if (g.graph().vertex_count() <= 25)
      gen[v] = std::string(1, letters[i]);
    else
      gen[v] = "a" + std::to_string(i + 1);
    ++i;
  }

  std::set<EdgeId> non_tree;
  for (const auto& cycle : cycle_basis(g.graph()))
    non_tree.insert(cycle.front().edge);
  std::map<EdgeId, std::string> stable;
  std::size_t k = 1;
  for (EdgeId e : non_tree) {
    stable[e] = non_tree.size() == 1 ? "t" : "t" + std::to_string(k);
    ++k;
  }

  std::string gens;
  for (const auto& [v, name] : gen) {
    (void)v;
    if (!gens.empty()) gens += ",";
    gens += name;
  }
  for (const auto& [e, name] : stable) {
    (void)e;
    gens += "," + name;
  }

  std::vector<std::string> relations;
  for (const auto& [e, vw] : g.graph().edges()) {
    if (non_tree.count(e)) continue;
    relations.push_back(power(gen[vw[0]], g.label(e, 0)) + " = " +
                        power(gen[vw[1]], g.label(e, 1)));
  }
  for (const auto& [e, name] : stable) {
    auto vw = g.graph().edges().at(e);
    relations.push_back(name + " " + power(gen[vw[0]], g.label(e, 0)) + " " +
                        name + "⁻¹ = " +
                        power(gen[vw[1]], g.label(e, 1)));
  }

  std::string rels;
  for (const auto& r : relations) {
    if (!rels.empty()) rels += ", ";
    rels += r;
  }
  return "⟨" + gens + " ∣ " + rels + "⟩";
}

}  // namespace gbs
