#include "saxl/saxl_graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "saxl/suborbits.hpp"

namespace saxl {

SaxlGraph saxl_graph(const ActionSpace &space, const PermGroup &G, const Subgroup &H, std::size_t cap) {
  if (space.size() > cap)
    throw CapExceeded("Saxl graph export on " + std::to_string(space.size()) + " vertices", cap);
  auto part = suborbits(space, G, H);
  // neighbours of the base label: the regular suborbits
  std::vector<std::uint32_t> base_nbrs;
  for (std::uint32_t l = 0; l < space.size(); ++l)
    if (part.lengths[part.orbit_of[l]] == H.order() && l != ActionSpace::base_label)
      base_nbrs.push_back(l);

  // t maps the base label to alpha and H to G_alpha, so it carries the
  // neighbourhood of the base onto that of alpha.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
  arcs.reserve(space.size() * base_nbrs.size());
  for (std::uint32_t a = 0; a < space.size(); ++a) {
    Permutation t = space.transversal(a);
    for (auto b : base_nbrs)
      arcs.emplace_back(a, static_cast<std::uint32_t>(space.act(b, t)));
  }
  std::sort(arcs.begin(), arcs.end());
  SaxlGraph g;
  g.vertices = space.size();
  for (auto [a, b] : arcs) {
    if (!std::binary_search(arcs.begin(), arcs.end(), std::make_pair(b, a)))
      throw Inconsistency("Saxl adjacency is not symmetric");
    if (a < b)
      g.edges.emplace_back(a, b);
  }
  return g;
}

void write_dot(const SaxlGraph &g, std::ostream &out) {
  out << "graph saxl {\n";
  out << "  /* vertices=" << g.vertices << " edges=" << g.edges.size() << " */\n";
  for (auto [a, b] : g.edges)
    out << "  v" << (a + 1) << " -- v" << (b + 1) << ";\n";
  out << "}\n";
}

std::string to_dot(const SaxlGraph &g) {
  std::ostringstream os;
  write_dot(g, os);
  return os.str();
}

bool johnson_check(const ActionSpace &space, const PermGroup &G, const Subgroup &H, std::uint64_t q) {
  if (space.kind() != SpaceKind::kSubsets || space.key(0).size() != 2 || space.degree() != q + 1)
    throw std::invalid_argument("johnson_check needs the 2-subset action on q+1 projective points");
  SaxlGraph g = saxl_graph(space, G, H, space.size());
  const std::size_t n = space.size();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [a, b] : g.edges)
    adj[a][b] = adj[b][a] = 1;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      auto x = space.key(a), y = space.key(b);
      int shared = (x[0] == y[0]) + (x[0] == y[1]) + (x[1] == y[0]) + (x[1] == y[1]);
      if ((shared == 1) != static_cast<bool>(adj[a][b]))
        return false;
    }
  return true;
}

} // namespace saxl
