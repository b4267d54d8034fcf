#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "saxl/action_space.hpp"
#include "saxl/perm_group.hpp"
#include "saxl/subgroup.hpp"

namespace saxl {

struct SaxlGraph {
  std::size_t vertices = 0;
  // Unordered pairs (u < v) of label indices, sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  std::size_t valency() const { return vertices ? 2 * edges.size() / vertices : 0; }
};

// alpha ~ beta iff the stabiliser of beta in G_alpha is trivial. Throws
// CapExceeded above cap vertices and Inconsistency if adjacency is not symmetric.
SaxlGraph saxl_graph(const ActionSpace &space, const PermGroup &G, const Subgroup &H,
                     std::size_t cap = kDotExportCap);

// graph saxl { /* vertices=N edges=E */ v1 -- v2; ... } with 1-based label numbers.
void write_dot(const SaxlGraph &g, std::ostream &out);
std::string to_dot(const SaxlGraph &g);

// For PGL2(q) on 2-subsets of the projective line: Saxl adjacency equals
// "share exactly one point". Throws std::invalid_argument for any other space.
bool johnson_check(const ActionSpace &space, const PermGroup &G, const Subgroup &H, std::uint64_t q);

} // namespace saxl
