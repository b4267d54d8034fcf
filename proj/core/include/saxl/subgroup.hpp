#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "saxl/permutation.hpp"

namespace saxl {

// A small subgroup held as its sorted list of elements. The sorted list is the
// canonical key: equal subgroups compare equal.
class Subgroup {
public:
  Subgroup() = default;

  // Closure of gens; throws CapExceeded beyond cap elements.
  static Subgroup generated_by(const std::vector<Permutation> &gens, std::size_t degree,
                               std::size_t cap = 1000000);
  // elems must already form a group; checked only in debug builds.
  static Subgroup from_elements(std::vector<Permutation> elems);
  static Subgroup trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation> &elements() const { return elements_; }
  // Small generating set: the greedy canonical generators (see canonical_generators).
  const std::vector<Permutation> &generators() const { return generators_; }

  bool contains(const Permutation &p) const;
  bool is_subgroup_of(const Subgroup &other) const;
  bool is_normalized_by(const Permutation &g) const;
  bool is_cyclic() const;
  std::size_t hash() const;

  friend bool operator==(const Subgroup &a, const Subgroup &b) { return a.elements_ == b.elements_; }
  friend bool operator<(const Subgroup &a, const Subgroup &b) { return a.elements_ < b.elements_; }

private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
};

Subgroup subgroup_conjugate(const Subgroup &a, const Permutation &g);

// Lexicographically least generator of the cyclic group <c>.
Permutation canonical_cyclic_generator(const Permutation &c);

// Greedy canonical generating set of a subgroup given by its sorted element
// list: repeatedly take the smallest element outside the span so far.
std::vector<Permutation> canonical_generators(const std::vector<Permutation> &sorted_elements);

// Sorted elements of <gens>; throws CapExceeded beyond cap.
std::vector<Permutation> closure(const std::vector<Permutation> &gens, std::size_t degree,
                                 std::size_t cap = 1000000);

struct SubgroupHash {
  std::size_t operator()(const Subgroup &s) const { return s.hash(); }
};

} // namespace saxl
