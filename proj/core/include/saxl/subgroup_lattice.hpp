#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "saxl/errors.hpp"
#include "saxl/subgroup.hpp"

namespace saxl {

// Subset of a small group, indexed by the group's sorted element order.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : words_((universe + 63) / 64, 0), universe_(universe) {}

  void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool contains(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  std::size_t count() const;
  std::size_t universe() const { return universe_; }
  bool is_subset_of(const ElementSet &o) const;
  std::vector<std::uint32_t> indices() const;
  std::size_t hash() const;

  friend bool operator==(const ElementSet &a, const ElementSet &b) { return a.words_ == b.words_; }
  // Lexicographic on the ascending index lists.
  friend bool operator<(const ElementSet &a, const ElementSet &b);

private:
  std::vector<std::uint64_t> words_;
  std::size_t universe_ = 0;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet &s) const { return s.hash(); }
};

// A subgroup H turned into an indexed group with a multiplication table.
class FiniteGroup {
public:
  explicit FiniteGroup(const Subgroup &H);

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  const Permutation &element(std::size_t i) const { return elements_[i]; }
  std::size_t index_of(const Permutation &p) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
  std::uint32_t conj(std::uint32_t a, std::uint32_t g) const { return mul(mul(inv(g), a), g); }
  std::uint32_t element_order(std::uint32_t a) const { return orders_[a]; }
  const std::vector<std::uint32_t> &generators() const { return gens_; }

  ElementSet closure(const std::vector<std::uint32_t> &gens) const;
  ElementSet conjugate(const ElementSet &s, std::uint32_t g) const;
  ElementSet from_subgroup(const Subgroup &s) const;
  Subgroup to_subgroup(const ElementSet &s) const;
  ElementSet trivial() const;
  ElementSet whole() const;

private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
  std::vector<std::uint32_t> table_; // empty when the group is too large to tabulate
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> orders_;
  std::vector<std::uint32_t> gens_;
};

struct SubgroupClass {
  ElementSet representative; // least member
  std::vector<ElementSet> members;
  std::size_t order = 0;
  std::size_t class_size = 0;
  std::size_t normalizer_order = 0;
  bool cyclic = false;
};

// Conjugacy classes of subgroups of H, ordered by (order, representative).
class SubgroupClassTable {
public:
  explicit SubgroupClassTable(const Subgroup &H, std::size_t cap = kDefaultSubgroupCap);

  const FiniteGroup &ambient() const { return group_; }
  const std::vector<SubgroupClass> &classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  std::size_t total_subgroups() const { return member_class_.size(); }

  // Throws std::invalid_argument if s is not a subgroup of H.
  std::size_t class_of(const ElementSet &s) const;
  std::size_t class_of(const Subgroup &s) const { return class_of(group_.from_subgroup(s)); }
  Subgroup representative(std::size_t cls) const { return group_.to_subgroup(classes_[cls].representative); }

  // Number of members of class cls containing A.
  std::size_t eta(const ElementSet &A, std::size_t cls) const;

private:
  FiniteGroup group_;
  std::vector<SubgroupClass> classes_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> member_class_;
};

inline SubgroupClassTable all_subgroups(const Subgroup &H, std::size_t cap = kDefaultSubgroupCap) {
  return SubgroupClassTable(H, cap);
}

} // namespace saxl
