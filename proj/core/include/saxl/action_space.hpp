#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "saxl/errors.hpp"
#include "saxl/permutation.hpp"
#include "saxl/subgroup.hpp"

namespace saxl {

enum class SpaceKind { kPoints, kSubsets, kSubgroupConjugates };

using KeyWord = std::uint16_t;

// Flat storage of variable-length keys with an open-addressing index.
class KeyStore {
public:
  std::size_t size() const { return offsets_.size() - 1; }
  std::span<const KeyWord> key(std::size_t i) const {
    return {data_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::optional<std::size_t> find(std::span<const KeyWord> k) const;
  // Returns (index, inserted).
  std::pair<std::size_t, bool> insert(std::span<const KeyWord> k);

private:
  static std::uint64_t hash(std::span<const KeyWord> k);
  void grow();

  std::vector<KeyWord> data_;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<std::uint32_t> slots_ = std::vector<std::uint32_t>(16, kEmpty);
  static constexpr std::uint32_t kEmpty = 0xffffffffu;
};

// The orbit of a base label under a generating set, fully materialized.
// Label 0 is the base label; labels are numbered in breadth-first order.
class ActionSpace {
public:
  static ActionSpace points(const std::vector<Permutation> &gens, std::size_t degree, Point base,
                            std::size_t cap = kDefaultLabelCap);
  static ActionSpace subsets(const std::vector<Permutation> &gens, std::size_t degree,
                             std::vector<Point> base, std::size_t cap = kDefaultLabelCap);
  // Cyclic seeds are keyed by their least generator, others by their greedy
  // canonical generating set.
  static ActionSpace conjugates(const std::vector<Permutation> &gens, std::size_t degree,
                                const Subgroup &seed, std::size_t cap = kDefaultLabelCap);

  static constexpr std::size_t base_label = 0;

  SpaceKind kind() const { return kind_; }
  std::size_t size() const { return keys_.size(); }
  std::size_t degree() const { return degree_; }
  const std::vector<Permutation> &generators() const { return gens_; }

  std::span<const KeyWord> key(std::size_t label) const { return keys_.key(label); }
  std::optional<std::size_t> find(std::span<const KeyWord> key) const { return keys_.find(key); }
  std::vector<KeyWord> image_key(std::span<const KeyWord> key, const Permutation &g) const;

  // Throws std::out_of_range if the image is not a label of this space.
  std::size_t act(std::size_t label, const Permutation &g) const;
  std::vector<std::uint32_t> label_permutation(const Permutation &g) const;
  // Action of generators()[i] on labels, recorded while building.
  const std::vector<std::uint32_t> &generator_action(std::size_t i) const { return gen_images_[i]; }

  // An element of <generators()> mapping the base label to label.
  Permutation transversal(std::size_t label) const;

  Point point_at(std::size_t label) const;
  std::vector<Point> subset_at(std::size_t label) const;
  Subgroup subgroup_at(std::size_t label) const;

  std::optional<std::size_t> find_point(Point p) const;
  std::optional<std::size_t> find_subset(std::vector<Point> s) const;
  std::optional<std::size_t> find_subgroup(const Subgroup &s) const;

  std::string describe(std::size_t label) const;

private:
  ActionSpace() = default;
  void materialize(std::vector<KeyWord> base_key, std::size_t cap);
  std::vector<KeyWord> encode_perms(const std::vector<Permutation> &ps) const;
  std::vector<Permutation> decode_perms(std::span<const KeyWord> key) const;
  std::vector<KeyWord> subgroup_key(const Subgroup &s) const;

  SpaceKind kind_ = SpaceKind::kPoints;
  bool cyclic_keys_ = false;
  std::size_t degree_ = 0;
  std::vector<Permutation> gens_;
  KeyStore keys_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint16_t> parent_gen_;
  std::vector<std::vector<std::uint32_t>> gen_images_;
};

// Breadth-first closure of seed under gens; deterministic for a fixed gens order.
std::vector<std::size_t> orbit(const ActionSpace &space, const std::vector<Permutation> &gens,
                               std::size_t seed);

} // namespace saxl
