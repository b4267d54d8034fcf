#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "saxl/constructions.hpp"
#include "saxl/permutation.hpp"

namespace saxl {

// {"name", "degree", "generators", "stabilizer_generators"}; each generator a
// list of disjoint 1-based cycles, identity = [].
struct GroupFile {
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> stabilizer_generators;
};

// Throws ParseError on malformed JSON, a missing field or a non-bijective
// generator (naming the generator and the offending point).
GroupFile parse_group_file(std::string_view json);
GroupFile read_group_file(const std::filesystem::path &path);
std::string group_file_to_json(const GroupFile &f);

// Builds G and H and realizes the coset action as a conjugation orbit: of the
// largest cyclic normal subgroup of H whose normalizer in G is H, or of H
// itself. Throws std::invalid_argument if H is not contained in G or not
// self-normalizing.
GroupAction load_group_file(const std::filesystem::path &path, std::size_t cap = kDefaultLabelCap);
GroupAction group_action_from(const GroupFile &f, std::size_t cap = kDefaultLabelCap);

} // namespace saxl
