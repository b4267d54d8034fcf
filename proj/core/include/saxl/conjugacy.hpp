#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "saxl/action_space.hpp"
#include "saxl/bigint.hpp"
#include "saxl/perm_group.hpp"
#include "saxl/subgroup.hpp"

namespace saxl {

// Generators of the stabiliser of label in G, from Schreier generators, as a
// group handle of the right order |G| / |space|.
PermGroup stabilizer_group(const ActionSpace &space, const PermGroup &G, std::size_t label);

// Explicit element list of the stabiliser; throws CapExceeded if it has more
// than cap elements.
Subgroup stabilizer_of_label(const ActionSpace &space, const PermGroup &G, std::size_t label,
                             std::size_t cap = kDefaultLabelCap);

// |G| / |A^G|, by materializing the conjugation orbit of A.
BigInt normalizer_order(const PermGroup &G, const Subgroup &A, std::size_t cap = kDefaultLabelCap);

// Some g in G with A^g = B, or nothing.
std::optional<Permutation> are_conjugate_in(const PermGroup &G, const Subgroup &A, const Subgroup &B,
                                            std::size_t cap = kDefaultLabelCap);

// Minimal-block test from the base label paired with one label per suborbit.
// Throws std::invalid_argument if G is not transitive on space.
bool is_primitive(const ActionSpace &space, const PermGroup &G);

} // namespace saxl
