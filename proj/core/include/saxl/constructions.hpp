#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "saxl/action_space.hpp"
#include "saxl/closed_forms.hpp"
#include "saxl/perm_group.hpp"
#include "saxl/subgroup.hpp"

namespace saxl {

// A transitive action ready for the engine: G, the space, and H = G_(base).
struct GroupAction {
  std::string name;
  PermGroup G;
  ActionSpace space;
  Subgroup H;
  // Elements the constructions name, e.g. z, sigma, x for Singer normalizers.
  std::map<std::string, Permutation> named;
};

enum class Linear2 { kPSL, kPGL };

// PSL_2(q) or PGL_2(q) on the q+1 points of the projective line. Split: the
// 2-subset {[1:0], [0:1]}. Nonsplit: conjugates of <z> (PGL) or <z^2> (PSL, q
// odd), z the image of multiplication by a generator of F_(q^2)^*. Throws
// Inconsistency if |H| is not the dihedral order 2(q -+ 1)/(2, q-1) (PSL) or
// 2(q -+ 1) (PGL).
GroupAction build_psl2_action(std::uint64_t q, Torus t, Linear2 kind, std::size_t cap = kDefaultLabelCap);

// PGL_r(q) (full) or PSL_r(q) (socle) on the conjugates of a Singer cycle <z>
// (full) or <z^(r, q-1)> (socle). In the full case H = <z, sigma> with sigma
// the Frobenius x -> x^q, and x = z^(a/r) when r | q - 1.
GroupAction build_singer_normalizer_action(std::uint64_t r, std::uint64_t q, LrVariant v,
                                           std::size_t cap = kDefaultLabelCap);

// S_p or A_p on the conjugates of <c>, c = (1 2 ... p); H = <c, y> with
// y: i -> g(i-1) mod p + 1 for the least primitive root g, or <c, y^2> for A_p.
GroupAction build_sym_alt_action(std::uint64_t p, SymAlt v, std::size_t cap = kDefaultLabelCap);

// Least primitive root modulo a prime p.
std::uint64_t least_primitive_root(std::uint64_t p);

} // namespace saxl
