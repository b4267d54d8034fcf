#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "saxl/action_space.hpp"
#include "saxl/perm_group.hpp"
#include "saxl/report.hpp"
#include "saxl/subgroup.hpp"

namespace saxl {

// The H-orbits on the labels of a space, H the stabiliser of the base label.
struct SuborbitPartition {
  std::vector<std::uint32_t> orbit_of;        // label -> suborbit
  std::vector<std::uint32_t> representatives; // least label of each suborbit; suborbit 0 is {base}
  std::vector<std::uint64_t> lengths;

  std::size_t size() const { return representatives.size(); }
};

// Throws std::invalid_argument unless H fixes the base label and |H||space| = |G|.
void check_base_stabiliser(const ActionSpace &space, const PermGroup &G, const Subgroup &H);

SuborbitPartition suborbits(const ActionSpace &space, const PermGroup &G, const Subgroup &H);

SubdegreeReport suborbits_bruteforce(const ActionSpace &space, const PermGroup &G, const Subgroup &H,
                                     const std::string &group_name);
SubdegreeReport report_from_partition(const SuborbitPartition &part, const PermGroup &G,
                                      const Subgroup &H, const std::string &group_name);

// H_beta for a label beta, by testing every element of H.
Subgroup label_stabiliser_in(const ActionSpace &space, const Subgroup &H, std::size_t label);

// Suborbit representatives beta with 1 != H_beta normal in H.
std::vector<std::size_t> scan_normal_arc_stabilisers(const ActionSpace &space, const PermGroup &G,
                                                     const Subgroup &H);

} // namespace saxl
