#include "saxl/suborbits.hpp"

#include <stdexcept>

namespace saxl {

void check_base_stabiliser(const ActionSpace &space, const PermGroup &G, const Subgroup &H) {
  if (H.degree() != G.degree() || space.degree() != G.degree())
    throw std::invalid_argument("group, stabiliser and space have different degrees");
  for (const auto &h : H.generators())
    if (space.act(ActionSpace::base_label, h) != ActionSpace::base_label)
      throw std::invalid_argument("H does not fix the base label");
  if (big(H.order()) * static_cast<unsigned long>(space.size()) != G.order())
    throw std::invalid_argument("H is not the full stabiliser of the base label: |H||space| != |G|");
}

SuborbitPartition suborbits(const ActionSpace &space, const PermGroup &G, const Subgroup &H) {
  check_base_stabiliser(space, G, H);
  std::vector<std::vector<std::uint32_t>> hperms;
  for (const auto &h : H.generators())
    hperms.push_back(space.label_permutation(h));
  const std::size_t n = space.size();
  SuborbitPartition part;
  part.orbit_of.assign(n, 0xffffffffu);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (part.orbit_of[s] != 0xffffffffu)
      continue;
    const auto id = static_cast<std::uint32_t>(part.representatives.size());
    part.orbit_of[s] = id;
    queue.assign(1, s);
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto &p : hperms) {
        std::uint32_t img = p[queue[i]];
        if (part.orbit_of[img] == 0xffffffffu) {
          part.orbit_of[img] = id;
          queue.push_back(img);
        }
      }
    part.representatives.push_back(s);
    part.lengths.push_back(queue.size());
  }
  return part;
}

SubdegreeReport report_from_partition(const SuborbitPartition &part, const PermGroup &G,
                                      const Subgroup &H, const std::string &group_name) {
  SubdegreeReport r;
  r.group_name = group_name;
  r.order_G = G.order();
  r.order_H = big(H.order());
  r.index = r.order_G / r.order_H;
  r.method = Method::kBruteforce;
  std::uint64_t regular = 0;
  for (auto len : part.lengths) {
    add_subdegree(r, big(len), 1);
    if (len == H.order())
      ++regular;
  }
  r.valency = r.order_H * static_cast<unsigned long>(regular);
  finalize_checks(r);
  return r;
}

SubdegreeReport suborbits_bruteforce(const ActionSpace &space, const PermGroup &G, const Subgroup &H,
                                     const std::string &group_name) {
  return report_from_partition(suborbits(space, G, H), G, H, group_name);
}

Subgroup label_stabiliser_in(const ActionSpace &space, const Subgroup &H, std::size_t label) {
  std::vector<Permutation> elems;
  auto k = space.key(label);
  std::vector<KeyWord> key(k.begin(), k.end());
  for (const auto &h : H.elements())
    if (space.image_key(key, h) == key)
      elems.push_back(h);
  return Subgroup::from_elements(std::move(elems));
}

std::vector<std::size_t> scan_normal_arc_stabilisers(const ActionSpace &space, const PermGroup &G,
                                                     const Subgroup &H) {
  auto part = suborbits(space, G, H);
  std::vector<std::size_t> offending;
  for (std::size_t i = 1; i < part.size(); ++i) {
    if (part.lengths[i] == H.order())
      continue; // trivial arc stabiliser
    Subgroup A = label_stabiliser_in(space, H, part.representatives[i]);
    bool normal = true;
    for (const auto &h : H.generators())
      if (!A.is_normalized_by(h)) {
        normal = false;
        break;
      }
    if (normal)
      offending.push_back(part.representatives[i]);
  }
  return offending;
}

} // namespace saxl
