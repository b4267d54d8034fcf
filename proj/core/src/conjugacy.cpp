#include "saxl/conjugacy.hpp"

#include <algorithm>
#include <stdexcept>

namespace saxl {

namespace {

// The action of G's generators on the labels of space, with a breadth-first
// Schreier tree rooted at the base label.
struct LabelAction {
  std::vector<Permutation> gens;
  std::vector<std::vector<std::uint32_t>> perms;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> parent_gen;
  std::size_t reached = 0;

  Permutation transversal(std::size_t label, std::size_t degree) const {
    std::vector<std::uint32_t> path;
    for (std::size_t l = label; l != 0; l = parent[l])
      path.push_back(parent_gen[l]);
    Permutation t(degree);
    for (auto it = path.rbegin(); it != path.rend(); ++it)
      t = compose(t, gens[*it]);
    return t;
  }
};

LabelAction label_action(const ActionSpace &space, const PermGroup &G) {
  if (G.degree() != space.degree())
    throw std::invalid_argument("group and action space have different degrees");
  LabelAction la;
  la.gens = G.generators();
  if (la.gens == space.generators()) {
    for (std::size_t i = 0; i < la.gens.size(); ++i)
      la.perms.push_back(space.generator_action(i));
  } else {
    for (const auto &g : la.gens) {
      try {
        la.perms.push_back(space.label_permutation(g));
      } catch (const std::out_of_range &) {
        throw std::invalid_argument("group generators do not act on the action space");
      }
    }
  }
  const std::size_t n = space.size();
  la.parent.assign(n, 0xffffffffu);
  la.parent_gen.assign(n, 0);
  la.parent[0] = 0;
  std::vector<std::uint32_t> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::uint32_t gi = 0; gi < la.perms.size(); ++gi) {
      std::uint32_t img = la.perms[gi][queue[i]];
      if (la.parent[img] == 0xffffffffu) {
        la.parent[img] = queue[i];
        la.parent_gen[img] = gi;
        queue.push_back(img);
      }
    }
  la.reached = queue.size();
  return la;
}

PermGroup stabilizer_from(const LabelAction &la, const PermGroup &G, std::size_t n) {
  const std::size_t degree = G.degree();
  if (la.reached != n)
    throw std::invalid_argument("group is not transitive on the action space");
  if (G.order() % static_cast<unsigned long>(n) != 0)
    throw Inconsistency("orbit length does not divide the group order");
  const BigInt target = G.order() / static_cast<unsigned long>(n);
  std::vector<Permutation> gens{Permutation(degree)};
  PermGroup stab(gens);
  if (target == 1)
    return stab;
  gens.clear();
  for (std::size_t l = 0; l < n; ++l) {
    Permutation tl = la.transversal(l, degree);
    for (std::size_t gi = 0; gi < la.gens.size(); ++gi) {
      std::size_t img = la.perms[gi][l];
      Permutation s = compose(compose(tl, la.gens[gi]), la.transversal(img, degree).inverse());
      if (s.is_identity() || stab.contains(s))
        continue;
      gens.push_back(std::move(s));
      stab = PermGroup(gens);
      if (stab.order() == target)
        return stab;
    }
  }
  throw Inconsistency("Schreier generators did not reach the expected stabiliser order");
}

} // namespace

PermGroup stabilizer_group(const ActionSpace &space, const PermGroup &G, std::size_t label) {
  auto la = label_action(space, G);
  PermGroup base_stab = stabilizer_from(la, G, space.size());
  if (label == 0)
    return base_stab;
  Permutation t = la.transversal(label, G.degree());
  std::vector<Permutation> gens;
  for (const auto &g : base_stab.generators())
    gens.push_back(conjugate(g, t));
  if (gens.empty())
    gens.emplace_back(G.degree());
  return PermGroup(gens);
}

Subgroup stabilizer_of_label(const ActionSpace &space, const PermGroup &G, std::size_t label,
                             std::size_t cap) {
  PermGroup stab = stabilizer_group(space, G, label);
  return Subgroup::from_elements(stab.elements(cap));
}

BigInt normalizer_order(const PermGroup &G, const Subgroup &A, std::size_t cap) {
  auto space = ActionSpace::conjugates(G.generators(), G.degree(), A, cap);
  if (G.order() % static_cast<unsigned long>(space.size()) != 0)
    throw Inconsistency("conjugacy class length does not divide the group order");
  return G.order() / static_cast<unsigned long>(space.size());
}

std::optional<Permutation> are_conjugate_in(const PermGroup &G, const Subgroup &A, const Subgroup &B,
                                            std::size_t cap) {
  if (A.order() != B.order())
    return std::nullopt;
  if (A == B)
    return Permutation(G.degree());
  auto space = ActionSpace::conjugates(G.generators(), G.degree(), A, cap);
  auto idx = space.find_subgroup(B);
  if (!idx)
    return std::nullopt;
  Permutation g = space.transversal(*idx);
  if (!(subgroup_conjugate(A, g) == B))
    throw Inconsistency("conjugation witness does not map A to B");
  return g;
}

bool is_primitive(const ActionSpace &space, const PermGroup &G) {
  auto la = label_action(space, G);
  const std::size_t n = space.size();
  if (la.reached != n)
    throw std::invalid_argument("is_primitive: group is not transitive on the action space");
  bool prime = n >= 2;
  for (std::size_t d = 2; d * d <= n && prime; ++d)
    prime = n % d != 0;
  if (n <= 3 || prime)
    return true;

  PermGroup H = stabilizer_from(la, G, n);
  std::vector<std::vector<std::uint32_t>> hperms;
  for (const auto &h : H.generators())
    hperms.push_back(space.label_permutation(h));

  // H-orbits on labels other than the base label
  std::vector<std::uint32_t> orbit_id(n, 0xffffffffu);
  std::vector<std::vector<std::uint32_t>> orbits;
  for (std::uint32_t s = 1; s < n; ++s) {
    if (orbit_id[s] != 0xffffffffu)
      continue;
    std::vector<std::uint32_t> orb{s};
    orbit_id[s] = static_cast<std::uint32_t>(orbits.size());
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const auto &p : hperms)
        if (orbit_id[p[orb[i]]] == 0xffffffffu) {
          orbit_id[p[orb[i]]] = orbit_id[s];
          orb.push_back(p[orb[i]]);
        }
    orbits.push_back(std::move(orb));
  }
  std::vector<std::size_t> order(orbits.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return orbits[a].size() > orbits[b].size(); });

  // A label is "full" once the minimal block through it and the base is everything.
  std::vector<char> full(n, 0);
  std::vector<std::uint32_t> uf_parent(n), uf_size(n), stamp(n, 0);
  std::vector<char> uf_full(n, 0);
  std::uint32_t now = 0;
  auto touch = [&](std::uint32_t x) {
    if (stamp[x] != now) {
      stamp[x] = now;
      uf_parent[x] = x;
      uf_size[x] = 1;
      uf_full[x] = full[x];
    }
  };
  auto find = [&](std::uint32_t x) {
    touch(x);
    while (uf_parent[x] != x) {
      touch(uf_parent[x]);
      uf_parent[x] = uf_parent[uf_parent[x]];
      touch(uf_parent[x]);
      x = uf_parent[x];
    }
    return x;
  };

  for (std::size_t oi : order) {
    std::uint32_t rep = orbits[oi].front();
    if (full[rep])
      continue;
    ++now;
    auto unite = [&](std::uint32_t a, std::uint32_t b) {
      a = find(a);
      b = find(b);
      if (a == b)
        return false;
      if (uf_size[a] < uf_size[b])
        std::swap(a, b);
      uf_parent[b] = a;
      uf_size[a] += uf_size[b];
      uf_full[a] = static_cast<char>(uf_full[a] | uf_full[b]);
      return true;
    };
    auto whole = [&] {
      std::uint32_t r = find(0);
      return uf_full[r] || 2 * static_cast<std::size_t>(uf_size[r]) > n;
    };
    unite(0, rep);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> queue{{0, rep}};
    bool is_whole = whole();
    for (std::size_t qi = 0; qi < queue.size() && !is_whole; ++qi) {
      auto [a, b] = queue[qi];
      for (const auto &p : la.perms) {
        if (unite(p[a], p[b])) {
          queue.emplace_back(p[a], p[b]);
          if (whole()) {
            is_whole = true;
            break;
          }
        }
      }
    }
    if (!is_whole && uf_size[find(0)] < n)
      return false;
    for (std::uint32_t x : orbits[oi])
      full[x] = 1;
  }
  return true;
}

} // namespace saxl
