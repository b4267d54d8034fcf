#include "saxl/perm_group.hpp"

#include <stdexcept>

#include "saxl/errors.hpp"

namespace saxl {

PermGroup::PermGroup(std::vector<Permutation> generators) {
  if (generators.empty())
    throw std::invalid_argument("build_group: empty generator list");
  degree_ = generators.front().degree();
  for (auto &g : generators) {
    if (g.degree() != degree_)
      throw std::invalid_argument("build_group: generators of different degrees");
    if (!g.is_identity())
      generators_.push_back(std::move(g));
  }
  schreier_sims();
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup({Permutation(degree)}); }

void PermGroup::add_level(Point base_point) {
  Level lv;
  lv.base_point = base_point;
  lv.slot.assign(degree_, -1);
  lv.slot[base_point] = 0;
  lv.orbit.push_back(base_point);
  lv.reps.emplace_back(degree_);
  lv.rep_invs.emplace_back(degree_);
  levels_.push_back(std::move(lv));
}

// Grows the orbit and transversal; existing entries keep their positions.
void PermGroup::extend_orbit(Level &lv) {
  for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
    for (const auto &s : lv.gens) {
      Point img = s[lv.orbit[i]];
      if (lv.slot[img] >= 0)
        continue;
      lv.slot[img] = static_cast<int>(lv.orbit.size());
      lv.orbit.push_back(img);
      lv.reps.push_back(compose(lv.reps[i], s));
      lv.rep_invs.push_back(lv.reps.back().inverse());
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation p, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level &lv = levels_[i];
    int s = lv.slot[p[lv.base_point]];
    if (s < 0)
      return {std::move(p), i};
    p = compose(p, lv.rep_invs[static_cast<std::size_t>(s)]);
  }
  return {std::move(p), levels_.size()};
}

void PermGroup::schreier_sims() {
  if (generators_.empty())
    return;
  add_level(generators_.front().first_moved_point());
  levels_[0].gens = generators_;
  extend_orbit(levels_[0]);

  // Work from the deepest level upward; a failed sift pushes the residue down
  // and restarts at the level where it stopped.
  std::ptrdiff_t cur = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (cur >= 0) {
    Level &lv = levels_[static_cast<std::size_t>(cur)];
    bool found = false;
    Permutation residue;
    std::size_t stop = 0;
    std::size_t orbit_size = lv.orbit.size(), gen_count = lv.gens.size();
    for (std::size_t oi = 0; oi < orbit_size && !found; ++oi) {
      for (std::size_t si = 0; si < gen_count; ++si) {
        if (oi < lv.checked_orbit && si < lv.checked_gens)
          continue;
        const Permutation &s = lv.gens[si];
        Point img = s[lv.orbit[oi]];
        Permutation h = compose(compose(lv.reps[oi], s),
                                lv.rep_invs[static_cast<std::size_t>(lv.slot[img])]);
        auto [res, where] = sift(std::move(h), static_cast<std::size_t>(cur) + 1);
        if (!res.is_identity()) {
          residue = std::move(res);
          stop = where;
          found = true;
          break;
        }
      }
    }
    if (!found) {
      lv.checked_orbit = orbit_size;
      lv.checked_gens = gen_count;
      --cur;
      continue;
    }
    if (stop == levels_.size())
      add_level(residue.first_moved_point());
    for (std::size_t l = static_cast<std::size_t>(cur) + 1; l <= stop; ++l) {
      levels_[l].gens.push_back(residue);
      extend_orbit(levels_[l]);
    }
    cur = static_cast<std::ptrdiff_t>(stop);
  }

  order_ = 1;
  for (const auto &lv : levels_)
    order_ *= static_cast<unsigned long>(lv.orbit.size());
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const auto &lv : levels_)
    b.push_back(lv.base_point);
  return b;
}

std::vector<std::size_t> PermGroup::transversal_sizes() const {
  std::vector<std::size_t> t;
  for (const auto &lv : levels_)
    t.push_back(lv.orbit.size());
  return t;
}

std::vector<Permutation> PermGroup::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto &lv : levels_)
    for (const auto &g : lv.gens)
      out.push_back(g);
  return out;
}

bool PermGroup::contains(const Permutation &p) const {
  if (p.degree() != degree_)
    throw std::invalid_argument("membership: degree mismatch");
  auto [res, where] = sift(p, 0);
  return where == levels_.size() && res.is_identity();
}

Permutation PermGroup::random_element(std::mt19937_64 &rng) const {
  Permutation g(degree_);
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    std::uniform_int_distribution<std::size_t> pick(0, it->reps.size() - 1);
    g = compose(g, it->reps[pick(rng)]);
  }
  return g;
}

std::vector<Permutation> PermGroup::elements(std::size_t cap) const {
  if (order_ > static_cast<unsigned long>(cap))
    throw CapExceeded("element enumeration of a group of order " + to_string(order_), cap);
  // Every element is u_k ... u_1 with u_i from the level-i transversal.
  std::vector<Permutation> out{Permutation(degree_)};
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    std::vector<Permutation> next;
    next.reserve(out.size() * it->reps.size());
    for (const auto &g : out)
      for (const auto &u : it->reps)
        next.push_back(compose(g, u));
    out = std::move(next);
  }
  return out;
}

} // namespace saxl
