#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "saxl/bigint.hpp"
#include "saxl/permutation.hpp"

namespace saxl {

// A permutation group with a base and strong generating set, built by the
// deterministic Schreier-Sims algorithm.
class PermGroup {
public:
  // Identity generators are dropped; an empty list is rejected.
  explicit PermGroup(std::vector<Permutation> generators);
  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation> &generators() const { return generators_; }
  const BigInt &order() const { return order_; }

  std::vector<Point> base() const;
  std::vector<std::size_t> transversal_sizes() const;
  std::vector<Permutation> strong_generators() const;

  bool contains(const Permutation &p) const;

  // Uniformly random element, one transversal pick per level.
  Permutation random_element(std::mt19937_64 &rng) const;

  // Every element; throws CapExceeded if |G| > cap.
  std::vector<Permutation> elements(std::size_t cap) const;

private:
  struct Level {
    Point base_point;
    std::vector<Permutation> gens;
    std::vector<int> slot;             // point -> index into orbit, or -1
    std::vector<Point> orbit;
    std::vector<Permutation> reps;     // reps[i] maps base_point to orbit[i]
    std::vector<Permutation> rep_invs;
    std::size_t checked_orbit = 0;     // Schreier generators below these
    std::size_t checked_gens = 0;      // bounds already sift to identity
  };

  // Residue of p after stripping from level `from`, and the level it stopped at.
  std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t from) const;
  void extend_orbit(Level &lv);
  void add_level(Point base_point);
  void schreier_sims();

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  BigInt order_{1};
};

} // namespace saxl
