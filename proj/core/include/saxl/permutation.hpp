#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace saxl {

using Point = std::uint32_t;

// Stored 0-based; cycle notation in and out is 1-based.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);
  // No bijection check; for images already known to be a permutation.
  static Permutation unchecked(std::vector<Point> images);

  // cycles use 1-based points; throws ParseError naming the bad point.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::uint64_t>> &cycles);
  // "(1 2 3)(4 5)", "(1,2,3)" or "()".
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long long e) const;
  std::uint64_t order() const;
  Point first_moved_point() const; // degree() if identity

  // Nontrivial cycles, 0-based, each starting at its smallest point.
  std::vector<std::vector<Point>> cycles() const;
  std::vector<std::vector<std::uint64_t>> to_cycle_lists() const; // 1-based
  std::vector<std::size_t> cycle_type() const; // sorted lengths, fixed points included
  std::string to_string() const;

  std::size_t hash() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<Point> images_;
};

// Right action: the result maps i to q(p(i)).
Permutation compose(const Permutation &p, const Permutation &q);
inline Permutation operator*(const Permutation &p, const Permutation &q) { return compose(p, q); }

// a^g = g^-1 a g, so that (i^g)^(a^g) = (i^a)^g.
Permutation conjugate(const Permutation &a, const Permutation &g);

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const { return p.hash(); }
};

} // namespace saxl
