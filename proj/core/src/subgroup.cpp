#include "saxl/subgroup.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "saxl/errors.hpp"

namespace saxl {

std::vector<Permutation> closure(const std::vector<Permutation> &gens, std::size_t degree,
                                 std::size_t cap) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> out{Permutation(degree)};
  seen.insert(out.front());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto &g : gens) {
      Permutation h = compose(out[i], g);
      if (seen.insert(h).second) {
        out.push_back(std::move(h));
        if (out.size() > cap)
          throw CapExceeded("subgroup closure", cap);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> canonical_generators(const std::vector<Permutation> &sorted_elements) {
  const std::size_t n = sorted_elements.size();
  auto index_of = [&](const Permutation &p) {
    auto it = std::lower_bound(sorted_elements.begin(), sorted_elements.end(), p);
    return static_cast<std::size_t>(it - sorted_elements.begin());
  };
  std::vector<bool> in_span(n, false);
  std::vector<std::size_t> span;
  if (n == 0)
    return {};
  in_span[0] = true; // identity is the least element
  span.push_back(0);
  std::vector<Permutation> gens;
  for (std::size_t idx = 1; idx < n && span.size() < n; ++idx) {
    if (in_span[idx])
      continue;
    gens.push_back(sorted_elements[idx]);
    // extend the span by closing under all chosen generators
    for (std::size_t k = 0; k < span.size(); ++k) {
      for (const auto &g : gens) {
        std::size_t j = index_of(compose(sorted_elements[span[k]], g));
        if (!in_span[j]) {
          in_span[j] = true;
          span.push_back(j);
        }
      }
    }
  }
  return gens;
}

Permutation canonical_cyclic_generator(const Permutation &c) {
  const std::uint64_t n = c.order();
  if (n <= 2)
    return c;
  // c^k sends the point at position p of a cycle of length L to position p+k mod L,
  // so candidate exponents can be filtered point by point.
  const auto cycles = c.cycles();
  const std::size_t deg = c.degree();
  std::vector<std::uint32_t> cycle_of(deg, 0xffffffffu), pos(deg, 0);
  for (std::uint32_t ci = 0; ci < cycles.size(); ++ci)
    for (std::uint32_t j = 0; j < cycles[ci].size(); ++j) {
      cycle_of[cycles[ci][j]] = ci;
      pos[cycles[ci][j]] = j;
    }
  std::vector<std::uint64_t> cand;
  for (std::uint64_t k = 1; k < n; ++k)
    if (std::gcd(k, n) == 1)
      cand.push_back(k);
  auto image = [&](std::size_t i, std::uint64_t k) -> Point {
    if (cycle_of[i] == 0xffffffffu)
      return static_cast<Point>(i);
    const auto &cyc = cycles[cycle_of[i]];
    return cyc[(pos[i] + k) % cyc.size()];
  };
  for (std::size_t i = 0; i < deg && cand.size() > 1; ++i) {
    if (cycle_of[i] == 0xffffffffu)
      continue;
    Point best = static_cast<Point>(deg);
    for (auto k : cand)
      best = std::min(best, image(i, k));
    std::erase_if(cand, [&](std::uint64_t k) { return image(i, k) != best; });
  }
  std::vector<Point> img(deg);
  for (std::size_t i = 0; i < deg; ++i)
    img[i] = image(i, cand.front());
  return Permutation::unchecked(std::move(img));
}

Subgroup Subgroup::generated_by(const std::vector<Permutation> &gens, std::size_t degree,
                                std::size_t cap) {
  return from_elements(closure(gens, degree, cap));
}

Subgroup Subgroup::from_elements(std::vector<Permutation> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  Subgroup s;
  s.degree_ = elems.empty() ? 0 : elems.front().degree();
  s.elements_ = std::move(elems);
  s.generators_ = canonical_generators(s.elements_);
  return s;
}

Subgroup Subgroup::trivial(std::size_t degree) { return from_elements({Permutation(degree)}); }

bool Subgroup::contains(const Permutation &p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool Subgroup::is_subgroup_of(const Subgroup &other) const {
  if (other.order() % order() != 0)
    return false;
  for (const auto &g : generators_)
    if (!other.contains(g))
      return false;
  return true;
}

bool Subgroup::is_normalized_by(const Permutation &g) const {
  for (const auto &x : generators_)
    if (!contains(conjugate(x, g)))
      return false;
  return true;
}

bool Subgroup::is_cyclic() const {
  for (const auto &e : elements_)
    if (e.order() == order())
      return true;
  return false;
}

std::size_t Subgroup::hash() const {
  std::size_t h = elements_.size();
  for (const auto &e : elements_)
    h = h * 1000003u ^ e.hash();
  return h;
}

Subgroup subgroup_conjugate(const Subgroup &a, const Permutation &g) {
  std::vector<Permutation> elems;
  elems.reserve(a.order());
  for (const auto &e : a.elements())
    elems.push_back(conjugate(e, g));
  return Subgroup::from_elements(std::move(elems));
}

} // namespace saxl
