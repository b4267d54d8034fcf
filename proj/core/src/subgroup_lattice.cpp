#include "saxl/subgroup_lattice.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace saxl {

// ---- ElementSet ----

std::size_t ElementSet::count() const {
  std::size_t c = 0;
  for (auto w : words_)
    c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::is_subset_of(const ElementSet &o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i])
      return false;
  return true;
}

std::vector<std::uint32_t> ElementSet::indices() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w)
    for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1)
      out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
  return out;
}

std::size_t ElementSet::hash() const {
  std::uint64_t h = 0x84222325cbf29ce4ULL;
  for (auto w : words_) {
    h ^= w;
    h *= 0x100000001b3ULL;
    h ^= h >> 31;
  }
  return static_cast<std::size_t>(h);
}

bool operator<(const ElementSet &a, const ElementSet &b) {
  // The first differing bit decides: whichever set holds the smaller index there
  // has the lexicographically smaller index list.
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff) {
      std::uint64_t low = diff & (~diff + 1);
      return (a.words_[i] & low) != 0;
    }
  }
  return false;
}

// ---- FiniteGroup ----

namespace {
constexpr std::size_t kTableLimit = 4096;
}

FiniteGroup::FiniteGroup(const Subgroup &H) : degree_(H.degree()), elements_(H.elements()) {
  const std::size_t n = elements_.size();
  for (std::uint32_t i = 0; i < n; ++i)
    index_.emplace(elements_[i], i);
  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        table_[a * n + b] = static_cast<std::uint32_t>(index_of(compose(elements_[a], elements_[b])));
  }
  inverse_.resize(n);
  orders_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    inverse_[i] = static_cast<std::uint32_t>(index_of(elements_[i].inverse()));
    orders_[i] = static_cast<std::uint32_t>(elements_[i].order());
  }
  for (const auto &g : H.generators())
    gens_.push_back(static_cast<std::uint32_t>(index_of(g)));
}

std::size_t FiniteGroup::index_of(const Permutation &p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw std::invalid_argument("permutation " + p.to_string() + " is not in the group");
  return it->second;
}

std::uint32_t FiniteGroup::mul(std::uint32_t a, std::uint32_t b) const {
  if (!table_.empty())
    return table_[a * elements_.size() + b];
  return static_cast<std::uint32_t>(index_of(compose(elements_[a], elements_[b])));
}

ElementSet FiniteGroup::closure(const std::vector<std::uint32_t> &gens) const {
  ElementSet s(order());
  std::vector<std::uint32_t> list{0};
  s.insert(0);
  for (std::size_t i = 0; i < list.size(); ++i)
    for (auto g : gens) {
      std::uint32_t h = mul(list[i], g);
      if (!s.contains(h)) {
        s.insert(h);
        list.push_back(h);
      }
    }
  return s;
}

ElementSet FiniteGroup::conjugate(const ElementSet &s, std::uint32_t g) const {
  ElementSet out(order());
  for (auto i : s.indices())
    out.insert(conj(i, g));
  return out;
}

ElementSet FiniteGroup::from_subgroup(const Subgroup &s) const {
  ElementSet out(order());
  for (const auto &e : s.elements())
    out.insert(index_of(e));
  return out;
}

Subgroup FiniteGroup::to_subgroup(const ElementSet &s) const {
  std::vector<Permutation> elems;
  for (auto i : s.indices())
    elems.push_back(elements_[i]);
  return Subgroup::from_elements(std::move(elems));
}

ElementSet FiniteGroup::trivial() const {
  ElementSet s(order());
  s.insert(0);
  return s;
}

ElementSet FiniteGroup::whole() const {
  ElementSet s(order());
  for (std::size_t i = 0; i < order(); ++i)
    s.insert(i);
  return s;
}

// ---- SubgroupClassTable ----

SubgroupClassTable::SubgroupClassTable(const Subgroup &H, std::size_t cap)
    : group_([&]() -> const Subgroup & {
        if (H.order() > cap)
          throw CapExceeded("subgroup enumeration of a group of order " + std::to_string(H.order()), cap);
        return H;
      }()) {
  const std::size_t n = group_.order();

  // distinct cyclic subgroups, each with one generator
  std::vector<std::pair<ElementSet, std::uint32_t>> cyclics;
  {
    std::unordered_map<ElementSet, bool, ElementSetHash> seen;
    for (std::uint32_t e = 0; e < n; ++e) {
      ElementSet c = group_.closure({e});
      if (seen.emplace(c, true).second)
        cyclics.emplace_back(std::move(c), e);
    }
  }

  struct Pending {
    ElementSet set;
    std::vector<std::uint32_t> gens;
  };
  std::vector<Pending> queue;
  auto add = [&](ElementSet s, std::vector<std::uint32_t> gens) {
    if (member_class_.count(s))
      return;
    SubgroupClass cls;
    cls.order = s.count();
    cls.members.push_back(s);
    for (std::size_t i = 0; i < cls.members.size(); ++i)
      for (auto g : group_.generators()) {
        ElementSet c = group_.conjugate(cls.members[i], g);
        if (std::find(cls.members.begin(), cls.members.end(), c) == cls.members.end())
          cls.members.push_back(std::move(c));
      }
    cls.class_size = cls.members.size();
    cls.normalizer_order = n / cls.class_size;
    const std::size_t id = classes_.size();
    for (const auto &m : cls.members)
      member_class_.emplace(m, id);
    classes_.push_back(std::move(cls));
    queue.push_back({std::move(s), std::move(gens)});
  };

  add(group_.trivial(), {});
  for (const auto &[c, g] : cyclics)
    add(c, {g});
  // Every subgroup is reached from a smaller one by adjoining a cyclic subgroup;
  // conjugation lets us extend class representatives only.
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (const auto &[c, g] : cyclics) {
      if (c.is_subset_of(queue[qi].set))
        continue;
      std::vector<std::uint32_t> gens = queue[qi].gens;
      gens.push_back(g);
      ElementSet w = group_.closure(gens);
      add(std::move(w), std::move(gens));
    }
  }

  for (auto &cls : classes_) {
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = cls.members.front();
    std::vector<std::uint32_t> idx = cls.representative.indices();
    cls.cyclic = std::any_of(idx.begin(), idx.end(),
                             [&](std::uint32_t e) { return group_.element_order(e) == cls.order; });
  }
  std::vector<std::size_t> perm(classes_.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (classes_[a].order != classes_[b].order)
      return classes_[a].order < classes_[b].order;
    return classes_[a].representative < classes_[b].representative;
  });
  std::vector<SubgroupClass> sorted;
  for (auto i : perm)
    sorted.push_back(std::move(classes_[i]));
  classes_ = std::move(sorted);
  member_class_.clear();
  for (std::size_t id = 0; id < classes_.size(); ++id)
    for (const auto &m : classes_[id].members)
      member_class_.emplace(m, id);
}

std::size_t SubgroupClassTable::class_of(const ElementSet &s) const {
  auto it = member_class_.find(s);
  if (it == member_class_.end())
    throw std::invalid_argument("set is not a subgroup of the ambient group");
  return it->second;
}

std::size_t SubgroupClassTable::eta(const ElementSet &A, std::size_t cls) const {
  std::size_t c = 0;
  for (const auto &m : classes_[cls].members)
    if (A.is_subset_of(m))
      ++c;
  return c;
}

} // namespace saxl
