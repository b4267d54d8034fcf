#include "saxl/action_space.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace saxl {

// ---- KeyStore ----

std::uint64_t KeyStore::hash(std::span<const KeyWord> k) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ k.size();
  for (KeyWord w : k) {
    h ^= w;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 32;
  }
  return h;
}

std::optional<std::size_t> KeyStore::find(std::span<const KeyWord> k) const {
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t s = hash(k) & mask;; s = (s + 1) & mask) {
    std::uint32_t idx = slots_[s];
    if (idx == kEmpty)
      return std::nullopt;
    auto other = key(idx);
    if (other.size() == k.size() && std::equal(other.begin(), other.end(), k.begin()))
      return idx;
  }
}

void KeyStore::grow() {
  std::vector<std::uint32_t> fresh(slots_.size() * 2, kEmpty);
  const std::size_t mask = fresh.size() - 1;
  for (std::size_t i = 0; i < size(); ++i) {
    std::size_t s = hash(key(i)) & mask;
    while (fresh[s] != kEmpty)
      s = (s + 1) & mask;
    fresh[s] = static_cast<std::uint32_t>(i);
  }
  slots_ = std::move(fresh);
}

std::pair<std::size_t, bool> KeyStore::insert(std::span<const KeyWord> k) {
  if (auto hit = find(k))
    return {*hit, false};
  if ((size() + 1) * 2 > slots_.size())
    grow();
  const std::size_t idx = size();
  data_.insert(data_.end(), k.begin(), k.end());
  offsets_.push_back(data_.size());
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = hash(k) & mask;
  while (slots_[s] != kEmpty)
    s = (s + 1) & mask;
  slots_[s] = static_cast<std::uint32_t>(idx);
  return {idx, true};
}

// ---- construction ----

namespace {

void check_gens(const std::vector<Permutation> &gens, std::size_t degree) {
  if (degree > 0xffff)
    throw std::invalid_argument("action spaces support degree at most 65535");
  for (const auto &g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("action space: generator degree mismatch");
}

} // namespace

ActionSpace ActionSpace::points(const std::vector<Permutation> &gens, std::size_t degree, Point base,
                                std::size_t cap) {
  check_gens(gens, degree);
  if (base >= degree)
    throw std::invalid_argument("base point out of range");
  ActionSpace sp;
  sp.kind_ = SpaceKind::kPoints;
  sp.degree_ = degree;
  sp.gens_ = gens;
  sp.materialize({static_cast<KeyWord>(base)}, cap);
  return sp;
}

ActionSpace ActionSpace::subsets(const std::vector<Permutation> &gens, std::size_t degree,
                                 std::vector<Point> base, std::size_t cap) {
  check_gens(gens, degree);
  std::sort(base.begin(), base.end());
  if (base.empty() || std::adjacent_find(base.begin(), base.end()) != base.end() || base.back() >= degree)
    throw std::invalid_argument("base subset must be nonempty with distinct points in range");
  ActionSpace sp;
  sp.kind_ = SpaceKind::kSubsets;
  sp.degree_ = degree;
  sp.gens_ = gens;
  std::vector<KeyWord> key(base.begin(), base.end());
  sp.materialize(std::move(key), cap);
  return sp;
}

ActionSpace ActionSpace::conjugates(const std::vector<Permutation> &gens, std::size_t degree,
                                    const Subgroup &seed, std::size_t cap) {
  check_gens(gens, degree);
  if (seed.degree() != degree)
    throw std::invalid_argument("seed subgroup degree mismatch");
  ActionSpace sp;
  sp.kind_ = SpaceKind::kSubgroupConjugates;
  sp.degree_ = degree;
  sp.gens_ = gens;
  sp.cyclic_keys_ = seed.is_cyclic();
  sp.materialize(sp.subgroup_key(seed), cap);
  return sp;
}

void ActionSpace::materialize(std::vector<KeyWord> base_key, std::size_t cap) {
  if (gens_.size() > 0xffff)
    throw std::invalid_argument("too many generators");
  keys_.insert(base_key);
  parent_.push_back(0);
  parent_gen_.push_back(0);
  gen_images_.assign(gens_.size(), {});
  for (std::size_t cur = 0; cur < keys_.size(); ++cur) {
    std::vector<KeyWord> k(keys_.key(cur).begin(), keys_.key(cur).end());
    for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
      auto img = image_key(k, gens_[gi]);
      auto [idx, fresh] = keys_.insert(img);
      if (fresh) {
        if (keys_.size() > cap)
          throw CapExceeded("orbit of size > " + std::to_string(cap), cap);
        parent_.push_back(static_cast<std::uint32_t>(cur));
        parent_gen_.push_back(static_cast<std::uint16_t>(gi));
      }
      gen_images_[gi].push_back(static_cast<std::uint32_t>(idx));
    }
  }
}

// ---- keys ----

std::vector<KeyWord> ActionSpace::encode_perms(const std::vector<Permutation> &ps) const {
  std::vector<KeyWord> key;
  key.reserve(ps.size() * degree_);
  for (const auto &p : ps)
    for (Point x : p.images())
      key.push_back(static_cast<KeyWord>(x));
  return key;
}

std::vector<Permutation> ActionSpace::decode_perms(std::span<const KeyWord> key) const {
  std::vector<Permutation> ps;
  for (std::size_t off = 0; off + degree_ <= key.size(); off += degree_) {
    std::vector<Point> img(key.begin() + static_cast<std::ptrdiff_t>(off),
                           key.begin() + static_cast<std::ptrdiff_t>(off + degree_));
    ps.push_back(Permutation::unchecked(std::move(img)));
  }
  return ps;
}

std::vector<KeyWord> ActionSpace::subgroup_key(const Subgroup &s) const {
  if (cyclic_keys_) {
    for (const auto &e : s.elements())
      if (e.order() == s.order())
        return encode_perms({canonical_cyclic_generator(e)});
    throw std::invalid_argument("subgroup is not cyclic");
  }
  return encode_perms(canonical_generators(s.elements()));
}

std::vector<KeyWord> ActionSpace::image_key(std::span<const KeyWord> key, const Permutation &g) const {
  switch (kind_) {
  case SpaceKind::kPoints:
    return {static_cast<KeyWord>(g[key[0]])};
  case SpaceKind::kSubsets: {
    std::vector<KeyWord> img(key.size());
    for (std::size_t i = 0; i < key.size(); ++i)
      img[i] = static_cast<KeyWord>(g[key[i]]);
    std::sort(img.begin(), img.end());
    return img;
  }
  case SpaceKind::kSubgroupConjugates: {
    auto gens = decode_perms(key);
    for (auto &x : gens)
      x = conjugate(x, g);
    if (cyclic_keys_)
      return encode_perms({canonical_cyclic_generator(gens.front())});
    return encode_perms(canonical_generators(closure(gens, degree_)));
  }
  }
  return {};
}

std::size_t ActionSpace::act(std::size_t label, const Permutation &g) const {
  auto img = image_key(key(label), g);
  auto idx = keys_.find(img);
  if (!idx)
    throw std::out_of_range("image of label " + std::to_string(label) + " is outside the action space");
  return *idx;
}

std::vector<std::uint32_t> ActionSpace::label_permutation(const Permutation &g) const {
  std::vector<std::uint32_t> out(size());
  for (std::size_t l = 0; l < size(); ++l)
    out[l] = static_cast<std::uint32_t>(act(l, g));
  return out;
}

Permutation ActionSpace::transversal(std::size_t label) const {
  std::vector<std::size_t> path;
  for (std::size_t l = label; l != 0; l = parent_[l])
    path.push_back(parent_gen_[l]);
  Permutation t(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    t = compose(t, gens_[*it]);
  return t;
}

// ---- decoding ----

Point ActionSpace::point_at(std::size_t label) const {
  if (kind_ != SpaceKind::kPoints)
    throw std::logic_error("not a point space");
  return key(label)[0];
}

std::vector<Point> ActionSpace::subset_at(std::size_t label) const {
  if (kind_ != SpaceKind::kSubsets)
    throw std::logic_error("not a subset space");
  auto k = key(label);
  return {k.begin(), k.end()};
}

Subgroup ActionSpace::subgroup_at(std::size_t label) const {
  if (kind_ != SpaceKind::kSubgroupConjugates)
    throw std::logic_error("not a subgroup-conjugates space");
  return Subgroup::generated_by(decode_perms(key(label)), degree_);
}

std::optional<std::size_t> ActionSpace::find_point(Point p) const {
  if (kind_ != SpaceKind::kPoints || p >= degree_)
    return std::nullopt;
  KeyWord k = static_cast<KeyWord>(p);
  return keys_.find(std::span<const KeyWord>(&k, 1));
}

std::optional<std::size_t> ActionSpace::find_subset(std::vector<Point> s) const {
  if (kind_ != SpaceKind::kSubsets)
    return std::nullopt;
  std::sort(s.begin(), s.end());
  std::vector<KeyWord> k(s.begin(), s.end());
  return keys_.find(k);
}

std::optional<std::size_t> ActionSpace::find_subgroup(const Subgroup &s) const {
  if (kind_ != SpaceKind::kSubgroupConjugates || s.degree() != degree_)
    return std::nullopt;
  if (cyclic_keys_ && !s.is_cyclic())
    return std::nullopt;
  return keys_.find(subgroup_key(s));
}

std::string ActionSpace::describe(std::size_t label) const {
  std::ostringstream os;
  auto k = key(label);
  switch (kind_) {
  case SpaceKind::kPoints:
    os << (k[0] + 1);
    break;
  case SpaceKind::kSubsets:
    os << '{';
    for (std::size_t i = 0; i < k.size(); ++i)
      os << (i ? "," : "") << (k[i] + 1);
    os << '}';
    break;
  case SpaceKind::kSubgroupConjugates: {
    os << '<';
    auto gens = decode_perms(k);
    for (std::size_t i = 0; i < gens.size(); ++i)
      os << (i ? ", " : "") << gens[i].to_string();
    os << '>';
    break;
  }
  }
  return os.str();
}

std::vector<std::size_t> orbit(const ActionSpace &space, const std::vector<Permutation> &gens,
                               std::size_t seed) {
  std::vector<bool> seen(space.size(), false);
  std::vector<std::size_t> out{seed};
  seen[seed] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto &g : gens) {
      std::size_t img = space.act(out[i], g);
      if (!seen[img]) {
        seen[img] = true;
        out.push_back(img);
      }
    }
  }
  return out;
}

} // namespace saxl
