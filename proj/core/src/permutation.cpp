#include "saxl/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "saxl/errors.hpp"

namespace saxl {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("image array is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::unchecked(std::vector<Point> images) {
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::uint64_t>> &cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto &cyc : cycles) {
    for (std::uint64_t pt : cyc) {
      if (pt < 1 || pt > degree)
        throw ParseError("point " + std::to_string(pt) + " is outside 1.." + std::to_string(degree));
      if (used[pt - 1])
        throw ParseError("point " + std::to_string(pt) + " appears twice, not a bijection");
      used[pt - 1] = true;
    }
    for (std::size_t i = 0; i < cyc.size(); ++i)
      img[cyc[i] - 1] = static_cast<Point>(cyc[(i + 1) % cyc.size()] - 1);
  }
  return unchecked(std::move(img));
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::uint64_t>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n'))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '(' at offset " + std::to_string(i) + " in '" + std::string(text) + "'");
    ++i;
    std::vector<std::uint64_t> cyc;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i >= text.size() || text[i] < '0' || text[i] > '9')
        throw ParseError("malformed cycle in '" + std::string(text) + "'");
      std::uint64_t v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9')
        v = v * 10 + static_cast<std::uint64_t>(text[i++] - '0');
      cyc.push_back(v);
    }
    if (!cyc.empty())
      cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::pow(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  std::uint64_t ord = order();
  n %= ord;
  Permutation r(degree());
  while (n) {
    if (n & 1)
      r = compose(r, base);
    base = compose(base, base);
    n >>= 1;
  }
  return r;
}

std::uint64_t Permutation::order() const {
  std::uint64_t r = 1;
  for (std::size_t len : cycle_type())
    r = std::lcm(r, static_cast<std::uint64_t>(len));
  return r;
}

Point Permutation::first_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    std::vector<Point> cyc;
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> Permutation::to_cycle_lists() const {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto &c : cycles()) {
    std::vector<std::uint64_t> v;
    for (Point x : c)
      v.push_back(std::uint64_t{x} + 1);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lens;
  std::vector<bool> seen(images_.size(), false);
  for (Point i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

std::string Permutation::to_string() const {
  auto cyc = to_cycle_lists();
  if (cyc.empty())
    return "()";
  std::ostringstream os;
  for (const auto &c : cyc) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i)
      os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

std::size_t Permutation::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Point x : images_) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

Permutation compose(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch (" + std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()) + ")");
  std::vector<Point> img(p.degree());
  for (std::size_t i = 0; i < img.size(); ++i)
    img[i] = q[p[static_cast<Point>(i)]];
  return Permutation::unchecked(std::move(img));
}

Permutation conjugate(const Permutation &a, const Permutation &g) {
  if (a.degree() != g.degree())
    throw std::invalid_argument("conjugate: degree mismatch");
  // a^g maps g(i) to g(a(i))
  std::vector<Point> img(a.degree());
  for (Point i = 0; i < img.size(); ++i)
    img[g[i]] = g[a[i]];
  return Permutation::unchecked(std::move(img));
}

} // namespace saxl
