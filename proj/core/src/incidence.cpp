#include "saxl/incidence.hpp"

#include <set>
#include <stdexcept>

#include "saxl/errors.hpp"

namespace saxl {

bool IncidenceMatrix::is_unit_upper_triangular() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (entries[i].size() != size() || entries[i][i] != 1)
      return false;
    for (std::size_t j = 0; j < i; ++j)
      if (entries[i][j] != 0)
        return false;
  }
  return true;
}

bool IncidenceMatrix::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (entries[i][j] != (i == j ? 1 : 0))
        return false;
  return true;
}

IncidenceMatrix IncidenceMatrix::identity(std::vector<std::string> labels) {
  IncidenceMatrix m;
  const std::size_t n = labels.size();
  m.labels = std::move(labels);
  m.entries.assign(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    m.entries[i][i] = 1;
  return m;
}

IncidenceMatrix multiply(const IncidenceMatrix &a, const IncidenceMatrix &b) {
  if (a.size() != b.size())
    throw std::invalid_argument("matrix size mismatch");
  const std::size_t n = a.size();
  IncidenceMatrix r;
  r.labels = a.labels;
  r.entries.assign(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a.entries[i][k] == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        r.entries[i][j] += a.entries[i][k] * b.entries[k][j];
    }
  return r;
}

std::vector<BigInt> multiply(const IncidenceMatrix &m, const std::vector<BigInt> &v) {
  if (m.size() != v.size())
    throw std::invalid_argument("matrix/vector size mismatch");
  std::vector<BigInt> r(v.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      r[i] += m.entries[i][j] * v[j];
  return r;
}

IncidenceMatrix invert_incidence(const IncidenceMatrix &m) {
  if (!m.is_unit_upper_triangular())
    throw std::invalid_argument("invert_incidence: matrix is not upper triangular with unit diagonal");
  const std::size_t n = m.size();
  IncidenceMatrix inv = IncidenceMatrix::identity(m.labels);
  // column by column: inv[i][j] = -sum_{i<k<=j} m[i][k] inv[k][j]
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = j; i-- > 0;) {
      BigInt s = 0;
      for (std::size_t k = i + 1; k <= j; ++k)
        s += m.entries[i][k] * inv.entries[k][j];
      inv.entries[i][j] = -s;
    }
  if (!multiply(m, inv).is_identity())
    throw Inconsistency("M * M^-1 is not the identity");
  return inv;
}

std::vector<std::size_t> linear_extension(std::size_t n,
                                          const std::function<bool(std::size_t, std::size_t)> &leq) {
  std::vector<std::size_t> indeg(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && leq(i, j))
        ++indeg[j];
  std::set<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0)
      ready.insert(i);
  std::vector<std::size_t> out;
  while (!ready.empty()) {
    std::size_t i = *ready.begin();
    ready.erase(ready.begin());
    out.push_back(i);
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && leq(i, j) && --indeg[j] == 0)
        ready.insert(j);
  }
  if (out.size() != n)
    throw std::invalid_argument("linear_extension: relation has a cycle");
  return out;
}

} // namespace saxl
